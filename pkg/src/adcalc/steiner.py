"""Decision procedures for the basis conditions and for rigidity of morphisms."""

from __future__ import annotations

import heapq
from dataclasses import dataclass

from .complexes import Complex, ComplexError, Morphism, generator_atom, validate_morphism
from .linalg import rank
from .reports import Report, failed, passed


@dataclass(frozen=True)
class PreorderReport:
    kind: str
    pairs: tuple
    is_order: bool
    cycle_witness: tuple | None = None
    topological_order: tuple | None = None

    def to_json(self) -> dict:
        out = {
            "kind": self.kind,
            "pairs": [list(p) for p in self.pairs],
            "is_order": self.is_order,
            "cycle_witness": list(self.cycle_witness) if self.cycle_witness else None,
        }
        if self.topological_order is not None:
            out["topological_order"] = list(self.topological_order)
        return out


def _atoms(K: Complex) -> dict:
    return {g: generator_atom(K, g) for g in K.all_generators()}


def _find_cycle(nodes, edges: dict[str, list[str]]):
    """First cycle in lexicographic DFS order, or None.  Self-loops count."""
    state: dict[str, int] = {}
    stack: list[str] = []

    for start in sorted(nodes):
        if state.get(start):
            continue
        # iterative DFS keeping the active path
        iters = [(start, iter(sorted(edges.get(start, ()))))]
        state[start] = 1
        stack.append(start)
        while iters:
            node, it = iters[-1]
            nxt = next(it, None)
            if nxt is None:
                iters.pop()
                stack.pop()
                state[node] = 2
                continue
            if state.get(nxt) == 1:
                return tuple(stack[stack.index(nxt):]) + (nxt,)
            if not state.get(nxt):
                state[nxt] = 1
                stack.append(nxt)
                iters.append((nxt, iter(sorted(edges.get(nxt, ())))))
    return None


def _topological_order(nodes, edges):
    indegree = {n: 0 for n in nodes}
    for src in edges:
        for dst in edges[src]:
            indegree[dst] += 1
    heap = [n for n, d in indegree.items() if d == 0]
    heapq.heapify(heap)
    order = []
    while heap:
        node = heapq.heappop(heap)
        order.append(node)
        for dst in sorted(edges.get(node, ())):
            indegree[dst] -= 1
            if indegree[dst] == 0:
                heapq.heappush(heap, dst)
    return tuple(order)


def _report(kind, nodes, pairs) -> PreorderReport:
    edges: dict[str, list[str]] = {}
    for a, b in pairs:
        edges.setdefault(a, []).append(b)
    cycle = _find_cycle(nodes, edges)
    if cycle is not None:
        return PreorderReport(kind, tuple(sorted(pairs)), False, cycle)
    return PreorderReport(kind, tuple(sorted(pairs)), True, None, _topological_order(nodes, edges))


def leq_i_preorder(K: Complex, i: int, atoms: dict | None = None) -> PreorderReport:
    """Generating pairs x ≤_i y: upper i-row of x meets lower i-row of y."""
    atoms = atoms if atoms is not None else _atoms(K)
    high = [g for g in K.all_generators() if K.degree_of(g) > i]
    by_lower: dict[str, list[str]] = {}
    for y in high:
        for gen in atoms[y].row(i, 0).support():
            by_lower.setdefault(gen, []).append(y)
    pairs = set()
    for x in high:
        for gen in atoms[x].row(i, 1).support():
            for y in by_lower.get(gen, ()):
                pairs.add((x, y))
    return _report(f"leq_{i}", high, pairs)


def is_loop_free(K: Complex) -> bool:
    atoms = _atoms(K)
    return all(leq_i_preorder(K, i, atoms).is_order for i in range(max(K.dim, 0)))


def leq_N_pairs(K: Complex) -> set:
    pairs = set()
    for y in K.all_generators():
        if K.degree_of(y) == 0:
            continue
        boundary = K.diff_of(y)
        for x in boundary.negative_part().support():
            pairs.add((x, y))
        for z in boundary.positive_part().support():
            pairs.add((y, z))
    return pairs


def leq_N_preorder(K: Complex) -> PreorderReport:
    return _report("leq_N", K.all_generators(), leq_N_pairs(K))


def is_strongly_loop_free(K: Complex) -> bool:
    return leq_N_preorder(K).is_order


def unitary_witness(K: Complex, atoms: dict | None = None):
    atoms = atoms if atoms is not None else _atoms(K)
    for gen in K.all_generators():
        table = atoms[gen]
        if K.augment(table.row(0, 0)) != 1 or K.augment(table.row(0, 1)) != 1:
            return gen
    return None


def is_unitary(K: Complex) -> Report:
    witness = unitary_witness(K)
    if witness is None:
        return passed("unitary")
    return failed("unitary", witness)


def is_steiner(K: Complex) -> bool:
    return is_unitary(K).ok and is_loop_free(K)


def is_strong_steiner(K: Complex) -> bool:
    return is_unitary(K).ok and is_strongly_loop_free(K)


def steiner_report(K: Complex) -> dict:
    atoms = _atoms(K)
    unit = unitary_witness(K, atoms)
    strong = leq_N_preorder(K)
    loop_free = True
    loop_witness = None
    for i in range(max(K.dim, 0)):
        rep = leq_i_preorder(K, i, atoms)
        if not rep.is_order:
            loop_free, loop_witness = False, list(rep.cycle_witness)
            break
    return {
        "unitary": unit is None,
        "unitary_witness": unit,
        "loop_free": loop_free,
        "loop_witness": loop_witness,
        "strongly_loop_free": strong.is_order,
        "strong_loop_witness": list(strong.cycle_witness) if strong.cycle_witness else None,
        "steiner": unit is None and loop_free,
        "strong_steiner": unit is None and strong.is_order,
    }


# ----- rigidity ---------------------------------------------------------


def generator_map(f: Morphism):
    """The induced map on generators if f is prerigid, else (None, witness)."""
    mapping = {}
    for gen, image in f.maps.items():
        items = list(image.items())
        if len(items) != 1 or items[0][1] != 1:
            return None, gen
        mapping[gen] = items[0][0]
    return mapping, None


def is_prerigid(f: Morphism) -> Report:
    mapping, witness = generator_map(f)
    if mapping is None:
        return failed("prerigid", witness)
    return passed("prerigid")


def is_rigid(f: Morphism) -> Report:
    mapping, witness = generator_map(f)
    if mapping is None:
        return failed("rigid", witness, reason="not prerigid")
    K, L = f.source, f.target
    for gen, image in mapping.items():
        source_table = generator_atom(K, gen)
        target_table = generator_atom(L, image)
        for k, (lower, upper) in enumerate(source_table.rows):
            if f.apply(lower) != target_table.row(k, 0) or f.apply(upper) != target_table.row(k, 1):
                return failed("rigid", gen, reason=f"atom row {k} not preserved")
    return passed("rigid")


def is_monomorphism(f: Morphism) -> bool:
    mapping, _ = generator_map(f)
    if mapping is not None:
        return len(set(mapping.values())) == len(mapping)
    K, L = f.source, f.target
    for degree in range(K.dim + 1):
        gens = K.generators(degree)
        targets = L.generators(degree)
        matrix = [[f.maps[g].coefficient(t) for g in gens] for t in targets]
        if len(gens) and rank(matrix) < len(gens):
            return False
    return True


def _reachability(nodes, pairs):
    edges: dict[str, set] = {}
    for a, b in pairs:
        edges.setdefault(a, set()).add(b)
    reach = {}
    for start in nodes:
        seen = {start}
        todo = [start]
        while todo:
            node = todo.pop()
            for nxt in edges.get(node, ()):
                if nxt not in seen:
                    seen.add(nxt)
                    todo.append(nxt)
        reach[start] = seen
    return reach


def is_rigid_ordered_inclusion(f: Morphism) -> Report:
    check = "rigid_ordered_inclusion"
    if not validate_morphism(f).ok:
        return failed(check, reason="not a valid morphism")
    rigid = is_rigid(f)
    if not rigid.ok:
        return failed(check, *rigid.witness, reason="not rigid")
    if not is_monomorphism(f):
        return failed(check, reason="not injective")
    mapping, _ = generator_map(f)
    K, L = f.source, f.target
    source_reach = _reachability(K.all_generators(), leq_N_pairs(K))
    target_reach = _reachability(L.all_generators(), leq_N_pairs(L))
    for x in K.all_generators():
        for y in K.all_generators():
            before = y in source_reach[x]
            after = mapping[y] in target_reach[mapping[x]]
            if before != after:
                return failed(check, x, y, reason="order not reflected")
    return passed(check)


def check_pushout_steiner(f: Morphism, g: Morphism) -> dict:
    """Pushout of a span of rigid ordered inclusions, with its three properties."""
    from .constructions import pushout

    for name, leg in (("first", f), ("second", g)):
        rep = is_rigid_ordered_inclusion(leg)
        if not rep.ok:
            raise ComplexError(f"the {name} map is not a rigid ordered inclusion: {rep.witness}")
    for C in (f.source, f.target, g.target):
        if not is_strongly_loop_free(C):
            raise ComplexError(f"{C.name} is not strongly loop-free")
    P, left, right = pushout(f, g)
    return {
        "pushout": P,
        "strongly_loop_free": is_strongly_loop_free(P),
        "left_leg_rigid_ordered_inclusion": is_rigid_ordered_inclusion(left).ok,
        "right_leg_rigid_ordered_inclusion": is_rigid_ordered_inclusion(right).ok,
        "strong_steiner": is_strong_steiner(P),
    }
