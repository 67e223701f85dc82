"""Constructions on based complexes and the concrete complexes built from them.

Generator names follow fixed patterns so that composite constructions stay
readable: ``x⋆y``, ``x⋆∅``, ``∅⋆y`` for joins, ``x⊗y`` for tensors (names
that already contain an operator are parenthesized), ``(012)`` for simplices
and ``x⁰₁``/``x₂`` for disk cells.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Mapping, Sequence

from .chains import Chain
from .complexes import (
    Complex,
    ComplexError,
    Morphism,
    compose_morphisms,
    identity_morphism,
)
from .linalg import determinant, smith_decomposition

EMPTY = "∅"
BOTTOM = "⊥"
UNIT_GENERATOR = "★"
_SUB = str.maketrans("0123456789", "₀₁₂₃₄₅₆₇₈₉")
_SUP = {0: "⁰", 1: "¹"}


def subscript(k: int) -> str:
    return str(k).translate(_SUB)


def _wrap(name: str) -> str:
    return f"({name})" if ("⋆" in name or "⊗" in name) else name


def join_name(left: str | None, right: str | None) -> str:
    if left is None and right is None:
        raise ComplexError("a join generator needs at least one side")
    a = EMPTY if left is None else _wrap(left)
    b = EMPTY if right is None else _wrap(right)
    return f"{a}⋆{b}"


def tensor_name(left: str, right: str) -> str:
    return f"{_wrap(left)}⊗{_wrap(right)}"


def relabel(K: Complex, mapping: Mapping[str, str], name: str | None = None) -> Complex:
    """Rename generators; names missing from the mapping are kept."""
    rename = lambda g: mapping.get(g, g)
    basis = {d: [rename(g) for g in gens] for d, gens in K.basis.items()}
    diff = {}
    aug = {}
    for g in K.all_generators():
        if K.degree_of(g) == 0:
            aug[rename(g)] = K.aug_of(g)
        else:
            chain = K.diff_of(g)
            diff[rename(g)] = Chain(chain.degree, {rename(h): v for h, v in chain.items()})
    return Complex(name or K.name, basis, diff, aug)


def relabeling_morphism(K: Complex, L: Complex, mapping: Mapping[str, str]) -> Morphism:
    return Morphism(K, L, {g: L.generator_chain(mapping.get(g, g)) for g in K.all_generators()})


# ----- basic complexes --------------------------------------------------


def empty_complex() -> Complex:
    return Complex("∅", {})


def tensor_unit() -> Complex:
    return Complex("Z̃", {0: [UNIT_GENERATOR]}, aug={UNIT_GENERATOR: 1})


def disk_generator(letter: str, i: int, k: int, side: int) -> str:
    """Name of the cell x^side_k of the disk of dimension i."""
    if k > i:
        raise ComplexError("disk cells live in degrees up to the dimension")
    return f"{letter}{subscript(i)}" if k == i else f"{letter}{_SUP[side]}{subscript(k)}"


def disk_complex(i: int, letter: str = "x") -> Complex:
    """λ(D_i): two cells per degree below i and one principal cell."""
    if i < 0:
        raise ComplexError("disk dimension must be nonnegative")
    basis = {k: [disk_generator(letter, i, k, 0), disk_generator(letter, i, k, 1)] for k in range(i)}
    basis[i] = [disk_generator(letter, i, i, 0)]
    diff = {}
    for k in range(1, i + 1):
        boundary = {disk_generator(letter, i, k - 1, 1): 1, disk_generator(letter, i, k - 1, 0): -1}
        for g in set(basis[k]):
            diff[g] = boundary
    aug = {g: 1 for g in basis[0]}
    return Complex(f"λ(D{i})", basis, diff, aug)


def disk_chain(letter: str, i: int, k: int, side: int) -> Chain:
    """x^side_k as a chain, zero above the dimension."""
    if k > i:
        return Chain.zero(k)
    return Chain.generator(disk_generator(letter, i, k, side), k)


def simplex_name(vertices: Sequence[int], m: int) -> str:
    sep = "," if m >= 10 else ""
    return "(" + sep.join(str(v) for v in vertices) + ")"


def simplex_complex(m: int) -> Complex:
    """c(Δ^m): normalized chains on strictly increasing vertex tuples."""
    if m < -1:
        raise ComplexError("simplex dimension must be at least -1")
    if m == -1:
        return Complex("c(Δ-1)", {})
    basis = {}
    diff = {}
    for k in range(m + 1):
        faces = list(itertools.combinations(range(m + 1), k + 1))
        basis[k] = [simplex_name(t, m) for t in faces]
        if k:
            for t in faces:
                diff[simplex_name(t, m)] = {
                    simplex_name(t[:r] + t[r + 1 :], m): (-1) ** r for r in range(k + 1)
                }
    aug = {g: 1 for g in basis[0]}
    return Complex(f"c(Δ{m})", basis, diff, aug)


def simplex_map(theta: Sequence[int], m: int, n: int) -> Morphism:
    """c(θ) for a monotone θ: [m] → [n]; degenerate images vanish."""
    if len(theta) != m + 1 or any(a > b for a, b in zip(theta, theta[1:])):
        raise ComplexError("theta must be a monotone map given by its values")
    if theta and (theta[0] < 0 or theta[-1] > n):
        raise ComplexError("theta takes values outside the target")
    source, target = simplex_complex(m), simplex_complex(n)
    maps = {}
    for k in range(m + 1):
        for t in itertools.combinations(range(m + 1), k + 1):
            image = tuple(theta[v] for v in t)
            if len(set(image)) == len(image):
                maps[simplex_name(t, m)] = Chain.generator(simplex_name(image, n), k)
    return Morphism(source, target, maps)


# ----- suspension, join, tensor -----------------------------------------


def suspend(K: Complex, bottom: str = BOTTOM) -> Complex:
    """ΣK: a new degree-0 generator of augmentation 0, d′₁ = e, other degrees shifted."""
    if K.has_generator(bottom):
        raise ComplexError(f"generator name {bottom!r} is already used")
    basis = {0: [bottom]}
    diff = {}
    for d, gens in K.basis.items():
        basis[d + 1] = list(gens)
        for g in gens:
            if d == 0:
                diff[g] = {bottom: K.aug_of(g)}
            else:
                diff[g] = K.diff_of(g).coeffs
    return Complex(f"Σ{K.name}", basis, diff, {bottom: 0})


def desuspend(K: Complex) -> Complex:
    bottoms = K.generators(0)
    if len(bottoms) != 1 or K.aug_of(bottoms[0]) != 0:
        raise ComplexError("desuspension needs a single degree-0 generator of augmentation 0")
    (bottom,) = bottoms
    basis = {d - 1: list(gens) for d, gens in K.basis.items() if d > 0}
    diff, aug = {}, {}
    for d, gens in K.basis.items():
        for g in gens:
            if d == 1:
                aug[g] = K.diff_of(g).coefficient(bottom)
            elif d > 1:
                diff[g] = K.diff_of(g).coeffs
    name = K.name[1:] if K.name.startswith("Σ") else f"Σ⁻¹{K.name}"
    return Complex(name, basis, diff, aug)


def _join_generators(K: Complex, L: Complex):
    """Yield (name, degree, left, right) for the basis of K⋆L."""
    for x in K.all_generators():
        yield join_name(x, None), K.degree_of(x), x, None
    for y in L.all_generators():
        yield join_name(None, y), L.degree_of(y), None, y
    for x in K.all_generators():
        for y in L.all_generators():
            yield join_name(x, y), K.degree_of(x) + L.degree_of(y) + 1, x, y


def _boundary_or_aug(K: Complex, x: str) -> dict:
    """d(x) as a map to generator names, with None standing for ∅ in degree 0."""
    if K.degree_of(x) == 0:
        return {None: K.aug_of(x)} if K.aug_of(x) else {}
    return dict(K.diff_of(x).items())


def join(K: Complex, L: Complex, name: str | None = None) -> Complex:
    """K⋆L with d(x⋆y) = dx⋆y + (−1)^{|x|+1} x⋆dy, dz = e(z)∅ in degree 0."""
    basis: dict[int, list[str]] = {}
    diff: dict[str, dict] = {}
    aug: dict[str, int] = {}
    for gen, degree, x, y in _join_generators(K, L):
        basis.setdefault(degree, []).append(gen)
        if degree == 0:
            aug[gen] = K.aug_of(x) if x is not None else L.aug_of(y)
            continue
        total: dict[str, int] = {}
        if x is not None:
            for x2, c in _boundary_or_aug(K, x).items():
                if x2 is None and y is None:
                    continue  # lands on ∅⋆∅, which is not a generator
                key = join_name(x2, y)
                total[key] = total.get(key, 0) + c
        if y is not None:
            sign = (-1) ** ((K.degree_of(x) if x is not None else -1) + 1)
            for y2, c in _boundary_or_aug(L, y).items():
                if y2 is None and x is None:
                    continue
                key = join_name(x, y2)
                total[key] = total.get(key, 0) + sign * c
        diff[gen] = total
    return Complex(name or f"{_wrap(K.name)}⋆{_wrap(L.name)}", basis, diff, aug)


def join_inclusions(K: Complex, L: Complex, KL: Complex | None = None) -> tuple[Morphism, Morphism]:
    KL = KL or join(K, L)
    left = Morphism(K, KL, {x: KL.generator_chain(join_name(x, None)) for x in K.all_generators()})
    right = Morphism(L, KL, {y: KL.generator_chain(join_name(None, y)) for y in L.all_generators()})
    return left, right


def _join_chains(a: Chain | None, b: Chain | None, degree: int) -> Chain:
    """Bilinear extension of the join naming; None means ∅."""
    total: dict[str, int] = {}
    left = [(None, 1)] if a is None else list(a.items())
    right = [(None, 1)] if b is None else list(b.items())
    for x, c in left:
        for y, e in right:
            key = join_name(x, y)
            total[key] = total.get(key, 0) + c * e
    return Chain(degree, total)


def join_of_morphisms(f: Morphism, g: Morphism, source: Complex | None = None,
                      target: Complex | None = None) -> Morphism:
    source = source or join(f.source, g.source)
    target = target or join(f.target, g.target)
    maps = {}
    for gen, degree, x, y in _join_generators(f.source, g.source):
        fx = None if x is None else f.maps[x]
        gy = None if y is None else g.maps[y]
        maps[gen] = _join_chains(fx, gy, degree)
    return Morphism(source, target, maps)


def join_via_suspension(K: Complex, L: Complex) -> Complex:
    """Σ⁻¹(ΣK ⊗ ΣL) with its generators renamed to the join names."""
    raw = desuspend(tensor(suspend(K), suspend(L)))
    mapping = {}
    for x in K.all_generators():
        mapping[tensor_name(x, BOTTOM)] = join_name(x, None)
        for y in L.all_generators():
            mapping[tensor_name(x, y)] = join_name(x, y)
    for y in L.all_generators():
        mapping[tensor_name(BOTTOM, y)] = join_name(None, y)
    return relabel(raw, mapping, f"{_wrap(K.name)}⋆{_wrap(L.name)}")


def tensor(K: Complex, L: Complex, name: str | None = None) -> Complex:
    """K⊗L with d(x⊗y) = dx⊗y + (−1)^{|x|} x⊗dy and e(x⊗y) = e(x)e(y)."""
    basis: dict[int, list[str]] = {}
    diff: dict[str, dict] = {}
    aug: dict[str, int] = {}
    for x in K.all_generators():
        p = K.degree_of(x)
        for y in L.all_generators():
            q = L.degree_of(y)
            gen = tensor_name(x, y)
            basis.setdefault(p + q, []).append(gen)
            if p + q == 0:
                aug[gen] = K.aug_of(x) * L.aug_of(y)
                continue
            total: dict[str, int] = {}
            if p:
                for x2, c in K.diff_of(x).items():
                    key = tensor_name(x2, y)
                    total[key] = total.get(key, 0) + c
            if q:
                sign = (-1) ** p
                for y2, c in L.diff_of(y).items():
                    key = tensor_name(x, y2)
                    total[key] = total.get(key, 0) + sign * c
            diff[gen] = total
    return Complex(name or f"{_wrap(K.name)}⊗{_wrap(L.name)}", basis, diff, aug)


def _tensor_chains(a: Chain, b: Chain) -> Chain:
    total: dict[str, int] = {}
    for x, c in a.items():
        for y, e in b.items():
            key = tensor_name(x, y)
            total[key] = total.get(key, 0) + c * e
    return Chain(a.degree + b.degree, total)


def tensor_of_morphisms(f: Morphism, g: Morphism, source: Complex | None = None,
                        target: Complex | None = None) -> Morphism:
    source = source or tensor(f.source, g.source)
    target = target or tensor(f.target, g.target)
    maps = {}
    for x in f.source.all_generators():
        for y in g.source.all_generators():
            maps[tensor_name(x, y)] = _tensor_chains(f.maps[x], g.maps[y])
    return Morphism(source, target, maps)


def join_associator(K: Complex, L: Complex, M: Complex) -> dict[str, str]:
    """Names of (K⋆L)⋆M mapped to names of K⋆(L⋆M)."""
    mapping = {}
    for x in [None] + K.all_generators():
        for y in [None] + L.all_generators():
            for z in [None] + M.all_generators():
                if x is None and y is None and z is None:
                    continue
                inner_left = join_name(x, y) if (x or y) else None
                inner_right = join_name(y, z) if (y or z) else None
                mapping[join_name(inner_left, z)] = join_name(x, inner_right)
    return mapping


def tensor_associator(K: Complex, L: Complex, M: Complex) -> dict[str, str]:
    mapping = {}
    for x in K.all_generators():
        for y in L.all_generators():
            for z in M.all_generators():
                mapping[tensor_name(tensor_name(x, y), z)] = tensor_name(x, tensor_name(y, z))
    return mapping


# ----- duals ------------------------------------------------------------


def dual(K: Complex, degrees: Iterable[int], name: str | None = None) -> Complex:
    """Negate the differential in the given positive degrees."""
    flip = set(degrees)
    if any(n <= 0 for n in flip):
        raise ComplexError("duality degrees must be positive")
    diff = {}
    for g in K.all_generators():
        d = K.degree_of(g)
        if d:
            chain = K.diff_of(g)
            diff[g] = -chain if d in flip else chain
    aug = {g: K.aug_of(g) for g in K.generators(0)}
    label = name or f"{K.name}^{{{','.join(map(str, sorted(flip)))}}}"
    return Complex(label, K.basis, diff, aug)


def _degrees(K: Complex, parity: int | None) -> list[int]:
    return [n for n in range(1, K.dim + 1) if parity is None or n % 2 == parity]


def op(K: Complex) -> Complex:
    return dual(K, _degrees(K, None), f"{K.name}^op")


def co(K: Complex) -> Complex:
    return dual(K, _degrees(K, 0), f"{K.name}^co")


def opp(K: Complex) -> Complex:
    return dual(K, _degrees(K, 1), f"{K.name}^opp")


def join_swap(K: Complex, L: Complex) -> Morphism:
    """(K⋆L)^opp → L^opp⋆K^opp exchanging the two sides."""
    source = opp(join(K, L))
    target = join(opp(L), opp(K))
    maps = {gen: target.generator_chain(join_name(y, x)) for gen, _, x, y in _join_generators(K, L)}
    return Morphism(source, target, maps)


def tensor_swap(K: Complex, L: Complex, which: str = "opp") -> Morphism:
    """(K⊗L)^J → L^J⊗K^J via x⊗y ↦ y⊗x, for the odd (opp) or even (co) duality."""
    dualize = {"opp": opp, "co": co}[which]
    source = dualize(tensor(K, L))
    target = tensor(dualize(L), dualize(K))
    maps = {
        tensor_name(x, y): target.generator_chain(tensor_name(y, x))
        for x in K.all_generators()
        for y in L.all_generators()
    }
    return Morphism(source, target, maps)


def tensor_op_identity(K: Complex, L: Complex) -> Morphism:
    """(K⊗L)^op → K^op⊗L^op, the identity on the basis."""
    source = op(tensor(K, L))
    target = tensor(op(K), op(L))
    return Morphism(source, target, {g: target.generator_chain(g) for g in source.all_generators()})


# ----- colimits ---------------------------------------------------------


class _UnionFind:
    def __init__(self):
        self.parent: dict = {}

    def find(self, a):
        self.parent.setdefault(a, a)
        root = a
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[a] != root:
            self.parent[a], a = root, self.parent[a]
        return root

    def union(self, a, b):
        ra, rb = self.find(a), self.find(b)
        if ra != rb:
            self.parent[rb] = ra


def _single_generator(chain: Chain) -> str | None:
    items = list(chain.items())
    if len(items) == 1 and items[0][1] == 1:
        return items[0][0]
    return None


def pushout(f: Morphism, g: Morphism, name: str | None = None) -> tuple[Complex, Morphism, Morphism]:
    """Pushout of K ← M → L along prerigid maps, with its two legs."""
    if f.source is not g.source and not f.source.same_structure(g.source):
        raise ComplexError("a span needs a common source")
    K, L = f.target, g.target
    uf = _UnionFind()
    for side, C in (("K", K), ("L", L)):
        for gen in C.all_generators():
            uf.find((side, gen))
    for m in f.source.all_generators():
        a, b = _single_generator(f.maps[m]), _single_generator(g.maps[m])
        if a is None or b is None:
            raise ComplexError(f"pushouts with a basis need prerigid maps (fails at {m!r})")
        uf.union(("K", a), ("L", b))
    members: dict = {}
    for side, C in (("K", K), ("L", L)):
        for gen in C.all_generators():
            members.setdefault(uf.find((side, gen)), []).append((side, gen))
    class_name: dict = {}
    used: set = set()
    for side, C in (("K", K), ("L", L)):
        for gen in C.all_generators():
            root = uf.find((side, gen))
            if root in class_name:
                continue
            own = [n for s, n in members[root] if s == "K"] or [n for s, n in members[root] if s == "L"]
            label = min(own)
            while label in used:
                label += "′"
            used.add(label)
            class_name[root] = label
    leg_names = {
        side: {gen: class_name[uf.find((side, gen))] for gen in C.all_generators()}
        for side, C in (("K", K), ("L", L))
    }
    basis: dict[int, list[str]] = {}
    diff, aug = {}, {}
    seen = set()
    for side, C in (("K", K), ("L", L)):
        for gen in C.all_generators():
            label = leg_names[side][gen]
            if label in seen:
                continue
            seen.add(label)
            degree = C.degree_of(gen)
            basis.setdefault(degree, []).append(label)
            if degree == 0:
                aug[label] = C.aug_of(gen)
            else:
                diff[label] = {leg_names[side][h]: v for h, v in C.diff_of(gen).items()}
    P = Complex(name or f"{_wrap(K.name)}∐{_wrap(L.name)}", basis, diff, aug)
    left = Morphism(K, P, {gen: P.generator_chain(n) for gen, n in leg_names["K"].items()})
    right = Morphism(L, P, {gen: P.generator_chain(n) for gen, n in leg_names["L"].items()})
    return P, left, right


def direct_sum(K: Complex, L: Complex) -> tuple[Complex, Morphism, Morphism]:
    empty = empty_complex()
    return pushout(Morphism(empty, K, {}), Morphism(empty, L, {}), f"{_wrap(K.name)}⊕{_wrap(L.name)}")


# ----- cocategory structure maps ----------------------------------------


def sigma_map(j: int, i: int, source_letter: str = "x", target_letter: str = "y") -> Morphism:
    """λ(σ^i_j): λ(D_j) → λ(D_i), the principal cell going to the j-source."""
    return _face_map(j, i, 0, source_letter, target_letter)


def tau_map(j: int, i: int, source_letter: str = "x", target_letter: str = "y") -> Morphism:
    return _face_map(j, i, 1, source_letter, target_letter)


def _face_map(j: int, i: int, side: int, a: str, b: str) -> Morphism:
    if not 0 <= j <= i:
        raise ComplexError("face maps need 0 ≤ j ≤ i")
    source, target = disk_complex(j, a), disk_complex(i, b)
    maps = {}
    for k in range(j):
        for eps in (0, 1):
            maps[disk_generator(a, j, k, eps)] = disk_chain(b, i, k, eps)
    maps[disk_generator(a, j, j, 0)] = disk_chain(b, i, j, side)
    return Morphism(source, target, maps)


def kappa_map(j: int, i: int, source_letter: str = "x", target_letter: str = "y") -> Morphism:
    """λ(κ^i_j): λ(D_j) → λ(D_i) for j ≥ i, collapsing everything above i."""
    if not 0 <= i <= j:
        raise ComplexError("collapse maps need 0 ≤ i ≤ j")
    a, b = source_letter, target_letter
    source, target = disk_complex(j, a), disk_complex(i, b)
    maps = {}
    for k in range(j + 1):
        for eps in (0, 1):
            maps[disk_generator(a, j, k, eps)] = disk_chain(b, i, k, eps)
    return Morphism(source, target, maps)


@dataclass(frozen=True)
class GlobularSum:
    complex: Complex
    legs: tuple  # one inclusion λ(D_{i_k}) → λ(S) per disk
    signature: tuple


def check_signature(signature: Sequence[int]) -> tuple[list[int], list[int]]:
    sig = list(signature)
    if not sig or len(sig) % 2 == 0:
        raise ComplexError("a globular signature reads i₁ j₁ i₂ … i_l")
    dims, glue = sig[0::2], sig[1::2]
    if any(v < 0 for v in sig):
        raise ComplexError("signature entries must be nonnegative")
    for k, j in enumerate(glue):
        if not (dims[k] > j < dims[k + 1]):
            raise ComplexError(f"signature violates i > j < i′ at position {k}")
    return dims, glue


def _default_letters(count: int) -> str:
    letters = "abcdefghpqrsuvw"
    if count > len(letters):
        raise ComplexError("too many disks for the default letters")
    return letters[:count]


def globular_sum(signature: Sequence[int], letters: Sequence[str] | None = None) -> GlobularSum:
    """λ of a globular sum, glued left to right by iterated pushouts.

    Consecutive disks share the j-cell where the left disk's j-source meets
    the right disk's j-target.
    """
    dims, glue = check_signature(signature)
    letters = list(letters) if letters is not None else list(_default_letters(len(dims)))
    if len(letters) != len(dims) or len(set(letters)) != len(letters):
        raise ComplexError("need one distinct letter per disk")
    current = disk_complex(dims[0], letters[0])
    legs = [identity_morphism(current)]
    for k, j in enumerate(glue):
        into_left = compose_morphisms(legs[-1], sigma_map(j, dims[k], "g", letters[k]))
        into_right = tau_map(j, dims[k + 1], "g", letters[k + 1])
        current, to_current, new_leg = pushout(into_left, into_right)
        legs = [compose_morphisms(to_current, leg) for leg in legs] + [new_leg]
    label = "λ(" + "∐".join(
        f"D{d}" if n == 0 else f"_{glue[n - 1]}D{d}" for n, d in enumerate(dims)
    ) + ")"
    P = current.renamed(label)
    legs = [Morphism(leg.source, P, leg.maps) for leg in legs]
    return GlobularSum(P, tuple(legs), tuple(signature))


def nabla_map(i: int, j: int, source_letter: str = "x") -> Morphism:
    """λ(∇^i_j): λ(D_i) → λ(D_i ∐_{D_j} D_i), the j-cocomposition."""
    if not i > j >= 0:
        raise ComplexError("cocomposition needs i > j ≥ 0")
    gs = globular_sum([i, j, i], "yz")
    left, right = gs.legs
    source = disk_complex(i, source_letter)
    maps = {}
    for k in range(i + 1):
        for eps in (0, 1):
            gen = disk_generator(source_letter, i, k, eps)
            y = left.apply(disk_chain("y", i, k, eps))
            z = right.apply(disk_chain("z", i, k, eps))
            if k <= j:
                maps[gen] = z if eps == 0 else y
            else:
                maps[gen] = y + z
    return Morphism(source, gs.complex, maps)


def cocategory_maps(i: int, j: int) -> dict[str, Morphism]:
    """The structure maps available for the pair (i, j)."""
    out = {}
    if i >= j >= 0:
        out["sigma"] = sigma_map(j, i)
        out["tau"] = tau_map(j, i)
        out["kappa"] = kappa_map(i, j)
    if i > j >= 0:
        out["nabla"] = nabla_map(i, j)
    if not out:
        raise ComplexError("need i ≥ j ≥ 0")
    return out


def rigidity_counterexample() -> Morphism:
    """A prerigid map λ(D₁)⊗λ(D₁) → λ(D₂ ∐_{D₀} D₁) that is not rigid.

    The square x⊗x is sent onto a 2-cell whose source is a single edge while
    the tensor square's source is a composite of two edges.
    """
    source = tensor(disk_complex(1), disk_complex(1))
    gs = globular_sum([2, 0, 1], ["α", "h"])
    P = gs.complex
    two_cell, edge = gs.legs
    p = edge.apply(disk_chain("h", 1, 0, 0))
    q = two_cell.apply(disk_chain("α", 2, 0, 0))
    r = two_cell.apply(disk_chain("α", 2, 0, 1))
    h = edge.apply(disk_chain("h", 1, 1, 0))
    k = two_cell.apply(disk_chain("α", 2, 1, 0))
    l = two_cell.apply(disk_chain("α", 2, 1, 1))
    a = two_cell.apply(disk_chain("α", 2, 2, 0))
    v0, v1, e = "x⁰₀", "x¹₀", "x₁"
    maps = {
        tensor_name(v0, v0): p,
        tensor_name(v0, v1): q,
        tensor_name(v1, v0): q,
        tensor_name(v1, v1): r,
        tensor_name(v0, e): h,
        tensor_name(e, v0): h,
        tensor_name(e, v1): k,
        tensor_name(v1, e): l,
        tensor_name(e, e): a,
    }
    return Morphism(source, P, maps)


# ----- truncations ------------------------------------------------------


def truncate_bete(K: Complex, n: int) -> Complex:
    """Drop every degree above n."""
    basis = {d: gens for d, gens in K.basis.items() if d <= n}
    diff = {g: K.diff_of(g) for d, gens in basis.items() if d > 0 for g in gens}
    aug = {g: K.aug_of(g) for g in K.generators(0)}
    return Complex(f"τ{subscript(n)}{K.name}", basis, diff, aug)


@dataclass(frozen=True)
class Truncation:
    complex: Complex
    projection: Morphism  # K → τ̃ₙK
    n: int
    coordinates: object  # degree-n generator ↦ coordinate vector in the quotient
    basis_vectors: tuple  # quotient basis vectors, aligned with the new generators
    change: object  # row transform S from the normal form
    rank: int


def _is_in_cone(vector, others) -> bool:
    """Whether vector is a nonnegative real combination of the others."""
    if not others:
        return False
    from scipy.optimize import linprog

    A = [[w[r] for w in others] for r in range(len(vector))]
    result = linprog(
        c=[0] * len(others), A_eq=A, b_eq=list(vector), bounds=[(0, None)] * len(others), method="highs"
    )
    return result.status == 0


def _positive_multiple(v, w) -> bool:
    """Whether v = t·w for some rational t > 0."""
    pivot = next(k for k, a in enumerate(w) if a)
    if v[pivot] * w[pivot] <= 0:
        return False
    return all(a * w[pivot] == b * v[pivot] for a, b in zip(v, w))


def _coordinates(vectors, basis):
    """Coordinates of each vector in a unimodular basis (exact)."""
    from sympy import Matrix

    B = Matrix([list(b) for b in basis]).T
    inverse = B.inv()
    return [tuple(int(v) for v in inverse * Matrix(list(vec))) for vec in vectors]


def truncate_intelligent(K: Complex, n: int) -> Truncation:
    """τ̃ₙK: degree n replaced by K_n / d(K_{n+1}), everything above dropped."""
    gens_n = list(K.generators(n))
    gens_up = list(K.generators(n + 1))
    matrix = [[K.diff_of(b).coefficient(g) for b in gens_up] for g in gens_n]
    diagonal, S, _T = smith_decomposition(matrix, len(gens_n), len(gens_up))
    if any(abs(v) != 1 for v in diagonal):
        raise ComplexError(f"K_{n}/d(K_{n + 1}) has torsion; no based truncation")
    r = len(diagonal)
    q = len(gens_n) - r
    coords = {}
    for idx, g in enumerate(gens_n):
        column = [int(S[row, idx]) for row in range(len(gens_n))] if gens_n else []
        coords[g] = tuple(column[r:])
    distinct = sorted({v for v in coords.values() if any(v)})
    extreme = [
        v for v in distinct
        if not any(_positive_multiple(v, w) for w in distinct if w != v and sum(map(abs, w)) < sum(map(abs, v)))
        and not _is_in_cone(v, [w for w in distinct if w != v and not _positive_multiple(v, w)])
    ]
    if len(extreme) != q or (q and abs(determinant([list(v) for v in extreme])) != 1):
        raise ComplexError(
            f"the positive cone of the degree {n} quotient is not generated by a basis"
        )
    coordinates_in_basis = dict(zip(distinct, _coordinates(distinct, extreme))) if q else {}
    if any(min(c) < 0 for c in coordinates_in_basis.values()):
        raise ComplexError(f"degree {n} images are not nonnegative in the quotient basis")
    new_names = []
    for v in extreme:
        reps = sorted(g for g in gens_n if coords[g] == v)
        new_names.append(reps[0])
    basis = {d: list(gens) for d, gens in K.basis.items() if d < n}
    if new_names:
        basis[n] = list(new_names)
    diff, aug = {}, {}
    for d, gens in basis.items():
        for g in gens:
            if d == 0:
                aug[g] = K.aug_of(g)
            else:
                diff[g] = K.diff_of(g)
    T = Complex(f"τ̃{subscript(n)}{K.name}", basis, diff, aug)
    maps = {}
    for g in K.all_generators():
        d = K.degree_of(g)
        if d < n:
            maps[g] = T.generator_chain(g)
        elif d == n:
            v = coords[g]
            values = coordinates_in_basis.get(v, (0,) * q)
            maps[g] = Chain(n, dict(zip(new_names, values)))
        else:
            maps[g] = Chain.zero(d)
    projection = Morphism(K, T, maps)
    return Truncation(T, projection, n, coords, tuple(extreme), S, r)


def truncate_morphism(f: Morphism, n: int, source: Truncation, target: Truncation) -> Morphism:
    """τ̃ₙf between chosen truncations of the source and target."""
    maps = {}
    for g in source.complex.all_generators():
        d = source.complex.degree_of(g)
        maps[g] = target.projection.apply(f.apply(Chain.generator(g, d)))
    return Morphism(source.complex, target.complex, maps)


# ----- simplices, χ and the nerve ---------------------------------------


def _parse_simplex(name: str) -> tuple[int, ...]:
    body = name[1:-1]
    if "," in body:
        return tuple(int(v) for v in body.split(","))
    return tuple(int(v) for v in body)


def chi_morphism(m: int, n: int) -> Morphism:
    """c(Δ^m)⋆c(Δ^n) → c(Δ^{m+1+n}), shifting the right vertices by m+1."""
    K, L = simplex_complex(m), simplex_complex(n)
    total = m + 1 + n
    source, target = join(K, L), simplex_complex(total)
    maps = {}
    for gen, degree, x, y in _join_generators(K, L):
        left = _parse_simplex(x) if x is not None else ()
        right = tuple(v + m + 1 for v in _parse_simplex(y)) if y is not None else ()
        maps[gen] = target.generator_chain(simplex_name(left + right, total))
    return Morphism(source, target, maps)


def face_map(n: int, i: int) -> Morphism:
    """c(δ_i): c(Δ^{n-1}) → c(Δ^n), skipping vertex i."""
    if not 0 <= i <= n:
        raise ComplexError("face index out of range")
    return simplex_map([v if v < i else v + 1 for v in range(n)], n - 1, n)


def degeneracy_map(n: int, i: int) -> Morphism:
    """c(σ_i): c(Δ^{n+1}) → c(Δ^n), repeating vertex i."""
    if not 0 <= i <= n:
        raise ComplexError("degeneracy index out of range")
    return simplex_map([v if v <= i else v - 1 for v in range(n + 2)], n + 1, n)


def street_nerve(K: Complex, n: int, cap: int) -> list[Morphism]:
    from .cells import enumerate_adc_morphisms

    return enumerate_adc_morphisms(simplex_complex(n), K, cap)


def nerve_face(x: Morphism, i: int) -> Morphism:
    n = x.source.dim
    return compose_morphisms(x, face_map(n, i))


def nerve_degeneracy(x: Morphism, i: int) -> Morphism:
    n = max(x.source.dim, 0)
    return compose_morphisms(x, degeneracy_map(n, i))


def oriental_cells(n: int, i: int, cap: int):
    from .cells import enumerate_cells

    return enumerate_cells(simplex_complex(n), i, cap)


def theta_complex(signature: str | Sequence[int]) -> Complex:
    """λ(S) for a signature given as text "i1 j1 i2 …" or a sequence."""
    if isinstance(signature, str):
        signature = [int(v) for v in signature.split()]
    return globular_sum(signature).complex


def cycle_complex() -> Complex:
    """Two edges p → q and q → p: unitary but not loop-free."""
    basis = {0: ["p", "q"], 1: ["u", "v"]}
    diff = {"u": {"q": 1, "p": -1}, "v": {"p": 1, "q": -1}}
    return Complex("cycle", basis, diff, {"p": 1, "q": 1})
