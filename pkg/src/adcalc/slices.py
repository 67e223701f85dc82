"""Slice complexes M//g under a morphism g: K → M, and their calculus.

An element of degree i is a family (u_j)_{j ≥ −1} of maps u_j: K_j → M_{i+j+1},
with K_{−1} = Z.  It is stored as a chain over elementary matrices named
``x↦m`` (``∅↦m`` for the j = −1 slot).  The graded group of all such
families is an honest based complex, the ambient complex; the slice agrees
with it in positive degrees, and in degree 0 it is the subgroup cut out by
the relation (−1)^{j+1}(d u_j − u_{j−1} d_j) = e(u_{−1}(1)) g_j for j ≥ 0.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

from .cells import LinearConstraint, enumerate_adc_morphisms, enumerate_cells
from .chains import Chain
from .complexes import (
    Complex,
    ComplexError,
    Morphism,
    compose_morphisms,
    validate_morphism,
)
from .constructions import EMPTY, empty_complex, join, join_name, opp
from .homotopy import ANTIHOMOTOPY, Family, validate_homotopy
from .linalg import integer_kernel
from .reports import Report, failed, passed

MAPS_TO = "↦"


def entry_name(x: str | None, m: str) -> str:
    return f"{EMPTY if x is None else x}{MAPS_TO}{m}"


def split_entry(name: str) -> tuple[str | None, str]:
    x, m = name.split(MAPS_TO, 1)
    return (None if x == EMPTY else x), m


class Slice:
    """The slice M//g with its ambient based complex."""

    def __init__(self, M: Complex, g: Morphism, name: str | None = None):
        self.M = M
        self.g = g
        self.K = g.source
        if not (g.target is M or g.target.same_structure(M)):
            raise ComplexError("g must land in M")
        self.name = name or f"{M.name}//g"
        self.ambient = self._build_ambient()

    # degrees of K including the formal slot −1
    def _k_slots(self):
        yield -1, [None]
        for j in range(self.K.dim + 1):
            yield j, list(self.K.generators(j))

    def _k_degree(self, x: str | None) -> int:
        return -1 if x is None else self.K.degree_of(x)

    def _build_ambient(self) -> Complex:
        basis: dict[int, list[str]] = {}
        for i in range(self.M.dim + 1):
            names = []
            for j, xs in self._k_slots():
                for x in xs:
                    for m in self.M.generators(i + j + 1):
                        names.append(entry_name(x, m))
            if names:
                basis[i] = names
        diff = {}
        aug = {}
        for i, names in basis.items():
            for name in names:
                if i == 0:
                    x, m = split_entry(name)
                    aug[name] = self.M.aug_of(m) if x is None else 0
                else:
                    diff[name] = self.raw_boundary(Chain.generator(name, i))
        return Complex(self.name, basis, diff, aug)

    def raw_boundary(self, u: Chain) -> dict[str, int]:
        """(−1)^{j+1}(d u_j − u_{j−1} d_j) for every j ≥ 0, and d u_{−1} in slot −1.

        In positive degree this is the slice differential.  In degree 0 the
        slot −1 term (the augmentation) is dropped and the remaining
        components are what the degree-0 relation compares with e(z) g.
        """
        total: dict[str, int] = {}
        for name, c in u.items():
            x, m = split_entry(name)
            j = self._k_degree(x)
            sign = (-1) ** (j + 1)
            if self.M.degree_of(m) > 0:
                for m2, v in self.M.diff_of(m).items():
                    key = entry_name(x, m2)
                    total[key] = total.get(key, 0) + sign * c * v
            for x2 in self.K.generators(j + 1):
                if x is None:
                    coef = self.K.aug_of(x2)
                else:
                    coef = self.K.diff_of(x2).coefficient(x)
                if coef:
                    key = entry_name(x2, m)
                    total[key] = total.get(key, 0) + sign * c * coef
        return {k: v for k, v in total.items() if v}

    # ----- degree 0 ---------------------------------------------------
    def g_entries(self) -> dict[str, int]:
        """The family (g_j)_{j ≥ 0} as coefficients on entries x↦m."""
        out = {}
        for x in self.K.all_generators():
            for m, v in self.g.maps[x].items():
                out[entry_name(x, m)] = v
        return out

    def constraint_defect(self, u: Chain) -> dict[str, int]:
        """Nonzero entries of B(u) − e(z)·g for a degree-0 ambient chain."""
        if u.degree != 0:
            raise ComplexError("the slice relation concerns degree 0")
        b = dict(self.raw_boundary(u))
        z = self.ambient.augment(u)
        for key, v in self.g_entries().items():
            b[key] = b.get(key, 0) - z * v
        return {k: v for k, v in b.items() if v}

    def in_slice(self, u: Chain) -> bool:
        if u.degree > 0:
            return self.ambient.contains_chain(u)
        return self.ambient.contains_chain(u) and not self.constraint_defect(u)

    def constraint_rows(self, gen: str) -> dict:
        """Rows of the linear degree-0 relation contributed by one ambient generator."""
        rows = {k: v for k, v in self.raw_boundary(Chain.generator(gen, 0)).items()}
        z = self.ambient.aug_of(gen)
        if z:
            for key, v in self.g_entries().items():
                rows[key] = rows.get(key, 0) - z * v
        return {k: v for k, v in rows.items() if v}

    def degree0_constraint(self) -> LinearConstraint:
        return LinearConstraint({g: self.constraint_rows(g) for g in self.ambient.generators(0)})

    @cached_property
    def degree0_basis(self) -> list[Chain]:
        """A Z-basis of the degree-0 group of the slice."""
        gens = list(self.ambient.generators(0))
        rows = sorted({k for g in gens for k in self.constraint_rows(g)}, key=repr)
        columns = [self.constraint_rows(g) for g in gens]
        matrix = [[col.get(r, 0) for col in columns] for r in rows]
        return [Chain(0, dict(zip(gens, vec))) for vec in integer_kernel(matrix, len(gens))]

    def forget(self, u: Chain) -> Chain:
        """U(u) = u_{−1}(1) as a chain of M."""
        total = {}
        for name, c in u.items():
            x, m = split_entry(name)
            if x is None:
                total[m] = c
        return Chain(u.degree, total)

    def element(self, degree: int, parts: dict) -> Chain:
        """Build an element from {x or None: chain of M} giving u_j(x)."""
        total = {}
        for x, chain in parts.items():
            for m, v in chain.items():
                total[entry_name(x, m)] = v
        return Chain(degree, total)

    def component(self, u: Chain, x: str | None) -> Chain:
        """u_j(x) as a chain of M."""
        j = self._k_degree(x)
        total = {}
        for name, c in u.items():
            x2, m = split_entry(name)
            if x2 == x:
                total[m] = c
        return Chain(u.degree + j + 1, total)

    def is_positive(self, u: Chain) -> bool:
        return u.is_nonnegative()

    def cells(self, i: int, cap: int):
        return enumerate_cells(self.ambient, i, cap, degree0_constraint=self.degree0_constraint())


def validate_slice(S: Slice) -> Report:
    """d∘d = 0 on the ambient, e∘d₁ = 0, and d₁ lands in the degree-0 subgroup."""
    from .complexes import validate_complex

    rep = validate_complex(S.ambient)
    if not rep.ok:
        return rep
    for gen in S.ambient.generators(1):
        if S.constraint_defect(S.ambient.diff_of(gen)):
            return failed("validate_slice", gen, reason="d₁ leaves the degree-0 subgroup")
    return passed("validate_slice")


def coslice(M: Complex, g: Morphism) -> Slice:
    """The slice of the odd duals; its ambient is dualized back."""
    Mo = opp(M)
    Ko = opp(g.source)
    go = Morphism(Ko, Mo, g.maps)
    S = Slice(Mo, go, name=f"{M.name}\\\\g")
    S.ambient = opp(S.ambient)
    S.ambient.name = f"{M.name}\\\\g"
    return S


# ----- the join adjunction ----------------------------------------------


def slice_adjunction_phi(F: Morphism, K: Complex, L: Complex, S: Slice) -> Morphism:
    """φ(F)_j(y)_i(x) = F(x⋆y): a morphism L → M//g from F: K⋆L → M."""
    maps = {}
    for y in L.all_generators():
        degree = L.degree_of(y)
        parts = {None: F.maps[join_name(None, y)]}
        for x in K.all_generators():
            parts[x] = F.maps[join_name(x, y)]
        maps[y] = S.element(degree, parts)
    return Morphism(L, S.ambient, maps)


def slice_adjunction_psi(G: Morphism, K: Complex, L: Complex, S: Slice, KL: Complex | None = None) -> Morphism:
    """ψ(G)(x⋆y) = G(y)_{|x|}(x), ψ(G)(∅⋆y) = G(y)_{−1}(1), ψ(G)(x⋆∅) = g(x)."""
    KL = KL or join(K, L)
    maps = {}
    for x in K.all_generators():
        maps[join_name(x, None)] = S.g.maps[x]
    for y in L.all_generators():
        maps[join_name(None, y)] = S.component(G.maps[y], None)
        for x in K.all_generators():
            maps[join_name(x, y)] = S.component(G.maps[y], x)
    return Morphism(KL, S.M, maps)


def under(F: Morphism, g: Morphism, K: Complex) -> bool:
    """F∘ι₁ = g."""
    return all(F.maps[join_name(x, None)] == g.maps[x] for x in K.all_generators())


def validate_slice_morphism(G: Morphism, S: Slice) -> Report:
    """A morphism into the ambient whose degree-0 images lie in the slice."""
    rep = validate_morphism(G)
    if not rep.ok:
        return rep
    for y in G.source.generators(0):
        if S.constraint_defect(G.maps[y]):
            return failed("validate_slice_morphism", y, reason="degree-0 image outside the slice")
    return passed("validate_slice_morphism")


def slice_morphisms(L: Complex, S: Slice, cap: int) -> list[Morphism]:
    return enumerate_adc_morphisms(L, S.ambient, cap, degree0_constraint=S.degree0_constraint())


# ----- triangles and cones ---------------------------------------------


def _pull_entry(S_to: Slice, f: Morphism, name: str, degree: int) -> Chain:
    """u′ ↦ u′ f on one elementary entry x′↦m (slot −1 is left alone)."""
    x2, m = split_entry(name)
    if x2 is None:
        return Chain.generator(name, degree)
    total = {}
    j = f.target.degree_of(x2)
    for x in f.source.generators(j):
        c = f.maps[x].coefficient(x2)
        if c:
            total[entry_name(x, m)] = c
    return Chain(degree, total)


def _e_term(S_to: Slice, family: Family, m: str, shift: int) -> dict:
    """Σ_x (x ↦ H(x)) scaled by e(m), landing in degree `shift`."""
    total = {}
    e = S_to.M.aug_of(m)
    if not e:
        return total
    for x in family.domain.all_generators():
        for m2, v in family.components[x].items():
            key = entry_name(x, m2)
            total[key] = total.get(key, 0) + e * v
    return total


@dataclass
class TrianglePullback:
    morphism: Morphism  # ambient of L//g′ → ambient of L//g
    source_slice: Slice
    target_slice: Slice

    def apply(self, u: Chain) -> Chain:
        return self.morphism.apply(u)


def triangle_pullback(f: Morphism, h: Family, g: Morphism, g2: Morphism,
                      S2: Slice | None = None, S: Slice | None = None) -> TrianglePullback:
    """(f, h)*: L//g′ → L//g for an antihomotopy h: g → g′f into a decent L."""
    L = g.target
    if not L.is_decent():
        raise ComplexError(f"{L.name} is not decent")
    if h.variance != ANTIHOMOTOPY or h.level != 1:
        raise ComplexError("the triangle needs a level-1 antihomotopy")
    if not validate_homotopy(h).ok:
        raise ComplexError("the antihomotopy is not valid")
    if h.source.maps != g.maps or h.target.maps != compose_morphisms(g2, f).maps:
        raise ComplexError("the antihomotopy must go from g to g′f")
    S2 = S2 or Slice(L, g2)
    S = S or Slice(L, g)
    maps = {}
    for name in S2.ambient.all_generators():
        degree = S2.ambient.degree_of(name)
        chain = _pull_entry(S2, f, name, degree)
        x2, m = split_entry(name)
        if degree == 0 and x2 is None:
            chain = chain + Chain(0, _e_term(S2, h, m, 0))
        maps[name] = chain
    return TrianglePullback(Morphism(S2.ambient, S.ambient, maps), S2, S)


@dataclass
class ConeHomotopy:
    """A degree-raising family between ambient morphisms of slices."""

    components: dict  # ambient generator of L//g′ ↦ chain one degree up in L//g
    source: TrianglePullback  # (f′, h′)*
    target: TrianglePullback  # (f, h)*

    def apply(self, u: Chain) -> Chain:
        total: dict[str, int] = {}
        for gen, c in u.items():
            for other, v in self.components[gen].items():
                total[other] = total.get(other, 0) + c * v
        return Chain(u.degree + 1, total)


def cone_homotopy(k: Family, H: Family, source: TrianglePullback, target: TrianglePullback) -> ConeHomotopy:
    """(k, H)*: a homotopy from (f′, h′)* to (f, h)*.

    k is an antihomotopy f → f′ and H a level-2 antihomotopy g′k + h → h′.
    """
    S2 = target.source_slice
    if S2.ambient.size() != source.source_slice.ambient.size():
        raise ComplexError("both triangles must start at the same slice")
    comps = {}
    for name in S2.ambient.all_generators():
        degree = S2.ambient.degree_of(name)
        x2, m = split_entry(name)
        total: dict[str, int] = {}
        if x2 is not None:
            j = S2.K.degree_of(x2) - 1
            if j >= 0:
                for x in k.domain.generators(j):
                    c = k.components[x].coefficient(x2)
                    if c:
                        key = entry_name(x, m)
                        total[key] = total.get(key, 0) + c
        elif degree == 0:
            total.update(_e_term(S2, H, m, 1))
        comps[name] = Chain(degree + 1, total)
    return ConeHomotopy(comps, source, target)


def validate_cone_homotopy(C: ConeHomotopy) -> Report:
    """d C + C d = target − source, on ambient generators and the degree-0 basis."""
    S2, S = C.target.source_slice, C.target.target_slice
    A2, A = S2.ambient, S.ambient
    for name in A2.all_generators():
        if not C.components[name].is_nonnegative():
            return failed("validate_cone_homotopy", name, reason="positivity")
    checks = [(Chain.generator(g, A2.degree_of(g)), g) for g in A2.all_generators() if A2.degree_of(g) > 0]
    checks += [(u, f"degree-0 basis element {n}") for n, u in enumerate(S2.degree0_basis)]
    for u, label in checks:
        lhs = A.boundary(C.apply(u))
        if u.degree > 0:
            lhs = lhs + C.apply(A2.boundary(u))
        rhs = C.target.apply(u) - C.source.apply(u)
        if lhs != rhs:
            return failed("validate_cone_homotopy", label, reason="homotopy relation")
    return passed("validate_cone_homotopy")


def compose_pullbacks(a: TrianglePullback, b: TrianglePullback) -> Morphism:
    """a∘b on ambients."""
    return compose_morphisms(a.morphism, b.morphism)


def cone_after_pullback(a: TrianglePullback, C: ConeHomotopy) -> dict:
    """Components of a∘C."""
    return {g: a.morphism.apply(v) for g, v in C.components.items()}


def cone_before_pullback(C: ConeHomotopy, b: TrianglePullback) -> dict:
    """Components of C∘b."""
    return {g: C.apply(v) for g, v in b.morphism.maps.items()}


def forget_commutes(P: TrianglePullback) -> bool:
    """U∘(f, h)* = U′ on every ambient generator."""
    S2, S = P.source_slice, P.target_slice
    return all(
        S.forget(P.apply(Chain.generator(g, S2.ambient.degree_of(g))))
        == S2.forget(Chain.generator(g, S2.ambient.degree_of(g)))
        for g in S2.ambient.all_generators()
    )


def slice_over_empty_iso(L: Complex) -> Report:
    """L//(∅ → L) ≅ L through u ↦ u_{−1}(1)."""
    empty = empty_complex()
    S = Slice(L, Morphism(empty, L, {}))
    mapping = {entry_name(None, m): m for m in L.all_generators()}
    if set(S.ambient.all_generators()) != set(mapping):
        return failed("slice_over_empty", reason="unexpected generators")
    from .constructions import relabel

    if not relabel(S.ambient, mapping).same_structure(L):
        return failed("slice_over_empty", reason="structure differs")
    return passed("slice_over_empty")
