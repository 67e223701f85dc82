"""Homotopies, antihomotopies and their higher versions between morphisms.

A family of level n assigns to each generator of degree i a chain of degree
i + n.  Level 0 is an ordinary morphism.  The homotopy relation reads
d H_i − (−1)ⁿ H_{i−1} d_i = k_i − h_i and the antihomotopy relation
d H_i − H_{i−1} d_i = (−1)^i (k_i − h_i), with H_{−1} = 0 and d_0 = 0.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Mapping, Union

from .chains import Chain
from .complexes import Complex, ComplexError, Morphism, compose_morphisms, validate_morphism
from .reports import Report, failed, passed

HOMOTOPY = "homotopy"
ANTIHOMOTOPY = "antihomotopy"


class Family:
    """A level-n family from `source` to `target`, both of level n − 1."""

    def __init__(self, variance: str, source, target, components: Mapping[str, Chain | Mapping[str, int]]):
        if variance not in (HOMOTOPY, ANTIHOMOTOPY):
            raise ComplexError(f"unknown variance {variance!r}")
        if level_of(source) != level_of(target):
            raise ComplexError("source and target must have the same level")
        self.variance = variance
        self.source = source
        self.target = target
        self.level = level_of(source) + 1
        K, L = domain(source), codomain(source)
        self.domain, self.codomain = K, L
        comps = {}
        for gen in components:
            if not K.has_generator(gen):
                raise ComplexError(f"{gen!r} is not a generator of {K.name}")
        for gen in K.all_generators():
            value = components.get(gen)
            degree = K.degree_of(gen) + self.level
            chain = value if isinstance(value, Chain) else Chain(degree, dict(value or {}))
            if chain.degree != degree or not L.contains_chain(chain):
                raise ComplexError(f"component at {gen!r} must be a degree {degree} chain of {L.name}")
            comps[gen] = chain
        self.components = comps

    def apply(self, chain: Chain) -> Chain:
        total: dict[str, int] = {}
        for gen, c in chain.items():
            for other, v in self.components[gen].items():
                total[other] = total.get(other, 0) + c * v
        return Chain(chain.degree + self.level, total)

    __call__ = apply

    def __eq__(self, other) -> bool:
        if not isinstance(other, Family):
            return NotImplemented
        return (
            self.variance == other.variance
            and self.level == other.level
            and self.components == other.components
        )

    def __hash__(self):
        return hash((self.variance, self.level, frozenset(self.components.items())))

    def to_json(self) -> dict:
        return {
            "variance": "anti" if self.variance == ANTIHOMOTOPY else "homo",
            "level": self.level,
            "components": {g: c.to_json() for g, c in sorted(self.components.items()) if not c.is_zero()},
        }

    def __repr__(self) -> str:
        return f"Family({self.variance}, level {self.level}, {self.domain.name} → {self.codomain.name})"


Cellular = Union[Morphism, Family]


def level_of(x: Cellular) -> int:
    return 0 if isinstance(x, Morphism) else x.level


def domain(x: Cellular) -> Complex:
    return x.source if isinstance(x, Morphism) else x.domain


def codomain(x: Cellular) -> Complex:
    return x.target if isinstance(x, Morphism) else x.codomain


def image(x: Cellular, gen: str) -> Chain:
    return x.maps[gen] if isinstance(x, Morphism) else x.components[gen]


def apply(x: Cellular, chain: Chain) -> Chain:
    return x.apply(chain)


def same(a: Cellular, b: Cellular) -> bool:
    if level_of(a) != level_of(b):
        return False
    if isinstance(a, Morphism):
        return a.maps == b.maps
    return a == b


def _parallel(h: Cellular, k: Cellular) -> bool:
    if level_of(h) == 0:
        return True
    return same(h.source, k.source) and same(h.target, k.target)


def validate_homotopy(H: Family) -> Report:
    """Check the boundary relation and positivity on every generator."""
    check = f"validate_{H.variance}"
    K, L = H.domain, H.codomain
    n = H.level
    if not _parallel(H.source, H.target):
        return failed(check, "source and target are not parallel")
    for end in (H.source, H.target):
        ok = validate_morphism(end).ok if n == 1 else validate_homotopy(end).ok
        if not ok:
            return failed(check, "an end is not valid")
    for gen in K.all_generators():
        i = K.degree_of(gen)
        value = H.components[gen]
        if not value.is_nonnegative():
            return failed(check, gen, reason="positivity")
        left = L.boundary(value)
        if i > 0:
            lower = H.apply(K.diff_of(gen))
            if H.variance == HOMOTOPY:
                left = left - (-1) ** n * lower
            else:
                left = left - lower
        difference = image(H.target, gen) - image(H.source, gen)
        if H.variance == ANTIHOMOTOPY:
            difference = (-1) ** i * difference
        if left != difference:
            return failed(check, gen, reason="boundary relation")
    return passed(check)


def is_valid(H: Family) -> bool:
    return validate_homotopy(H).ok


# ----- operations -------------------------------------------------------


def _check_variance(*families: Family) -> str:
    variances = {f.variance for f in families if isinstance(f, Family)}
    if len(variances) > 1:
        raise ComplexError("cannot mix homotopies and antihomotopies")
    return variances.pop()


def homotopy_identity(h: Cellular, variance: str | None = None) -> Family:
    """The identity family on h, one level up, with zero components."""
    variance = variance or (h.variance if isinstance(h, Family) else HOMOTOPY)
    return Family(variance, h, h, {})


def whisker_right(H: Cellular, g: Morphism) -> Cellular:
    """Hg, components H_i g_i; goes from hg to h′g when H goes from h to h′."""
    if isinstance(H, Morphism):
        return compose_morphisms(H, g)
    if not (g.target is H.domain or g.target.same_structure(H.domain)):
        raise ComplexError("whiskering needs g to land in the domain of H")
    comps = {gen: H.apply(img) for gen, img in g.maps.items()}
    return Family(H.variance, whisker_right(H.source, g), whisker_right(H.target, g), comps)


def whisker_left(g: Morphism, H: Cellular) -> Cellular:
    """gH, components g_{i+n} H_i."""
    if isinstance(H, Morphism):
        return compose_morphisms(g, H)
    if not (g.source is H.codomain or g.source.same_structure(H.codomain)):
        raise ComplexError("whiskering needs g to start at the codomain of H")
    comps = {gen: g.apply(value) for gen, value in H.components.items()}
    return Family(H.variance, whisker_left(g, H.source), whisker_left(g, H.target), comps)


def _sum_components(a: Family, b: Family) -> dict:
    return {gen: a.components[gen] + b.components[gen] for gen in a.components}


def vertical_sum(H2: Family, H1: Family) -> Family:
    """H2 + H1 for H1: h₀ → h₁ and H2: h₁ → h₂ (codimension 1)."""
    variance = _check_variance(H2, H1)
    if H2.level != H1.level or not same(H1.target, H2.source):
        raise ComplexError("codimension-1 sum needs H1's target to be H2's source")
    return Family(variance, H1.source, H2.target, _sum_components(H2, H1))


def cod2_sum(H2: Family, H1: Family) -> Family:
    """H2 + H1 for H1: h → k, H2: h′ → k′ with h, h′ composable (codimension 2)."""
    variance = _check_variance(H2, H1)
    if H2.level != H1.level or H1.level < 2:
        raise ComplexError("codimension-2 sum needs two families of the same level ≥ 2")
    source = vertical_sum(H2.source, H1.source)
    target = vertical_sum(H2.target, H1.target)
    return Family(variance, source, target, _sum_components(H2, H1))


def gray_interchange(h2: Family, h1: Family) -> Family:
    """The level-2 family h2 h1 with components h2_{i+1} h1_i.

    For h1: f → g (K → L) and h2: f′ → g′ (L → M), homotopies go from
    h2 g + f′ h1 to g′ h1 + h2 f and antihomotopies the other way.
    """
    variance = _check_variance(h2, h1)
    if h1.level != 1 or h2.level != 1:
        raise ComplexError("the interchange family needs two level-1 families")
    f, g = h1.source, h1.target
    f2, g2 = h2.source, h2.target
    one = vertical_sum(whisker_right(h2, g), whisker_left(f2, h1))
    other = vertical_sum(whisker_left(g2, h1), whisker_right(h2, f))
    comps = {gen: h2.apply(value) for gen, value in h1.components.items()}
    if variance == HOMOTOPY:
        return Family(variance, one, other, comps)
    return Family(variance, other, one, comps)


# ----- random instances -------------------------------------------------


def _relation_difference(variance: str, level: int, K: Complex, L: Complex, comps: Mapping[str, Chain], gen: str) -> Chain:
    """The chain k_i − h_i forced by given components at a generator."""
    i = K.degree_of(gen)
    value = comps[gen]
    left = L.boundary(value)
    if i > 0:
        lower_total: dict[str, int] = {}
        for other, c in K.diff_of(gen).items():
            for t, v in comps[other].items():
                lower_total[t] = lower_total.get(t, 0) + c * v
        lower = Chain(i - 1 + level, lower_total)
        left = left - ((-1) ** level * lower if variance == HOMOTOPY else lower)
    return (-1) ** i * left if variance == ANTIHOMOTOPY else left


def random_components(K: Complex, L: Complex, level: int, rng: random.Random, density: float = 0.5, cap: int = 1) -> dict:
    comps = {}
    for gen in K.all_generators():
        targets = L.generators(K.degree_of(gen) + level)
        total: dict[str, int] = {}
        if targets and rng.random() < density:
            for t in rng.sample(list(targets), k=min(len(targets), rng.randint(1, 2))):
                total[t] = rng.randint(1, cap)
        comps[gen] = Chain(K.degree_of(gen) + level, total)
    return comps


def _end_from(variance: str, known: Cellular, comps: dict, known_is_target: bool) -> Cellular | None:
    """Solve the relation for the missing end; None if positivity fails."""
    K, L = domain(known), codomain(known)
    level = level_of(known) + 1
    images = {}
    for gen in K.all_generators():
        diff = _relation_difference(variance, level, K, L, comps, gen)
        value = image(known, gen) - diff if known_is_target else image(known, gen) + diff
        if not value.is_nonnegative():
            return None
        images[gen] = value
    if level_of(known) == 0:
        return Morphism(K, L, images)
    # the missing end shares the ends of the known one
    return Family(variance, known.source, known.target, images)


def random_family_to(target: Cellular, seed: int, variance: str = ANTIHOMOTOPY, **kw):
    """Draw components H and solve for the source; returns (source, H) or None."""
    rng = random.Random(seed)
    K, L = domain(target), codomain(target)
    comps = random_components(K, L, level_of(target) + 1, rng, **kw)
    source = _end_from(variance, target, comps, known_is_target=True)
    if source is None:
        return None
    H = Family(variance, source, target, comps)
    return (source, H) if is_valid(H) else None


def random_family_from(source: Cellular, seed: int, variance: str = ANTIHOMOTOPY, **kw):
    """Draw components H and solve for the target; returns (target, H) or None."""
    rng = random.Random(seed)
    K, L = domain(source), codomain(source)
    comps = random_components(K, L, level_of(source) + 1, rng, **kw)
    target = _end_from(variance, source, comps, known_is_target=False)
    if target is None:
        return None
    H = Family(variance, source, target, comps)
    return (target, H) if is_valid(H) else None


def random_antihomotopy(f: Morphism, g2: Morphism, seed: int, **kw):
    """Draw h and define g so that h is an antihomotopy g → g2∘f.

    Returns (g, h), or None when the solved g is not a valid morphism.
    """
    result = random_family_to(compose_morphisms(g2, f), seed, ANTIHOMOTOPY, **kw)
    if result is None:
        return None
    g, h = result
    return g, h


@dataclass(frozen=True)
class AcceptanceCount:
    drawn: int
    accepted: int

    @property
    def rate(self) -> float:
        return self.accepted / self.drawn if self.drawn else 0.0
