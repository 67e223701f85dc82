"""Based augmented directed complexes, their morphisms and atom tables.

A complex is stored as a graded basis of generator names, the boundary of
each generator of positive degree and the augmentation of each generator of
degree 0.  The positivity submonoids are the nonnegative combinations of the
basis, so positivity is always checked coefficientwise.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Iterable, Mapping

from .chains import Chain
from .reports import Report, failed, passed


class ComplexError(ValueError):
    """Raised when a complex or morphism is malformed."""


def _as_chain(value, degree: int) -> Chain:
    if isinstance(value, Chain):
        if value.degree != degree:
            raise ComplexError(f"expected a degree {degree} chain, got degree {value.degree}")
        return value
    return Chain(degree, dict(value or {}))


class Complex:
    """A based augmented directed complex with a finite basis."""

    def __init__(
        self,
        name: str,
        basis: Mapping[int, Iterable[str]],
        diff: Mapping[str, Chain | Mapping[str, int]] | None = None,
        aug: Mapping[str, int] | None = None,
    ):
        self.name = name
        graded: dict[int, tuple[str, ...]] = {}
        degree_of: dict[str, int] = {}
        for degree in sorted(basis):
            if degree < 0:
                raise ComplexError("basis degrees must be nonnegative")
            names = tuple(basis[degree])
            if names:
                graded[degree] = names
            for gen in names:
                degree_of.setdefault(gen, degree)
        self.basis = graded
        self._degree = degree_of
        diff = diff or {}
        aug = aug or {}
        for gen in diff:
            if gen not in degree_of:
                raise ComplexError(f"boundary given for unknown generator {gen!r}")
        for gen in aug:
            if gen not in degree_of:
                raise ComplexError(f"augmentation given for unknown generator {gen!r}")
        self._diff: dict[str, Chain] = {}
        self._aug: dict[str, int] = {}
        for gen, deg in degree_of.items():
            if deg == 0:
                value = aug.get(gen, 0)
                if not isinstance(value, int):
                    raise ComplexError(f"augmentation of {gen!r} is not an integer")
                self._aug[gen] = value
                given = diff.get(gen)
                if given and (not isinstance(given, Chain) or not given.is_zero()):
                    if isinstance(given, Chain) or any(given.values()):
                        raise ComplexError(f"degree 0 generator {gen!r} cannot have a boundary")
            else:
                if gen in aug and aug[gen]:
                    raise ComplexError(f"only degree 0 generators carry an augmentation ({gen!r})")
                chain = _as_chain(diff.get(gen), deg - 1)
                for other in chain.support():
                    if degree_of.get(other) != deg - 1:
                        raise ComplexError(
                            f"boundary of {gen!r} mentions {other!r}, which is not a degree {deg - 1} generator"
                        )
                self._diff[gen] = chain

    # ----- basic access -------------------------------------------------
    @property
    def dim(self) -> int:
        return max(self.basis, default=-1)

    def generators(self, degree: int) -> tuple[str, ...]:
        return self.basis.get(degree, ())

    def all_generators(self) -> list[str]:
        return [g for d in sorted(self.basis) for g in self.basis[d]]

    def size(self) -> int:
        return sum(len(v) for v in self.basis.values())

    def degree_of(self, gen: str) -> int:
        try:
            return self._degree[gen]
        except KeyError:
            raise ComplexError(f"{gen!r} is not a generator of {self.name}") from None

    def has_generator(self, gen: str) -> bool:
        return gen in self._degree

    def generator_chain(self, gen: str, coefficient: int = 1) -> Chain:
        return Chain(self.degree_of(gen), {gen: coefficient})

    def diff_of(self, gen: str) -> Chain:
        deg = self.degree_of(gen)
        if deg == 0:
            raise ComplexError("degree 0 generators have no boundary; use the augmentation")
        return self._diff[gen]

    def aug_of(self, gen: str) -> int:
        if self.degree_of(gen) != 0:
            raise ComplexError("only degree 0 generators have an augmentation")
        return self._aug[gen]

    def boundary(self, chain: Chain) -> Chain:
        """The differential of a chain of positive degree."""
        if chain.degree <= 0:
            raise ComplexError("the differential is only defined in positive degree")
        self._check_chain(chain)
        total: dict[str, int] = {}
        for gen, coef in chain.items():
            for other, value in self._diff[gen].items():
                total[other] = total.get(other, 0) + coef * value
        return Chain(chain.degree - 1, total)

    def augment(self, chain: Chain) -> int:
        if chain.degree != 0:
            raise ComplexError("the augmentation is only defined in degree 0")
        self._check_chain(chain)
        return sum(coef * self._aug[gen] for gen, coef in chain.items())

    def extended_augment(self, chain: Chain) -> int:
        """Augmentation extended by zero to homogeneous chains of positive degree."""
        return self.augment(chain) if chain.degree == 0 else 0

    def _check_chain(self, chain: Chain) -> None:
        for gen in chain.support():
            if self._degree.get(gen) != chain.degree:
                raise ComplexError(
                    f"{gen!r} is not a degree {chain.degree} generator of {self.name}"
                )

    def contains_chain(self, chain: Chain) -> bool:
        return all(self._degree.get(g) == chain.degree for g in chain.support())

    def is_decent(self) -> bool:
        return all(v >= 0 for v in self._aug.values())

    # ----- comparison and serialization --------------------------------
    def same_structure(self, other: "Complex") -> bool:
        """Equality of bases (as sets per degree), differentials and augmentations."""
        if {d: set(v) for d, v in self.basis.items()} != {d: set(v) for d, v in other.basis.items()}:
            return False
        return self._diff == other._diff and self._aug == other._aug

    def renamed(self, name: str) -> "Complex":
        return Complex(name, self.basis, self._diff, self._aug)

    def to_json(self) -> dict:
        basis = {str(d): sorted(self.basis[d]) for d in sorted(self.basis)}
        diff = {
            gen: self._diff[gen].to_json()
            for gen in sorted(self._diff)
            if not self._diff[gen].is_zero()
        }
        aug = {gen: self._aug[gen] for gen in sorted(self._aug) if self._aug[gen]}
        return {"name": self.name, "basis": basis, "d": diff, "aug": aug}

    @classmethod
    def from_json(cls, data: Mapping) -> "Complex":
        if not isinstance(data, Mapping) or "basis" not in data:
            raise ComplexError("a complex document needs a 'basis' entry")
        try:
            basis = {int(d): list(names) for d, names in data["basis"].items()}
        except (TypeError, ValueError, AttributeError) as exc:
            raise ComplexError(f"malformed basis: {exc}") from None
        degree_of = {g: d for d, names in basis.items() for g in names}
        diff = {}
        for gen, coeffs in (data.get("d") or {}).items():
            if gen not in degree_of:
                raise ComplexError(f"boundary given for unknown generator {gen!r}")
            diff[gen] = Chain(degree_of[gen] - 1, dict(coeffs))
        return cls(data.get("name", "K"), basis, diff, dict(data.get("aug") or {}))

    def dumps(self) -> str:
        return json.dumps(self.to_json(), ensure_ascii=False, sort_keys=True)

    def __repr__(self) -> str:
        sizes = ", ".join(str(len(self.generators(d))) for d in range(self.dim + 1))
        return f"Complex({self.name!r}; sizes [{sizes}])"


def validate_complex(K: Complex) -> Report:
    """Report every violated identity of an augmented directed complex."""
    problems = []
    seen: dict[str, int] = {}
    for degree in sorted(K.basis):
        for gen in K.basis[degree]:
            if gen in seen:
                problems.append(f"duplicate generator name {gen!r}")
            seen[gen] = degree
    for gen in K.generators(1):
        if K.augment(K.diff_of(gen)) != 0:
            problems.append(f"e∘d₁ ≠ 0 at {gen}")
    for degree in sorted(K.basis):
        if degree < 2:
            continue
        for gen in K.basis[degree]:
            if not K.boundary(K.diff_of(gen)).is_zero():
                problems.append(f"d∘d ≠ 0 at {gen}")
    if problems:
        return failed("validate_complex", *problems)
    return passed("validate_complex")


# ----- morphisms --------------------------------------------------------


class Morphism:
    """A degree-preserving map of based complexes given on generators."""

    def __init__(self, source: Complex, target: Complex, maps: Mapping[str, Chain | Mapping[str, int]]):
        self.source = source
        self.target = target
        images: dict[str, Chain] = {}
        for gen in maps:
            if not source.has_generator(gen):
                raise ComplexError(f"{gen!r} is not a generator of {source.name}")
        for gen in source.all_generators():
            deg = source.degree_of(gen)
            chain = _as_chain(maps.get(gen), deg)
            if not target.contains_chain(chain):
                raise ComplexError(
                    f"image of {gen!r} is not a degree {deg} chain of {target.name}"
                )
            images[gen] = chain
        self.maps = images

    def image(self, gen: str) -> Chain:
        return self.maps[gen]

    def apply(self, chain: Chain) -> Chain:
        if chain.degree == -1:
            raise ComplexError("morphisms act on chains of degree at least 0")
        total: dict[str, int] = {}
        for gen, coef in chain.items():
            if gen not in self.maps:
                raise ComplexError(f"{gen!r} is not a generator of {self.source.name}")
            for other, value in self.maps[gen].items():
                total[other] = total.get(other, 0) + coef * value
        return Chain(chain.degree, total)

    __call__ = apply

    def __eq__(self, other) -> bool:
        if not isinstance(other, Morphism):
            return NotImplemented
        return self.maps == other.maps

    def __hash__(self) -> int:
        return hash(frozenset((g, c) for g, c in self.maps.items()))

    def to_json(self) -> dict:
        return {
            "source": self.source.name,
            "target": self.target.name,
            "maps": {g: self.maps[g].to_json() for g in sorted(self.maps) if not self.maps[g].is_zero()},
        }

    @classmethod
    def from_json(cls, data: Mapping, source: Complex, target: Complex) -> "Morphism":
        maps = {}
        for gen, coeffs in (data.get("maps") or {}).items():
            maps[gen] = Chain(source.degree_of(gen), dict(coeffs))
        return cls(source, target, maps)

    def __repr__(self) -> str:
        return f"Morphism({self.source.name} → {self.target.name})"


def validate_morphism(f: Morphism) -> Report:
    """Check commutation with d and e and positivity on every generator."""
    problems = []
    K, L = f.source, f.target
    for gen in K.all_generators():
        image = f.maps[gen]
        if not image.is_nonnegative():
            problems.append(f"negative coefficient in the image of {gen}")
        deg = K.degree_of(gen)
        if deg == 0:
            if L.augment(image) != K.aug_of(gen):
                problems.append(f"augmentation not preserved at {gen}")
        elif L.boundary(image) != f.apply(K.diff_of(gen)):
            problems.append(f"differential not preserved at {gen}")
    if problems:
        return failed("validate_morphism", *problems)
    return passed("validate_morphism")


def identity_morphism(K: Complex) -> Morphism:
    return Morphism(K, K, {g: K.generator_chain(g) for g in K.all_generators()})


def compose_morphisms(g: Morphism, f: Morphism) -> Morphism:
    """The composite g∘f."""
    if f.target is not g.source and not f.target.same_structure(g.source):
        raise ComplexError(
            f"cannot compose: target {f.target.name} differs from source {g.source.name}"
        )
    return Morphism(f.source, g.target, {gen: g.apply(img) for gen, img in f.maps.items()})


def is_isomorphism(f: Morphism) -> bool:
    """A valid morphism that is a bijection between the bases."""
    if not validate_morphism(f).ok:
        return False
    hit = set()
    for image in f.maps.values():
        if len(image.support()) != 1 or image.total() != 1:
            return False
        hit.update(image.support())
    return len(hit) == f.source.size() == f.target.size()


# ----- supports and atoms ----------------------------------------------


def support(x: Chain) -> frozenset[str]:
    return x.support()


def pos_neg_parts(x: Chain) -> tuple[Chain, Chain]:
    return x.positive_part(), x.negative_part()


@dataclass(frozen=True)
class AtomTable:
    element: Chain
    rows: tuple  # rows[k] = (lower chain, upper chain)

    def row(self, k: int, side: int) -> Chain:
        return self.rows[k][side]

    @property
    def dim(self) -> int:
        return self.element.degree

    def to_json(self) -> dict:
        return {"dim": self.dim, "rows": [[a.to_json(), b.to_json()] for a, b in self.rows]}


def atom_table(K: Complex, x: Chain) -> AtomTable:
    """Iterate negative and positive parts of boundaries down to degree 0."""
    if x.degree < 0:
        raise ComplexError("atoms are defined for chains of degree at least 0")
    if not K.contains_chain(x):
        raise ComplexError(f"chain {x!r} does not live in degree {x.degree} of {K.name}")
    rows = [None] * (x.degree + 1)
    rows[x.degree] = (x, x)
    lower, upper = x, x
    for k in range(x.degree, 0, -1):
        lower = K.boundary(lower).negative_part()
        upper = K.boundary(upper).positive_part()
        rows[k - 1] = (lower, upper)
    return AtomTable(x, tuple(rows))


def generator_atom(K: Complex, gen: str) -> AtomTable:
    return atom_table(K, K.generator_chain(gen))
