"""Homogeneous integer chains over named generators."""

from __future__ import annotations

from typing import Iterable, Mapping


class Chain:
    """A finite integer combination of generators sharing one degree.

    Chains are immutable.  Zero coefficients are never stored, so two chains
    are equal exactly when they have the same degree and the same nonzero
    coefficients.  Degree -1 is allowed as a formal slot for the join and
    slice constructions; the core complex model never produces it.
    """

    __slots__ = ("degree", "_coeffs", "_hash")

    def __init__(self, degree: int, coeffs: Mapping[str, int] | None = None):
        if degree < -1:
            raise ValueError(f"chain degree must be at least -1, got {degree}")
        self.degree = degree
        clean = {}
        if coeffs:
            for name, value in coeffs.items():
                if not isinstance(value, int):
                    raise TypeError(f"coefficient of {name!r} is not an integer")
                if value:
                    clean[name] = value
        self._coeffs = clean
        self._hash = None

    @classmethod
    def zero(cls, degree: int) -> "Chain":
        return cls(degree)

    @classmethod
    def generator(cls, name: str, degree: int, coefficient: int = 1) -> "Chain":
        return cls(degree, {name: coefficient})

    @classmethod
    def sum(cls, degree: int, chains: Iterable["Chain"]) -> "Chain":
        total: dict[str, int] = {}
        for chain in chains:
            if chain.degree != degree:
                raise ValueError(
                    f"cannot add a degree {chain.degree} chain to degree {degree}"
                )
            for name, value in chain._coeffs.items():
                total[name] = total.get(name, 0) + value
        return cls(degree, total)

    @property
    def coeffs(self) -> dict[str, int]:
        return dict(self._coeffs)

    def items(self):
        return self._coeffs.items()

    def coefficient(self, name: str) -> int:
        return self._coeffs.get(name, 0)

    def support(self) -> frozenset[str]:
        return frozenset(self._coeffs)

    def is_zero(self) -> bool:
        return not self._coeffs

    def is_nonnegative(self) -> bool:
        return all(v > 0 for v in self._coeffs.values())

    def positive_part(self) -> "Chain":
        return Chain(self.degree, {n: v for n, v in self._coeffs.items() if v > 0})

    def negative_part(self) -> "Chain":
        return Chain(self.degree, {n: -v for n, v in self._coeffs.items() if v < 0})

    def parts(self) -> tuple["Chain", "Chain"]:
        return self.positive_part(), self.negative_part()

    def max_coefficient(self) -> int:
        return max((abs(v) for v in self._coeffs.values()), default=0)

    def total(self) -> int:
        """Sum of the coefficients."""
        return sum(self._coeffs.values())

    def _check(self, other: "Chain") -> None:
        if not isinstance(other, Chain):
            raise TypeError("chains only combine with chains")
        if other.degree != self.degree:
            raise ValueError(
                f"degree mismatch: {self.degree} versus {other.degree}"
            )

    def __add__(self, other: "Chain") -> "Chain":
        self._check(other)
        total = dict(self._coeffs)
        for name, value in other._coeffs.items():
            total[name] = total.get(name, 0) + value
        return Chain(self.degree, total)

    def __sub__(self, other: "Chain") -> "Chain":
        return self + (-other)

    def __neg__(self) -> "Chain":
        return Chain(self.degree, {n: -v for n, v in self._coeffs.items()})

    def __mul__(self, scalar: int) -> "Chain":
        if not isinstance(scalar, int):
            return NotImplemented
        return Chain(self.degree, {n: scalar * v for n, v in self._coeffs.items()})

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        if not isinstance(other, Chain):
            return NotImplemented
        return self.degree == other.degree and self._coeffs == other._coeffs

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.degree, frozenset(self._coeffs.items())))
        return self._hash

    def sort_key(self):
        return (self.degree, tuple(sorted(self._coeffs.items())))

    def to_json(self) -> dict[str, int]:
        return {name: self._coeffs[name] for name in sorted(self._coeffs)}

    def __repr__(self) -> str:
        if not self._coeffs:
            return f"0[{self.degree}]"
        terms = []
        for name in sorted(self._coeffs):
            value = self._coeffs[name]
            if value == 1:
                terms.append(f"+{name}")
            elif value == -1:
                terms.append(f"-{name}")
            else:
                terms.append(f"{value:+d}·{name}")
        text = "".join(terms)
        return text[1:] if text.startswith("+") else text
