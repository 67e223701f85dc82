"""Cells of the strict ω-category ν(K) attached to a based complex.

A cell of dimension i is a table of pairs (lower, upper) of nonnegative
chains, one pair per degree 0..i, with matching boundaries, augmentation one
in degree 0, and equal entries at the top.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .chains import Chain
from .complexes import Complex, ComplexError, Morphism, generator_atom
from .linalg import nonnegative_solutions
from .reports import Report, failed, passed


@dataclass(frozen=True)
class Cell:
    rows: tuple  # rows[k] = (lower, upper)
    complex: Complex | None = field(default=None, compare=False, hash=False, repr=False)

    @property
    def dim(self) -> int:
        return len(self.rows) - 1

    def row(self, k: int, side: int) -> Chain:
        """Entry at degree k; zero above the dimension."""
        if k > self.dim:
            return Chain.zero(k)
        return self.rows[k][side]

    @property
    def top(self) -> Chain:
        return self.rows[-1][0]

    def sort_key(self):
        return tuple((a.sort_key(), b.sort_key()) for a, b in self.rows)

    def to_json(self) -> dict:
        return {"dim": self.dim, "rows": [[a.to_json(), b.to_json()] for a, b in self.rows]}

    @classmethod
    def from_json(cls, data, complex: Complex | None = None) -> "Cell":
        rows = tuple(
            (Chain(k, dict(a)), Chain(k, dict(b))) for k, (a, b) in enumerate(data["rows"])
        )
        return cls(rows, complex)

    def __repr__(self) -> str:
        body = " | ".join(f"{a!r}, {b!r}" if a != b else repr(a) for a, b in self.rows)
        return f"Cell[{self.dim}]({body})"


def make_cell(rows: Sequence, complex: Complex | None = None) -> Cell:
    return Cell(tuple((a, b) for a, b in rows), complex)


def validate_cell(c: Cell, K: Complex | None = None) -> Report:
    K = K or c.complex
    if K is None:
        raise ComplexError("validating a cell needs its complex")
    if not c.rows:
        return failed("validate_cell", "empty table")
    for k, (lower, upper) in enumerate(c.rows):
        for side, chain in ((0, lower), (1, upper)):
            if chain.degree != k or not K.contains_chain(chain):
                return failed("validate_cell", "degree", k, side)
            if not chain.is_nonnegative():
                return failed("validate_cell", "positivity", k, side)
    top_lower, top_upper = c.rows[-1]
    if top_lower != top_upper:
        return failed("validate_cell", "top", c.dim)
    for side in (0, 1):
        if K.augment(c.rows[0][side]) != 1:
            return failed("validate_cell", "augmentation", 0, side)
    for k in range(1, c.dim + 1):
        expected = c.rows[k - 1][1] - c.rows[k - 1][0]
        for side in (0, 1):
            if K.boundary(c.rows[k][side]) != expected:
                return failed("validate_cell", "boundary", k, side)
    return passed("validate_cell")


def _face(c: Cell, j: int, side: int) -> Cell:
    if not 0 <= j <= c.dim:
        raise ComplexError(f"face index {j} out of range for a {c.dim}-cell")
    top = c.rows[j][side]
    return Cell(c.rows[:j] + ((top, top),), c.complex)


def cell_source(c: Cell, j: int | None = None) -> Cell:
    """Iterated source s_j; the default is the immediate source."""
    return _face(c, c.dim - 1 if j is None else j, 0)


def cell_target(c: Cell, j: int | None = None) -> Cell:
    return _face(c, c.dim - 1 if j is None else j, 1)


def cell_identity(c: Cell, times: int = 1) -> Cell:
    rows = c.rows
    for _ in range(times):
        zero = Chain.zero(len(rows))
        rows = rows + ((zero, zero),)
    return Cell(rows, c.complex)


def pad_to(c: Cell, dim: int) -> Cell:
    if dim < c.dim:
        raise ComplexError("cannot pad a cell to a smaller dimension")
    return cell_identity(c, dim - c.dim)


def composable(x: Cell, y: Cell, j: int) -> bool:
    dim = max(x.dim, y.dim)
    if j >= dim:
        return False
    if j > min(x.dim, y.dim):
        return False
    return cell_source(x, j) == cell_target(y, j)


def cell_compose(x: Cell, y: Cell, j: int) -> Cell:
    """The composite x ∘_j y, padding the smaller cell with identities."""
    dim = max(x.dim, y.dim)
    if j >= dim:
        raise ComplexError(f"∘_{j} needs a cell of dimension above {j}")
    if j > min(x.dim, y.dim) or cell_source(x, j) != cell_target(y, j):
        raise ComplexError(f"cells are not ∘_{j}-composable")
    x, y = pad_to(x, dim), pad_to(y, dim)
    rows = []
    for k in range(dim + 1):
        if k <= j:
            rows.append((y.rows[k][0], x.rows[k][1]))
        else:
            rows.append((x.rows[k][0] + y.rows[k][0], x.rows[k][1] + y.rows[k][1]))
    return Cell(tuple(rows), x.complex or y.complex)


def compose_chain(cells: Sequence[Cell], indices: Sequence[int]) -> Cell:
    """Fold c₀ ∗_{j₀} c₁ ∗_{j₁} … with lower indices binding tighter.

    Equal indices associate to the left; the value does not depend on the
    grouping for valid inputs, so grouping by index level is enough.
    """
    if len(indices) != len(cells) - 1:
        raise ComplexError("need one composition index between consecutive cells")
    items = list(cells)
    ops = list(indices)
    while ops:
        level = min(ops)
        pos = ops.index(level)
        items[pos : pos + 2] = [cell_compose(items[pos], items[pos + 1], level)]
        ops.pop(pos)
    return items[0]


def atom_cell(K: Complex, gen: str) -> Cell:
    table = generator_atom(K, gen)
    for side in (0, 1):
        if K.augment(table.rows[0][side]) != 1:
            raise ComplexError(f"the basis is not unitary at {gen!r}")
    return Cell(table.rows, K)


def apply_functor(f: Morphism, c: Cell) -> Cell:
    rows = tuple((f.apply(a), f.apply(b)) for a, b in c.rows)
    return Cell(rows, f.target)


def cell_class(c: Cell) -> Chain:
    return c.top


# ----- enumeration ------------------------------------------------------


@dataclass(frozen=True)
class LinearConstraint:
    """Homogeneous linear equations imposed on degree-0 chains.

    rows maps a degree-0 generator to its column {equation: coefficient};
    a chain satisfies the constraint when its combined column vanishes.
    """

    rows: dict

    def column(self, gen: str) -> dict:
        return self.rows.get(gen, {})

    def holds(self, chain: Chain) -> bool:
        total: dict = {}
        for gen, c in chain.items():
            for key, v in self.column(gen).items():
                total[key] = total.get(key, 0) + c * v
        return not any(total.values())


def _degree0_solutions(K: Complex, aug: int, cap: int, constraint: LinearConstraint | None) -> list[Chain]:
    gens = K.generators(0)
    columns = []
    for g in gens:
        col = {("aug",): K.aug_of(g)}
        if constraint is not None:
            col.update({("eq", key): v for key, v in constraint.column(g).items()})
        columns.append(col)
    return [
        Chain(0, dict(zip(gens, coeffs)))
        for coeffs in nonnegative_solutions(columns, {("aug",): aug}, cap)
    ]


class _Solver:
    """Cached nonnegative solutions of d(z) = target with coefficients ≤ cap."""

    def __init__(self, K: Complex, cap: int, constraint: LinearConstraint | None = None):
        self.K = K
        self.cap = cap
        self.constraint = constraint
        self.cache: dict = {}

    def objects(self, aug: int = 1) -> list[Chain]:
        key = ("objects", aug)
        if key not in self.cache:
            self.cache[key] = _degree0_solutions(self.K, aug, self.cap, self.constraint)
        return self.cache[key]

    def fillers(self, target: Chain) -> list[Chain]:
        degree = target.degree + 1
        key = (degree, target)
        if key not in self.cache:
            gens = self.K.generators(degree)
            columns = [self.K.diff_of(g).coeffs for g in gens]
            self.cache[key] = [
                Chain(degree, dict(zip(gens, coeffs)))
                for coeffs in nonnegative_solutions(columns, target.coeffs, self.cap)
            ]
        return self.cache[key]


def enumerate_cells(
    K: Complex, i: int, cap: int, degree0_constraint: LinearConstraint | None = None
) -> list[Cell]:
    """All valid i-cells of ν(K) with every coefficient at most cap.

    Rows are chosen from degree 0 upward; each new row solves the boundary
    constraint imposed by the row below.  An optional linear constraint
    restricts the degree-0 row (used for subcomplexes such as slices).
    """
    solver = _Solver(K, cap, degree0_constraint)
    objects = solver.objects()
    if i == 0:
        cells = [Cell(((z, z),), K) for z in objects]
    else:
        partial = [((a, b),) for a in objects for b in objects]
        for k in range(1, i + 1):
            grown = []
            for rows in partial:
                lower, upper = rows[-1]
                options = solver.fillers(upper - lower)
                if k == i:
                    grown.extend(rows + ((z, z),) for z in options)
                else:
                    grown.extend(rows + ((a, b),) for a in options for b in options)
            partial = grown
        cells = [Cell(rows, K) for rows in partial]
    cells.sort(key=Cell.sort_key)
    return cells


def enumerate_adc_morphisms(
    K: Complex, L: Complex, cap: int, degree0_constraint: LinearConstraint | None = None
) -> list[Morphism]:
    """All morphisms K → L whose images have coefficients at most cap."""
    solver = _Solver(L, cap, degree0_constraint)
    results: list[Morphism] = []
    top = K.dim

    def degree_options(degree: int, chosen: dict) -> list[list[Chain]]:
        per_gen = []
        for gen in K.generators(degree):
            if degree == 0:
                opts = solver.objects(K.aug_of(gen))
            else:
                image_of_boundary = Chain.sum(
                    degree - 1,
                    (coef * chosen[other] for other, coef in K.diff_of(gen).items()),
                )
                opts = solver.fillers(image_of_boundary)
            per_gen.append(opts)
        return per_gen

    def extend(degree: int, chosen: dict):
        if degree > top:
            results.append(Morphism(K, L, chosen))
            return
        gens = K.generators(degree)
        options = degree_options(degree, chosen)
        for combo in itertools.product(*options):
            nxt = dict(chosen)
            nxt.update(zip(gens, combo))
            extend(degree + 1, nxt)

    extend(0, {})
    results.sort(key=lambda f: tuple((g, f.maps[g].sort_key()) for g in sorted(f.maps)))
    return results


def cells_by_face(cells: Iterable[Cell], j: int, side: int) -> dict:
    """Index cells by their j-source (side 0) or j-target (side 1)."""
    index: dict = {}
    for c in cells:
        if j <= c.dim:
            index.setdefault(_face(c, j, side), []).append(c)
    return index
