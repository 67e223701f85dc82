"""The slice ν(L)//c under an object and the lax cylinder category, cell by cell.

An i-cell of the slice is a pair (d, α) with d an i-cell of ν(L) and
α^ε_k (0 ≤ k ≤ i, ε = 0, 1) cells of dimension k + 1 with α⁰_i = α¹_i.  An
i-cylinder is a triple (c, d, α) with the same kind of α but a two-sided
boundary.  All cell arithmetic goes through the cells module.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .cells import (
    Cell,
    _face,
    _Solver,
    apply_functor,
    atom_cell,
    cell_compose,
    cell_identity,
    compose_chain,
    enumerate_adc_morphisms,
    enumerate_cells,
    validate_cell,
)
from .complexes import Complex, ComplexError, Morphism, compose_morphisms, identity_morphism
from .constructions import (
    disk_complex,
    disk_generator,
    globular_sum,
    join,
    join_name,
    join_of_morphisms,
    kappa_map,
    nabla_map,
    sigma_map,
    tau_map,
    tensor,
    tensor_name,
    tensor_of_morphisms,
)
from .reports import Report, failed, passed
from .slices import Slice, slice_adjunction_phi, slice_adjunction_psi

BASE = "a"  # letter of λ(D₀) and λ(D₁) in the join and tensor complexes
DISK = "x"


def level_face(d: Cell, k: int, side: int) -> Cell:
    """d^side_k: the k-dimensional source (0) or target (1), d itself at k = dim."""
    return d if k == d.dim else _face(d, k, side)


def eta(epsilon: int, k: int, j: int) -> int:
    """Exponent of d in the slice composition clause."""
    return epsilon if k == j + 1 else 1


def etas(epsilon: int, k: int, j: int) -> tuple[int, int]:
    """(η₀, η₁) of the cylinder composition clause."""
    return (epsilon, epsilon) if k == j + 1 else (0, 1)


def _lower_whisker(d: Cell, alpha0: list, k: int, side: int) -> Cell:
    """d^side_k ∗₀ α⁰₀ ∗₁ … ∗_{k−1} α⁰_{k−1}."""
    cells = [level_face(d, k, side)] + [alpha0[l] for l in range(k)]
    return compose_chain(cells, list(range(k)))


def _upper_whisker(c: Cell, alpha1: list, k: int, side: int) -> Cell:
    """α¹_{k−1} ∘_{k−1} … ∘₁ α¹₀ ∘₀ c^side_k."""
    cells = [alpha1[l] for l in range(k - 1, -1, -1)] + [level_face(c, k, side)]
    return compose_chain(cells, list(range(k - 1, -1, -1)))


# ----- slice cells ------------------------------------------------------


@dataclass(frozen=True)
class SliceCell:
    base: Cell  # the object c
    d: Cell
    alpha: tuple  # alpha[k] = (α⁰_k, α¹_k)

    @property
    def dim(self) -> int:
        return self.d.dim

    def a(self, k: int, side: int) -> Cell:
        return self.alpha[k][side]

    def sort_key(self):
        return (self.d.sort_key(), tuple((a.sort_key(), b.sort_key()) for a, b in self.alpha))

    def to_json(self) -> dict:
        return {
            "dim": self.dim,
            "d": self.d.to_json(),
            "alpha": [[a.to_json(), b.to_json()] for a, b in self.alpha],
        }


def slice_expected_boundary(sc: SliceCell, k: int, side: int) -> tuple[Cell, Cell]:
    source = sc.base if k == 0 else sc.a(k - 1, 1)
    target = _lower_whisker(sc.d, [sc.a(l, 0) for l in range(k)], k, side)
    return source, target


def slice_cell_validate(sc: SliceCell, L: Complex) -> Report:
    check = "slice_cell_validate"
    if sc.base.dim != 0 or not validate_cell(sc.base, L).ok:
        return failed(check, "base is not an object")
    if not validate_cell(sc.d, L).ok:
        return failed(check, "d is not a cell")
    i = sc.dim
    if len(sc.alpha) != i + 1 or sc.a(i, 0) != sc.a(i, 1):
        return failed(check, "shape of α")
    for k in range(i + 1):
        for side in (0, 1):
            cell = sc.a(k, side)
            if cell.dim != k + 1 or not validate_cell(cell, L).ok:
                return failed(check, "alpha", k, side, reason="not a valid cell of the right dimension")
            try:
                source, target = slice_expected_boundary(sc, k, side)
            except ComplexError as exc:
                return failed(check, "alpha", k, side, reason=str(exc))
            if _face(cell, k, 0) != source:
                return failed(check, "alpha", k, side, reason="source")
            if _face(cell, k, 1) != target:
                return failed(check, "alpha", k, side, reason="target")
    return passed(check)


def slice_source(sc: SliceCell) -> SliceCell:
    return _slice_face(sc, 0)


def slice_target(sc: SliceCell) -> SliceCell:
    return _slice_face(sc, 1)


def _slice_face(sc: SliceCell, side: int) -> SliceCell:
    i = sc.dim
    if i < 1:
        raise ComplexError("objects have no source or target")
    top = sc.a(i - 1, side)
    alpha = sc.alpha[: i - 1] + ((top, top),)
    return SliceCell(sc.base, _face(sc.d, i - 1, side), alpha)


def slice_face(sc: SliceCell, j: int, side: int) -> SliceCell:
    while sc.dim > j:
        sc = _slice_face(sc, side)
    return sc


def slice_identity(sc: SliceCell) -> SliceCell:
    i = sc.dim
    top = sc.a(i, 0)
    unit = cell_identity(top)
    alpha = sc.alpha[:i] + ((top, top), (unit, unit))
    return SliceCell(sc.base, cell_identity(sc.d), alpha)


def _pad_slice(sc: SliceCell, dim: int) -> SliceCell:
    while sc.dim < dim:
        sc = slice_identity(sc)
    return sc


def slice_compose(x: SliceCell, y: SliceCell, j: int) -> SliceCell:
    """x ∘_j y for s_j(x) = t_j(y)."""
    i = max(x.dim, y.dim)
    if j >= i or slice_face(x, j, 0) != slice_face(y, j, 1):
        raise ComplexError(f"slice cells are not ∘_{j}-composable")
    x, y = _pad_slice(x, i), _pad_slice(y, i)
    d, beta = x.d, y
    alpha = []
    for k in range(i + 1):
        if k <= j:
            alpha.append((y.a(k, 0), x.a(k, 1)))
            continue
        pair = []
        for side in (0, 1):
            cells = [level_face(d, j + 1, eta(side, k, j))]
            cells += [beta.a(l, 0) for l in range(j)]
            cells += [beta.a(k, side), x.a(k, side)]
            pair.append(compose_chain(cells, list(range(j + 2))))
        alpha.append(tuple(pair))
    return SliceCell(x.base, cell_compose(x.d, y.d, j), tuple(alpha))


# ----- cylinder cells ---------------------------------------------------


@dataclass(frozen=True)
class CylinderCell:
    c: Cell
    d: Cell
    alpha: tuple

    @property
    def dim(self) -> int:
        return self.d.dim

    def a(self, k: int, side: int) -> Cell:
        return self.alpha[k][side]

    def sort_key(self):
        return (
            self.c.sort_key(),
            self.d.sort_key(),
            tuple((a.sort_key(), b.sort_key()) for a, b in self.alpha),
        )

    def to_json(self) -> dict:
        return {
            "dim": self.dim,
            "c": self.c.to_json(),
            "d": self.d.to_json(),
            "alpha": [[a.to_json(), b.to_json()] for a, b in self.alpha],
        }


def cylinder_expected_boundary(cy: CylinderCell, k: int, side: int) -> tuple[Cell, Cell]:
    source = _upper_whisker(cy.c, [cy.a(l, 1) for l in range(k)], k, side)
    target = _lower_whisker(cy.d, [cy.a(l, 0) for l in range(k)], k, side)
    return source, target


def cylinder_validate(cy: CylinderCell, L: Complex) -> Report:
    check = "cylinder_validate"
    i = cy.dim
    if cy.c.dim != i:
        return failed(check, "c and d must have the same dimension")
    for name, cell in (("c", cy.c), ("d", cy.d)):
        if not validate_cell(cell, L).ok:
            return failed(check, name, reason="not a cell")
    if len(cy.alpha) != i + 1 or cy.a(i, 0) != cy.a(i, 1):
        return failed(check, "shape of α")
    for k in range(i + 1):
        for side in (0, 1):
            cell = cy.a(k, side)
            if cell.dim != k + 1 or not validate_cell(cell, L).ok:
                return failed(check, "alpha", k, side, reason="not a valid cell of the right dimension")
            try:
                source, target = cylinder_expected_boundary(cy, k, side)
            except ComplexError as exc:
                return failed(check, "alpha", k, side, reason=str(exc))
            if _face(cell, k, 0) != source:
                return failed(check, "alpha", k, side, reason="source")
            if _face(cell, k, 1) != target:
                return failed(check, "alpha", k, side, reason="target")
    return passed(check)


def _cylinder_face(cy: CylinderCell, side: int) -> CylinderCell:
    i = cy.dim
    if i < 1:
        raise ComplexError("objects have no source or target")
    top = cy.a(i - 1, side)
    alpha = cy.alpha[: i - 1] + ((top, top),)
    return CylinderCell(_face(cy.c, i - 1, side), _face(cy.d, i - 1, side), alpha)


def cylinder_source(cy: CylinderCell) -> CylinderCell:
    return _cylinder_face(cy, 0)


def cylinder_target(cy: CylinderCell) -> CylinderCell:
    return _cylinder_face(cy, 1)


def cylinder_face(cy: CylinderCell, j: int, side: int) -> CylinderCell:
    while cy.dim > j:
        cy = _cylinder_face(cy, side)
    return cy


def cylinder_identity(cy: CylinderCell) -> CylinderCell:
    i = cy.dim
    top = cy.a(i, 0)
    unit = cell_identity(top)
    return CylinderCell(cell_identity(cy.c), cell_identity(cy.d), cy.alpha[:i] + ((top, top), (unit, unit)))


def _pad_cylinder(cy: CylinderCell, dim: int) -> CylinderCell:
    while cy.dim < dim:
        cy = cylinder_identity(cy)
    return cy


def cylinder_compose(x: CylinderCell, y: CylinderCell, j: int) -> CylinderCell:
    """(c, d, α) ∘_j (e, f, β)."""
    i = max(x.dim, y.dim)
    if j >= i or cylinder_face(x, j, 0) != cylinder_face(y, j, 1):
        raise ComplexError(f"cylinders are not ∘_{j}-composable")
    x, y = _pad_cylinder(x, i), _pad_cylinder(y, i)
    alpha = []
    for k in range(i + 1):
        if k <= j:
            alpha.append((y.a(k, 0), x.a(k, 1)))
            continue
        pair = []
        for side in (0, 1):
            low, high = etas(side, k, j)
            left_cells = [level_face(x.d, j + 1, high)] + [y.a(l, 0) for l in range(j)] + [y.a(k, side)]
            left = compose_chain(left_cells, list(range(j + 1)))
            right_cells = [x.a(k, side)] + [x.a(l, 1) for l in range(j - 1, -1, -1)]
            right_cells.append(level_face(y.c, j + 1, low))
            right = compose_chain(right_cells, list(range(j, -1, -1)))
            pair.append(cell_compose(left, right, j + 1))
        alpha.append(tuple(pair))
    return CylinderCell(cell_compose(x.c, y.c, j), cell_compose(x.d, y.d, j), tuple(alpha))


def cylinder_projections(cy: CylinderCell) -> tuple[Cell, Cell]:
    """(π⁰, π¹) = (c, d)."""
    return cy.c, cy.d


def slice_into_cylinder(sc: SliceCell) -> CylinderCell:
    """(d, α) ↦ (id c, d, α), with id c the identity i-cell on the base object."""
    return CylinderCell(cell_identity(sc.base, sc.dim), sc.d, sc.alpha)


# ----- translations to functors out of joins and tensors -----------------


def cone_complex(i: int) -> Complex:
    """λ(D₀)⋆λ(D_i)."""
    return join(disk_complex(0, BASE), disk_complex(i, DISK))


def cylinder_complex(i: int) -> Complex:
    """λ(D₁)⊗λ(D_i)."""
    return tensor(disk_complex(1, BASE), disk_complex(i, DISK))


def _disk_gen(i: int, k: int, side: int, letter: str = DISK) -> str:
    """x^side_k in λ(D_i); both sides name the principal cell at k = i."""
    return disk_generator(letter, i, k, side if k < i else 0)


def _disk_cells(i: int, letter: str = DISK):
    for k in range(i + 1):
        for side in ((0,) if k == i else (0, 1)):
            yield k, side, disk_generator(letter, i, k, side)


def _base_vertex() -> str:
    return disk_generator(BASE, 0, 0, 0)


def slice_cell_from_join_functor(F: Morphism, i: int) -> SliceCell:
    J = F.source
    a = _base_vertex()
    base = apply_functor(F, atom_cell(J, join_name(a, None)))
    d = apply_functor(F, atom_cell(J, join_name(None, disk_generator(DISK, i, i, 0))))
    alpha = []
    for k in range(i + 1):
        pair = tuple(apply_functor(F, atom_cell(J, join_name(a, _disk_gen(i, k, side)))) for side in (0, 1))
        alpha.append(pair)
    return SliceCell(base, d, tuple(alpha))


def slice_cell_to_join_functor(sc: SliceCell, L: Complex, J: Complex | None = None) -> Morphism:
    i = sc.dim
    J = J or cone_complex(i)
    a = _base_vertex()
    maps = {join_name(a, None): sc.base.top}
    for k, side, gen in _disk_cells(i):
        maps[join_name(None, gen)] = sc.d.row(k, side)
        maps[join_name(a, gen)] = sc.a(k, side).top
    return Morphism(J, L, maps)


def cylinder_from_tensor_functor(F: Morphism, i: int) -> CylinderCell:
    T = F.source
    lower, upper, edge = (disk_generator(BASE, 1, 0, 0), disk_generator(BASE, 1, 0, 1), disk_generator(BASE, 1, 1, 0))
    top = disk_generator(DISK, i, i, 0)
    c = apply_functor(F, atom_cell(T, tensor_name(lower, top)))
    d = apply_functor(F, atom_cell(T, tensor_name(upper, top)))
    alpha = []
    for k in range(i + 1):
        pair = tuple(apply_functor(F, atom_cell(T, tensor_name(edge, _disk_gen(i, k, side)))) for side in (0, 1))
        alpha.append(pair)
    return CylinderCell(c, d, tuple(alpha))


def cylinder_to_tensor_functor(cy: CylinderCell, L: Complex, T: Complex | None = None) -> Morphism:
    i = cy.dim
    T = T or cylinder_complex(i)
    lower, upper, edge = (disk_generator(BASE, 1, 0, 0), disk_generator(BASE, 1, 0, 1), disk_generator(BASE, 1, 1, 0))
    maps = {}
    for k, side, gen in _disk_cells(i):
        maps[tensor_name(lower, gen)] = cy.c.row(k, side)
        maps[tensor_name(upper, gen)] = cy.d.row(k, side)
        maps[tensor_name(edge, gen)] = cy.a(k, side).top
    return Morphism(T, L, maps)


# ----- direct enumeration -------------------------------------------------


def _alpha_families(solver: _Solver, start_source, target_of, i: int):
    """Backtrack over α^ε_k given functions for the expected boundary.

    start_source(k, side, alpha) and target_of(k, side, alpha) return the
    expected source and target of α^ε_k from the α already chosen.
    """

    def extend(k: int, alpha: tuple):
        if k > i:
            yield alpha
            return
        sides = (0,) if k == i else (0, 1)
        options = []
        for side in sides:
            try:
                s = start_source(k, side, alpha)
                t = target_of(k, side, alpha)
            except ComplexError:
                return
            if s.rows[:k] != t.rows[:k]:
                return
            found = []
            for z in solver.fillers(t.top - s.top):
                found.append(Cell(s.rows[:k] + ((s.top, t.top), (z, z)), s.complex))
            options.append(found)
        for combo in itertools.product(*options):
            pair = combo if len(combo) == 2 else (combo[0], combo[0])
            yield from extend(k + 1, alpha + (pair,))

    yield from extend(0, ())


def enumerate_slice_cells(L: Complex, base: Cell, i: int, cap: int) -> list[SliceCell]:
    """i-cells of ν(L)//c enumerated straight from the boundary clauses."""
    solver = _Solver(L, cap)
    found = []
    for d in enumerate_cells(L, i, cap):
        def source(k, side, alpha):
            return base if k == 0 else alpha[k - 1][1]

        def target(k, side, alpha):
            return _lower_whisker(d, [alpha[l][0] for l in range(k)], k, side)

        for alpha in _alpha_families(solver, source, target, i):
            found.append(SliceCell(base, d, alpha))
    found.sort(key=SliceCell.sort_key)
    return found


def enumerate_cylinders(L: Complex, i: int, cap: int) -> list[CylinderCell]:
    solver = _Solver(L, cap)
    cells = enumerate_cells(L, i, cap)
    found = []
    for c in cells:
        for d in cells:
            def source(k, side, alpha, c=c):
                return _upper_whisker(c, [alpha[l][1] for l in range(k)], k, side)

            def target(k, side, alpha, d=d):
                return _lower_whisker(d, [alpha[l][0] for l in range(k)], k, side)

            for alpha in _alpha_families(solver, source, target, i):
                found.append(CylinderCell(c, d, alpha))
    found.sort(key=CylinderCell.sort_key)
    return found


def join_functors_under(L: Complex, base: Cell, i: int, cap: int) -> list[Morphism]:
    J = cone_complex(i)
    key = join_name(_base_vertex(), None)
    return [F for F in enumerate_adc_morphisms(J, L, cap) if F.maps[key] == base.top]


# ----- actions of the cocategory maps through join functors ---------------


def _precompose_disk(F: Morphism, disk_map: Morphism, new_dim: int) -> Morphism:
    J_new = cone_complex(new_dim)
    point = identity_morphism(disk_complex(0, BASE))
    inner = join_of_morphisms(point, disk_map, source=J_new, target=F.source)
    return compose_morphisms(F, inner)


def source_via_join(F: Morphism, i: int) -> Morphism:
    return _precompose_disk(F, sigma_map(i - 1, i, DISK, DISK), i - 1)


def target_via_join(F: Morphism, i: int) -> Morphism:
    return _precompose_disk(F, tau_map(i - 1, i, DISK, DISK), i - 1)


def identity_via_join(F: Morphism, i: int) -> Morphism:
    return _precompose_disk(F, kappa_map(i + 1, i, DISK, DISK), i + 1)


def compose_via_join(Fx: Morphism, Fy: Morphism, i: int, j: int) -> Morphism:
    """Glue Fx (later) and Fy (earlier) on λ(D₀)⋆(D_i ∐_{D_j} D_i), then pull back along ∇."""
    gs = globular_sum([i, j, i], "yz")
    point = disk_complex(0, BASE)
    glued_source = join(point, gs.complex)
    a = _base_vertex()
    maps = {join_name(a, None): Fx.maps[join_name(a, None)]}
    for leg, letter, F in zip(gs.legs, "yz", (Fx, Fy)):
        for k, side, gen in _disk_cells(i):
            (name,) = leg.maps[disk_generator(letter, i, k, side)].support()
            for left in (None, a):
                key = join_name(left, name)
                value = F.maps[join_name(left, gen)]
                if key in maps and maps[key] != value:
                    raise ComplexError("the two functors disagree on the glued face")
                maps[key] = value
    G = Morphism(glued_source, Fx.target, maps)
    nabla = nabla_map(i, j, DISK)
    inner = join_of_morphisms(identity_morphism(point), nabla, source=cone_complex(i), target=glued_source)
    return compose_morphisms(G, inner)


# ----- the slice of the ADC -----------------------------------------------


def object_slice(L: Complex, base: Cell) -> tuple[Slice, Complex]:
    """L//c for the object c, seen as a morphism out of λ(D₀)."""
    point = disk_complex(0, BASE)
    g = Morphism(point, L, {_base_vertex(): base.top})
    return Slice(L, g), point


def slice_cell_to_nu_cell(sc: SliceCell, S: Slice, point: Complex) -> Cell:
    i = sc.dim
    F = slice_cell_to_join_functor(sc, S.M)
    G = slice_adjunction_phi(F, point, disk_complex(i, DISK), S)
    rows = tuple((G.maps[_disk_gen(i, k, 0)], G.maps[_disk_gen(i, k, 1)]) for k in range(i + 1))
    return Cell(rows, S.ambient)


def nu_cell_to_slice_cell(cell: Cell, S: Slice, point: Complex) -> SliceCell:
    i = cell.dim
    D = disk_complex(i, DISK)
    maps = {gen: cell.row(k, side) for k, side, gen in _disk_cells(i)}
    G = Morphism(D, S.ambient, maps)
    F = slice_adjunction_psi(G, point, D, S, cone_complex(i))
    return slice_cell_from_join_functor(F, i)


@dataclass
class CrosscheckReport:
    ok: bool
    dims: list

    def to_json(self) -> dict:
        return {"ok": self.ok, "dims": self.dims}


def crosscheck_slice(L: Complex, base: Cell, i_max: int, cap: int, compose_samples: int = 40) -> CrosscheckReport:
    """Compare three descriptions of the cells of ν(L)//c in each dimension ≤ i_max.

    direct: the boundary clauses; join: functors λ(D₀)⋆λ(D_i) → L under c;
    slice: cells of ν(L//c) translated through the adjunction.  Also checks
    source, target, identity and composition against the functorial side.
    """
    S, point = object_slice(L, base)
    dims = []
    ok = True
    by_dim = {}
    for i in range(i_max + 1):
        direct = enumerate_slice_cells(L, base, i, cap)
        functors = join_functors_under(L, base, i, cap)
        from_join = sorted((slice_cell_from_join_functor(F, i) for F in functors), key=SliceCell.sort_key)
        nu_cells = S.cells(i, cap)
        from_slice = sorted((nu_cell_to_slice_cell(c, S, point) for c in nu_cells), key=SliceCell.sort_key)
        entry = {
            "dim": i,
            "direct": len(direct),
            "join_functors": len(functors),
            "slice_cells": len(nu_cells),
            "bijection": direct == from_join == from_slice,
            "valid": all(slice_cell_validate(sc, L).ok for sc in direct),
            "round_trip": all(
                slice_cell_from_join_functor(slice_cell_to_join_functor(sc, L), i) == sc for sc in direct
            )
            and all(slice_cell_to_nu_cell(nu_cell_to_slice_cell(c, S, point), S, point) == c for c in nu_cells),
        }
        faces_ok = True
        for F in functors:
            sc = slice_cell_from_join_functor(F, i)
            if i >= 1:
                faces_ok &= slice_source(sc) == slice_cell_from_join_functor(source_via_join(F, i), i - 1)
                faces_ok &= slice_target(sc) == slice_cell_from_join_functor(target_via_join(F, i), i - 1)
            faces_ok &= slice_identity(sc) == slice_cell_from_join_functor(identity_via_join(F, i), i + 1)
        entry["faces"] = faces_ok
        by_dim[i] = (direct, functors)
        dims.append(entry)
        ok &= entry["bijection"] and entry["valid"] and entry["round_trip"] and faces_ok
    composites = _check_composites(L, S, point, by_dim, compose_samples)
    dims.append({"composites": composites})
    ok &= composites["ok"]
    return CrosscheckReport(ok, dims)


def _check_composites(L, S, point, by_dim, limit) -> dict:
    checked = 0
    failures = []
    for i, (cells, _) in sorted(by_dim.items()):
        lookup = {sc: slice_cell_to_join_functor(sc, L) for sc in cells}
        for j in range(i):
            for x, y in itertools.product(cells, cells):
                if checked >= limit * (j + 1) * i:
                    break
                if slice_face(x, j, 0) != slice_face(y, j, 1):
                    continue
                checked += 1
                direct = slice_compose(x, y, j)
                via_join = slice_cell_from_join_functor(compose_via_join(lookup[x], lookup[y], i, j), i)
                via_slice = nu_cell_to_slice_cell(
                    cell_compose(slice_cell_to_nu_cell(x, S, point), slice_cell_to_nu_cell(y, S, point), j), S, point
                )
                if not (direct == via_join == via_slice and slice_cell_validate(direct, L).ok):
                    failures.append({"dim": i, "j": j})
    return {"ok": not failures, "checked": checked, "failures": failures[:5]}


def check_cylinder_pullback(L: Complex, base: Cell, i: int, cap: int) -> Report:
    """Slice cells are exactly the cylinders whose π⁰ is the identity on c."""
    slice_cells = enumerate_slice_cells(L, base, i, cap)
    images = sorted((slice_into_cylinder(sc) for sc in slice_cells), key=CylinderCell.sort_key)
    unit = cell_identity(base, i)
    fibre = [cy for cy in enumerate_cylinders(L, i, cap) if cy.c == unit]
    if images != fibre:
        return failed("cylinder_pullback", i, images=len(images), fibre=len(fibre))
    return passed("cylinder_pullback", count=len(images))


# ----- the same checks on the cylinder side --------------------------------


def _precompose_tensor(F: Morphism, disk_map: Morphism, new_dim: int) -> Morphism:
    edge = identity_morphism(disk_complex(1, BASE))
    inner = tensor_of_morphisms(edge, disk_map, source=cylinder_complex(new_dim), target=F.source)
    return compose_morphisms(F, inner)


def compose_via_tensor(Fx: Morphism, Fy: Morphism, i: int, j: int) -> Morphism:
    """Glue on λ(D₁)⊗(D_i ∐_{D_j} D_i) and pull back along ∇."""
    gs = globular_sum([i, j, i], "yz")
    edge_disk = disk_complex(1, BASE)
    glued_source = tensor(edge_disk, gs.complex)
    maps = {}
    for leg, letter, F in zip(gs.legs, "yz", (Fx, Fy)):
        for k, side, gen in _disk_cells(i):
            (name,) = leg.maps[disk_generator(letter, i, k, side)].support()
            for left in edge_disk.all_generators():
                key = tensor_name(left, name)
                value = F.maps[tensor_name(left, gen)]
                if key in maps and maps[key] != value:
                    raise ComplexError("the two functors disagree on the glued face")
                maps[key] = value
    G = Morphism(glued_source, Fx.target, maps)
    inner = tensor_of_morphisms(
        identity_morphism(edge_disk), nabla_map(i, j, DISK), source=cylinder_complex(i), target=glued_source
    )
    return compose_morphisms(G, inner)


def crosscheck_cylinders(L: Complex, i_max: int, cap: int, compose_samples: int = 40) -> CrosscheckReport:
    """Direct cylinder enumeration against functors λ(D₁)⊗λ(D_i) → L."""
    dims = []
    ok = True
    by_dim = {}
    for i in range(i_max + 1):
        direct = enumerate_cylinders(L, i, cap)
        functors = enumerate_adc_morphisms(cylinder_complex(i), L, cap)
        from_tensor = sorted((cylinder_from_tensor_functor(F, i) for F in functors), key=CylinderCell.sort_key)
        faces_ok = True
        for F in functors:
            cy = cylinder_from_tensor_functor(F, i)
            if i >= 1:
                faces_ok &= cylinder_source(cy) == cylinder_from_tensor_functor(
                    _precompose_tensor(F, sigma_map(i - 1, i, DISK, DISK), i - 1), i - 1)
                faces_ok &= cylinder_target(cy) == cylinder_from_tensor_functor(
                    _precompose_tensor(F, tau_map(i - 1, i, DISK, DISK), i - 1), i - 1)
            faces_ok &= cylinder_identity(cy) == cylinder_from_tensor_functor(
                _precompose_tensor(F, kappa_map(i + 1, i, DISK, DISK), i + 1), i + 1)
        entry = {
            "dim": i,
            "direct": len(direct),
            "tensor_functors": len(functors),
            "bijection": direct == from_tensor,
            "valid": all(cylinder_validate(cy, L).ok for cy in direct),
            "round_trip": all(
                cylinder_from_tensor_functor(cylinder_to_tensor_functor(cy, L), i) == cy for cy in direct
            ),
            "faces": faces_ok,
        }
        ok &= entry["bijection"] and entry["valid"] and entry["round_trip"] and faces_ok
        dims.append(entry)
        by_dim[i] = direct
    checked = 0
    failures = []
    for i, cells in sorted(by_dim.items()):
        functor = {cy: cylinder_to_tensor_functor(cy, L) for cy in cells}
        for j in range(i):
            count = 0
            for x, y in itertools.product(cells, cells):
                if count >= compose_samples:
                    break
                if cylinder_face(x, j, 0) != cylinder_face(y, j, 1):
                    continue
                count += 1
                direct = cylinder_compose(x, y, j)
                via = cylinder_from_tensor_functor(compose_via_tensor(functor[x], functor[y], i, j), i)
                if not (direct == via and cylinder_validate(direct, L).ok):
                    failures.append({"dim": i, "j": j})
            checked += count
    dims.append({"composites": {"ok": not failures, "checked": checked, "failures": failures[:5]}})
    ok &= not failures
    return CrosscheckReport(ok, dims)
