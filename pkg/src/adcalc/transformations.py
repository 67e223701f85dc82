"""Oplax transformations between ν-functors, and the transformation ν(h) of a homotopy."""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Callable, Iterable

from .cells import Cell, _face, apply_functor, atom_cell, cell_compose, cell_identity, composable
from .complexes import Complex, ComplexError, Morphism, compose_morphisms
from .homotopy import HOMOTOPY, Family, validate_homotopy
from .omega import CylinderCell, cylinder_compose, cylinder_validate, level_face
from .reports import Report, failed, passed


@dataclass
class OplaxTransformation:
    """α: ν(f) ⇒ ν(g), given by its component at every cell of ν(K)."""

    source: Morphism
    target: Morphism
    component: Callable[[Cell], Cell]

    @property
    def domain(self) -> Complex:
        return self.source.source

    @property
    def codomain(self) -> Complex:
        return self.source.target


@dataclass
class OplaxOnAtoms:
    """Components on the atoms ⟨b⟩ only, one per basis generator."""

    source: Morphism
    target: Morphism
    assignment: dict  # generator ↦ cell of ν(L)

    def to_json(self) -> dict:
        return {gen: cell.to_json() for gen, cell in sorted(self.assignment.items())}


def _sum_rows(K_cell: Cell, f: Morphism, g: Morphism, h: Family, L: Complex) -> Cell:
    i = K_cell.dim
    rows = []
    for l in range(i + 1):
        lower = f.apply(K_cell.row(l, 0))
        upper = g.apply(K_cell.row(l, 1))
        if l:
            lower = lower + h.apply(K_cell.row(l - 1, 1))
            upper = upper + h.apply(K_cell.row(l - 1, 0))
        rows.append((lower, upper))
    top = h.apply(K_cell.top)
    rows.append((top, top))
    return Cell(tuple(rows), L)


def nu_of_homotopy(h: Family) -> OplaxTransformation:
    """ν(h) for a level-1 homotopy h: f → g, read off the cells ⟨a⟩⊗y."""
    if h.variance != HOMOTOPY or h.level != 1:
        raise ComplexError("ν is defined here for level-1 homotopies")
    report = validate_homotopy(h)
    if not report.ok:
        raise ComplexError(f"invalid homotopy: {report.witness}")
    f, g = h.source, h.target
    return OplaxTransformation(f, g, lambda y: _sum_rows(y, f, g, h, h.codomain))


def on_atoms(alpha: OplaxTransformation) -> OplaxOnAtoms:
    K = alpha.domain
    return OplaxOnAtoms(alpha.source, alpha.target, {b: alpha.component(atom_cell(K, b)) for b in K.all_generators()})


def identity_transformation(f: Morphism) -> OplaxTransformation:
    return OplaxTransformation(f, f, lambda y: cell_identity(apply_functor(f, y)))


def cylinder_at(alpha: OplaxTransformation, y: Cell) -> CylinderCell:
    """(f y, g y, α_{faces of y}) as an i-cylinder."""
    i = y.dim
    pairs = []
    for k in range(i + 1):
        pair = tuple(alpha.component(level_face(y, k, side)) for side in (0, 1))
        pairs.append(pair)
    return CylinderCell(apply_functor(alpha.source, y), apply_functor(alpha.target, y), tuple(pairs))


def extend_from_atoms(alpha: OplaxOnAtoms) -> OplaxTransformation:
    """Extend an assignment on atoms to every cell.

    The top rows of the atom components form a candidate homotopy h: f → g;
    the extension is ν(h), and it must give back every assigned component.
    """
    K = alpha.source.source
    comps = {}
    for b in K.all_generators():
        cell = alpha.assignment[b]
        if cell.dim != K.degree_of(b) + 1:
            raise ComplexError(f"component at {b!r} has the wrong dimension")
        comps[b] = cell.top
    h = Family(HOMOTOPY, alpha.source, alpha.target, comps)
    extended = nu_of_homotopy(h)
    for b, cell in alpha.assignment.items():
        if extended.component(atom_cell(K, b)) != cell:
            raise ComplexError(f"component at {b!r} does not have the oplax boundary")
    return extended


def validate_on_atoms(alpha: OplaxOnAtoms) -> Report:
    try:
        extend_from_atoms(alpha)
    except ComplexError as exc:
        return failed("oplax_atoms", reason=str(exc))
    return passed("oplax_atoms")


def oplax_validate(alpha: OplaxTransformation, cells: Iterable[Cell], max_pairs: int = 200) -> Report:
    """Cylinder shape at each cell, the identity clause, and the composition clause on sampled pairs."""
    cells = list(cells)
    L = alpha.codomain
    for y in cells:
        if not cylinder_validate(cylinder_at(alpha, y), L).ok:
            return failed("oplax_validate", "cylinder", y.to_json())
        if alpha.component(cell_identity(y)) != cell_identity(alpha.component(y)):
            return failed("oplax_validate", "identity", y.to_json())
    checked = 0
    for x, y in itertools.product(cells, cells):
        if checked >= max_pairs:
            break
        for j in range(max(x.dim, y.dim)):
            if not composable(x, y, j):
                continue
            checked += 1
            whole = cylinder_at(alpha, cell_compose(x, y, j))
            parts = cylinder_compose(cylinder_at(alpha, x), cylinder_at(alpha, y), j)
            if whole != parts:
                return failed("oplax_validate", "composition", j, x.to_json(), y.to_json())
    return passed("oplax_validate", pairs=checked)


def corrupt(alpha: OplaxTransformation, at: Cell, replacement: Cell) -> OplaxTransformation:
    """α with one component replaced; used to exercise the checks."""
    return OplaxTransformation(
        alpha.source, alpha.target, lambda y: replacement if y == at else alpha.component(y)
    )


def vertical_composite(beta: OplaxTransformation, alpha: OplaxTransformation) -> OplaxTransformation:
    """β∘α for α: f ⇒ g and β: g ⇒ k, on cells of dimension at most 2."""

    def component(x: Cell) -> Cell:
        A, B = alpha.component, beta.component
        if x.dim == 0:
            return cell_compose(B(x), A(x), 0)
        if x.dim == 1:
            s, t = _face(x, 0, 0), _face(x, 0, 1)
            return cell_compose(cell_compose(B(x), A(s), 0), cell_compose(B(t), A(x), 0), 1)
        if x.dim == 2:
            s0, t0 = _face(x, 0, 0), _face(x, 0, 1)
            s1, t1 = _face(x, 1, 0), _face(x, 1, 1)
            first = cell_compose(cell_compose(B(x), A(s0), 0), cell_compose(B(t0), A(s1), 0), 1)
            second = cell_compose(cell_compose(B(t1), A(s0), 0), cell_compose(B(t0), A(x), 0), 1)
            return cell_compose(first, second, 2)
        raise ComplexError("vertical composites are implemented for cells of dimension ≤ 2")

    return OplaxTransformation(alpha.source, beta.target, component)


def same_components(a: OplaxTransformation, b: OplaxTransformation, cells: Iterable[Cell]) -> bool:
    return all(a.component(y) == b.component(y) for y in cells)


def whiskered_transformation(alpha: OplaxTransformation, g: Morphism) -> OplaxTransformation:
    """α∘ν(g): components α_{ν(g)(y)}."""
    return OplaxTransformation(
        compose_morphisms(alpha.source, g),
        compose_morphisms(alpha.target, g),
        lambda y: alpha.component(apply_functor(g, y)),
    )


def atoms_of(K: Complex) -> list[Cell]:
    return [atom_cell(K, b) for b in K.all_generators()]
