import pytest

from adcalc.cells import atom_cell, enumerate_cells
from adcalc.constructions import disk_complex, simplex_complex
from adcalc.omega import (
    check_cylinder_pullback,
    crosscheck_cylinders,
    crosscheck_slice,
    cylinder_compose,
    cylinder_source,
    cylinder_target,
    cylinder_validate,
    enumerate_cylinders,
    enumerate_slice_cells,
    slice_cell_validate,
    slice_compose,
    slice_into_cylinder,
    slice_source,
    slice_target,
)


@pytest.mark.parametrize("L,vertex", [(disk_complex(1), "x⁰₀"), (simplex_complex(1), "(1)"),
                                      (simplex_complex(2), "(0)")])
def test_slice_descriptions_agree(L, vertex):
    report = crosscheck_slice(L, atom_cell(L, vertex), 2, 2)
    assert report.ok, report.to_json()


@pytest.mark.parametrize("L", [disk_complex(1), simplex_complex(2)])
def test_cylinder_descriptions_agree(L):
    assert crosscheck_cylinders(L, 2, 1).ok


def test_cylinders_on_an_arrow():
    # a 0-cylinder in ν(c(Δ¹)) is a 1-cell, so there are three
    L = simplex_complex(1)
    assert len(enumerate_cylinders(L, 0, 2)) == len(enumerate_cells(L, 1, 2)) == 3


def test_slice_cells_compose_inside_the_slice():
    L = simplex_complex(2)
    base = atom_cell(L, "(0)")
    ones = enumerate_slice_cells(L, base, 1, 2)
    found = 0
    for x in ones:
        for y in ones:
            if slice_source(x) == slice_target(y):
                xy = slice_compose(x, y, 0)
                assert slice_cell_validate(xy, L).ok
                assert slice_source(xy) == slice_source(y) and slice_target(xy) == slice_target(x)
                found += 1
    assert found


def test_slice_cells_are_cylinders():
    L = simplex_complex(2)
    base = atom_cell(L, "(0)")
    for i in range(3):
        for sc in enumerate_slice_cells(L, base, i, 2):
            assert cylinder_validate(slice_into_cylinder(sc), L).ok
    assert check_cylinder_pullback(L, base, 1, 2).ok


def test_cylinder_composition_respects_faces():
    L = disk_complex(1)
    ones = enumerate_cylinders(L, 1, 1)
    found = 0
    for x in ones:
        for y in ones:
            if cylinder_source(x) == cylinder_target(y):
                xy = cylinder_compose(x, y, 0)
                assert cylinder_validate(xy, L).ok
                assert cylinder_source(xy) == cylinder_source(y)
                found += 1
    assert found
