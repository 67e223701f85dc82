import pytest
from hypothesis import given, strategies as st

from adcalc.cells import (
    apply_functor,
    atom_cell,
    cell_compose,
    cell_identity,
    cell_source,
    cell_target,
    composable,
    enumerate_adc_morphisms,
    enumerate_cells,
    make_cell,
    validate_cell,
)
from adcalc.chains import Chain
from adcalc.complexes import ComplexError
from adcalc.constructions import disk_complex, simplex_complex


def _globe_count(i, j):
    """j-cells (identities included) of the free ω-category on the i-globe."""
    return 2 * (j + 1) if j < i else 2 * i + 1


@pytest.mark.parametrize("i,j", [(i, j) for i in range(4) for j in range(5)])
def test_disk_cells_match_the_globe(i, j):
    assert len(enumerate_cells(disk_complex(i), j, 2)) == _globe_count(i, j)


def test_triangle_has_seven_arrows():
    # three identities, three edges and the composite of the path
    assert len(enumerate_cells(simplex_complex(2), 1, 2)) == 7


def test_atoms_are_valid_cells():
    S = simplex_complex(3)
    for gen in S.all_generators():
        assert validate_cell(atom_cell(S, gen), S).ok


def test_broken_cell_is_rejected():
    D = disk_complex(1)
    a, b = Chain(0, {"x⁰₀": 1}), Chain(0, {"x¹₀": 1})
    good = make_cell([(a, b), (Chain(1, {"x₁": 1}),) * 2], D)
    bad = make_cell([(b, a), (Chain(1, {"x₁": 1}),) * 2], D)
    assert validate_cell(good, D).ok and not validate_cell(bad, D).ok


CELLS = enumerate_cells(simplex_complex(2), 0, 2) + enumerate_cells(simplex_complex(2), 1, 2) + enumerate_cells(
    simplex_complex(2), 2, 2
)


@given(st.sampled_from(CELLS), st.sampled_from(CELLS), st.integers(0, 1))
def test_composites_have_the_expected_faces(x, y, j):
    if not composable(x, y, j):
        with pytest.raises(ComplexError):
            cell_compose(x, y, j)
        return
    xy = cell_compose(x, y, j)
    assert validate_cell(xy).ok
    assert cell_source(xy, j) == cell_source(y, j) and cell_target(xy, j) == cell_target(x, j)


@given(st.sampled_from(CELLS))
def test_identities_are_units(x):
    ident_s, ident_t = cell_identity(cell_source(x, 0), x.dim), cell_identity(cell_target(x, 0), x.dim)
    if x.dim:
        assert cell_compose(x, ident_s, 0) == x == cell_compose(ident_t, x, 0)


HOMS = enumerate_adc_morphisms(simplex_complex(2), simplex_complex(2), 1)


@given(st.sampled_from(HOMS), st.sampled_from(CELLS), st.sampled_from(CELLS), st.integers(0, 1))
def test_morphisms_act_functorially(f, x, y, j):
    if composable(x, y, j):
        assert apply_functor(f, cell_compose(x, y, j)) == cell_compose(apply_functor(f, x), apply_functor(f, y), j)


@pytest.mark.parametrize("i", range(3))
def test_morphisms_out_of_a_disk_are_cells(i):
    L = simplex_complex(2)
    assert len(enumerate_adc_morphisms(disk_complex(i), L, 2)) == len(enumerate_cells(L, i, 2))
