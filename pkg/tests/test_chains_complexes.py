import json

import pytest
from hypothesis import given, strategies as st

from adcalc.chains import Chain
from adcalc.complexes import (
    Complex,
    ComplexError,
    Morphism,
    compose_morphisms,
    generator_atom,
    identity_morphism,
    is_isomorphism,
    validate_complex,
    validate_morphism,
)
from adcalc.constructions import disk_complex, simplex_complex

names = st.sampled_from(["a", "b", "c", "d"])
chains = st.dictionaries(names, st.integers(-5, 5)).map(lambda m: Chain(1, m))


@given(chains, chains, chains)
def test_chain_addition_is_an_abelian_group(x, y, z):
    assert (x + y) + z == x + (y + z)
    assert x + y == y + x
    assert x - x == Chain.zero(1)
    assert x.positive_part() - x.negative_part() == x


@given(chains)
def test_parts_are_nonnegative_and_disjoint(x):
    pos, neg = x.parts()
    assert pos.is_nonnegative() and neg.is_nonnegative()
    assert not pos.support() & neg.support()


def test_mixed_degrees_do_not_add():
    with pytest.raises(ValueError):
        Chain(0, {"a": 1}) + Chain(1, {"a": 1})


def test_disk_has_two_cells_below_the_top():
    D = disk_complex(3)
    assert [len(D.generators(k)) for k in range(4)] == [2, 2, 2, 1]
    assert validate_complex(D).ok


def test_bad_differential_is_reported():
    K = Complex("bad", {0: ["p", "q"], 1: ["u"], 2: ["w"]}, {"u": {"q": 1, "p": -1}, "w": {"u": 1}}, {"p": 1, "q": 1})
    report = validate_complex(K)
    assert not report.ok and report.witness


def test_unknown_generator_in_differential_is_rejected():
    with pytest.raises(ComplexError):
        Complex("bad", {0: ["p"]}, {"z": {"p": 1}})


@pytest.mark.parametrize("m", range(5))
def test_json_round_trip(m):
    K = simplex_complex(m)
    again = Complex.from_json(json.loads(K.dumps()))
    assert again.same_structure(K) and again.name == K.name


def test_edge_atom():
    D = disk_complex(1)
    table = generator_atom(D, "x₁")
    assert table.row(0, 0) == Chain(0, {"x⁰₀": 1})
    assert table.row(0, 1) == Chain(0, {"x¹₀": 1})


def test_triangle_atom_goes_from_the_long_edge_to_the_path():
    # d(012) = (12) − (02) + (01)
    S = simplex_complex(2)
    table = generator_atom(S, "(012)")
    assert table.row(1, 0) == Chain(1, {"(02)": 1})
    assert table.row(1, 1) == Chain(1, {"(01)": 1, "(12)": 1})
    assert table.row(0, 0) == Chain(0, {"(0)": 1})
    assert table.row(0, 1) == Chain(0, {"(2)": 1})


def test_morphism_checks():
    D = disk_complex(1)
    point = disk_complex(0, "p")
    (p,) = point.generators(0)
    collapse = Morphism(D, point, {"x⁰₀": {p: 1}, "x¹₀": {p: 1}})
    assert validate_morphism(collapse).ok
    assert not is_isomorphism(collapse)
    twice = Morphism(D, D, {"x⁰₀": {"x⁰₀": 1}, "x¹₀": {"x¹₀": 1}, "x₁": {"x₁": 2}})
    assert not validate_morphism(twice).ok
    ident = identity_morphism(D)
    assert compose_morphisms(ident, ident) == ident and is_isomorphism(ident)


def test_morphism_rejects_wrong_degree_images():
    D = disk_complex(1)
    with pytest.raises(ComplexError):
        Morphism(D, D, {"x₁": {"x⁰₀": 1}})
