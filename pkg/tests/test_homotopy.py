import pytest
from hypothesis import given, settings, strategies as st

from adcalc.cells import enumerate_adc_morphisms
from adcalc.complexes import ComplexError, Morphism
from adcalc.constructions import disk_complex, simplex_complex
from adcalc.homotopy import (
    ANTIHOMOTOPY,
    HOMOTOPY,
    Family,
    gray_interchange,
    homotopy_identity,
    random_family_from,
    validate_homotopy,
    vertical_sum,
    whisker_left,
    whisker_right,
)

D0, D1, S2 = disk_complex(0, "p"), disk_complex(1), simplex_complex(2)
HOMS = enumerate_adc_morphisms(D1, S2, 1)
seeds = st.integers(0, 10_000)


def _point_map(target):
    return Morphism(D0, D1, {"p₀": {target: 1}})


def test_an_edge_is_a_homotopy_between_its_ends():
    f, g = _point_map("x⁰₀"), _point_map("x¹₀")
    assert validate_homotopy(Family(HOMOTOPY, f, g, {"p₀": {"x₁": 1}})).ok
    assert not validate_homotopy(Family(HOMOTOPY, g, f, {"p₀": {"x₁": 1}})).ok


def test_families_check_their_components():
    f = _point_map("x⁰₀")
    with pytest.raises(ComplexError):
        Family(HOMOTOPY, f, f, {"p₀": {"x⁰₀": 1}})


@pytest.mark.parametrize("variance", [HOMOTOPY, ANTIHOMOTOPY])
@settings(max_examples=150)
@given(st.sampled_from(HOMS), seeds)
def test_random_families_are_valid(variance, f, seed):
    drawn = random_family_from(f, seed, variance)
    if drawn is not None:
        g, h = drawn
        assert validate_homotopy(h).ok and h.source == f and h.target == g


@pytest.mark.parametrize("variance", [HOMOTOPY, ANTIHOMOTOPY])
@settings(max_examples=150)
@given(st.sampled_from(HOMS), seeds, seeds)
def test_vertical_sums_stay_valid(variance, f, s1, s2):
    first = random_family_from(f, s1, variance)
    if first is None:
        return
    g, h = first
    second = random_family_from(g, s2, variance)
    if second is None:
        return
    _, k = second
    total = vertical_sum(k, h)
    assert validate_homotopy(total).ok
    assert vertical_sum(homotopy_identity(g, variance), h) == h


@given(st.sampled_from(HOMS), seeds, st.sampled_from(enumerate_adc_morphisms(S2, S2, 1)))
def test_whiskering_keeps_validity(f, seed, phi):
    drawn = random_family_from(f, seed, HOMOTOPY)
    if drawn is None:
        return
    _, h = drawn
    assert validate_homotopy(whisker_left(phi, h)).ok
    psi = enumerate_adc_morphisms(disk_complex(1, "w"), D1, 1)[-1]
    assert validate_homotopy(whisker_right(h, psi)).ok


@pytest.mark.parametrize("variance", [HOMOTOPY, ANTIHOMOTOPY])
@given(seeds, seeds)
def test_interchange_family_is_valid(variance, s1, s2):
    f1 = HOMS[-1]
    first = random_family_from(f1, s1, variance)
    f2 = enumerate_adc_morphisms(S2, S2, 1)[s2 % 10]
    second = random_family_from(f2, s2, variance)
    if first is None or second is None:
        return
    assert validate_homotopy(gray_interchange(second[1], first[1])).ok


def test_mixed_variances_do_not_add():
    f = HOMS[0]
    with pytest.raises(ComplexError):
        vertical_sum(homotopy_identity(f, HOMOTOPY), homotopy_identity(f, ANTIHOMOTOPY))
