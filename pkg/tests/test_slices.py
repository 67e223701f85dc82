import pytest
from hypothesis import given, settings, strategies as st

from adcalc.cells import enumerate_adc_morphisms
from adcalc.complexes import ComplexError, Morphism, identity_morphism
from adcalc.constructions import disk_complex, join, simplex_complex
from adcalc.homotopy import ANTIHOMOTOPY, homotopy_identity
from adcalc.slice_laws import LAWS, draw_composite, run_law
from adcalc.slices import (
    Slice,
    coslice,
    forget_commutes,
    slice_adjunction_phi,
    slice_adjunction_psi,
    slice_morphisms,
    slice_over_empty_iso,
    triangle_pullback,
    under,
    validate_slice,
    validate_slice_morphism,
)

POINT = disk_complex(0, "a")


def _vertex_slice(L, vertex):
    return Slice(L, Morphism(POINT, L, {"a₀": {vertex: 1}}))


@pytest.mark.parametrize("L", [disk_complex(1), simplex_complex(2), disk_complex(2)])
def test_slice_over_nothing_is_the_complex(L):
    assert slice_over_empty_iso(L).ok


def test_objects_of_a_triangle_under_its_first_vertex():
    S = _vertex_slice(simplex_complex(2), "(0)")
    assert validate_slice(S).ok
    # arrows out of 0: the identity, (01), (02) and the path (01)(12)
    assert len(S.cells(0, 2)) == 4


def test_slice_under_the_last_vertex_is_a_point():
    S = _vertex_slice(simplex_complex(2), "(2)")
    assert len(S.cells(0, 2)) == 1 and len(S.cells(1, 2)) == 1


def test_coslice_is_valid():
    S = coslice(simplex_complex(2), Morphism(POINT, simplex_complex(2), {"a₀": {"(2)": 1}}))
    assert validate_slice(S).ok


@pytest.mark.parametrize("L", [disk_complex(0, "x"), disk_complex(1, "x"), simplex_complex(1)])
def test_adjunction_is_a_bijection(L):
    M = simplex_complex(2)
    for g in enumerate_adc_morphisms(POINT, M, 2):
        S = Slice(M, g)
        KL = join(POINT, L)
        Fs = [F for F in enumerate_adc_morphisms(KL, M, 2) if under(F, g, POINT)]
        Gs = slice_morphisms(L, S, 2)
        assert len(Fs) == len(Gs)
        for G in Gs:
            assert validate_slice_morphism(G, S).ok
            assert slice_adjunction_phi(slice_adjunction_psi(G, POINT, L, S, KL), POINT, L, S) == G


def test_degree_zero_outside_the_slice_is_flagged():
    S = _vertex_slice(simplex_complex(1), "(0)")
    stray = Morphism(disk_complex(0, "y"), S.ambient, {"y₀": {S.ambient.generators(0)[0]: 2}})
    assert not validate_slice_morphism(stray, S).ok


def test_identity_pullback_is_the_identity():
    g = Morphism(POINT, simplex_complex(2), {"a₀": {"(1)": 1}})
    S = Slice(g.target, g)
    P = triangle_pullback(identity_morphism(POINT), homotopy_identity(g, ANTIHOMOTOPY), g, g, S, S)
    assert P.morphism == identity_morphism(S.ambient) and forget_commutes(P)


def test_pullback_rejects_a_wrong_triangle():
    g = Morphism(POINT, simplex_complex(2), {"a₀": {"(1)": 1}})
    g2 = Morphism(POINT, simplex_complex(2), {"a₀": {"(0)": 1}})
    with pytest.raises(ComplexError):
        triangle_pullback(identity_morphism(POINT), homotopy_identity(g, ANTIHOMOTOPY), g, g2)


@settings(max_examples=60)
@given(st.integers(0, 100_000))
def test_pullbacks_commute_with_forgetting(seed):
    data = draw_composite(seed)
    if data is None:
        return
    f, h, _, _, g0, g1, _ = data
    assert forget_commutes(triangle_pullback(f, h, g0, g1))


@pytest.mark.parametrize("law", sorted(LAWS))
def test_functoriality_laws_on_a_few_instances(law):
    outcome = run_law(law, required=3, seed=11, max_attempts=20000)
    assert outcome.accepted == 3 and outcome.ok
