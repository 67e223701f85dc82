import itertools
from math import comb

import pytest
from hypothesis import given, strategies as st

from adcalc.complexes import ComplexError, compose_morphisms, is_isomorphism, validate_complex, validate_morphism
from adcalc.constructions import (
    chi_morphism,
    co,
    cocategory_maps,
    degeneracy_map,
    desuspend,
    direct_sum,
    disk_complex,
    face_map,
    globular_sum,
    join,
    join_associator,
    join_swap,
    join_via_suspension,
    op,
    opp,
    pushout,
    relabel,
    sigma_map,
    simplex_complex,
    street_nerve,
    suspend,
    tau_map,
    tensor,
    tensor_associator,
    tensor_op_identity,
    theta_complex,
    truncate_bete,
    truncate_intelligent,
)

BASE = [disk_complex(0), disk_complex(1), disk_complex(2), simplex_complex(1), simplex_complex(2),
        globular_sum([1, 0, 1]).complex]
base = st.sampled_from(BASE)


@pytest.mark.parametrize("m", range(7))
def test_simplex_basis_sizes_are_binomial(m):
    K = simplex_complex(m)
    assert [len(K.generators(k)) for k in range(m + 1)] == [comb(m + 1, k + 1) for k in range(m + 1)]
    assert validate_complex(K).ok


@given(base, base)
def test_join_and_tensor_sizes(K, L):
    assert join(K, L).size() == K.size() + L.size() + K.size() * L.size()
    assert tensor(K, L).size() == K.size() * L.size()


@given(base, base)
def test_join_agrees_with_suspended_tensor(K, L):
    assert join_via_suspension(K, L).same_structure(join(K, L))


@given(base, base, base)
def test_join_and_tensor_are_associative_on_the_nose(K, L, M):
    left = join(join(K, L), M)
    assert relabel(left, join_associator(K, L, M)).same_structure(join(K, join(L, M)))
    left = tensor(tensor(K, L), M)
    assert relabel(left, tensor_associator(K, L, M)).same_structure(tensor(K, tensor(L, M)))


@given(base)
def test_duals_are_involutions(K):
    for d in (op, co, opp):
        assert d(d(K)).same_structure(K)
    assert op(co(K)).same_structure(opp(K))


@given(base, base)
def test_duality_maps_are_isomorphisms(K, L):
    for f in (join_swap(K, L), tensor_op_identity(K, L)):
        assert validate_morphism(f).ok and is_isomorphism(f)


@given(base)
def test_suspension_round_trip(K):
    assert desuspend(suspend(K)).same_structure(K)


@pytest.mark.parametrize("m,n", [(m, n) for m in range(4) for n in range(4 - m)])
def test_chi_is_an_isomorphism(m, n):
    f = chi_morphism(m, n)
    assert validate_morphism(f).ok and is_isomorphism(f)


def test_two_points_join_to_an_edge():
    P = join(disk_complex(0, "a"), disk_complex(0, "b"))
    assert [len(P.generators(k)) for k in range(2)] == [2, 1]


def test_simplicial_identities_on_coface_maps():
    for n in range(2, 5):
        for i, j in itertools.combinations(range(n + 1), 2):
            # δ_j δ_i = δ_i δ_{j−1} for i < j
            assert compose_morphisms(face_map(n, j), face_map(n - 1, i)) == compose_morphisms(
                face_map(n, i), face_map(n - 1, j - 1)
            )
        for i in range(n):
            # σ_i δ_i = id = σ_i δ_{i+1}
            ident = compose_morphisms(degeneracy_map(n - 1, i), face_map(n, i))
            assert is_isomorphism(ident) and ident == compose_morphisms(degeneracy_map(n - 1, i), face_map(n, i + 1))


def _monotone(n, m):
    return sum(1 for t in itertools.product(range(m + 1), repeat=n + 1) if list(t) == sorted(t))


@pytest.mark.parametrize("n", range(4))
def test_nerve_of_an_arrow_counts_monotone_maps(n):
    assert len(street_nerve(simplex_complex(1), n, 1)) == _monotone(n, 1)


def test_globular_sum_sizes():
    # two edges glued at a point, a 2-disk with an edge attached at its target
    assert globular_sum([1, 0, 1]).complex.size() == 5
    assert globular_sum([2, 0, 1]).complex.size() == 7
    assert theta_complex("2 1 2").size() == 2 + 3 + 2


def test_bad_signature_is_rejected():
    with pytest.raises(ComplexError):
        globular_sum([1, 1, 1])


@pytest.mark.parametrize("i,j", [(1, 0), (2, 0), (2, 1), (3, 1)])
def test_cocategory_maps_are_valid(i, j):
    for f in cocategory_maps(i, j).values():
        assert validate_morphism(f).ok


def test_direct_sum_and_pushout():
    P, left, right = direct_sum(disk_complex(1, "x"), disk_complex(1, "y"))
    assert P.size() == 6 and validate_morphism(left).ok and validate_morphism(right).ok
    # gluing the target of one edge to the source of another gives the composable pair
    Q, _, _ = pushout(tau_map(0, 1, "p", "x"), sigma_map(0, 1, "p", "y"))
    assert [len(Q.generators(k)) for k in range(2)] == [3, 2]


def test_intelligent_truncation_of_a_disk():
    T = truncate_intelligent(disk_complex(2), 1)
    assert T.complex.size() == 3 and validate_morphism(T.projection).ok
    assert is_isomorphism(compose_morphisms(T.projection, sigma_map(1, 2, "x", "x")))


def test_truncation_without_a_basis_is_an_error():
    with pytest.raises(ComplexError):
        truncate_intelligent(simplex_complex(3), 2)


def test_stupid_truncation_keeps_the_skeleton():
    K = truncate_bete(simplex_complex(2), 1)
    assert K.size() == 6 and validate_complex(K).ok
