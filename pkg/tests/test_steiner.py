import pytest
from hypothesis import given, strategies as st

from adcalc.complexes import ComplexError, Morphism
from adcalc.constructions import (
    cycle_complex,
    disk_complex,
    globular_sum,
    join,
    opp,
    rigidity_counterexample,
    sigma_map,
    simplex_complex,
    tau_map,
    tensor,
)
from adcalc.steiner import (
    check_pushout_steiner,
    is_loop_free,
    is_prerigid,
    is_rigid,
    is_rigid_ordered_inclusion,
    is_strong_steiner,
    is_unitary,
    leq_N_preorder,
    steiner_report,
)

BASE = [disk_complex(1), disk_complex(2), simplex_complex(1), simplex_complex(2), globular_sum([2, 0, 1]).complex]


@pytest.mark.parametrize("m", range(6))
def test_simplices_are_strong_steiner(m):
    assert is_strong_steiner(simplex_complex(m))


@given(st.sampled_from(BASE), st.sampled_from(BASE))
def test_joins_tensors_and_duals_stay_strong_steiner(K, L):
    for P in (join(K, L), tensor(K, L), opp(tensor(K, L))):
        assert is_strong_steiner(P)


def test_cycle_is_unitary_but_loops():
    K = cycle_complex()
    report = steiner_report(K)
    assert is_unitary(K).ok and not is_loop_free(K)
    assert not report["strong_steiner"]
    assert set(report["loop_witness"]) == {"u", "v"}


def test_doubled_edge_is_not_unitary():
    from adcalc.complexes import Complex

    K = Complex("fat", {0: ["p", "q"], 1: ["u"]}, {"u": {"q": 2, "p": -2}}, {"p": 1, "q": 1})
    assert not is_unitary(K).ok


def test_strong_order_on_an_edge():
    rep = leq_N_preorder(disk_complex(1))
    assert rep.is_order


def test_counterexample_is_prerigid_not_rigid():
    f = rigidity_counterexample()
    assert is_prerigid(f).ok
    rep = is_rigid(f)
    assert not rep.ok and rep.witness == ("x₁⊗x₁",)


def test_non_prerigid_map_is_reported():
    D = disk_complex(1)
    f = Morphism(D, D, {"x⁰₀": {"x⁰₀": 1}, "x¹₀": {"x⁰₀": 1}})
    assert not is_prerigid(f).ok


def test_gluing_two_edges_stays_strong_steiner():
    out = check_pushout_steiner(tau_map(0, 1, "p", "x"), sigma_map(0, 1, "p", "y"))
    assert out["strong_steiner"] and out["left_leg_rigid_ordered_inclusion"]
    assert out["pushout"].size() == 5


def test_pushout_check_needs_inclusions():
    D = disk_complex(1)
    collapse = Morphism(D, disk_complex(0, "p"), {"x⁰₀": {"p₀": 1}, "x¹₀": {"p₀": 1}})
    assert not is_rigid_ordered_inclusion(collapse).ok
    with pytest.raises(ComplexError):
        check_pushout_steiner(collapse, collapse)
