import io
import json

import pytest

from adcalc import cli
from adcalc.constructions import simplex_complex
from adcalc.slice_laws import draw_composite
from adcalc.slices import triangle_pullback


def run(argv, stdin=None, monkeypatch=None, capsys=None):
    if stdin is not None:
        monkeypatch.setattr("sys.stdin", io.StringIO(stdin))
    code = cli.main(argv)
    return code, json.loads(capsys.readouterr().out)


@pytest.fixture
def call(monkeypatch, capsys):
    return lambda argv, stdin=None: run(argv, stdin, monkeypatch, capsys)


def test_simplex_piped_into_steiner(call):
    _, simplex = call(["simplex", "2"])
    code, report = call(["check-steiner", "-"], json.dumps(simplex))
    assert code == 0 and report["strong_steiner"] is True


def test_join_of_simplices_has_triangle_sizes(call):
    code, info = call(["info", "(join (simplex 0) (simplex 1))"])
    assert code == 0 and info["basis_sizes"] == [3, 3, 1]


def test_nested_constructors_need_quoting_only_once(call):
    code, info = call(["info", "(tensor (disk 1) (disk 1))"])
    assert info["basis_sizes"] == [4, 4, 1]


def test_malformed_file_exits_two(call, tmp_path):
    bad = tmp_path / "bad.json"
    bad.write_text('{"name": "x", "basis": ')
    code, out = call(["validate", str(bad)])
    assert code == 2 and "error" in out


def test_missing_basis_exits_two(call, tmp_path):
    bad = tmp_path / "bad.json"
    bad.write_text('{"name": "x"}')
    code, out = call(["info", str(bad)])
    assert code == 2


def test_algebraic_failure_exits_one(call):
    code, out = call(["trunc", "(simplex 3)", "2"])
    assert code == 1 and "basis" in out["error"]


def test_unknown_command_exits_two(call):
    code, out = call(["frobnicate"])
    assert code == 2


def test_cap_comes_from_the_environment(call, monkeypatch):
    monkeypatch.setenv(cli.CAP_VARIABLE, "1")
    _, out = call(["nerve", "(simplex 1)", "2"])
    assert out["count"] == 4


def test_dual_by_degrees_matches_named_dual(call):
    _, a = call(["dual", "(simplex 2)", "1"])
    _, b = call(["dual", "(simplex 2)", "opp"])
    assert a["d"] == b["d"]


def test_pullback_from_a_workspace(call, tmp_path):
    data = None
    seed = 0
    while data is None:
        data = draw_composite(seed)
        seed += 1
    f, h, _, _, g, g2, _ = data
    bundle = {
        "morphisms": {"f": cli.morphism_json(f), "g": cli.morphism_json(g), "g2": cli.morphism_json(g2)},
        "families": {"h": cli.family_json(h)},
    }
    path = tmp_path / "bundle.json"
    path.write_text(json.dumps(bundle))
    code, out = call(["--load", str(path), "pullback", "f", "h", "g", "g2"])
    assert code == 0
    expected = triangle_pullback(f, h, g, g2).morphism.to_json()["maps"]
    assert out["maps"] == expected


def test_output_is_deterministic(call):
    first = call(["cells", "(simplex 2)", "1", "--cap", "2"])
    assert call(["cells", "(simplex 2)", "1", "--cap", "2"]) == first


def test_crosscheck_on_a_vertex(call):
    code, out = call(["crosscheck", "(simplex 1)", "(0)"])
    assert code == 0 and out["ok"]


def test_acceptance_subset(call):
    code, out = call(["acceptance", "--only", "4", "11"])
    assert code == 0 and out["passed"] == 2


def test_complex_round_trips_through_the_cli(call):
    _, out = call(["simplex", "3"])
    assert out == simplex_complex(3).to_json()
