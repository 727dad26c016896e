"""Command line interface: JSON shapes, exit codes, determinism."""

import json
import math

import pytest

from qmobius import cli
from qmobius.quat import get_tolerance, set_tolerance

IDENT = "[[1,0,0,0],[0,0,0,0],[0,0,0,0],[1,0,0,0]]"
BOOST = "[[1,0,0,0],[0,1,0,0],[0,0,1,0],[0,0,0,1]]"  # [[1, i], [j, k]]


def invoke(capsys, *argv):
    code = cli.run(list(argv))
    out = capsys.readouterr().out
    return code, out


def invoke_json(capsys, *argv):
    code, out = invoke(capsys, *argv)
    return code, json.loads(out)


# -- happy paths ---------------------------------------------------------


def test_det(capsys):
    code, data = invoke_json(capsys, "det", BOOST)
    assert code == 0
    assert data == {"det": 2}


def test_inv_and_normalize(capsys):
    code, data = invoke_json(
        capsys, "inv", "[[1,0,0,0],[0,0,0,0],[0,0,0,0],[2,0,0,0]]")
    assert code == 0
    assert data["matrix"] == [[1, 0, 0, 0], [0, 0, 0, 0], [0, 0, 0, 0],
                              [0.5, 0, 0, 0]]
    code, data = invoke_json(
        capsys, "normalize", "[[2,0,0,0],[0,0,0,0],[0,0,0,0],[2,0,0,0]]")
    assert code == 0
    assert data["matrix"] == [[1, 0, 0, 0], [0, 0, 0, 0], [0, 0, 0, 0],
                              [1, 0, 0, 0]]


def test_classify(capsys):
    code, data = invoke_json(capsys, "classify", IDENT)
    assert code == 0
    assert set(data["tags"]) == {"GL2H", "SL2H", "Sp11", "SLHplus",
                                 "CenterGL", "CenterSL"}


def test_apply_finite_and_infinite(capsys):
    mat = "[[1,0,0,0],[0,1,0,0],[0,0,0,0],[1,0,0,0]]"  # q -> q + i
    code, data = invoke_json(capsys, "apply", mat, "[0,0,0,0]")
    assert (code, data) == (0, {"result": [0, 1, 0, 0]})
    inversion = "[[0,0,0,0],[1,0,0,0],[1,0,0,0],[0,0,0,0]]"
    code, data = invoke_json(capsys, "apply", inversion, "[0,0,0,0]")
    assert (code, data) == (0, {"result": "inf"})
    code, data = invoke_json(capsys, "apply", inversion, '"inf"')
    assert (code, data) == (0, {"result": [0, 0, 0, 0]})


def test_decompose(capsys):
    mat = "[[1,0,0,0],[0,1,0,0],[0,0,0,0],[1,0,0,0]]"
    code, data = invoke_json(capsys, "decompose", mat)
    assert code == 0
    assert data["generators"] == [{"type": "translation", "b": [0, 1, 0, 0]}]


def test_canonical(capsys):
    c, s = math.cosh(1.0), math.sinh(1.0)
    mat = json.dumps([[c, 0, 0, 0], [s, 0, 0, 0], [s, 0, 0, 0], [c, 0, 0, 0]])
    code, data = invoke_json(capsys, "canonical", mat)
    assert code == 0
    assert data["alpha"] == [1, 0, 0, 0]
    assert data["beta"] == [1, 0, 0, 0]
    assert data["q0"][0] == pytest.approx(-math.tanh(1.0), abs=1e-6)


def test_cross_ratio(capsys):
    code, data = invoke_json(capsys, "cross-ratio", "[0,0,0,0]", "[0.5,0,0,0]",
                             "[1,0,0,0]", "[-1,0,0,0]")
    assert (code, data) == (0, [3, 0, 0, 0])
    code, data = invoke_json(capsys, "cross-ratio", "[2,1,0,0]", "[1,0,0,0]",
                             "[0,0,0,0]", '"inf"')
    assert (code, data) == (0, [2, 1, 0, 0])


def test_concyclic(capsys):
    code, data = invoke_json(capsys, "concyclic", "[0,0.5,0,0]", "[0,0,0.5,0]",
                             "[0,2,0,0]", "[0,0,2,0]")
    assert code == 0
    assert data["concyclic"] is True
    assert data["cross_ratio"][0] == pytest.approx(9.0 / 17.0, abs=1e-6)


def test_distance(capsys):
    code, data = invoke_json(capsys, "distance", "--disc", "[0,0,0,0]",
                             "[0.5,0,0,0]")
    assert code == 0
    assert data["distance"] == pytest.approx(0.5493061, abs=1e-6)
    code, data = invoke_json(capsys, "distance", "--halfspace", "[2,0,0,0]",
                             "[8,0,0,0]")
    assert code == 0
    assert data["distance"] == pytest.approx(math.log(2.0), abs=1e-6)


def test_geodesic_json(capsys):
    code, data = invoke_json(capsys, "geodesic", "--disc", "[0,0,0,0]",
                             "[0.5,0,0,0]", "--samples", "3")
    assert code == 0
    assert data["kind"] == "Diameter"
    assert data["ends"] == [[1, 0, 0, 0], [-1, 0, 0, 0]]
    assert len(data["samples"]) == 3
    assert data["samples"][1][0] == pytest.approx(2.0 - math.sqrt(3.0), abs=1e-6)

    code, data = invoke_json(capsys, "geodesic", "--halfspace", "[2,0,0,0]",
                             "[8,0,0,0]", "--samples", "3")
    assert code == 0
    assert data["kind"] == "HalfLine"
    assert "inf" in data["ends"]
    assert data["samples"][1] == [4, 0, 0, 0]


def test_geodesic_csv(capsys):
    code, out = invoke(capsys, "geodesic", "--disc", "[0,0,0,0]", "[0.5,0,0,0]",
                       "--samples", "3", "--csv")
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0] == "w,x,y,z"
    assert len(lines) == 4


def test_cayley(capsys):
    code, data = invoke_json(capsys, "cayley", "[0,0.5,0,0]")
    assert (code, data) == (0, {"result": [0.6, 0.8, 0, 0]})
    code, data = invoke_json(capsys, "cayley", "[1,0,0,0]")
    assert (code, data) == (0, {"result": "inf"})
    code, data = invoke_json(capsys, "cayley", "--inverse", "[0.6,0.8,0,0]")
    assert (code, data) == (0, {"result": [0, 0.5, 0, 0]})


def test_metric(capsys):
    code, data = invoke_json(capsys, "metric", "--disc", "[0.5,0,0,0]",
                             "[0,1,1,0]")
    assert code == 0
    assert data["metric"] == pytest.approx(1.885618, abs=1e-6)
    code, data = invoke_json(capsys, "metric", "--halfspace", "[1,0,0,0]",
                             "[1,0,0,0]")
    assert (code, data) == (0, {"metric": 0.5})


def test_kobayashi_witness(capsys):
    code, data = invoke_json(capsys, "kobayashi-witness", "--grid", "6")
    assert code == 0
    assert data["witness"]["Q"] == pytest.approx(0.4705882, abs=1e-6)
    assert data["witness"]["C"] == pytest.approx(0.4375, abs=1e-6)
    assert data["witness"]["gap"] > 0.03


def test_selftest(capsys):
    code, data = invoke_json(capsys, "--seed", "3", "selftest", "--iters", "5")
    assert code == 0
    assert data["ok"] is True
    assert data["seed"] == 3
    assert set(data["suites"]) >= {"binet", "inverse", "cross_ratio",
                                    "distance", "kobayashi"}


# -- determinism and configuration --------------------------------------


def test_output_is_byte_stable(capsys):
    argv = ("selftest", "--iters", "5", "--seed", "1")
    _, first = invoke(capsys, *argv)
    _, second = invoke(capsys, *argv)
    assert first == second


def test_seed_env_default(capsys, monkeypatch):
    monkeypatch.setenv("QMOBIUS_SEED", "9")
    code, data = invoke_json(capsys, "selftest", "--iters", "5")
    assert code == 0
    assert data["seed"] == 9


def test_tol_flag_changes_comparisons(capsys):
    base = get_tolerance()
    try:
        code, data = invoke_json(capsys, "--tol", "0.5", "classify",
                                 "[[1,0,0,0],[0.1,0,0,0],[0,0,0,0],[1,0,0,0]]")
        assert code == 0
        assert "Sp11" in data["tags"]  # sloppy tolerance accepts the perturbation
    finally:
        set_tolerance(*base)
    code, data = invoke_json(capsys, "classify",
                             "[[1,0,0,0],[0.1,0,0,0],[0,0,0,0],[1,0,0,0]]")
    assert code == 0
    assert "Sp11" not in data["tags"]


# -- error paths ---------------------------------------------------------


def test_domain_error_exits_one(capsys):
    code, data = invoke_json(
        capsys, "inv", "[[0,0,0,0],[0,0,0,0],[0,0,0,0],[0,0,0,0]]")
    assert code == 1
    assert data["error"] == "Singular"

    code, data = invoke_json(capsys, "distance", "--disc", "[2,0,0,0]",
                             "[0,0,0,0]")
    assert code == 1
    assert data["error"] == "OutOfDomain"


def test_parse_error_exits_two(capsys):
    code, data = invoke_json(capsys, "det", "nonsense")
    assert code == 2
    assert data["error"] == "parse"

    code, data = invoke_json(capsys, "det", "[[1,0,0],[0,0,0],[0,0,0],[1,0,0]]")
    assert code == 2
    assert data["error"] == "parse"

    code, _ = invoke(capsys, "distance", "[1,0,0,0]", "[2,0,0,0]")
    assert code == 2
