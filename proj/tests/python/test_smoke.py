import json
import math

import pytest

import fibcomm

GOLDEN = (3 + math.sqrt(5)) / 2


def test_bundled():
    assert {"six22", "magic"} <= set(fibcomm.bundled_names())
    d = fibcomm.descriptor("six22")
    assert d["betti"] == 2


def test_norm_and_entropy():
    assert fibcomm.norm([0, 1]) == "2"
    assert fibcomm.norm([3, 1]) == "6"
    rec = fibcomm.entropy([0, 1])
    assert rec["dilatation"] == pytest.approx(GOLDEN, abs=1e-9)
    assert rec["entropy"] == pytest.approx(2 * math.log(GOLDEN), abs=1e-9)
    assert fibcomm.entropy([1, 1, 0], "magic")["dilatation"] == pytest.approx(2 + math.sqrt(3), abs=1e-9)


def test_classify():
    v = fibcomm.classify([1, 2], [-1, 2])
    assert v["kind"] == "Symmetric"
    v = fibcomm.classify([0, 1], [1, 2])
    assert v["kind"] == "NonCommensurable"


def test_volume_gate():
    assert not fibcomm.volume_gate(5.33, 3, 3)["possible"]
    assert fibcomm.volume_gate(4 * 1.0149416064096536, 2, 2)["possible"]


def test_cover():
    r = fibcomm.analyze_cover([1, 0, 0], [0, 1, 0], -2, -2, 6, True)
    assert r["components"] * r["component_degree"] == 6


def test_smith():
    a = [[2, 4, 4], [-6, 6, 12], [10, -4, -16]]
    left, diag, right = fibcomm.smith_normal_form(a)
    assert [diag[i][i] for i in range(3)] == [2, 6, 12]
    prod = [[sum(left[i][k] * diag[k][l] * right[l][j] for k in range(3) for l in range(3)) for j in range(3)]
            for i in range(3)]
    assert prod == a


def test_errors():
    with pytest.raises(fibcomm.FibcommError, match="not_in_cone|NotInCone"):
        fibcomm.entropy([1, 1])
    with pytest.raises(ValueError):
        fibcomm.norm([1, 2, 3])


def test_run_cli():
    code, out, err = fibcomm.run("--json", "entropy", "--class", "T")
    assert code == 0 and err == ""
    assert json.loads(out)["record"]["entropy"] == pytest.approx(2 * math.log(GOLDEN), abs=1e-9)
    assert fibcomm.run("no-such-command")[0] == 2
