import json
from fractions import Fraction
from pathlib import Path

import pytest

import orbk

DATA = Path(__file__).resolve().parents[2] / "data"


def load(name):
    return (DATA / name).read_text()


def test_z4_sectors():
    g = orbk.Quotient(load("z4_mixed.json"))
    assert g.order == 4
    iotas = sorted(s["iota"] for s in g.sectors())
    assert iotas == [0, Fraction(1, 2), Fraction(3, 4), Fraction(5, 4)]
    assert all(isinstance(s["iota"], Fraction) for s in g.sectors())


def test_s3_ring():
    g = orbk.Quotient(load("s3_point.json"))
    sectors = g.sectors()
    t = next(i for i, s in enumerate(sectors) if s["class_size"] == 3)
    r = next(i for i, s in enumerate(sectors) if s["class_size"] == 2)
    assert g.product(t, t) == {0: 3, r: 3}
    assert g.threepoint(t, t, r) == 1
    assert g.pairing(t, t) == Fraction(1, 2)
    assert g.kpoint([t, t, r]) == 1
    assert g.euler() == 3
    assert g.verify()


def test_weighted_projective_tables():
    assert orbk.wps_poincare([1, 1, 2]) == {0: 1, 2: 2, 4: 1}
    assert orbk.wps_poincare([1, 2]) == {0: 1, 1: 1, 2: 1}
    assert orbk.wps_euler([1, 1, 2]) == 4


def test_virtual_dimension():
    assert orbk.virtual_dimension(0, 0, 0, [0, 0, 0]) == 0
    assert orbk.virtual_dimension(0, 3, 0, [0, 0, 0]) == 6
    assert orbk.virtual_dimension(0, 2, 0, [1, Fraction(1, 2), "1/2"]) == 0


def test_run_matches_cli_contract():
    report, code = orbk.run("vdim", c1a=0, dim=0, genus=0, marks=3, iotas=[0, 0, 0])
    assert code == 0
    assert report == {"virtual_dimension": "0"}

    report, code = orbk.run("lifts", load("klein.json"), axes=[0], order=2, character=1)
    assert code == 0
    assert report["class_count"] == 2

    report, code = orbk.run("goodmap", load("z4_mixed.json"), element="0.0")
    assert code == 0
    assert report["verdict"] == "NotGood"

    report, code = orbk.run("sectors", '{"kind": "weighted_projective", "weights": [1,')
    assert code == 2
    assert report["error"] == "SyntaxError"

    report, code = orbk.run("frobnicate")
    assert code == 2
    assert report["error"] == "UnknownCommand"


def test_canonical_input_round_trip():
    for path in sorted(DATA.glob("*.json")):
        once = orbk.canonical_input(path.read_text())
        assert orbk.canonical_input(once) == once
        assert json.loads(once)["kind"] in ("matrix_group", "weighted_projective")


def test_errors_raise():
    with pytest.raises(orbk.OrbkError, match="NotSL|SemanticError"):
        orbk.Quotient(load("p112.json"))
    with pytest.raises(ValueError):
        orbk.wps_poincare([2, 4])
