"""Smoke tests for the ptleib extension module.

The build exports the module location through PYTHONPATH and the fixture
directory through PTLEIB_FIXTURES (both set by ctest; a `pip install .` user
gets the module on sys.path the normal way).
"""

import json
import os
import subprocess

import pytest

import ptleib

FIXTURES = os.environ.get("PTLEIB_FIXTURES", os.path.join(os.path.dirname(__file__), "..", "..", "fixtures"))


def fixture(name):
    path = os.path.join(FIXTURES, name)
    assert os.path.exists(path), f"missing fixture {path}"
    return path


def test_check_proto_passes_on_zoo_fixtures():
    for name in ("semidirect-q.json", "reynolds-q.json", "matched-pair-f5.json"):
        res = ptleib.check_proto(fixture(name))
        assert res["exit_code"] == 0
        assert res["report"]["verdict"] is True
        for eq in res["report"]["evidence"]["equations"]:
            assert eq["ok"] is True


def test_deformation_map_verdicts_and_residual():
    doc = fixture("semidirect-q.json")
    ok = ptleib.is_deformation_map(doc, "r1")
    assert ok["exit_code"] == 0 and ok["report"]["verdict"] is True
    bad = ptleib.is_deformation_map(doc, "r2")
    assert bad["exit_code"] == 1
    # the residual on the only basis pair is e2 (the a^2 obstruction)
    assert bad["report"]["evidence"]["residual"] == [[["0"]], [["1"]]]
    assert bad["report"]["evidence"]["graph_closed"] is False


def test_mc_and_governing_checks_agree_with_the_predicate():
    doc = fixture("semidirect-q.json")
    assert ptleib.mc_check(doc, "r1")["exit_code"] == 0
    assert ptleib.mc_check(doc, "r2")["exit_code"] == 1
    gov = ptleib.governing_check(doc, "r1", "r0")
    assert gov["exit_code"] == 0
    assert gov["report"]["evidence"]["consistent"] is True


def test_pair_mc_check_subalgebras():
    doc = fixture("theta-twisted-q.json")
    assert ptleib.pair_mc_check(doc, "r1", "full")["exit_code"] == 0
    assert ptleib.pair_mc_check(doc, "r1", "b-double-prime")["exit_code"] == 0
    assert ptleib.pair_mc_check(doc, "r2", "full")["exit_code"] == 1


def test_cohomology_table_shape_and_abelian_closed_form():
    doc = fixture("minimal-zero.json")
    res = ptleib.cohomology(doc, "r0", max_degree=3)
    table = res["report"]["evidence"]["table"]
    assert [row["cohomology"] for row in table] == [1, 1, 1, 1]  # g * h^n with g = h = 1


def test_enumerate_matches_hand_count():
    res = ptleib.enumerate_deformation_maps(fixture("semidirect-f2.json"))
    assert res["report"]["evidence"]["candidates"] == 4
    assert res["report"]["evidence"]["count"] == 2


def test_zoo_roundtrip(tmp_path):
    out = tmp_path / "hemi.json"
    built = ptleib.zoo_build("hemi-semidirect", field="5", out=str(out))
    assert built["exit_code"] == 0
    verified = ptleib.zoo_verify(str(out), "hemi-semidirect")
    assert verified["exit_code"] == 0
    assert verified["report"]["evidence"]["divergences"] == []


def test_twist_writes_a_valid_document(tmp_path):
    out = tmp_path / "twisted.json"
    res = ptleib.twist(fixture("theta-twisted-q.json"), "r1", out=str(out))
    assert res["exit_code"] == 0
    assert res["report"]["evidence"]["eta_r_zero"] is True
    doc = json.loads(out.read_text())
    assert doc["schema"] == 1
    again = ptleib.check_proto(str(out))
    assert again["exit_code"] == 0


def test_errors_surface_as_exceptions():
    with pytest.raises(ptleib.EngineError):
        ptleib.check_proto(os.path.join(FIXTURES, "no-such-file.json"))
    with pytest.raises(ptleib.EngineError):
        ptleib.is_deformation_map(fixture("semidirect-q.json"), "nope")


@pytest.mark.skipif("PTLEIB_CLI" not in os.environ, reason="CLI path not provided")
def test_cli_matches_module_verdicts():
    cli = os.environ["PTLEIB_CLI"]
    doc = fixture("semidirect-q.json")
    proc = subprocess.run([cli, "is-deformation-map", doc, "--map", "r2", "--format", "structured"],
                          capture_output=True, text=True)
    assert proc.returncode == 1
    report = json.loads(proc.stdout)
    assert report["verdict"] is False
    module_report = ptleib.is_deformation_map(doc, "r2")["report"]
    assert report["evidence"] == module_report["evidence"]
