"""Claim-table driver: suite contents and summary bookkeeping."""

import pytest

from harmonic_atlas.verify import SUITES, VerifyConfig, report_json, run_suite

FAST = VerifyConfig(order=16, grid_radii=16, grid_angles=64)


def test_all_suites_match_at_default_config_shapes():
    report = run_suite("T31", FAST)
    assert report["summary"]["total"] == 20
    assert report["summary"]["matched"] == 20


def test_t41_row_census():
    report = run_suite("T41", FAST)
    rows = report["rows"]
    shear_rows = [r for r in rows if r["id"].endswith("_cv1")]
    assert len(shear_rows) == 60          # class + twin per shear
    asserted = [r for r in rows if r["asserted"]]
    assert len(asserted) == 1
    assert report["summary"]["total"] == len(rows) - 1


def test_t42_half_integer_count_row():
    report = run_suite("T42", FAST)
    count_rows = [r for r in report["rows"] if r["id"] == "~cvi_half_integer_count"]
    assert len(count_rows) == 1
    assert count_rows[0]["computed"] == 2
    assert count_rows[0]["match"] is True


def test_remark_suite():
    report = run_suite("REMARK", FAST)
    assert report["summary"]["matched"] == report["summary"]["total"] == 5


def test_all_aggregates():
    report = run_suite("all", FAST)
    assert {s["theorem"] for s in report["suites"]} == set(SUITES)
    total = sum(s["summary"]["total"] for s in report["suites"])
    assert report["summary"]["total"] == total


def test_report_json_stable():
    a = report_json(run_suite("REMARK", FAST))
    b = report_json(run_suite("REMARK", FAST))
    assert a == b


def test_unknown_suite():
    with pytest.raises(KeyError):
        run_suite("T99", FAST)
