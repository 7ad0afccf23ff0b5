"""The one-stop verification driver."""

import pytest

from flatpart.errors import UnknownFamily
from flatpart.verify import VerifyReport, verify_all, verify_identity


def test_single_identity_report():
    report = verify_identity("RR1", nmax=60)
    assert isinstance(report, VerifyReport)
    assert report.name == "RR1"
    assert report.passed
    labels = [c.label for c in report.checks]
    assert any("count" in lbl for lbl in labels)


def test_identity_with_every_check_kind():
    # a family-1 member gets a count check, a recursion, and a bijection
    report = verify_identity("FAM1_2_K2", nmax=80, bijection_n=10,
                             recursion_order=60)
    assert report.passed
    assert len(report.checks) >= 3


def test_specialization_check_runs_for_corner_families():
    report = verify_identity("COR_K3_I1", nmax=None)
    assert report.passed
    assert any("special" in c.label for c in report.checks)


def test_refuted_names_fail_with_counterexample():
    report = verify_identity("FAM8_MOD10_S39")
    assert not report.passed
    assert any("not a theorem" in c.detail for c in report.checks)
    assert any("n=35" in c.detail for c in report.checks)


def test_unknown_name_raises():
    with pytest.raises(UnknownFamily):
        verify_identity("GIBBERISH")


def test_verify_all_streams_reports():
    seen = 0
    for report in verify_all(nmax=25):
        seen += 1
        if seen >= 8:
            break
    assert seen == 8
