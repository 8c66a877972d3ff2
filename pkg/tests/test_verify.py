import json

import pytest

from alphadet.errors import SizeCapExceeded
from alphadet.perms import Perm
from alphadet.verify import (
    verify_chi,
    verify_omega,
    verify_fourier_jm,
    verify_stanley,
    verify_theorem,
    verify_weak_alternating,
    verify_zsf,
)


def _stripped(report):
    data = report.to_dict()
    data.pop("wall_time_s")
    return json.dumps(data, sort_keys=True)


def test_theorem_suite_passes():
    report = verify_theorem(2, 2, trials=5, seed=7)
    assert report.passed
    assert report.case_count == 5
    assert all(c.witness is None for c in report.cases)


def test_theorem_suite_k1():
    assert verify_theorem(1, 3, trials=3, seed=1).passed


def test_theorem_cap():
    with pytest.raises(SizeCapExceeded):
        verify_theorem(2, 4, trials=1, seed=0)


def test_theorem_usage_error():
    with pytest.raises(ValueError):
        verify_theorem(2, 2, trials=0, seed=0)


def test_omega_suite_all_weights():
    report = verify_omega(2, 2, seed=0)
    assert report.passed
    assert report.case_count == 5  # partitions of 4


def test_omega_suite_specific_case():
    g = Perm.from_cycles(4, [(2, 3)])
    report = verify_omega(2, 2, mu=(2, 2), g=g, seed=0)
    assert report.passed
    assert report.case_count == 1


def test_omega_suite_kostka_cross_check_at_six():
    report = verify_omega(2, 3, mu=(3, 2, 1), seed=0)
    assert report.passed


def test_chi_suite_exhaustive():
    report = verify_chi(2, 2, seed=0)
    assert report.passed
    assert report.case_count == 24


def test_chi_suite_sampled():
    report = verify_chi(2, 3, samples=25, seed=9)
    assert report.passed
    assert report.case_count == 25


def test_chi_exhaustive_cap():
    with pytest.raises(SizeCapExceeded):
        verify_chi(2, 4, seed=0)


def test_stanley_suite():
    for k, n, m in [(2, 2, 1), (2, 2, 3), (3, 2, 4)]:
        report = verify_stanley(k, n, m, seed=0)
        assert report.passed
        assert report.case_count == [1, 6, 24][[(2, 2, 1), (2, 2, 3), (3, 2, 4)].index((k, n, m))]


def test_stanley_m_one_value():
    # single case: both sides equal kn
    report = verify_stanley(3, 2, 1, seed=0)
    assert report.passed


def test_zsf_suite_exhaustive():
    report = verify_zsf(2, 2, seed=0)
    assert report.passed
    assert report.case_count == 24


def test_zsf_suite_sampled_at_six():
    report = verify_zsf(2, 3, samples=40, seed=2)
    assert report.passed
    assert report.case_count == 40


def test_weak_alt_suite():
    report = verify_weak_alternating(5, 2, trials=5, seed=4)
    assert report.passed
    assert report.case_count == 10  # duplicate-column and divisibility parts


def test_weak_alt_k1():
    assert verify_weak_alternating(4, 1, trials=3, seed=2).passed


def test_weak_alt_full_size_subgroup_runs_divisibility_only():
    report = verify_weak_alternating(4, 4, trials=3, seed=6)
    assert report.passed
    assert [c.id.split(";")[0] for c in report.cases] == ["div"] * 3


def test_fourier_suite():
    report = verify_fourier_jm(5, seed=0)
    assert report.passed
    assert [c.id for c in report.cases] == ["expansion", "jucys-murphy"]
    report7 = verify_fourier_jm(7, seed=0)
    assert report7.passed
    assert [c.id for c in report7.cases] == ["expansion"]


def test_reports_reproducible_across_runs():
    a = verify_theorem(2, 2, trials=3, seed=11)
    b = verify_theorem(2, 2, trials=3, seed=11)
    assert _stripped(a) == _stripped(b)
    c = verify_theorem(2, 2, trials=3, seed=12)
    assert _stripped(a) != _stripped(c)


def test_reports_identical_for_any_worker_count():
    serial = verify_zsf(2, 2, seed=3, workers=1)
    for workers in (2, 8):
        parallel = verify_zsf(2, 2, seed=3, workers=workers)
        assert _stripped(serial) == _stripped(parallel)


def test_sampled_suites_respect_seed():
    a = verify_chi(2, 3, samples=10, seed=5)
    b = verify_chi(2, 3, samples=10, seed=5)
    c = verify_chi(2, 3, samples=10, seed=6)
    assert _stripped(a) == _stripped(b)
    assert _stripped(a) != _stripped(c)


def test_report_json_schema():
    report = verify_theorem(2, 2, trials=2, seed=1)
    data = json.loads(report.to_json())
    assert set(data) == {
        "suite",
        "params",
        "seed",
        "case_count",
        "cases",
        "status",
        "wall_time_s",
    }
    assert data["suite"] == "theorem"
    assert data["status"] == "pass"
    for case in data["cases"]:
        assert set(case) <= {"id", "status", "witness"}
