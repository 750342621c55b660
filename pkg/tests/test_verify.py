import re

import pytest

from dwigner import verify

LINE = re.compile(r"^PROP (\w+\.\w+) N=(\d+) max_err=(\d\.\d{3}e[+-]\d\d) (PASS|FAIL)$")


@pytest.fixture(scope="module")
def full_report():
    return verify.run("all", 8, 42)


def test_all_pass(full_report):
    failed = [r.line() for r in full_report if not r.passed]
    assert failed == []


def test_report_format(full_report):
    for line in verify.format_report(full_report).splitlines():
        assert LINE.match(line), line


def test_every_property_reported(full_report):
    assert {r.name for r in full_report} == set(verify.property_names())


def test_property_groups():
    names = verify.property_names()
    assert len(names) == len(set(names))
    for suite in verify.SUITES:
        assert verify.property_names(suite)
        assert all(n.startswith(suite + ".") for n in verify.property_names(suite))


def test_results_independent_of_suite_selection(full_report):
    lines_only = verify.run("lines", 8, 42)
    assert lines_only == [r for r in full_report if r.name.startswith("lines.")]


def test_seed_changes_samples_not_outcome():
    a = verify.run("wigner", 4, 1, samples=5)
    b = verify.run("wigner", 4, 2, samples=5)
    assert [r.name for r in a] == [r.name for r in b]
    assert all(r.passed for r in a + b)
    assert any(x.max_err != y.max_err for x, y in zip(a, b))


def test_dim_max_bounds_dimensions():
    results = verify.run("dynamics", 3, 0, samples=2)
    assert max(r.N for r in results) == 3
    assert "dynamics.sigma_z_nonlocal" not in {r.name for r in results}


@pytest.mark.parametrize("kwargs", [dict(suite="optics"), dict(samples=0)])
def test_bad_arguments(kwargs):
    with pytest.raises(ValueError):
        verify.run(**kwargs)
