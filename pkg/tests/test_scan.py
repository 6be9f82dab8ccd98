import pytest

from algebra.fields import get_field
from casas.exceptions import DegreeOutOfRangeError, InvalidFilterError
from casas.scan import DegreeScan, check_tuple, scan_bad_primes, verify_degree


def test_check_tuple():
    verdict = check_tuple((3, "q", (3, 3)))
    assert verdict.regular
    assert verdict.indices == [3, 3]
    assert verdict.quotient_dimension == 2


def test_scan_is_lazy_and_cloned():
    scan = DegreeScan(4)
    narrowed = scan.filter(j1=1, j2__in=(1, 2))
    assert scan.count() == 64
    assert narrowed.count() == 8
    assert all(indices[0] == 1 and indices[1] in (1, 2) for indices in narrowed.tuples())


@pytest.mark.parametrize("filters,count", [
    ({"j1": 2}, 3),
    ({"j1__ne": 2}, 6),
    ({"j2__between": (2, 3)}, 6),
    ({"j1__gt": 1, "j2__le": 1}, 2),
    ({"j1__notin": (1, 2)}, 3),
])
def test_filter_lookups(filters, count):
    assert DegreeScan(3).filter(**filters).count() == count


@pytest.mark.parametrize("key", ["k1", "j3", "j0", "j1__like", "j"])
def test_invalid_filter(key):
    with pytest.raises(InvalidFilterError):
        DegreeScan(3).filter(**{key: 1})


def test_slicing():
    scan = DegreeScan(3)
    assert list(scan[2:4].tuples()) == [(1, 3), (2, 1)]
    assert list(scan[4].tuples()) == [(2, 2)]
    with pytest.raises(TypeError):
        scan[:2].filter(j1=1)
    with pytest.raises(ValueError):
        scan[::2]


def test_degree_out_of_range():
    with pytest.raises(DegreeOutOfRangeError):
        DegreeScan(2)


def test_run_over_q():
    report = DegreeScan(3).run()
    assert report.passed
    assert len(report.verdicts) == 9
    assert all(verdict.quotient_dimension == 2 for verdict in report.verdicts)


def test_first_failure_is_least():
    scan = DegreeScan(3).over(get_field("f2"))
    failures = scan.run().failures()
    assert failures
    assert scan.first_failure().indices == failures[0].indices
    assert scan.exists_failure()


def test_verify_degree_3():
    report = verify_degree(3)
    assert report.passed
    assert [check.name for check in report.checks] == ["regularity", "quotient_dimension"]


def test_verify_degree_fails_over_f2():
    report = verify_degree(3, get_field("f2"))
    assert not report.passed
    witness = report.first_witness()
    assert witness.indices == DegreeScan(3).over(get_field("f2")).first_failure().indices
    assert witness.conjecture_degree == 3


@pytest.mark.slow
@pytest.mark.parametrize("d,tuples", [(4, 64), (5, 625)])
def test_verify_degree_over_q(d, tuples):
    report = verify_degree(d, workers=2)
    assert report.passed
    assert str(tuples) in report.checks[0].detail


@pytest.mark.slow
def test_run_does_not_depend_on_workers():
    scan = DegreeScan(4).over(get_field("f3"))
    assert scan.workers(1).run() == scan.workers(3).run()


def test_scan_bad_primes_degree_3():
    report = scan_bad_primes(3, 10)
    assert report.bad_primes == [2]
    assert report.primes_scanned == [2, 3, 5, 7]
    assert report.unresolved == []
    assert report.passed
    failure = report.failing[0]
    assert failure.reverified
    assert failure.counterexample == "x1^3 + x1^2"


def test_scan_bad_primes_skips_large_search_spaces():
    report = scan_bad_primes(3, 3, brute_force_limit=4)
    assert report.primes_scanned == [2, 3]
    assert report.bad_primes == [2]
    assert report.unresolved == [2]
    assert report.failing[0].counterexample is None
