from fractions import Fraction as F
from math import gcd

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from threegap.errors import CollisionError, DomainError
from threegap.numtheory import cf_from_rational
from threegap.oracle import circular_gaps, kronecker_points, verify

GOLDEN_Z = F(55, 89)
GOLDEN_CF = cf_from_rational(GOLDEN_Z)


def test_points_fixtures():
    assert kronecker_points(GOLDEN_Z, 5) == [F(k, 89) for k in (0, 21, 42, 55, 76)]
    assert kronecker_points(GOLDEN_Z, 6) == [F(k, 89) for k in (0, 8, 21, 42, 55, 76)]
    assert kronecker_points(F(1, 3), 1) == [F(0)]


def test_points_errors():
    with pytest.raises(CollisionError) as exc:
        kronecker_points(GOLDEN_Z, 90)
    assert exc.value.n == 90
    with pytest.raises(DomainError):
        kronecker_points(GOLDEN_Z, 0)
    with pytest.raises(DomainError):
        kronecker_points(F(3, 2), 2)


def test_gaps_fixtures():
    ms = circular_gaps([F(0), F(1, 4), F(1, 2)])
    assert ms.entries == ((F(1, 4), 2), (F(1, 2), 1))
    ms = circular_gaps(kronecker_points(GOLDEN_Z, 5))
    assert ms.entries == ((F(13, 89), 2), (F(21, 89), 3))
    assert circular_gaps([F(0)]).entries == ((F(1), 1),)


def test_gaps_validation():
    with pytest.raises(DomainError):
        circular_gaps([])
    with pytest.raises(DomainError):
        circular_gaps([F(1, 2), F(1, 4)])
    with pytest.raises(DomainError):
        circular_gaps([F(1, 4), F(1, 4)])
    with pytest.raises(DomainError):
        circular_gaps([F(1, 4), F(5, 4)])


def test_multiset_self_consistency():
    for n in (1, 2, 5, 20, 89):
        ms = circular_gaps(kronecker_points(GOLDEN_Z, n))
        assert ms.total_length() == 1
        assert ms.point_count == n


@given(st.integers(3, 800), st.integers(1, 800), st.integers(2, 60))
@settings(max_examples=150)
def test_rotation_invariance(q, p_raw, n):
    p = p_raw % q
    if p == 0 or gcd(p, q) != 1:
        return
    z = F(p, q)
    n = min(n, q)
    pts = kronecker_points(z, n)
    base = circular_gaps(pts)
    shift = F(p_raw % (3 * q) + 1, 3 * q)
    shifted = sorted((x + shift) % 1 for x in pts)
    assert circular_gaps(shifted).entries == base.entries


@given(st.integers(3, 2000), st.integers(1, 2000), st.integers(1, 100))
@settings(max_examples=200)
def test_at_most_three_gap_lengths(q, p_raw, n):
    p = p_raw % q
    if p == 0 or gcd(p, q) != 1:
        return
    n = min(n, q)
    ms = circular_gaps(kronecker_points(F(p, q), n))
    assert len(ms.entries) <= 3
    if len(ms.entries) == 3:
        lengths = [l for l, _ in ms.entries]
        assert lengths[2] == lengths[0] + lengths[1]


def test_verify_golden_range():
    report = verify(GOLDEN_CF, GOLDEN_Z, 2, 30)
    assert report.checked == 29
    assert report.ok and report.mismatches == ()
    rec = report.to_record()
    assert rec == {"z": "55/89", "n_lo": 2, "n_hi": 30, "checked": 29, "mismatches": []}


def test_verify_fibonacci_below_half():
    z = F(21, 55)
    report = verify(cf_from_rational(z), z, 2, 20)
    assert report.checked == 19 and report.ok


def test_verify_collision():
    with pytest.raises(CollisionError) as exc:
        verify(GOLDEN_CF, GOLDEN_Z, 2, 90)
    assert exc.value.n == 90


def test_verify_bad_range():
    with pytest.raises(DomainError):
        verify(GOLDEN_CF, GOLDEN_Z, 1, 10)
    with pytest.raises(DomainError):
        verify(GOLDEN_CF, GOLDEN_Z, 10, 5)


def test_incremental_matches_full_recompute():
    # the incremental arc bookkeeping inside verify must agree with a full
    # sort-and-diff measurement at every point count
    from threegap.gaps import predict

    for z in (F(21, 55), F(123, 457), F(2, 7)):
        cf = cf_from_rational(z)
        report = verify(cf, z, 2, min(60, z.denominator))
        assert report.ok
        for n in range(2, min(60, z.denominator) + 1):
            assert (
                predict(cf, z, n).realized()
                == circular_gaps(kronecker_points(z, n)).entries
            )
