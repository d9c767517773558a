"""Brute-force ground truth: place the points, measure the arcs, compare.

Nothing in here looks at digit expansions or approximation distances; the
point set is generated by modular arithmetic and the arcs are measured
directly, which is what makes ``verify`` a meaningful check of the
closed-form route.
"""

from __future__ import annotations

from bisect import bisect_left
from dataclasses import dataclass
from fractions import Fraction

from .errors import CollisionError, DomainError, RepresentationError
from .gaps import predict
from .numtheory import ContinuedFraction, as_unit_rational, format_rational


@dataclass(frozen=True)
class GapMultiset:
    """Distinct arc lengths with multiplicities, sorted by length."""

    entries: tuple[tuple[Fraction, int], ...]

    @property
    def point_count(self) -> int:
        return sum(count for _, count in self.entries)

    def total_length(self) -> Fraction:
        return sum((length * count for length, count in self.entries), Fraction(0))

    def as_strings(self) -> dict[str, int]:
        return {format_rational(length): count for length, count in self.entries}


def kronecker_points(z, n: int) -> list[Fraction]:
    """Sorted fractional parts of 0, z, 2z, ..., (n-1)z, all distinct."""
    z = as_unit_rational(z)
    if n < 1:
        raise DomainError(f"need n >= 1, got {n}")
    den, num = z.denominator, z.numerator
    if n > den:
        raise CollisionError(
            f"orbit of step {format_rational(z)} revisits a point at n={den + 1}",
            n=den + 1,
        )
    # k*num mod den is injective for k < den because gcd(num, den) = 1
    residues = sorted((k * num) % den for k in range(n))
    return [Fraction(r, den) for r in residues]


def circular_gaps(points) -> GapMultiset:
    """Arc-length multiset of a sorted list of distinct points in [0, 1).

    Successive differences plus the wrap-around arc from the last point back
    to the first; a single point yields the whole circle.
    """
    pts = list(points)
    if not pts:
        raise DomainError("at least one point is required")
    if any(not 0 <= x < 1 for x in pts):
        raise DomainError("points must lie in [0, 1)")
    if any(b <= a for a, b in zip(pts, pts[1:])):
        raise DomainError("points must be sorted and distinct")
    counts: dict[Fraction, int] = {}
    for a, b in zip(pts, pts[1:]):
        gap = b - a
        counts[gap] = counts.get(gap, 0) + 1
    wrap = 1 - pts[-1] + pts[0]
    counts[wrap] = counts.get(wrap, 0) + 1
    return GapMultiset(tuple(sorted(counts.items())))


@dataclass(frozen=True)
class VerificationReport:
    """Outcome of comparing predicted and measured gap multisets over a range."""

    z: Fraction
    n_lo: int
    n_hi: int
    checked: int
    mismatches: tuple[dict, ...]

    @property
    def ok(self) -> bool:
        return not self.mismatches

    def to_record(self) -> dict:
        return {
            "z": format_rational(self.z),
            "n_lo": self.n_lo,
            "n_hi": self.n_hi,
            "checked": self.checked,
            "mismatches": list(self.mismatches),
        }


def verify(cf: ContinuedFraction, z, n_lo: int, n_hi: int) -> VerificationReport:
    """Compare predicted against measured gap multisets for every n in range.

    The measurement is maintained incrementally: each new point splits
    exactly one arc in two, so the arc multiset updates in O(log n) per
    point while staying bit-identical to
    ``circular_gaps(kronecker_points(z, n))`` (the test suite pins that
    equivalence).  All comparisons are exact; there is no tolerance.
    """
    z = as_unit_rational(z)
    if n_lo < 2 or n_hi < n_lo:
        raise DomainError(f"need 2 <= n_lo <= n_hi, got [{n_lo}, {n_hi}]")
    den, num = z.denominator, z.numerator
    if n_hi > den:
        raise CollisionError(
            f"points collide from n={den + 1} on; n_hi={n_hi} is out of range",
            n=den + 1,
        )

    residues = [0]
    gap_counts: dict[int, int] = {den: 1}

    def insert(r: int) -> None:
        pos = bisect_left(residues, r)
        prev = residues[pos - 1] if pos else residues[-1]
        nxt = residues[pos] if pos < len(residues) else residues[0]
        old = (nxt - prev) % den or den
        gap_counts[old] -= 1
        if not gap_counts[old]:
            del gap_counts[old]
        for new in ((r - prev) % den, (nxt - r) % den):
            gap_counts[new] = gap_counts.get(new, 0) + 1
        residues.insert(pos, r)

    mismatches: list[dict] = []
    checked = 0
    for n in range(2, n_hi + 1):
        insert((n - 1) * num % den)
        if n < n_lo:
            continue
        predicted: dict[int, int] = {}
        for length, count in predict(cf, z, n).realized():
            scaled = length * den
            if scaled.denominator != 1:
                raise RepresentationError(
                    f"predicted length {length} is not a multiple of 1/{den}"
                )
            predicted[scaled.numerator] = predicted.get(scaled.numerator, 0) + count
        checked += 1
        if predicted != gap_counts:
            mismatches.append(
                {
                    "n": n,
                    "predicted": _as_strings(predicted, den),
                    "observed": _as_strings(gap_counts, den),
                }
            )
    return VerificationReport(
        z=z, n_lo=n_lo, n_hi=n_hi, checked=checked, mismatches=tuple(mismatches)
    )


def _as_strings(scaled_counts: dict[int, int], den: int) -> dict[str, int]:
    return {
        format_rational(Fraction(k, den)): scaled_counts[k]
        for k in sorted(scaled_counts)
    }
