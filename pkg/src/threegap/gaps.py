"""Closed-form three-distance structure of finite Kronecker point sets.

For a step z in (0, 1) and n >= 2, the circle points {k z mod 1 : k < n}
cut [0, 1) into arcs of at most three distinct lengths, the longest being
the sum of the other two.  This module computes the lengths and their
multiplicities straight from the continued-fraction data of z, without
placing a single point; the ``oracle`` module measures them the hard way.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from functools import lru_cache

from .errors import CollisionError, DepthError, DomainError, RepresentationError
from .numtheory import (
    HALF,
    CFKind,
    ContinuedFraction,
    ConvergentTable,
    as_unit_rational,
    convergents,
    format_rational,
    ostrowski,
)


class Side(Enum):
    BELOW_HALF = "below-half"
    ABOVE_HALF = "above-half"


def _step_value(z) -> Fraction:
    z = as_unit_rational(z)
    if z == HALF:
        raise DomainError("z = 1/2 sits on the branch split and is rejected")
    return z


@dataclass(frozen=True)
class KSequence:
    """Approximation distances K_j = |q_j z - p_j| for j = -1 .. depth.

    The seed row (p_{-1}, q_{-1}) = (1, 0) gives K_{-1} = 1, and K_0 = z.
    In fractional-part terms, K_j equals {q_j z} at even j and 1 - {q_j z}
    at odd j.  The values satisfy K_{j+1} = K_{j-1} - a_{j+1} K_j and
    decrease strictly, staying positive through the requested depth.
    """

    z: Fraction
    side: Side
    values: tuple[Fraction, ...]

    @property
    def depth(self) -> int:
        return len(self.values) - 2

    def k(self, j: int) -> Fraction:
        if not -1 <= j <= self.depth:
            raise DepthError(f"K_{j} is not available at depth {self.depth}")
        return self.values[j + 1]


@lru_cache(maxsize=None)
def k_sequence(z: Fraction, table: ConvergentTable, depth: int) -> KSequence:
    """Distances K_{-1} .. K_depth from the convergent table of z.

    Raises DepthError when a distance vanishes (z equals a convergent, so
    the table is exhausted one row earlier) and DomainError when the table
    cannot be the expansion of z.
    """
    z = _step_value(z)
    if depth > table.depth:
        raise DepthError(f"depth {depth} exceeds table depth {table.depth}")
    values = [Fraction(1)]
    for j in range(depth + 1):
        k = abs(table.q(j) * z - table.p(j))
        if k == 0:
            raise DepthError(
                f"K_{j} vanishes: z equals the index-{j} convergent; "
                f"use depth <= {j - 1}"
            )
        if k >= values[-1]:
            raise DomainError("table is not the expansion of z: distances must shrink")
        values.append(k)
    side = Side.BELOW_HALF if z < HALF else Side.ABOVE_HALF
    return KSequence(z=z, side=side, values=tuple(values))


@dataclass(frozen=True)
class GapStructure:
    """Candidate gap lengths l1, l2, l3 = l1 + l2 and their counts for n points.

    Counts satisfy n1 + n2 + n3 = n, and the realized arcs cover the circle:
    n1*l1 + n2*l2 + n3*l3 = 1.  ``m`` and ``b_m`` record the digit window
    the values came from; n1 = 0 exactly at window starts n = b_m q_m + q_{m-1}.
    """

    n: int
    m: int
    b_m: int
    l1: Fraction
    l2: Fraction
    l3: Fraction
    n1: int
    n2: int
    n3: int

    def realized(self) -> tuple[tuple[Fraction, int], ...]:
        """(length, count) pairs sorted by length, zero counts dropped and
        equal lengths merged: the exact gap multiset the points realize."""
        acc: dict[Fraction, int] = {}
        for length, count in ((self.l1, self.n1), (self.l2, self.n2), (self.l3, self.n3)):
            if count:
                acc[length] = acc.get(length, 0) + count
        return tuple(sorted(acc.items()))

    def check(self) -> None:
        """Raise RepresentationError unless the structural identities hold."""
        if self.n1 + self.n2 + self.n3 != self.n:
            raise RepresentationError(f"counts do not sum to n={self.n}")
        if self.l3 != self.l1 + self.l2:
            raise RepresentationError("l3 != l1 + l2")
        if self.n1 * self.l1 + self.n2 * self.l2 + self.n3 * self.l3 != 1:
            raise RepresentationError("realized arcs do not cover the circle")
        if self.l2 <= 0 or self.l1 < 0 or (self.n1 > 0 and self.l1 == 0):
            raise RepresentationError("gap lengths must be positive where realized")
        if self.n1 < 0 or self.n2 < 1 or self.n3 < 1:
            raise RepresentationError("count ranges violated")

    def to_record(self) -> dict:
        return {
            "n": self.n,
            "m": self.m,
            "b_m": self.b_m,
            "l1": format_rational(self.l1),
            "l2": format_rational(self.l2),
            "l3": format_rational(self.l3),
            "n1": self.n1,
            "n2": self.n2,
            "n3": self.n3,
        }


def predict(cf: ContinuedFraction, z: Fraction, n: int) -> GapStructure:
    """Gap lengths and counts for the n points {k z mod 1 : k = 0 .. n-1}.

    ``cf`` must be the expansion of z: complete and canonical for rational z,
    a prefix of the true expansion when z stands in for an irrational.  With
    complete rational data the points stay distinct only while
    n <= denominator(z); beyond that a CollisionError is raised.
    """
    z = _step_value(z)
    if cf.kind is CFKind.EXACT_RATIONAL:
        if cf.value() != z:
            raise DomainError(
                f"cf expands {format_rational(cf.value())}, not {format_rational(z)}"
            )
        if n > z.denominator:
            raise CollisionError(
                f"points coincide for n={n} > denominator {z.denominator}", n=n
            )
    rep = ostrowski(n, cf)
    table = convergents(cf, rep.m)
    ks = k_sequence(z, table, rep.m)
    q_m = table.q(rep.m)
    q_prev = table.q(rep.m - 1)
    l2 = ks.k(rep.m)
    l1 = ks.k(rep.m - 1) - rep.b_m * l2
    n1 = n - rep.b_m * q_m - q_prev
    if not 0 <= n1 < q_m:
        raise RepresentationError(f"window count n1={n1} out of [0, {q_m}) for n={n}")
    return GapStructure(
        n=n,
        m=rep.m,
        b_m=rep.b_m,
        l1=l1,
        l2=l2,
        l3=l1 + l2,
        n1=n1,
        n2=n - q_m,
        n3=q_m - n1,
    )


def gap_evolution(cf: ContinuedFraction, z: Fraction, n_max: int) -> tuple[GapStructure, ...]:
    """Rows of ``predict`` for every n = 2 .. n_max.

    Inside a fixed digit window the counts move by (+1, +1, -1) per step of
    n, with n1 falling back to 0 at each window boundary.
    """
    if n_max < 2:
        raise DomainError(f"n_max must be >= 2, got {n_max}")
    return tuple(predict(cf, z, n) for n in range(2, n_max + 1))
