"""Exact continued-fraction arithmetic: expansions, convergents, digit systems.

Everything works on ``fractions.Fraction`` values and arbitrary-precision
integers; no floats enter at any point.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from functools import lru_cache

from .errors import (
    DepthError,
    DomainError,
    InsufficientDepth,
    RepresentationError,
)

Rational = Fraction

HALF = Fraction(1, 2)


def as_unit_rational(z) -> Fraction:
    """Coerce to an exact rational strictly inside (0, 1)."""
    if isinstance(z, float):
        raise DomainError("floats are not exact; pass a Fraction or a 'p/q' string")
    z = Fraction(z)
    if not 0 < z < 1:
        raise DomainError(f"value must lie strictly inside (0, 1), got {z}")
    return z


class CFKind(Enum):
    """Whether a stored expansion is complete or a truncation of an irrational."""

    EXACT_RATIONAL = "exact-rational"
    IRRATIONAL_PREFIX = "irrational-prefix"


@dataclass(frozen=True)
class ContinuedFraction:
    """Expansion ``a0 + 1/(a1 + 1/(a2 + ...))`` restricted to values in (0, 1).

    ``partials`` stores ``a1, a2, ...``; ``a0`` is carried for completeness
    but is always 0 here.  Complete rational expansions are kept canonical:
    the final coefficient is at least 2, which makes them unique and lets
    equality of expansions stand in for equality of values.
    """

    partials: tuple[int, ...]
    kind: CFKind
    a0: int = 0

    def __post_init__(self):
        if self.a0 != 0:
            raise DomainError(f"a0 must be 0 for values in (0, 1), got {self.a0}")
        if not self.partials:
            raise DomainError("an expansion needs at least one partial quotient")
        if any(a < 1 for a in self.partials):
            raise DomainError("partial quotients must be positive integers")
        if self.kind is CFKind.EXACT_RATIONAL and self.partials[-1] < 2:
            raise DomainError("canonical rational expansions end with a coefficient >= 2")

    @property
    def depth(self) -> int:
        return len(self.partials)

    def partial(self, i: int) -> int:
        """Coefficient a_i, defined for 1 <= i <= depth."""
        if not 1 <= i <= self.depth:
            raise DepthError(f"a_{i} is not available at depth {self.depth}")
        return self.partials[i - 1]

    def value(self) -> Fraction:
        """Exact value of the stored prefix, i.e. its final convergent."""
        table = convergents(self, self.depth)
        return table.convergent(self.depth)


def cf_from_rational(z) -> ContinuedFraction:
    """Expand a rational in (0, 1) by the Euclidean algorithm.

    The quotient sequence of gcd(denominator, numerator) is exactly the
    partial-quotient sequence, and for z strictly between 0 and 1 it always
    terminates with a coefficient >= 2, so the result is canonical.
    """
    z = as_unit_rational(z)
    partials = []
    n, d = z.denominator, z.numerator
    while d:
        a, r = divmod(n, d)
        partials.append(a)
        n, d = d, r
    return ContinuedFraction(tuple(partials), CFKind.EXACT_RATIONAL)


@dataclass(frozen=True)
class ConvergentTable:
    """Convergent numerators and denominators p_i, q_i for i = -2 .. depth.

    Seed rows are p_{-2} = 0, p_{-1} = 1, q_{-2} = 1, q_{-1} = 0; the rest
    follow p_i = a_i p_{i-1} + p_{i-2} and q_i = a_i q_{i-1} + q_{i-2}.
    """

    partials: tuple[int, ...]
    ps: tuple[int, ...]
    qs: tuple[int, ...]

    @property
    def depth(self) -> int:
        return len(self.ps) - 3

    def p(self, i: int) -> int:
        return self.ps[i + 2]

    def q(self, i: int) -> int:
        return self.qs[i + 2]

    def convergent(self, i: int) -> Fraction:
        return Fraction(self.p(i), self.q(i))

    def rows(self) -> list[tuple[int, int, int]]:
        return [(i, self.p(i), self.q(i)) for i in range(-2, self.depth + 1)]


@lru_cache(maxsize=None)
def convergents(cf: ContinuedFraction, depth: int) -> ConvergentTable:
    """Recurrence table up to index ``depth`` (``depth <= cf.depth``)."""
    if depth < 0:
        raise DepthError(f"depth must be >= 0, got {depth}")
    if depth > cf.depth:
        raise DepthError(f"depth {depth} exceeds the {cf.depth} available partials")
    coeffs = (cf.a0,) + cf.partials
    ps = [0, 1]
    qs = [1, 0]
    for i in range(depth + 1):
        ps.append(coeffs[i] * ps[-1] + ps[-2])
        qs.append(coeffs[i] * qs[-1] + qs[-2])
    return ConvergentTable(cf.partials[:depth], tuple(ps), tuple(qs))


@dataclass(frozen=True)
class OstrowskiRep:
    """Digits b_0 .. b_m of n over the convergent denominators q_0 .. q_m.

    The window q_m + 1 <= n < q_{m+1} + q_m with minimal m pins the top
    index; the digits then satisfy sum(b_j q_j) = n, 0 <= b_j <= a_{j+1}
    and b_m >= 1.
    """

    n: int
    m: int
    digits: tuple[int, ...]

    @property
    def b_m(self) -> int:
        return self.digits[-1]


def ostrowski(n: int, cf: ContinuedFraction) -> OstrowskiRep:
    """Digit expansion of ``n >= 2`` driving the gap-structure formulas.

    The minimal window index makes n >= q_m + q_{m-1}, so the top digit is
    (n - q_{m-1}) // q_m (between 1 and a_{m+1}); lower digits follow by
    greedy descent capped at a_{j+1}, which lands exactly on remainder 0.
    """
    if n < 2:
        raise DomainError(f"digit expansion is defined for n >= 2, got {n}")
    table = convergents(cf, cf.depth)
    m = None
    for i in range(cf.depth):
        if n < table.q(i + 1) + table.q(i):
            m = i
            break
    if m is None:
        raise InsufficientDepth(
            f"no window for n={n} within depth {cf.depth}; "
            f"need q_{{m+1}} + q_m > {n}"
        )
    digits = [0] * (m + 1)
    digits[m] = (n - table.q(m - 1)) // table.q(m)
    rem = n - digits[m] * table.q(m)
    for j in range(m - 1, -1, -1):
        digits[j] = min(rem // table.q(j), cf.partial(j + 1))
        rem -= digits[j] * table.q(j)
    rep = OstrowskiRep(n=n, m=m, digits=tuple(digits))
    if rem != 0:
        raise RepresentationError(f"digit descent left remainder {rem} for n={n}")
    if rep.b_m < 1:
        raise RepresentationError(f"top digit vanished for n={n}, m={m}")
    for j, b in enumerate(rep.digits):
        if not 0 <= b <= cf.partial(j + 1):
            raise RepresentationError(
                f"digit b_{j}={b} violates bound a_{j + 1}={cf.partial(j + 1)}"
            )
    return rep


def format_rational(x: Fraction) -> str:
    """Render as "p/q", always including the denominator."""
    return f"{x.numerator}/{x.denominator}"


def parse_rational(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise DomainError(f"cannot parse a rational from {text!r}") from exc


def format_cf(cf: ContinuedFraction) -> str:
    """Render as "a0;a1,a2,...", e.g. "0;1,1,2"."""
    return format_partials(cf.a0, cf.partials)


def format_partials(a0: int, partials) -> str:
    return f"{a0};" + ",".join(str(a) for a in partials)


def parse_cf_text(text: str) -> tuple[int, tuple[int, ...]]:
    """Split "a0;a1,a2,..." into (a0, partials)."""
    head, sep, tail = text.partition(";")
    if not sep or not tail:
        raise DomainError(f"expected 'a0;a1,a2,...', got {text!r}")
    try:
        a0 = int(head)
        partials = tuple(int(part) for part in tail.split(","))
    except ValueError as exc:
        raise DomainError(f"expected integers in {text!r}") from exc
    return a0, partials
