"""Two-interval exchange transformations and their renormalization.

Exchanging A = [0, 1-z) and B = [1-z, 1) realizes the rotation
x -> x + z mod 1, so rotation combinatorics can be driven by the induction
operators here: the elementary step removes the shorter of the two rightmost
subintervals and passes to the first-return map, and the accelerated step
batches elementary steps of constant type.  For rational lengths the
induction must eventually reach two equal subintervals; that is reported as
KeaneViolation, a first-class outcome rather than a crash.
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from fractions import Fraction

from .errors import DomainError, InsufficientDepth, KeaneViolation, TilingError
from .numtheory import (
    HALF,
    as_unit_rational,
    cf_from_rational,
    convergents,
    format_rational,
)


@dataclass(frozen=True)
class IntervalExchange:
    """Exchange of two labelled subintervals of [0, total).

    ``pi0`` gives each label's position (1 or 2) before the map, ``pi1``
    after; ``lengths`` aligns with ``labels``.  Values are immutable and
    every operation returns a new instance.
    """

    lengths: tuple[Fraction, Fraction]
    labels: tuple[str, str] = ("A", "B")
    pi0: tuple[int, int] = (1, 2)
    pi1: tuple[int, int] = (2, 1)

    def __post_init__(self):
        if len(self.labels) != 2 or len(set(self.labels)) != 2:
            raise DomainError("exactly two distinct labels are supported")
        for pi in (self.pi0, self.pi1):
            if sorted(pi) != [1, 2]:
                raise DomainError("each ordering must be a bijection onto {1, 2}")
        if self.pi0 == self.pi1:
            raise DomainError("orderings must differ, else the map is the identity")
        if len(self.lengths) != 2 or any(l <= 0 for l in self.lengths):
            raise DomainError("both lengths must be positive")

    @property
    def total(self) -> Fraction:
        return self.lengths[0] + self.lengths[1]

    def index(self, label: str) -> int:
        return self.labels.index(label)

    def length(self, label: str) -> Fraction:
        return self.lengths[self.index(label)]

    def label_at(self, pi: tuple[int, int], pos: int) -> str:
        return self.labels[pi.index(pos)]

    def _left(self, pi: tuple[int, int], label: str) -> Fraction:
        i = self.index(label)
        return self.lengths[1 - i] if pi[i] == 2 else Fraction(0)


@dataclass(frozen=True)
class RauzyStep:
    """One induction event: type, winner/loser and both states.

    ``after.total == before.total - before.length(loser)`` and only the
    winner's length changes.  ``a_count`` is set by the accelerated step.
    """

    eps: int
    winner: str
    loser: str
    before: IntervalExchange
    after: IntervalExchange
    a_count: int | None = None


@dataclass(frozen=True)
class ZorichRun:
    """Acceleration counts with the reason the run stopped."""

    quotients: tuple[int, ...]
    stopped: str  # "depth" | "keane"
    final: IntervalExchange


@dataclass(frozen=True)
class PartitionReport:
    """Exact first-return tiling of [0, 1) after m acceleration blocks."""

    z: Fraction
    m: int
    long_length: Fraction
    short_length: Fraction
    long_count: int
    short_count: int
    left_endpoints: tuple[Fraction, ...]

    @property
    def n_points(self) -> int:
        return self.long_count + self.short_count


def make_rotation(z) -> IntervalExchange:
    """The two-interval exchange realizing x -> x + z mod 1 on [0, 1)."""
    z = as_unit_rational(z)
    return IntervalExchange(lengths=(1 - z, z))


def apply(f: IntervalExchange, x: Fraction) -> Fraction:
    """Image of x: each subinterval is translated to its image position."""
    if not 0 <= x < f.total:
        raise DomainError(f"{x} lies outside [0, {f.total})")
    first = f.label_at(f.pi0, 1)
    label = first if x < f.length(first) else f.label_at(f.pi0, 2)
    return x - f._left(f.pi0, label) + f._left(f.pi1, label)


def iet_type(f: IntervalExchange) -> int:
    """0 if the domain-rightmost subinterval is strictly longer than the
    image-rightmost one, 1 in the opposite case.

    Equality leaves the induction undefined and raises KeaneViolation; with
    rational lengths this is guaranteed to happen at some finite depth.
    """
    lu = f.length(f.label_at(f.pi0, 2))
    lv = f.length(f.label_at(f.pi1, 2))
    if lu == lv:
        raise KeaneViolation(
            f"rightmost subintervals share length {format_rational(lu)}", state=f
        )
    return 0 if lu > lv else 1


def _winner_loser(f: IntervalExchange, eps: int) -> tuple[str, str]:
    pis = (f.pi0, f.pi1)
    return f.label_at(pis[eps], 2), f.label_at(pis[1 - eps], 2)


def rauzy_step(f: IntervalExchange) -> RauzyStep:
    """One elementary induction step: the first-return map to the interval
    obtained by removing the loser.

    With two intervals the orderings never change; the winner simply sheds
    the loser's length.
    """
    eps = iet_type(f)
    winner, loser = _winner_loser(f, eps)
    wi = f.index(winner)
    new_lengths = list(f.lengths)
    new_lengths[wi] -= f.length(loser)
    after = replace(f, lengths=tuple(new_lengths))
    return RauzyStep(eps=eps, winner=winner, loser=loser, before=f, after=after)


def zorich_step(f: IntervalExchange) -> RauzyStep:
    """Accelerated induction: elementary steps repeated until the type flips.

    ``a_count`` is the number of elementary steps, i.e. floor(winner/loser)
    of the starting lengths when that ratio is not exact.  An exact ratio
    runs into equal lengths first and raises KeaneViolation carrying the
    equal-length state and the number of completed steps.
    """
    eps = iet_type(f)
    winner, loser = _winner_loser(f, eps)
    count = 0
    cur = f
    while True:
        step = rauzy_step(cur)
        cur = step.after
        count += 1
        try:
            nxt = iet_type(cur)
        except KeaneViolation:
            raise KeaneViolation(
                f"equal lengths after {count} steps of a type-{eps} block",
                state=cur,
                completed_steps=count,
            ) from None
        if nxt != eps:
            return RauzyStep(
                eps=eps, winner=winner, loser=loser, before=f, after=cur, a_count=count
            )


def zorich_quotients(f: IntervalExchange, max_blocks: int) -> ZorichRun:
    """Successive acceleration counts, stopping at ``max_blocks`` or at the
    equal-length state.

    A block cut short by equality still has a well-defined Euclidean
    quotient: the division is exact and the count is one more than the steps
    physically completed (the next step would shrink the winner to zero).
    """
    quotients: list[int] = []
    cur = f
    for _ in range(max_blocks):
        try:
            step = zorich_step(cur)
        except KeaneViolation as kv:
            if kv.completed_steps:
                quotients.append(kv.completed_steps + 1)
            return ZorichRun(tuple(quotients), "keane", kv.state)
        quotients.append(step.a_count)
        cur = step.after
    return ZorichRun(tuple(quotients), "depth", cur)


def reconstruct_cf(quotients, z) -> tuple[int, ...]:
    """Partial quotients of z recovered from acceleration counts of its rotation.

    The first block of the rotation runs a_1 - 1 elementary steps when
    z < 1/2 and none at all when z > 1/2, so the counts map back to the
    expansion as [1 + a'_0, a'_1, ...] below one half and
    [1, a'_0, a'_1, ...] above.
    """
    z = as_unit_rational(z)
    if z == HALF:
        raise DomainError("reconstruction is undefined at z = 1/2")
    quotients = tuple(quotients)
    if not quotients:
        raise DomainError("no acceleration counts to reconstruct from")
    if z < HALF:
        return (1 + quotients[0],) + quotients[1:]
    return (1,) + quotients


def _scaled(x: Fraction, den: int) -> int:
    scaled = x * den
    if scaled.denominator != 1:
        raise TilingError(f"{x} is not a multiple of 1/{den}")
    return scaled.numerator


def verify_partition(z, m: int) -> PartitionReport:
    """Tile [0, 1) by first-return towers of the rotation by z and check it.

    After m acceleration blocks the rotation leaves one long and one short
    subinterval; translating the long one q_m times and the short one
    q_{m-1} times must tile the circle exactly, with left endpoints
    {k z mod 1 : k = 0 .. q_m + q_{m-1} - 1}.  TilingError (never expected)
    reports any overlap, gap or bookkeeping mismatch; InsufficientDepth
    fires when the expansion of z cannot support m blocks.
    """
    z = as_unit_rational(z)
    if m < 1:
        raise DomainError(f"partition index must be >= 1, got {m}")
    cf = cf_from_rational(z)
    if m > cf.depth - 1:
        raise InsufficientDepth(
            f"m={m} needs an expansion of depth {m + 1}; {format_rational(z)} has {cf.depth}"
        )
    table = convergents(cf, m)
    q_m, q_prev = table.q(m), table.q(m - 1)

    steps = cf.partial(1) - 1 + sum(cf.partial(i) for i in range(2, m + 1))
    f = make_rotation(z)
    heights = dict.fromkeys(f.labels, 1)
    for _ in range(steps):
        st = rauzy_step(f)
        heights[st.loser] += heights[st.winner]
        f = st.after

    eta_prev = abs(q_prev * z - table.p(m - 1))
    eta_m = abs(q_m * z - table.p(m))
    short_label, long_label = sorted(f.labels, key=f.length)
    if (f.length(long_label), f.length(short_label)) != (eta_prev, eta_m):
        raise TilingError("induction lengths disagree with convergent distances")
    if (heights[long_label], heights[short_label]) != (q_m, q_prev):
        raise TilingError("tower heights disagree with convergent denominators")

    # The second subinterval of the induced map sits at -h2 * z mod 1, where
    # h2 is its tower height, so translating everything h2 more times moves
    # the tower's endpoint window onto {k z : k = 0 .. q_m + q_{m-1} - 1}.
    den, num = z.denominator, z.numerator
    first = f.label_at(f.pi0, 1)
    second = f.label_at(f.pi0, 2)
    base = {first: 0, second: _scaled(f.length(first), den)}
    shift = heights[second]
    tiles: list[tuple[int, int]] = []
    for label in f.labels:
        length_num = _scaled(f.length(label), den)
        left = (base[label] + shift * num) % den
        for _ in range(heights[label]):
            if left + length_num > den:
                raise TilingError(f"tile at {Fraction(left, den)} straddles the wrap point")
            tiles.append((left, length_num))
            left = (left + num) % den

    tiles.sort()
    if tiles[0][0] != 0:
        raise TilingError("tiling does not start at 0")
    for (a, la), (b, _) in zip(tiles, tiles[1:]):
        if a + la != b:
            raise TilingError(f"gap or overlap at {Fraction(b, den)}")
    last_left, last_len = tiles[-1]
    if last_left + last_len != den:
        raise TilingError("tiling does not close up at 1")
    if [left for left, _ in tiles] != sorted((k * num) % den for k in range(q_m + q_prev)):
        raise TilingError("left endpoints are not the orbit points k*z")

    return PartitionReport(
        z=z,
        m=m,
        long_length=eta_prev,
        short_length=eta_m,
        long_count=q_m,
        short_count=q_prev,
        left_endpoints=tuple(Fraction(a, den) for a, _ in tiles),
    )
