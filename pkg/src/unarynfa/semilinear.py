"""Arithmetic progressions, finite unions of them, and eventually periodic sets.

``EventuallyPeriodicSet`` is the canonical comparison form: two unary
languages are equal iff their canonical forms are structurally equal.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import reduce
from math import gcd, lcm

LCM_CEILING = 10**9


class ProgressionParseError(ValueError):
    def __init__(self, message, line=None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class PeriodTooLarge(ValueError):
    """The common period of a progression set exceeds the configured ceiling."""


@dataclass(frozen=True, order=True)
class ArithmeticProgression:
    """``{offset + period*k : k >= 0}``; period 0 is the singleton ``{offset}``."""

    offset: int
    period: int = 0

    def __post_init__(self):
        if self.offset < 0 or self.period < 0:
            raise ValueError(f"negative offset or period: {self.offset}+{self.period}N")

    def __contains__(self, x):
        if x < self.offset:
            return False
        if self.period == 0:
            return x == self.offset
        return (x - self.offset) % self.period == 0

    def covers(self, other: "ArithmeticProgression") -> bool:
        """True if ``other`` denotes a subset of this progression."""
        if other.offset not in self:
            return False
        return other.period == 0 or (self.period and other.period % self.period == 0)

    def __str__(self):
        if self.period == 0:
            return str(self.offset)
        return f"{self.offset}+{self.period}N"


@dataclass(frozen=True)
class ProgressionSet:
    progressions: frozenset = frozenset()

    def __post_init__(self):
        object.__setattr__(
            self,
            "progressions",
            frozenset(
                p if isinstance(p, ArithmeticProgression) else ArithmeticProgression(*p)
                for p in self.progressions
            ),
        )

    @classmethod
    def of(cls, *pairs):
        return cls(frozenset(ArithmeticProgression(a, b) for a, b in pairs))

    def __contains__(self, x):
        return any(x in p for p in self.progressions)

    def __iter__(self):
        return iter(sorted(self.progressions))

    def __len__(self):
        return len(self.progressions)

    def pruned(self) -> "ProgressionSet":
        """Drop progressions contained in another member; the denoted set is unchanged."""
        items = sorted(self.progressions)
        keep = [
            p for p in items
            if not any(q != p and q.covers(p) for q in items)
        ]
        return ProgressionSet(frozenset(keep))


def ps_member(ps: ProgressionSet, x: int) -> bool:
    return x >= 0 and x in ps


def parse_progressions(text: str) -> ProgressionSet:
    items = set()
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        head, plus, tail = line.partition("+")
        if plus:
            if not tail.endswith("N") or not head.isdigit() or not tail[:-1].isdigit():
                raise ProgressionParseError(f"expected '<a>+<b>N', got {line!r}", lineno)
            period = int(tail[:-1])
            if period < 1:
                raise ProgressionParseError("period must be at least 1", lineno)
            items.add(ArithmeticProgression(int(head), period))
        else:
            if not line.isdigit():
                raise ProgressionParseError(f"expected an offset, got {line!r}", lineno)
            items.add(ArithmeticProgression(int(line), 0))
    return ProgressionSet(frozenset(items))


def serialize_progressions(ps: ProgressionSet) -> str:
    return "".join(f"{p}\n" for p in ps)


# --- eventually periodic sets ------------------------------------------------

def _divisors(n):
    small, large = [], []
    d = 1
    while d * d <= n:
        if n % d == 0:
            small.append(d)
            if d * d != n:
                large.append(n // d)
        d += 1
    return small + large[::-1]


@dataclass(frozen=True)
class EventuallyPeriodicSet:
    """``sporadic ∪ {x >= threshold : x mod period in residues}``."""

    threshold: int = 0
    period: int = 1
    sporadic: frozenset = frozenset()
    residues: frozenset = frozenset()

    def __post_init__(self):
        if self.period < 1:
            raise ValueError("period must be positive")
        object.__setattr__(self, "sporadic", frozenset(self.sporadic))
        object.__setattr__(self, "residues", frozenset(r % self.period for r in self.residues))
        if any(x < 0 or x >= self.threshold for x in self.sporadic):
            raise ValueError("sporadic members must lie below the threshold")

    def __contains__(self, x):
        if x < 0:
            return False
        if x < self.threshold:
            return x in self.sporadic
        return x % self.period in self.residues

    def flags(self, upto):
        """Membership flags for ``0..upto`` as a bytearray."""
        return bytearray(1 if x in self else 0 for x in range(upto + 1))

    @classmethod
    def from_flags(cls, flags, threshold, period):
        """Build from membership of ``0 .. threshold+period-1``, periodic with ``period`` from ``threshold``."""
        if len(flags) < threshold + period:
            raise ValueError("flags must cover threshold + period values")
        sporadic = frozenset(x for x in range(threshold) if flags[x])
        residues = frozenset(
            x % period for x in range(threshold, threshold + period) if flags[x]
        )
        return cls(threshold, period, sporadic, residues)

    def canonical(self) -> "EventuallyPeriodicSet":
        """Minimal period first, then minimal threshold for that period."""
        T, P = self.threshold, self.period
        flags = self.flags(T + P - 1)

        def at(x):
            return flags[x] if x < T + P else flags[T + (x - T) % P]

        period = next(
            d for d in _divisors(P)
            if all(at(x) == at(x + d) for x in range(T, T + P))
        )
        threshold = T
        while threshold > 0 and at(threshold - 1) == at(threshold - 1 + period):
            threshold -= 1
        window = bytearray(at(x) for x in range(threshold + period))
        return EventuallyPeriodicSet.from_flags(window, threshold, period)

    def is_canonical(self):
        return self == self.canonical()

    def __str__(self):
        spor = ",".join(str(x) for x in sorted(self.sporadic))
        res = ",".join(str(r) for r in sorted(self.residues))
        return f"threshold={self.threshold} period={self.period} sporadic={{{spor}}} residues={{{res}}}"


def eps_member(eps: EventuallyPeriodicSet, x: int) -> bool:
    return x in eps


def eps_equal(x: EventuallyPeriodicSet, y: EventuallyPeriodicSet) -> bool:
    return x.canonical() == y.canonical()


def first_difference(x: EventuallyPeriodicSet, y: EventuallyPeriodicSet):
    """Smallest number in exactly one of the two sets, or None if they are equal."""
    horizon = max(x.threshold, y.threshold) + lcm(x.period, y.period)
    for v in range(horizon):
        if (v in x) != (v in y):
            return v
    return None


def eps_from_progressions(ps: ProgressionSet, ceiling: int = LCM_CEILING) -> EventuallyPeriodicSet:
    items = list(ps.progressions)
    period = 1
    for p in items:
        if p.period:
            period = lcm(period, p.period)
            if period > ceiling:
                raise PeriodTooLarge(f"common period exceeds {ceiling}")
    threshold = 1 + max((p.offset for p in items), default=-1)
    limit = threshold + period
    flags = bytearray(limit)
    for p in items:
        if p.period == 0:
            flags[p.offset] = 1
        else:
            flags[p.offset:limit:p.period] = b"\x01" * len(range(p.offset, limit, p.period))
    return EventuallyPeriodicSet.from_flags(flags, threshold, period).canonical()


# --- numerical semigroups ------------------------------------------------------

@dataclass(frozen=True)
class Lemma1Decomposition:
    """Representable numbers as ``sporadic_set ∪ (tail_offset + gcd*N)``."""

    sporadic_set: frozenset
    tail_offset: int
    gcd: int

    def __contains__(self, x):
        if x in self.sporadic_set:
            return True
        return x >= self.tail_offset and (x - self.tail_offset) % self.gcd == 0


def representable_dp(coins, bound: int) -> list:
    """``table[x]`` is True iff x is a nonnegative integer combination of ``coins``."""
    table = [False] * (bound + 1)
    if bound >= 0:
        table[0] = True
    for c in sorted(set(coins)):
        if c <= 0:
            raise ValueError("coins must be positive")
        for x in range(c, bound + 1):
            if table[x - c]:
                table[x] = True
    return table


def numerical_semigroup_decompose(coins, n: int) -> Lemma1Decomposition:
    """Split the semigroup generated by ``coins`` (all at most ``n``) at ``n*n``.

    Above ``n*n`` exactly the multiples of the gcd are representable, so the
    tail is the least such multiple strictly greater than ``n*n``.
    """
    coins = list(coins)
    if not coins:
        raise ValueError("need at least one coin")
    if any(c < 1 for c in coins):
        raise ValueError("coins must be positive")
    if any(c > n for c in coins):
        raise ValueError(f"coin larger than n={n}")
    b = reduce(gcd, coins)
    square = n * n
    table = representable_dp(coins, square)
    sporadic = frozenset(x for x, ok in enumerate(table) if ok)
    tail = (square // b + 1) * b
    return Lemma1Decomposition(sporadic, tail, b)
