"""Exact interval algebra over the rationals.

Finite endpoints are ``Fraction`` values or ``Surd`` values (square roots of
non-square rationals). Sets are sets of rationals, so an irrational endpoint
is never a member: surd ends are stored open, and two intervals meeting at
a surd point are contiguous.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import total_ordering
from typing import Iterable, List, Optional, Tuple, Union


@total_ordering
@dataclass(frozen=True)
class Surd:
    """``sign * sqrt(radicand)`` for a positive rational radicand that is not a square."""

    radicand: Fraction
    sign: int = 1

    def __post_init__(self):
        if self.radicand <= 0 or _is_square(self.radicand):
            raise ValueError(f"sqrt({self.radicand}) is rational or undefined")
        if self.sign not in (1, -1):
            raise ValueError("sign must be 1 or -1")

    def __neg__(self) -> Surd:
        return Surd(self.radicand, -self.sign)

    def __eq__(self, other) -> bool:
        if isinstance(other, Surd):
            return self.radicand == other.radicand and self.sign == other.sign
        if isinstance(other, (int, Fraction)):
            return False
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.radicand, self.sign))

    def __lt__(self, other) -> bool:
        if not isinstance(other, (Surd, int, Fraction)):
            return NotImplemented
        return compare(self, other) < 0

    def __float__(self) -> float:
        return self.sign * math.sqrt(self.radicand)

    def __str__(self) -> str:
        return ("-" if self.sign < 0 else "") + f"sqrt({self.radicand})"


Point = Union[Fraction, Surd]


def _is_square(value: Fraction) -> bool:
    return math.isqrt(value.numerator) ** 2 == value.numerator and math.isqrt(value.denominator) ** 2 == value.denominator


def sqrt(value: Fraction) -> Point:
    """Exact square root of a non-negative rational."""
    value = Fraction(value)
    if value < 0:
        raise ValueError("square root of a negative number")
    if _is_square(value):
        return Fraction(math.isqrt(value.numerator), math.isqrt(value.denominator))
    return Surd(value)


def _sign(point: Point) -> int:
    if isinstance(point, Surd):
        return point.sign
    return (point > 0) - (point < 0)


def _square(point: Point) -> Fraction:
    return point.radicand if isinstance(point, Surd) else Fraction(point) ** 2


def compare(left: Point, right: Point) -> int:
    """-1, 0 or 1; exact for any mix of rationals and surds."""
    if not isinstance(left, Surd) and not isinstance(right, Surd):
        return (left > right) - (left < right)
    ls, rs = _sign(left), _sign(right)
    if ls != rs:
        return (ls > rs) - (ls < rs)
    lq, rq = _square(left), _square(right)
    magnitude = (lq > rq) - (lq < rq)
    return magnitude if ls > 0 else -magnitude


def floor_scaled(point: Point, scale: int) -> int:
    """``floor(point * scale)`` for a positive integer scale."""
    if not isinstance(point, Surd):
        return math.floor(point * scale)
    squared = point.radicand * scale * scale
    root_floor = math.isqrt(math.floor(squared))
    # the scaled square is never a perfect square, so its root is never an integer
    return root_floor if point.sign > 0 else -root_floor - 1


def rational_between(low: Point, high: Point) -> Fraction:
    """A rational strictly between ``low < high``; the midpoint when both are rational."""
    if compare(low, high) >= 0:
        raise ValueError(f"empty range ({low}, {high})")
    if not isinstance(low, Surd) and not isinstance(high, Surd):
        return (Fraction(low) + Fraction(high)) / 2
    scale = 1
    while True:
        candidate = Fraction(floor_scaled(low, scale) + 1, scale)
        if compare(candidate, high) < 0:
            return candidate
        scale *= 2


def format_point(point: Point) -> str:
    return str(point)


# Bound keys order lower and upper ends on one line: (tier, point, tiebreak),
# tier -1 / 1 for the infinities.
_NEG_INF = (-1, Fraction(0), 0)
_POS_INF = (1, Fraction(0), 0)


class _Key:
    """Orderable wrapper around a bound key (tuples cannot compare Surd with Fraction reliably)."""

    __slots__ = ("tier", "point", "tie")

    def __init__(self, tier: int, point: Point, tie: int):
        self.tier, self.point, self.tie = tier, point, tie

    def _cmp(self, other: _Key) -> int:
        if self.tier != other.tier:
            return (self.tier > other.tier) - (self.tier < other.tier)
        if self.tier != 0:
            return 0
        by_point = compare(self.point, other.point)
        if by_point:
            return by_point
        return (self.tie > other.tie) - (self.tie < other.tie)

    def __lt__(self, other: _Key) -> bool:
        return self._cmp(other) < 0

    def __le__(self, other: _Key) -> bool:
        return self._cmp(other) <= 0

    def __eq__(self, other) -> bool:
        return isinstance(other, _Key) and self._cmp(other) == 0


@dataclass(frozen=True)
class Interval:
    """A non-empty interval of rationals; ``None`` ends are infinite."""

    lo: Optional[Point]
    hi: Optional[Point]
    lo_closed: bool = True
    hi_closed: bool = True

    def __post_init__(self):
        if self.lo is None or isinstance(self.lo, Surd):
            object.__setattr__(self, "lo_closed", False)
        if self.hi is None or isinstance(self.hi, Surd):
            object.__setattr__(self, "hi_closed", False)
        if self.lo is not None and not isinstance(self.lo, Surd):
            object.__setattr__(self, "lo", Fraction(self.lo))
        if self.hi is not None and not isinstance(self.hi, Surd):
            object.__setattr__(self, "hi", Fraction(self.hi))
        if not self._non_empty(self.lo, self.hi, self.lo_closed, self.hi_closed):
            raise ValueError(f"empty interval {self}")

    @staticmethod
    def _non_empty(lo, hi, lo_closed, hi_closed) -> bool:
        if lo is None or hi is None:
            return True
        order = compare(lo, hi)
        return order < 0 or (order == 0 and lo_closed and hi_closed)

    @classmethod
    def make(cls, lo, hi, lo_closed: bool = True, hi_closed: bool = True) -> Optional[Interval]:
        """The interval, or ``None`` when it is empty."""
        if lo is None or isinstance(lo, Surd):
            lo_closed = False
        if hi is None or isinstance(hi, Surd):
            hi_closed = False
        if not cls._non_empty(lo, hi, lo_closed, hi_closed):
            return None
        return cls(lo, hi, lo_closed, hi_closed)

    @classmethod
    def closed(cls, lo, hi) -> Interval:
        return cls(Fraction(lo), Fraction(hi))

    @classmethod
    def point(cls, value) -> Interval:
        return cls(Fraction(value), Fraction(value))

    @property
    def is_closed(self) -> bool:
        """Closed and bounded with rational ends: exactly the shape of a base formula."""
        return self.lo_closed and self.hi_closed

    @property
    def bounded(self) -> bool:
        return self.lo is not None and self.hi is not None

    def lower_key(self) -> _Key:
        if self.lo is None:
            return _Key(*_NEG_INF)
        return _Key(0, self.lo, 0 if self.lo_closed else 1)

    def upper_key(self) -> _Key:
        if self.hi is None:
            return _Key(*_POS_INF)
        return _Key(0, self.hi, 0 if self.hi_closed else -1)

    def contains(self, value: Point) -> bool:
        if self.lo is not None:
            order = compare(value, self.lo)
            if order < 0 or (order == 0 and not self.lo_closed):
                return False
        if self.hi is not None:
            order = compare(value, self.hi)
            if order > 0 or (order == 0 and not self.hi_closed):
                return False
        return True

    def issubset(self, other: Interval) -> bool:
        return other.lower_key() <= self.lower_key() and self.upper_key() <= other.upper_key()

    def intersect(self, other: Interval) -> Optional[Interval]:
        low = self if other.lower_key() <= self.lower_key() else other
        high = self if self.upper_key() <= other.upper_key() else other
        return Interval.make(low.lo, high.hi, low.lo_closed, high.hi_closed)

    def __str__(self) -> str:
        if self.lo is not None and self.hi is not None and self.is_closed and self.lo == self.hi:
            return "{" + format_point(self.lo) + "}"
        left = "[" if self.lo_closed else "("
        right = "]" if self.hi_closed else ")"
        lo = "-inf" if self.lo is None else format_point(self.lo)
        hi = "inf" if self.hi is None else format_point(self.hi)
        return f"{left}{lo},{hi}{right}"


def _touches(left: Interval, right: Interval) -> bool:
    """Whether ``right`` (starting no earlier) overlaps or abuts ``left`` over the rationals."""
    if left.hi is None or right.lo is None:
        return True
    order = compare(right.lo, left.hi)
    if order != 0:
        return order < 0
    return left.hi_closed or right.lo_closed or isinstance(left.hi, Surd)


@dataclass(frozen=True)
class IntervalTarget:
    """A finite union of intervals, kept sorted, disjoint and non-abutting.

    Removed points are represented by splitting a component into two
    half-open ones.
    """

    components: Tuple[Interval, ...] = ()

    @classmethod
    def of(cls, intervals: Iterable[Interval]) -> IntervalTarget:
        ordered = sorted(intervals, key=Interval.lower_key)
        merged: List[Interval] = []
        for interval in ordered:
            if merged and _touches(merged[-1], interval):
                last = merged[-1]
                top = last if interval.upper_key() <= last.upper_key() else interval
                merged[-1] = Interval(last.lo, top.hi, last.lo_closed, top.hi_closed)
            else:
                merged.append(interval)
        return cls(tuple(merged))

    @classmethod
    def empty(cls) -> IntervalTarget:
        return cls(())

    @classmethod
    def everything(cls) -> IntervalTarget:
        return cls((Interval(None, None),))

    def is_empty(self) -> bool:
        return not self.components

    def is_everything(self) -> bool:
        return len(self.components) == 1 and self.components[0].lo is None and self.components[0].hi is None

    @property
    def bounded(self) -> bool:
        return self.is_empty() or (self.components[0].lo is not None and self.components[-1].hi is not None)

    def union(self, other: IntervalTarget) -> IntervalTarget:
        return IntervalTarget.of(self.components + other.components)

    def intersection(self, other: IntervalTarget) -> IntervalTarget:
        pieces = []
        for left in self.components:
            for right in other.components:
                meet = left.intersect(right)
                if meet is not None:
                    pieces.append(meet)
        return IntervalTarget.of(pieces)

    def complement(self) -> IntervalTarget:
        gaps = []
        lo, lo_closed = None, False
        for component in self.components:
            gap = Interval.make(lo, component.lo, lo_closed, not component.lo_closed)
            if component.lo is not None and gap is not None:
                gaps.append(gap)
            if component.hi is None:
                return IntervalTarget.of(gaps)
            lo, lo_closed = component.hi, not component.hi_closed
        gaps.append(Interval.make(lo, None, lo_closed, False))
        return IntervalTarget.of(gaps)

    def difference(self, other: IntervalTarget) -> IntervalTarget:
        return self.intersection(other.complement())

    def remove_points(self, points: Iterable[Fraction]) -> IntervalTarget:
        return self.difference(IntervalTarget.of(Interval.point(p) for p in points))

    def contains(self, value: Point) -> bool:
        return any(component.contains(value) for component in self.components)

    def issubset(self, other: IntervalTarget) -> bool:
        return self.difference(other).is_empty()

    def hull(self) -> Optional[Interval]:
        """Smallest interval (possibly with open or infinite ends) containing the target."""
        if self.is_empty():
            return None
        first, last = self.components[0], self.components[-1]
        return Interval(first.lo, last.hi, first.lo_closed, last.hi_closed)

    def component_of(self, interval: Interval) -> Optional[Interval]:
        for component in self.components:
            if interval.issubset(component):
                return component
        return None

    def __str__(self) -> str:
        if self.is_empty():
            return "{}"
        return " u ".join(str(component) for component in self.components)
