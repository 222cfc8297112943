"""Closed rational intervals as formulas, rationals as models.

A base denotes the intersection of its intervals, so the representable
sets are the empty set, all of the rationals (empty base) and the bounded
closed intervals with rational ends. Targets that are not of that shape
have no maximal representable subset (or no minimal superset) when an open
or irrational end can always be approached a little further; the improvers
below construct that next step.
"""
import logging
from fractions import Fraction
from typing import Optional, Tuple

from bcm.core.exceptions import IncompatibleError, PreconditionError
from bcm.logics.base import SymbolicSatSystem
from bcm.models.catalog import Base
from bcm.models.interval import Interval, IntervalTarget, Surd, compare, floor_scaled, rational_between, sqrt
from bcm.models.reports import EvictionReport, ReceptionReport
from bcm.models.selection import SelectionPolicy
from bcm.utils.interval_parser import parse_closed_interval, parse_interval_target

logger = logging.getLogger(__name__)

# An improvement step: a candidate and a strictly better one
Improvement = Tuple[Interval, Interval]


def models_of_q(base: Base) -> IntervalTarget:
    result = IntervalTarget.everything()
    for interval in base:
        result = result.intersection(IntervalTarget.of([interval]))
    return result


def representable_q(target: IntervalTarget) -> Optional[Base]:
    """A base denoting exactly ``target``, or ``None``."""
    if target.is_empty():
        return (Interval.point(0), Interval.point(1))
    if target.is_everything():
        return ()
    if len(target.components) == 1 and target.components[0].is_closed:
        return (target.components[0],)
    return None


def frsubs_q(target: IntervalTarget) -> Tuple[IntervalTarget, ...]:
    """Maximal representable subsets, left to right."""
    if target.is_empty() or target.is_everything():
        return (target,)
    return tuple(IntervalTarget.of([c]) for c in target.components if c.is_closed)


def frsups_q(target: IntervalTarget) -> Tuple[IntervalTarget, ...]:
    """Minimal representable supersets: the closed hull when its ends are rational."""
    if target.is_empty():
        return (target,)
    if not target.bounded:
        return (IntervalTarget.everything(),)
    hull = target.hull()
    if isinstance(hull.lo, Surd) or isinstance(hull.hi, Surd):
        return ()
    return (IntervalTarget.of([Interval.closed(hull.lo, hull.hi)]),)


def _check_candidate(candidate: Interval) -> None:
    if not candidate.is_closed:
        raise PreconditionError(f"candidate {candidate} is not a closed rational interval")


def improve_subset(candidate: Interval, target: IntervalTarget) -> Interval:
    """A strictly larger closed interval still inside ``target``.

    Raises:
        PreconditionError: the candidate is not a closed interval inside the
            target, the target is representable, or the candidate's component
            of the target has no open end to grow towards.
    """
    _check_candidate(candidate)
    if representable_q(target) is not None:
        raise PreconditionError(f"{target} is representable")
    component = target.component_of(candidate)
    if component is None:
        raise PreconditionError(f"{candidate} is not inside {target}")
    if component.hi is None:
        return Interval.closed(candidate.lo, candidate.hi + 1)
    if not component.hi_closed:
        return Interval.closed(candidate.lo, rational_between(candidate.hi, component.hi))
    if component.lo is None:
        return Interval.closed(candidate.lo - 1, candidate.hi)
    if not component.lo_closed:
        return Interval.closed(rational_between(component.lo, candidate.lo), candidate.hi)
    raise PreconditionError(f"component {component} of the target is closed on both sides")


def improve_superset(candidate: Interval, target: IntervalTarget) -> Interval:
    """A strictly smaller closed interval still containing ``target``.

    Raises:
        PreconditionError: the candidate does not contain the target, the
            target is representable, or the candidate is already the closed
            hull of the target.
    """
    _check_candidate(candidate)
    if representable_q(target) is not None:
        raise PreconditionError(f"{target} is representable")
    if not target.issubset(IntervalTarget.of([candidate])):
        raise PreconditionError(f"{candidate} does not contain {target}")
    hull = target.hull()
    if compare(candidate.lo, hull.lo) < 0:
        return Interval.closed(rational_between(candidate.lo, hull.lo), candidate.hi)
    if compare(candidate.hi, hull.hi) > 0:
        return Interval.closed(candidate.lo, rational_between(hull.hi, candidate.hi))
    raise PreconditionError(f"{candidate} is the closed hull of {target}")


def _inner_point(component: Interval) -> Fraction:
    if component.lo_closed:
        return component.lo
    if component.hi_closed:
        return component.hi
    if component.lo is not None and component.hi is not None:
        return rational_between(component.lo, component.hi)
    if component.lo is not None:
        return Fraction(floor_scaled(component.lo, 1) + 1)
    if component.hi is not None:
        return Fraction(floor_scaled(component.hi, 1) - 1)
    return Fraction(0)


def subset_witness(target: IntervalTarget) -> Improvement:
    """A point of the target and its first improvement."""
    candidate = Interval.point(_inner_point(target.components[0]))
    return candidate, improve_subset(candidate, target)


def superset_witness(target: IntervalTarget) -> Improvement:
    """A closed interval around the target (irrational ends rounded outwards) and its first improvement."""
    hull = target.hull()
    lo = Fraction(floor_scaled(hull.lo, 1)) if isinstance(hull.lo, Surd) else hull.lo
    hi = Fraction(floor_scaled(hull.hi, 1) + 1) if isinstance(hull.hi, Surd) else hull.hi
    candidate = Interval.closed(lo, hi)
    return candidate, improve_superset(candidate, target)


class QIntervalSystem(SymbolicSatSystem):
    """Maxichoice change over closed rational intervals.

    When several maximal subsets exist, ``lex-min`` takes the leftmost
    component and ``lex-max`` the rightmost. ``ranking`` is rejected.
    """

    name = "qint"

    def parse_formula(self, text: str) -> Interval:
        return parse_closed_interval(text)

    def parse_models(self, text: str) -> IntervalTarget:
        return parse_interval_target(text)

    def models_of(self, base: Base) -> IntervalTarget:
        return models_of_q(base)

    def _choose(self, candidates: Tuple[IntervalTarget, ...], policy: SelectionPolicy) -> IntervalTarget:
        return candidates[-1] if policy.mode == "lex-max" else candidates[0]

    def evict(self, base: Base, models: IntervalTarget, policy: SelectionPolicy, on_incompatible: str = "error") -> EvictionReport:
        self.check_policy(policy)
        current = models_of_q(base)
        target = current.difference(models)
        candidates = frsubs_q(target)
        if not candidates:
            witness = subset_witness(target)
            explanation = (
                f"qint: {target} has no maximal closed subset; "
                f"{witness[0]} grows to {witness[1]} and never stops"
            )
            logger.warning("eviction incompatible: %s", explanation)
            if on_incompatible == "keep":
                return EvictionReport(result_base=base, models_text=str(current), kept=True)
            raise IncompatibleError(explanation, witness=witness)
        chosen = self._choose(candidates, policy)
        result_base = base if chosen == current else representable_q(chosen)
        return EvictionReport(result_base=result_base, models_text=str(chosen))

    def receive(self, base: Base, models: IntervalTarget, policy: SelectionPolicy, on_incompatible: str = "error") -> ReceptionReport:
        self.check_policy(policy)
        current = models_of_q(base)
        target = current.union(models)
        candidates = frsups_q(target)
        if not candidates:
            witness = superset_witness(target)
            explanation = (
                f"qint: {target} has no minimal closed superset; "
                f"{witness[0]} shrinks to {witness[1]} and never stops"
            )
            logger.warning("reception incompatible: %s", explanation)
            if on_incompatible == "keep":
                return ReceptionReport(result_base=base, models_text=str(current), kept=True)
            raise IncompatibleError(explanation, witness=witness)
        chosen = self._choose(candidates, policy)
        result_base = base if chosen == current else representable_q(chosen)
        return ReceptionReport(result_base=result_base, models_text=str(chosen))

    def eviction_probe(self) -> Tuple[Base, IntervalTarget, str]:
        return (Interval.closed(0, 1),), IntervalTarget.of([Interval.point(1)]), "closed components are maximal"

    def reception_probe(self) -> Tuple[Base, IntervalTarget, str]:
        # [0,1] u [1,sqrt(2)) has an irrational supremum
        models = IntervalTarget.of([Interval(Fraction(1), sqrt(Fraction(2)), True, False)])
        return (Interval.closed(0, 1),), models, "closed hulls are minimal"
