from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from bcm.core.exceptions import IncompatibleError, PreconditionError
from bcm.logics.qintervals import (
    QIntervalSystem,
    frsups_q,
    improve_subset,
    improve_superset,
    models_of_q,
    representable_q,
)
from bcm.models.interval import Interval, IntervalTarget, sqrt
from bcm.models.model_set import ModelSet
from bcm.models.selection import SelectionPolicy
from bcm.services.diagnostics import compat_symbolic
from bcm.utils.interval_parser import parse_interval_target as target

F = Fraction


def closed(lo, hi):
    return Interval.closed(F(lo), F(hi))


def test_models_of_bases():
    assert str(models_of_q((closed(0, 1), closed(F(1, 2), 2)))) == "[1/2,1]"
    assert models_of_q((closed(0, 1), closed(2, 3))).is_empty()
    assert models_of_q(()).is_everything()


def test_representability():
    assert representable_q(target("[0,1]")) == (closed(0, 1),)
    assert representable_q(target("[0,1)")) is None
    assert representable_q(target("Q")) == ()
    witness = representable_q(target("{}"))
    assert models_of_q(witness).is_empty()


def test_improve_subset_moves_towards_the_open_end():
    assert improve_subset(closed(0, F(1, 2)), target("[0,1)")) == closed(0, F(3, 4))
    with pytest.raises(PreconditionError):
        improve_subset(closed(0, 1), target("[0,1]"))
    with pytest.raises(PreconditionError):
        improve_subset(closed(0, 2), target("[0,1)"))


def test_improve_superset_moves_towards_the_infimum():
    assert improve_superset(closed(-1, 1), target("(0,1]")) == closed(F(-1, 2), 1)
    with pytest.raises(PreconditionError):
        improve_superset(closed(-1, 2), target("[0,1]"))
    with pytest.raises(PreconditionError):
        improve_superset(closed(0, 1), target("(0,1]"))


def test_ten_step_chains_are_strict():
    grow = target("[0,1)")
    candidate = closed(0, 0)
    for _ in range(10):
        better = improve_subset(candidate, grow)
        assert better.hi > candidate.hi and better.lo == candidate.lo
        assert grow.component_of(better) is not None
        assert isinstance(better.hi, Fraction)
        candidate = better

    shrink = target("(0,1]")
    candidate = closed(-1, 1)
    for _ in range(10):
        better = improve_superset(candidate, shrink)
        assert candidate.lo < better.lo < 0 and better.hi == candidate.hi
        assert isinstance(better.lo, Fraction)
        candidate = better


_twelfths = st.integers(min_value=-120, max_value=120)


@settings(max_examples=1000)
@given(start=_twelfths, steps=st.integers(min_value=1, max_value=60), data=st.data())
def test_improvers_on_random_half_open_targets(start, steps, data):
    lo = F(start, 12)
    hi = lo + F(steps, 12)
    half_open = IntervalTarget.of([Interval(lo, hi, True, False)])
    inside = lo + F(data.draw(st.integers(min_value=0, max_value=steps - 1)), 12)
    candidate = Interval.closed(lo, inside)
    better = improve_subset(candidate, half_open)
    assert candidate.issubset(better) and better != candidate
    assert half_open.component_of(better) is not None

    open_low = IntervalTarget.of([Interval(lo, hi, False, True)])
    below = lo - F(data.draw(st.integers(min_value=1, max_value=24)), 12)
    outer = Interval.closed(below, hi)
    smaller = improve_superset(outer, open_low)
    assert smaller.issubset(outer) and smaller != outer
    assert open_low.issubset(IntervalTarget.of([smaller]))


def test_eviction():
    system = QIntervalSystem()
    policy = SelectionPolicy()
    base = (closed(0, 1),)
    assert system.evict(base, target("[2,3]"), policy).result_base == base
    assert system.evict((closed(0, 2),), target("(1,2]"), policy).result_base == (closed(0, 1),)
    split = system.evict((closed(0, 3),), target("(1,2)"), policy)
    assert split.result_base == (closed(0, 1),)
    assert system.evict((closed(0, 3),), target("(1,2)"), SelectionPolicy(mode="lex-max")).result_base == (closed(2, 3),)
    with pytest.raises(IncompatibleError) as info:
        system.evict(base, target("{1}"), policy)
    assert info.value.witness == (closed(0, 0), closed(0, F(1, 2)))


def test_reception():
    system = QIntervalSystem()
    policy = SelectionPolicy()
    base = (closed(0, 1),)
    assert system.receive(base, target("[2,3]"), policy).result_base == (closed(0, 3),)
    assert system.receive(base, target("[3,inf)"), policy).result_base == ()
    assert system.receive(base, target("(1/2,1)"), policy).result_base == base
    with pytest.raises(IncompatibleError) as info:
        system.receive(base, target("[1, sqrt(2))"), policy)
    assert info.value.witness == (closed(0, 2), closed(0, F(3, 2)))
    assert frsups_q(target("(0,1]")) == (target("[0,1]"),)
    assert frsups_q(IntervalTarget.of([Interval(F(0), sqrt(F(2)), True, False)])) == ()


def test_compatibility_verdict():
    verdict = compat_symbolic(QIntervalSystem())
    assert not verdict.eviction_compatible
    assert not verdict.reception_compatible


def test_selection_over_several_components():
    system = QIntervalSystem()
    base = (closed(0, 5),)
    models = target("(1,2) u (3,4)")
    assert system.evict(base, models, SelectionPolicy()).result_base == (closed(0, 1),)
    assert system.evict(base, models, SelectionPolicy(mode="lex-max")).result_base == (closed(4, 5),)
    ranked = SelectionPolicy(mode="ranking", ranking=(ModelSet.empty(1),))
    with pytest.raises(PreconditionError, match="ranking selection"):
        system.evict(base, models, ranked)
    with pytest.raises(PreconditionError, match="ranking selection"):
        system.receive(base, models, ranked)
