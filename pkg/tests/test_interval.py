from fractions import Fraction

import pytest

from bcm.core.exceptions import ModelSpecError
from bcm.models.interval import Interval, IntervalTarget, Surd, compare, floor_scaled, rational_between, sqrt
from bcm.utils.interval_parser import parse_closed_interval, parse_interval_target

F = Fraction


def test_surd_comparisons():
    root2 = sqrt(F(2))
    assert isinstance(root2, Surd)
    assert sqrt(F(9, 4)) == F(3, 2)
    assert F(7, 5) < root2 < F(3, 2)
    assert -root2 < F(-1)
    assert compare(-root2, root2) == -1
    assert root2 != F(2)
    assert floor_scaled(root2, 2) == 2
    assert floor_scaled(-root2, 1) == -2
    with pytest.raises(ValueError):
        Surd(F(4))


def test_rational_between():
    assert rational_between(F(0), F(1)) == F(1, 2)
    root2 = sqrt(F(2))
    between = rational_between(root2, F(2))
    assert compare(root2, between) < 0 < compare(F(2), between)
    assert compare(F(1), rational_between(F(1), root2)) < 0
    with pytest.raises(ValueError):
        rational_between(F(1), F(1))


def test_intervals_over_the_rationals():
    assert Interval.make(F(1), F(1), True, False) is None
    assert Interval.make(sqrt(F(2)), sqrt(F(2))) is None
    surd_end = Interval(F(0), sqrt(F(2)))
    assert not surd_end.hi_closed
    assert str(Interval.point(1)) == "{1}"
    assert str(Interval(None, F(0), False, True)) == "(-inf,0]"


def test_normalisation_merges_touching_pieces():
    merged = IntervalTarget.of([Interval.closed(0, 1), Interval(F(1), F(2), False, True)])
    assert str(merged) == "[0,2]"
    # meeting at an irrational point leaves no rational gap
    root2 = sqrt(F(2))
    joined = IntervalTarget.of([Interval(F(0), root2, False, False), Interval(root2, F(2), False, False)])
    assert str(joined) == "(0,2)"
    apart = IntervalTarget.of([Interval(F(0), F(1), True, False), Interval(F(1), F(2), False, True)])
    assert len(apart.components) == 2


def test_target_algebra():
    unit = IntervalTarget.of([Interval.closed(0, 1)])
    assert str(unit.remove_points([F(1)])) == "[0,1)"
    assert str(unit.remove_points([F(1, 2)])) == "[0,1/2) u (1/2,1]"
    assert str(unit.complement()) == "(-inf,0) u (1,inf)"
    assert unit.complement().complement() == unit
    assert IntervalTarget.empty().complement().is_everything()
    assert unit.union(IntervalTarget.of([Interval.closed(2, 3)])).bounded
    assert not unit.complement().bounded
    assert unit.issubset(IntervalTarget.of([Interval.closed(-1, 1)]))
    assert str(unit.hull()) == "[0,1]"


def test_parser():
    assert str(parse_interval_target("[0,1] \\ {1}")) == "[0,1)"
    assert str(parse_interval_target("(0,1] u {2, 3}")) == "(0,1] u {2} u {3}"
    assert str(parse_interval_target("[0.5, 3/4]")) == "[1/2,3/4]"
    assert str(parse_interval_target("[1, sqrt(2))")) == "[1,sqrt(2))"
    assert parse_interval_target("Q").is_everything()
    assert parse_interval_target("{}").is_empty()
    assert str(parse_interval_target("Q \\ ([0,1] u [2,3])")) == "(-inf,0) u (1,2) u (3,inf)"
    assert parse_closed_interval("[0, 1/2]") == Interval.closed(0, F(1, 2))
    assert parse_closed_interval("{2}") == Interval.point(2)
    for bad in ("(0,1]", "[0,1] u [2,3]", "[0, sqrt(2)]", "[0,"):
        with pytest.raises(ModelSpecError):
            parse_closed_interval(bad)


@pytest.mark.parametrize("text", ["[0,1/0]", "{1/0}", "[0, sqrt(1/0))"])
def test_zero_denominator_is_a_spec_error(text):
    with pytest.raises(ModelSpecError, match="nonzero denominator"):
        parse_interval_target(text)
