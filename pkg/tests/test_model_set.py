import pytest
from pydantic import ValidationError

from bcm.core.exceptions import UniverseMismatchError
from bcm.models.catalog import Catalog
from bcm.models.model_set import ModelSet
from bcm.models.selection import SelectionPolicy


def test_set_algebra():
    left = ModelSet.of([0, 1], 4)
    right = ModelSet.of([1, 2], 4)
    assert (left & right).indices() == (1,)
    assert (left | right).indices() == (0, 1, 2)
    assert (left - right).indices() == (0,)
    assert left.complement().indices() == (2, 3)
    assert ModelSet.of([1], 4) < left
    assert not left <= right


def test_empty_set_has_length_zero_but_is_a_value():
    empty = ModelSet.empty(3)
    assert len(empty) == 0
    assert empty.is_empty()
    assert empty is not None
    assert ModelSet.full(3).is_full()


def test_mismatched_universes_are_rejected():
    with pytest.raises(UniverseMismatchError):
        ModelSet.of([0], 2) | ModelSet.of([0], 3)
    with pytest.raises(UniverseMismatchError):
        ModelSet.of([0], 2) <= ModelSet.of([0], 3)


def test_indices_outside_the_universe_are_invalid():
    with pytest.raises(ValidationError):
        ModelSet.of([4], 4)


def test_all_subsets_in_canonical_order():
    subsets = ModelSet.all_subsets(2)
    assert len(subsets) == 4
    assert [s.sort_key() for s in subsets] == [(0, 0), (0, 1), (1, 0), (1, 1)]


def test_catalog_must_be_closed_under_intersection():
    a = ModelSet.of([0, 1], 3)
    b = ModelSet.of([1, 2], 3)
    with pytest.raises(ValidationError):
        Catalog(entries={a: ("x",), b: ("y",)}, universe_size=3)
    catalog = Catalog(entries={a: ("x",), b: ("y",)}, universe_size=3, conjunctive=False)
    assert len(catalog) == 2
    assert catalog.sets() == (b, a)
    assert not catalog.has_empty()


def test_selection_modes():
    low = ModelSet.of([1], 3)
    high = ModelSet.of([0], 3)
    family = [high, low]
    assert SelectionPolicy().select(family) == low
    assert SelectionPolicy(mode="lex-max").select(family) == high
    assert SelectionPolicy(mode="ranking", ranking=(high,)).select(family) == high
    with pytest.raises(ValueError):
        SelectionPolicy().select([])
    with pytest.raises(ValidationError):
        SelectionPolicy(mode="ranking")
