import pytest

from bcm.core.exceptions import IncompatibleError, UniverseMismatchError
from bcm.models.model_set import ModelSet
from bcm.models.selection import SelectionPolicy
from bcm.services.engine import evict, frsubs, frsups, maxichoice_evictor, maxichoice_receiver, receive
from bcm.utils.model_spec import parse_model_spec


def spec(system, text):
    return parse_model_spec(text, system)


def test_frsubs_and_frsups_in_canonical_order(prop_t):
    catalog = prop_t.catalog
    assert [prop_t.format_set(s) for s in frsubs(spec(prop_t, "{tt,tf,ft}"), catalog)] == ["{tt,ft}", "{tt,tf}"]
    assert frsubs(spec(prop_t, "{tf}"), catalog) == ()
    assert [prop_t.format_set(s) for s in frsups(spec(prop_t, "{tt,ff}"), catalog)] == ["{tt,tf,ft,ff}"]
    with pytest.raises(UniverseMismatchError):
        frsubs(ModelSet.empty(3), catalog)


def test_evict_builds_a_witness_for_the_chosen_set(prop2):
    report = evict(prop2, prop2.parse_base(["a"]), spec(prop2, "{tt}"))
    assert prop2.format_set(report.result_models) == "{tf}"
    assert report.candidates == (report.chosen,)
    assert prop2.format_base(report.result_base) == ["a & !b"]
    assert report.models_text == "{tf}"


def test_unchanged_models_keep_the_original_base(prop2):
    base = prop2.parse_base(["a", "a | b"])
    assert evict(prop2, base, spec(prop2, "{ff}")).result_base == base
    assert receive(prop2, base, spec(prop2, "{tf}")).result_base == base


def test_receive_is_the_exact_union_in_full_logic(prop2):
    report = receive(prop2, prop2.parse_base(["a"]), spec(prop2, "{ff}"))
    assert prop2.format_set(report.result_models) == "{tt,tf,ff}"
    assert prop2.models_of(report.result_base) == report.result_models


def test_selection_picks_among_several_candidates(horn2):
    base = horn2.tautology()
    models = spec(horn2, "{tt,ff}")
    assert horn2.format_set(evict(horn2, base, models).result_models) == "{ft}"
    lex_max = SelectionPolicy(mode="lex-max")
    assert horn2.format_set(evict(horn2, base, models, lex_max).result_models) == "{tf}"
    ranked = SelectionPolicy(mode="ranking", ranking=(spec(horn2, "{tf}"),))
    assert horn2.format_set(evict(horn2, base, models, ranked).result_models) == "{tf}"


def test_incompatible_eviction(prop_t, p3):
    with pytest.raises(IncompatibleError, match="no finitely representable subset"):
        evict(prop_t, prop_t.parse_base(["a"]), spec(prop_t, "{tt}"))
    with pytest.raises(IncompatibleError, match="empty set has no base"):
        evict(p3, (), p3.full())


def test_keep_mode_returns_the_base_unchanged(prop_t):
    base = prop_t.parse_base(["a"])
    report = evict(prop_t, base, spec(prop_t, "{tt}"), on_incompatible="keep")
    assert report.kept
    assert report.result_base == base
    assert prop_t.format_set(report.result_models) == "{tt,tf}"


def test_reception_in_a_fragment_falls_back_to_the_empty_base(prop_t):
    report = receive(prop_t, prop_t.parse_base(["a", "b"]), spec(prop_t, "{ff}"))
    assert report.result_base == ()
    assert report.result_models.is_full()


def test_operators_as_functions(horn2):
    evictor = maxichoice_evictor(horn2)
    receiver = maxichoice_receiver(horn2)
    base = horn2.parse_base(["a", "b"])
    assert horn2.models_of(evictor(base, spec(horn2, "{tt}"))).is_empty()
    assert horn2.format_set(horn2.models_of(receiver(base, spec(horn2, "{tf}")))) == "{tt,tf}"
