import pytest
from hypothesis import given, settings, strategies as st
from pydantic import ValidationError

from bcm.core.exceptions import IncompatibleError, ModelSpecError, PreconditionError
from bcm.logics.ltlx import LtlxSystem, chain_model, rcp_x, sat_base, sat_x, universal_model
from bcm.models.formula import XFormula
from bcm.models.kripke import ExplicitModelSet, IntensionalModels, PointedKripke
from bcm.models.model_set import ModelSet
from bcm.models.selection import SelectionPolicy
from bcm.utils.file_processor import FileProcessor

p, q = "p", "q"


def loop(labels):
    return PointedKripke.build(["s"], [("s", "s")], {"s": labels}, "s")


def line():
    """s0 -> s1 -> s1, p only at s0."""
    return PointedKripke.build(["s0", "s1"], [("s0", "s1"), ("s1", "s1")], {"s0": [p]}, "s0")


def test_satisfaction_at_exact_depth():
    assert all(sat_x(loop([p]), XFormula(k, p)) for k in range(10))
    assert sat_x(line(), XFormula(0, p))
    assert not sat_x(line(), XFormula(1, p))
    branching = PointedKripke.build(
        ["s0", "s1", "s2"],
        [("s0", "s1"), ("s0", "s2"), ("s1", "s1"), ("s2", "s2")],
        {"s1": [p]},
        "s0",
    )
    assert not sat_x(branching, XFormula(1, p))


def test_transitions_must_be_total():
    with pytest.raises(ValidationError, match="no successor"):
        PointedKripke.build(["s0", "s1"], [("s0", "s1")], {}, "s0")


def test_receive_keeps_formulas_every_model_satisfies():
    base = (XFormula(0, p), XFormula(1, p))
    assert rcp_x(base, ExplicitModelSet.of([line()])) == (XFormula(0, p),)
    assert rcp_x(base, ExplicitModelSet.of([loop([p])])) == base
    assert rcp_x((), ExplicitModelSet.of([line()])) == ()


def test_chain_model_examples():
    base = (XFormula(0, p), XFormula(2, q))
    model = chain_model(base, XFormula(1, p))
    assert len(model.states) == 3
    assert sat_base(model, base)
    assert not sat_x(model, XFormula(1, p))

    single = chain_model((), XFormula(0, p))
    assert single.states == ("s0",)
    assert not sat_x(single, XFormula(0, p))

    later = chain_model((XFormula(1, q),), XFormula(2, q))
    assert later.label_of("s1") == frozenset({q})
    assert not sat_x(later, XFormula(2, q))

    with pytest.raises(PreconditionError):
        chain_model(base, XFormula(0, p))


_xformulas = st.builds(XFormula, st.integers(min_value=0, max_value=5), st.sampled_from([p, q]))
_bases = st.lists(_xformulas, max_size=6, unique=True).map(tuple)


@settings(max_examples=1000)
@given(base=_bases, excluded=_xformulas)
def test_chain_model_separates(base, excluded):
    if excluded in base:
        return
    model = chain_model(base, excluded)
    assert sat_base(model, base)
    assert not sat_x(model, excluded)


@settings(max_examples=1000)
@given(base=_bases)
def test_universal_model_satisfies_every_base(base):
    assert sat_base(universal_model([p, q]), base)


@settings(max_examples=1000)
@given(base=_bases, chains=st.lists(st.tuples(_bases, _xformulas), min_size=1, max_size=3))
def test_receive_postulates_on_sampled_models(base, chains):
    models = ExplicitModelSet.of(chain_model(b, f) for b, f in chains if f not in b)
    result = rcp_x(base, models)
    assert all(sat_base(m, result) for m in models.models)
    assert set(result) <= set(base)
    if all(sat_base(m, base) for m in models.models):
        assert result == base
    for formula in set(base) - set(result):
        assert any(not sat_x(m, formula) for m in models.models)


def test_evicting_all_models_is_incompatible():
    system = LtlxSystem([p, q])
    base = (XFormula(0, p),)
    with pytest.raises(IncompatibleError) as info:
        system.evict(base, IntensionalModels(base=base), SelectionPolicy())
    assert info.value.witness == universal_model([p, q])
    kept = system.evict(base, IntensionalModels(base=base), SelectionPolicy(), on_incompatible="keep")
    assert kept.kept and kept.result_base == base


def test_evicting_an_explicit_list():
    system = LtlxSystem([p, q])
    base = (XFormula(0, p),)
    full_loop = loop([p])
    report = system.evict(base, ExplicitModelSet.of([full_loop]), SelectionPolicy())
    assert report.result_base == (XFormula(0, p), XFormula(0, q))
    assert not sat_base(full_loop, report.result_base)
    # models outside Mod(base) need nothing
    assert system.evict(base, ExplicitModelSet.of([loop([q])]), SelectionPolicy()).result_base == base
    with pytest.raises(IncompatibleError):
        system.evict(base, ExplicitModelSet.of([loop([p, q])]), SelectionPolicy())


def test_receiving_an_intension_intersects_bases():
    system = LtlxSystem([p, q])
    base = (XFormula(0, p), XFormula(1, q))
    report = system.receive(base, IntensionalModels(base=(XFormula(1, q),)), SelectionPolicy())
    assert report.result_base == (XFormula(1, q),)


def test_kripke_file():
    text = """
    # two models
    model first
    state s0
    state s1
    init s0
    edge s0 s1
    edge s1 s1
    label s0 p,q
    model second
    state u
    edge u u
    """
    models = FileProcessor.parse_kripke(text)
    assert [m.name for m in models.models] == ["first", "second"]
    assert models.models[0].label_of("s0") == frozenset({p, q})
    assert models.models[1].initial == "u"
    with pytest.raises(ModelSpecError, match="no successor"):
        FileProcessor.parse_kripke("state s0\nstate s1\nedge s0 s1\n")
    with pytest.raises(ModelSpecError, match="line 2"):
        FileProcessor.parse_kripke("state s0\nloop s0\n")


def test_duplicate_structures_collapse():
    assert len(ExplicitModelSet.of([loop([p]), loop([p])])) == 1


def test_eviction_selection_among_least_falsified():
    system = LtlxSystem([p, q])
    models = ExplicitModelSet.of([loop([])])
    assert system.evict((), models, SelectionPolicy()).result_base == (XFormula(0, p),)
    assert system.evict((), models, SelectionPolicy(mode="lex-max")).result_base == (XFormula(0, q),)
    with pytest.raises(PreconditionError, match="ranking selection"):
        system.evict((), models, SelectionPolicy(mode="ranking", ranking=(ModelSet.empty(1),)))
