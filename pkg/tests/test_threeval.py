import pytest

from bcm.core.exceptions import PreconditionError
from bcm.logics.threeval import (
    FALSE,
    TRUE,
    UNKNOWN,
    ThreeValuedSystem,
    build_catalog_3v,
    build_catalog_k3,
    build_catalog_p3,
    eval3,
)
from bcm.services.diagnostics import compat_finite
from bcm.utils.formula_parser import parse_prop


@pytest.mark.parametrize(
    "text, a, b, expected",
    [
        ("a & b", TRUE, UNKNOWN, UNKNOWN),
        ("a | b", FALSE, UNKNOWN, UNKNOWN),
        ("!a", UNKNOWN, TRUE, UNKNOWN),
        ("a -> b", UNKNOWN, UNKNOWN, UNKNOWN),
        ("a -> b", FALSE, FALSE, TRUE),
        ("T", UNKNOWN, TRUE, UNKNOWN),
        ("F", TRUE, FALSE, FALSE),
    ],
)
def test_strong_kleene_tables(text, a, b, expected):
    assert eval3(parse_prop(text), {"a": a, "b": b}) == expected


def test_k3_catalog(k3):
    assert k3.labels == ("t", "u", "f")
    catalog = build_catalog_k3(["a"])
    assert sorted(k3.format_set(s) for s in catalog.sets()) == ["{f}", "{t,f}", "{t,u,f}", "{t}", "{}"]
    assert k3.format_base(catalog.witness(k3.empty())) == ["a & !a"]
    assert catalog.witness(k3.full()) == ()


def test_p3_catalog_lacks_the_empty_set(p3):
    catalog = build_catalog_p3(["a"])
    assert sorted(p3.format_set(s) for s in catalog.sets()) == ["{t,u,f}", "{t,u}", "{u,f}", "{u}"]
    # the all-u valuation designates every formula
    assert all(p3.model_index("u") in s for s in catalog.sets())
    with pytest.raises(PreconditionError):
        p3.contradiction()


def test_compatibility_verdicts(k3, p3):
    assert compat_finite(k3.catalog).eviction_compatible
    assert compat_finite(k3.catalog).reception_compatible
    verdict = compat_finite(p3.catalog)
    assert not verdict.eviction_compatible
    assert verdict.reception_compatible


def test_two_atom_catalogs_are_intersection_closed():
    for variant in ("k3", "p3"):
        system = ThreeValuedSystem(["a", "b"], variant)
        sets = system.catalog.sets()
        assert all((x & y) in system.catalog for x in sets for y in sets)
        assert system.catalog.has_universe()


def test_variant_dispatch():
    assert build_catalog_3v(["a"], "k3").sets() == build_catalog_k3(["a"]).sets()
    assert not build_catalog_3v(["a"], "p3").has_empty()
