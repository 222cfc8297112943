import re

from bcm.logics.horn import HornSystem, all_clauses, build_catalog_horn, meet_closed
from bcm.models.model_set import ModelSet
from bcm.services.diagnostics import rmbp_check, rmbp_sample, uniqueness_audit
from bcm.services.engine import frsubs
from bcm.services.poset import hasse_graph, lattice_export
from bcm.utils.model_spec import parse_model_spec


def test_aliases_for_two_atoms(horn2):
    assert horn2.label(horn2.model_index("ha")) == "ff"
    assert horn2.label(horn2.model_index("hb")) == "tf"
    assert horn2.label(horn2.model_index("hc")) == "ft"
    assert horn2.label(horn2.model_index("hd")) == "tt"
    assert HornSystem(["a"]).aliases() == {}


def test_catalog_has_fourteen_sets(horn2):
    catalog = horn2.catalog
    assert len(catalog) == 14
    missing = [s for s in ModelSet.all_subsets(4) if s not in catalog]
    assert sorted(horn2.format_set(s) for s in missing) == ["{tf,ft}", "{tt,tf,ft}"]
    assert horn2.format_base(catalog.witness(horn2.empty())) == ["F"]
    assert horn2.format_base(catalog.witness(horn2.full())) == ["a -> a"]


def test_catalog_matches_meet_closure(horn2):
    catalog = build_catalog_horn(["a", "b"])
    for target in ModelSet.all_subsets(4):
        valuations = [horn2.valuations[i] for i in target.indices()]
        assert (target in catalog) == meet_closed(valuations)


def test_clause_enumeration():
    clauses = all_clauses(("a", "b"))
    assert len(clauses) == 8
    assert [str(c) for c in clauses[:3]] == ["a", "b", "F"]


def test_non_representable_sets_have_two_maximal_subsets(horn2):
    target = parse_model_spec("{hb,hc}", horn2)
    assert [horn2.format_set(s) for s in frsubs(target, horn2.catalog)] == ["{ft}", "{tf}"]
    upper = parse_model_spec("{hb,hc,hd}", horn2)
    assert [horn2.format_set(s) for s in frsubs(upper, horn2.catalog)] == ["{tt,ft}", "{tt,tf}"]


def test_rmbp_and_uniqueness(horn2):
    verdict = rmbp_check(horn2, rmbp_sample(horn2))
    assert verdict.passed
    report = uniqueness_audit(horn2.catalog, rmbp_verified=True)
    assert report.max_frsups() == 1
    assert len(report.frsubs_counts) == 16
    flagged = report.multiple_frsubs()
    assert len(flagged) == 2
    assert all(report.frsubs_counts[t] == 2 for t in flagged)


def test_lattice_marks_representable_sets_and_thick_arrows(horn2):
    highlight = [parse_model_spec("{hb,hc}", horn2)]
    graph = hasse_graph(horn2.catalog, highlight, labels=horn2.labels)
    assert graph.number_of_nodes() == 16
    assert sum(1 for _, data in graph.nodes(data=True) if data["shape"] == "box") == 14
    thick = [(u, v) for u, v, data in graph.edges(data=True) if data["penwidth"] == "3"]
    assert len(thick) == 2

    dot = lattice_export(horn2.catalog, highlight, labels=horn2.labels)
    assert len(re.findall(r'shape="?box"?', dot)) == 14
    assert len(re.findall(r'penwidth="?3"?', dot)) == 2
    assert dot == lattice_export(horn2.catalog, highlight, labels=horn2.labels)
