import pytest

from bcm.services.engine import maxichoice_evictor, maxichoice_receiver
from bcm.services.postulates import (
    check_eviction_postulates,
    check_reception_postulates,
    exhaustive_cases,
    monotony_probe,
    vacuity_redundancy_holds,
)

SYSTEMS = ["prop2", "prop_t", "prop_p", "prop_t1", "prop_p1", "horn2", "k3", "p3", "goedel1"]


@pytest.mark.parametrize("name", SYSTEMS)
def test_maxichoice_operators_satisfy_every_postulate(name, request):
    system = request.getfixturevalue(name)
    eviction = check_eviction_postulates(system, maxichoice_evictor(system))
    reception = check_reception_postulates(system, maxichoice_receiver(system))
    assert eviction.failed_names() == []
    assert reception.failed_names() == []
    assert eviction.cases == len(exhaustive_cases(system))
    assert vacuity_redundancy_holds(eviction) and vacuity_redundancy_holds(reception)


def test_incompatible_cases_are_skipped(prop_t, p3):
    assert check_eviction_postulates(prop_t, maxichoice_evictor(prop_t)).skipped > 0
    assert check_eviction_postulates(p3, maxichoice_evictor(p3)).skipped > 0
    assert check_reception_postulates(prop_t, maxichoice_receiver(prop_t)).skipped == 0


def test_identity_evictor_fails_success(prop2):
    report = check_eviction_postulates(prop2, lambda base, models: base)
    # bases sharing a target keep different model sets
    assert report.failed_names() == ["success", "uniformity"]
    case = report.status("success").failures[0]
    assert not (case.result_models & case.models).is_empty()


def test_contradiction_evictor_fails_vacuity_and_retainment(prop2):
    report = check_eviction_postulates(prop2, lambda base, models: prop2.contradiction())
    assert report.failed_names() == ["vacuity", "finite retainment"]
    assert vacuity_redundancy_holds(report)
    detail = report.status("finite retainment").failures[0].detail
    assert "lies in between" in detail


def test_tautology_receiver_fails_vacuity_and_temperance(prop2):
    report = check_reception_postulates(prop2, lambda base, models: ())
    assert report.failed_names() == ["vacuity", "finite temperance"]


def test_monotony(prop2, prop_p1):
    assert monotony_probe(prop2) is None
    witness = monotony_probe(prop_p1)
    assert witness is not None
    assert prop_p1.models_of(witness.base) <= prop_p1.models_of(witness.larger_base)
    assert not witness.result <= witness.larger_result


@pytest.mark.parametrize("name", ["horn2", "prop_p"])
def test_monotony_holds_on_intersection_closed_catalogs(name, request):
    system = request.getfixturevalue(name)
    assert system.catalog.conjunctive
    assert monotony_probe(system) is None
