"""Postulate verification for eviction and reception operators.

An operator is any function ``(base, models) -> base``. Each check runs it
over a grid of cases and records, per postulate, every case that violates
it together with the observed model sets. Cases where the operator raises
IncompatibleError are counted as skipped: the representation theorems only
speak about compatible inputs.
"""
import logging
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from bcm.core.exceptions import IncompatibleError
from bcm.logics.base import FiniteSatSystem
from bcm.models.catalog import Base
from bcm.models.model_set import ModelSet
from bcm.models.reports import MonotonyWitness, PostulateCase, PostulateReport, PostulateStatus
from bcm.models.selection import SelectionPolicy
from bcm.services.engine import ChangeOperator, frsubs, frsups, receive

logger = logging.getLogger(__name__)

EVICTION_POSTULATES = ("success", "inclusion", "vacuity", "finite retainment", "uniformity")
RECEPTION_POSTULATES = ("success", "persistence", "vacuity", "finite temperance", "uniformity")

Case = Tuple[Base, ModelSet]


def exhaustive_cases(system: FiniteSatSystem) -> List[Case]:
    """Every grid base of the system paired with every subset of the universe."""
    subsets = ModelSet.all_subsets(system.universe_size)
    return [(base, models) for base in system.grid_bases() for models in subsets]


def _run(system: FiniteSatSystem, operator: ChangeOperator, cases: Iterable[Case]):
    """Apply the operator to every case; return (base, models, Mod(base), Mod(result)) rows and the skip count."""
    outcomes = []
    skipped = 0
    for base, models in cases:
        try:
            result = operator(base, models)
        except IncompatibleError:
            skipped += 1
            continue
        outcomes.append((base, models, system.models_of(base), system.models_of(result)))
    return outcomes, skipped


def _uniformity_failures(
    outcomes: Sequence[Tuple[Base, ModelSet, ModelSet, ModelSet]],
    family_of,
) -> List[PostulateCase]:
    first_seen: Dict[Tuple[ModelSet, ...], ModelSet] = {}
    failures = []
    for base, models, base_models, result in outcomes:
        family = family_of(base_models, models)
        expected = first_seen.setdefault(family, result)
        if result != expected:
            failures.append(
                PostulateCase(
                    base=base,
                    models=models,
                    base_models=base_models,
                    result_models=result,
                    detail=f"same candidate family, earlier result {sorted(expected.members)}",
                )
            )
    return failures


def check_eviction_postulates(
    system: FiniteSatSystem,
    operator: ChangeOperator,
    cases: Optional[Iterable[Case]] = None,
) -> PostulateReport:
    """Success, inclusion, vacuity, finite retainment and uniformity."""
    catalog = system.catalog
    cases = list(exhaustive_cases(system) if cases is None else cases)
    outcomes, skipped = _run(system, operator, cases)
    failures: Dict[str, List[PostulateCase]] = {name: [] for name in EVICTION_POSTULATES}

    for base, models, base_models, result in outcomes:
        def fail(name: str, detail: str = "") -> None:
            failures[name].append(
                PostulateCase(base=base, models=models, base_models=base_models, result_models=result, detail=detail)
            )

        if not (result & models).is_empty():
            fail("success")
        if not result <= base_models:
            fail("inclusion")
        if (base_models & models).is_empty() and result != base_models:
            fail("vacuity")
        target = base_models - models
        between = [s for s in catalog.sets() if result < s and s <= target]
        if between:
            fail("finite retainment", f"representable {sorted(between[0].members)} lies in between")

    failures["uniformity"] = _uniformity_failures(
        outcomes, lambda base_models, models: frsubs(base_models - models, catalog)
    )
    report = PostulateReport(
        kind="eviction",
        statuses=[PostulateStatus(name=name, failures=failures[name]) for name in EVICTION_POSTULATES],
        cases=len(cases),
        skipped=skipped,
    )
    logger.info("%s eviction postulates: %d cases, %d skipped, failed %s",
                system.name, len(cases), skipped, report.failed_names())
    return report


def check_reception_postulates(
    system: FiniteSatSystem,
    operator: ChangeOperator,
    cases: Optional[Iterable[Case]] = None,
) -> PostulateReport:
    """Success, persistence, vacuity, finite temperance and uniformity."""
    catalog = system.catalog
    cases = list(exhaustive_cases(system) if cases is None else cases)
    outcomes, skipped = _run(system, operator, cases)
    failures: Dict[str, List[PostulateCase]] = {name: [] for name in RECEPTION_POSTULATES}

    for base, models, base_models, result in outcomes:
        def fail(name: str, detail: str = "") -> None:
            failures[name].append(
                PostulateCase(base=base, models=models, base_models=base_models, result_models=result, detail=detail)
            )

        if not models <= result:
            fail("success")
        if not base_models <= result:
            fail("persistence")
        if models <= base_models and result != base_models:
            fail("vacuity")
        target = base_models | models
        between = [s for s in catalog.sets() if target <= s and s < result]
        if between:
            fail("finite temperance", f"representable {sorted(between[0].members)} lies in between")

    failures["uniformity"] = _uniformity_failures(
        outcomes, lambda base_models, models: frsups(base_models | models, catalog)
    )
    report = PostulateReport(
        kind="reception",
        statuses=[PostulateStatus(name=name, failures=failures[name]) for name in RECEPTION_POSTULATES],
        cases=len(cases),
        skipped=skipped,
    )
    logger.info("%s reception postulates: %d cases, %d skipped, failed %s",
                system.name, len(cases), skipped, report.failed_names())
    return report


def vacuity_redundancy_holds(report: PostulateReport) -> bool:
    """Vacuity never fails when the two postulates that imply it hold."""
    if report.kind == "eviction":
        premises = ("inclusion", "finite retainment")
    else:
        premises = ("persistence", "finite temperance")
    if all(report.status(name).passed for name in premises):
        return report.status("vacuity").passed
    return True


def monotony_probe(system: FiniteSatSystem, policy: Optional[SelectionPolicy] = None) -> Optional[MonotonyWitness]:
    """First (B, B', M) in canonical order with Mod(B) ⊆ Mod(B') but the receptions not nested."""
    catalog = system.catalog
    sets = catalog.sets()
    subsets = ModelSet.all_subsets(system.universe_size)
    results: Dict[Tuple[ModelSet, ModelSet], Optional[ModelSet]] = {}

    def received(model_set: ModelSet, models: ModelSet) -> Optional[ModelSet]:
        key = (model_set, models)
        if key not in results:
            try:
                results[key] = receive(system, catalog.witness(model_set), models, policy).result_models
            except IncompatibleError:
                results[key] = None
        return results[key]

    for smaller in sets:
        for larger in sets:
            if not smaller <= larger:
                continue
            for models in subsets:
                result = received(smaller, models)
                larger_result = received(larger, models)
                if result is None or larger_result is None:
                    continue
                if not result <= larger_result:
                    return MonotonyWitness(
                        base=catalog.witness(smaller),
                        larger_base=catalog.witness(larger),
                        models=models,
                        result=result,
                        larger_result=larger_result,
                    )
    return None
