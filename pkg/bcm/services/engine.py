"""Maxichoice eviction and reception over finite catalogs.

Eviction rejects a set of models, reception accepts one. Both look for the
closest finitely representable sets around the exact target
(``Mod(B) \\ M`` resp. ``Mod(B) | M``) and let a selection policy choose.
"""
import logging
from typing import Callable, Optional, Tuple

from bcm.core.config import settings
from bcm.core.exceptions import IncompatibleError, UniverseMismatchError
from bcm.logics.base import FiniteSatSystem, SatSystem
from bcm.models.catalog import Base, Catalog
from bcm.models.model_set import ModelSet
from bcm.models.reports import EvictionReport, ReceptionReport
from bcm.models.selection import SelectionPolicy

logger = logging.getLogger(__name__)

ChangeOperator = Callable[[Base, ModelSet], Base]


def _check_universe(target: ModelSet, catalog: Catalog) -> None:
    if target.universe_size != catalog.universe_size:
        raise UniverseMismatchError(
            f"target over {target.universe_size} models, catalog over {catalog.universe_size}"
        )


def frsubs(target: ModelSet, catalog: Catalog) -> Tuple[ModelSet, ...]:
    """All ⊆-maximal catalog sets contained in ``target``, in canonical order."""
    _check_universe(target, catalog)
    below = [s for s in catalog.sets() if s <= target]
    return tuple(s for s in below if not any(s < other for other in below))


def frsups(target: ModelSet, catalog: Catalog) -> Tuple[ModelSet, ...]:
    """All ⊆-minimal catalog sets containing ``target``, in canonical order."""
    _check_universe(target, catalog)
    above = [s for s in catalog.sets() if target <= s]
    return tuple(s for s in above if not any(other < s for other in above))


def default_policy() -> SelectionPolicy:
    return SelectionPolicy(mode=settings.DEFAULT_SELECTION)


def evict(
    system: SatSystem,
    base: Base,
    models,
    policy: Optional[SelectionPolicy] = None,
    on_incompatible: str = "error",
) -> EvictionReport:
    """Maxichoice eviction of ``models`` from ``base``.

    Raises:
        IncompatibleError: no representable subset of ``Mod(base) \\ models``
            exists (unless ``on_incompatible == "keep"``, which returns the
            base unchanged).
    """
    policy = policy or default_policy()
    if not isinstance(system, FiniteSatSystem):
        return system.evict(base, models, policy, on_incompatible)

    current = system.models_of(base)
    target = current - models
    candidates = frsubs(target, system.catalog)
    if not candidates:
        explanation = (
            f"{system.name}: no finitely representable subset of {system.format_set(target)}"
            + ("; the empty set has no base" if not system.catalog.has_empty() else "")
        )
        logger.warning("eviction incompatible: %s", explanation)
        if on_incompatible == "keep":
            return EvictionReport(
                result_base=base, result_models=current, models_text=system.format_set(current), kept=True
            )
        raise IncompatibleError(explanation)

    chosen = policy.select(candidates)
    result_base = base if chosen == current else system.catalog.witness(chosen)
    logger.debug("evict: %d candidates, chose %s", len(candidates), system.format_set(chosen))
    return EvictionReport(
        result_base=result_base,
        result_models=chosen,
        candidates=candidates,
        chosen=chosen,
        models_text=system.format_set(chosen),
    )


def receive(
    system: SatSystem,
    base: Base,
    models,
    policy: Optional[SelectionPolicy] = None,
    on_incompatible: str = "error",
) -> ReceptionReport:
    """Maxichoice reception of ``models`` into ``base``.

    Raises:
        IncompatibleError: no representable superset of ``Mod(base) | models``
            exists (unless ``on_incompatible == "keep"``).
    """
    policy = policy or default_policy()
    if not isinstance(system, FiniteSatSystem):
        return system.receive(base, models, policy, on_incompatible)

    current = system.models_of(base)
    target = current | models
    candidates = frsups(target, system.catalog)
    if not candidates:
        explanation = (
            f"{system.name}: no finitely representable superset of {system.format_set(target)}"
            + ("; the full universe has no base" if not system.catalog.has_universe() else "")
        )
        logger.warning("reception incompatible: %s", explanation)
        if on_incompatible == "keep":
            return ReceptionReport(
                result_base=base, result_models=current, models_text=system.format_set(current), kept=True
            )
        raise IncompatibleError(explanation)

    chosen = policy.select(candidates)
    result_base = base if chosen == current else system.catalog.witness(chosen)
    logger.debug("receive: %d candidates, chose %s", len(candidates), system.format_set(chosen))
    return ReceptionReport(
        result_base=result_base,
        result_models=chosen,
        candidates=candidates,
        chosen=chosen,
        models_text=system.format_set(chosen),
    )


def maxichoice_evictor(system: FiniteSatSystem, policy: Optional[SelectionPolicy] = None) -> ChangeOperator:
    """``evict`` as a plain (base, models) -> base function."""

    def operator(base: Base, models: ModelSet) -> Base:
        return evict(system, base, models, policy).result_base

    return operator


def maxichoice_receiver(system: FiniteSatSystem, policy: Optional[SelectionPolicy] = None) -> ChangeOperator:
    """``receive`` as a plain (base, models) -> base function."""

    def operator(base: Base, models: ModelSet) -> Base:
        return receive(system, base, models, policy).result_base

    return operator
