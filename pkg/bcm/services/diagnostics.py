"""Compatibility verdicts, RMBP checks and counterexample evidence."""
import logging
from functools import reduce
from typing import Iterable, Optional, Sequence, Tuple

from bcm.core.exceptions import BeliefChangeError, IncompatibleError, PreconditionError
from bcm.logics.base import FiniteSatSystem, SatSystem, SymbolicSatSystem
from bcm.models.catalog import Base, Catalog
from bcm.models.model_set import ModelSet
from bcm.models.reports import CombinationEvidence, CompatVerdict, RmbpVerdict, UniquenessReport
from bcm.services.engine import default_policy, frsubs, frsups
from bcm.services.poset import immediate_neighbors

logger = logging.getLogger(__name__)


def intersection_counterexample(catalog: Catalog, target: ModelSet) -> CombinationEvidence:
    """Intersect the maximal representable subsets of ``target``.

    When the intersection is not representable, no operator can keep
    exactly the models common to every candidate.

    Raises:
        PreconditionError: ``target`` has fewer than two maximal subsets.
    """
    family = frsubs(target, catalog)
    if len(family) < 2:
        raise PreconditionError(f"frsubs has {len(family)} element(s); at least 2 required")
    combined = reduce(lambda left, right: left & right, family)
    return CombinationEvidence(family=family, combined=combined, representable=combined in catalog)


def union_counterexample(catalog: Catalog, target: ModelSet) -> CombinationEvidence:
    """Dual of :func:`intersection_counterexample` over the minimal supersets."""
    family = frsups(target, catalog)
    if len(family) < 2:
        raise PreconditionError(f"frsups has {len(family)} element(s); at least 2 required")
    combined = reduce(lambda left, right: left | right, family)
    return CombinationEvidence(family=family, combined=combined, representable=combined in catalog)


def rmbp_check(system: FiniteSatSystem, sample: Iterable[Tuple[Base, Base]]) -> RmbpVerdict:
    """Joint satisfaction of two bases must coincide with satisfaction of their union."""
    checked = 0
    for first, second in sample:
        union = tuple(dict.fromkeys(first + second))
        for index in range(system.universe_size):
            jointly = system.satisfies_base(index, first) and system.satisfies_base(index, second)
            if jointly != system.satisfies_base(index, union):
                logger.warning("%s violates RMBP at model %s", system.name, system.label(index))
                return RmbpVerdict(passed=False, checked_pairs=checked, witness=(first, second, index))
        checked += 1
    return RmbpVerdict(passed=True, checked_pairs=checked)


def rmbp_sample(system: FiniteSatSystem) -> Tuple[Tuple[Base, Base], ...]:
    """Every ordered pair of grid bases."""
    bases = system.grid_bases()
    return tuple((first, second) for first in bases for second in bases)


def uniqueness_audit(catalog: Catalog, rmbp_verified: bool = False) -> UniquenessReport:
    """Count maximal subsets and minimal supersets of every target.

    Only the FRsups half is enforced for RMBP systems; FRsubs multiplicities
    are reported because two-atom Horn logic has the RMBP and still has
    targets with two maximal representable subsets.

    Raises:
        BeliefChangeError: ``rmbp_verified`` and some target has two or more
            minimal representable supersets.
    """
    subs_counts = {}
    sups_counts = {}
    for target in ModelSet.all_subsets(catalog.universe_size):
        subs_counts[target] = len(frsubs(target, catalog))
        sups_counts[target] = len(frsups(target, catalog))
    report = UniquenessReport(frsubs_counts=subs_counts, frsups_counts=sups_counts)
    if rmbp_verified and report.max_frsups() > 1:
        raise BeliefChangeError(f"RMBP system with {report.max_frsups()} minimal supersets for one target")
    for target in report.multiple_frsubs():
        logger.info("target %s has %d maximal representable subsets", sorted(target.members), subs_counts[target])
    return report


def _format_indices(model_set: ModelSet, labels: Optional[Sequence[str]]) -> str:
    return "{" + ",".join(labels[i] if labels else str(i) for i in model_set.indices()) + "}"


def compat_finite(catalog: Catalog, labels: Optional[Sequence[str]] = None) -> CompatVerdict:
    """For finite catalogs: eviction iff the empty set, reception iff the universe is representable.

    A negative verdict names the models every representable set contains
    (resp. no representable set contains) when there are any.
    """
    evictable = catalog.has_empty()
    receivable = catalog.has_universe()
    eviction_reason = "empty set representable"
    reception_reason = "universe representable"
    if not evictable:
        common = reduce(lambda left, right: left & right, catalog.sets())
        eviction_reason = (
            f"{_format_indices(common, labels)} in every representable set"
            if not common.is_empty() else "empty set not representable"
        )
    if not receivable:
        missing = reduce(lambda left, right: left | right, catalog.sets()).complement()
        reception_reason = (
            f"{_format_indices(missing, labels)} in no representable set"
            if not missing.is_empty() else "universe not representable"
        )
    return CompatVerdict(
        eviction_compatible=evictable,
        reception_compatible=receivable,
        eviction_reason=eviction_reason,
        reception_reason=reception_reason,
    )


def brute_force_compat(catalog: Catalog) -> CompatVerdict:
    """Oracle: check non-empty FRsubs/FRsups for every reachable target.

    ``Mod(B) \\ M`` ranges over the sets below some catalog set, and
    ``Mod(B) | M`` over the sets above some catalog set.
    """
    sets = catalog.sets()
    evict_blocker: Optional[ModelSet] = None
    receive_blocker: Optional[ModelSet] = None
    for target in ModelSet.all_subsets(catalog.universe_size):
        if evict_blocker is None and any(target <= s for s in sets) and not frsubs(target, catalog):
            evict_blocker = target
        if receive_blocker is None and any(s <= target for s in sets) and not frsups(target, catalog):
            receive_blocker = target
    return CompatVerdict(
        eviction_compatible=evict_blocker is None,
        reception_compatible=receive_blocker is None,
        eviction_reason="" if evict_blocker is None else f"no maximal subset of {sorted(evict_blocker.members)}",
        reception_reason="" if receive_blocker is None else f"no minimal superset of {sorted(receive_blocker.members)}",
    )


def neighbor_compat(catalog: Catalog) -> CompatVerdict:
    """Compatibility through immediate neighbours in (catalog ∪ {target}, ⊂).

    Eviction: every target is representable, has an immediate predecessor,
    or has no representable superset. Reception is the dual.
    """
    sets = catalog.sets()
    evictable = True
    receivable = True
    for target in ModelSet.all_subsets(catalog.universe_size):
        if target in catalog:
            continue
        neighbors = immediate_neighbors(catalog, target)
        if not neighbors.predecessors and any(target <= s for s in sets):
            evictable = False
        if not neighbors.successors and any(s <= target for s in sets):
            receivable = False
    return CompatVerdict(eviction_compatible=evictable, reception_compatible=receivable)


def _probe(operation, probe, policy) -> Tuple[bool, str]:
    base, models, holds = probe
    try:
        operation(base, models, policy)
    except IncompatibleError as e:
        return False, e.explanation
    return True, holds


def compat_symbolic(system: SymbolicSatSystem) -> CompatVerdict:
    """Verdict for an infinite system from its known instances.

    Each probe is run; an incompatibility error on it decides "no" and its
    explanation becomes the reason.
    """
    policy = default_policy()
    evictable, eviction_reason = _probe(system.evict, system.eviction_probe(), policy)
    receivable, reception_reason = _probe(system.receive, system.reception_probe(), policy)
    return CompatVerdict(
        eviction_compatible=evictable,
        reception_compatible=receivable,
        eviction_reason=eviction_reason,
        reception_reason=reception_reason,
    )


def compat(system: SatSystem) -> CompatVerdict:
    if isinstance(system, FiniteSatSystem):
        return compat_finite(system.catalog, system.labels)
    return compat_symbolic(system)
