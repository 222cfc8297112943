"""The NeXt fragment of LTL: formulas ``X^m p`` over pointed Kripke structures.

Every finite base is a theory here: the chain model of a base satisfies it
and falsifies every other formula. Hence ``Mod(B1) <= Mod(B2)`` iff
``B2 <= B1``, and both operators work directly on bases.
"""
import logging
from typing import Collection, List, Optional, Tuple, Union

from bcm.core.config import settings
from bcm.core.exceptions import BoundExceededError, IncompatibleError, PreconditionError
from bcm.logics.base import SymbolicSatSystem
from bcm.models.catalog import Base
from bcm.models.formula import XFormula
from bcm.models.kripke import ExplicitModelSet, IntensionalModels, PointedKripke
from bcm.models.reports import EvictionReport, ReceptionReport
from bcm.models.selection import SelectionPolicy
from bcm.utils.formula_parser import parse_xformula

logger = logging.getLogger(__name__)

LtlxModels = Union[ExplicitModelSet, IntensionalModels]


def states_at_depth(model: PointedKripke, depth: int) -> frozenset:
    frontier = frozenset((model.initial,))
    for _ in range(depth):
        frontier = frozenset(t for s in frontier for t in model.successors(s))
    return frontier


def sat_x(model: PointedKripke, formula: XFormula) -> bool:
    """``formula.atom`` holds at every state reachable in exactly ``formula.depth`` steps."""
    return all(formula.atom in model.label_of(state) for state in states_at_depth(model, formula.depth))


def sat_base(model: PointedKripke, base: Base) -> bool:
    return all(sat_x(model, formula) for formula in base)


def rcp_x(base: Base, models: ExplicitModelSet) -> Base:
    """The formulas of ``base`` that every input model satisfies."""
    return tuple(formula for formula in base if all(sat_x(model, formula) for model in models.models))


def chain_model(base: Base, excluded: XFormula) -> PointedKripke:
    """States s0..sm in a line with a loop on sm, labelled so that exactly ``base`` holds."""
    if excluded in base:
        raise PreconditionError(f"{excluded} is in the base")
    last = max([f.depth for f in base] + [excluded.depth])
    states = [f"s{i}" for i in range(last + 1)]
    edges = [(states[i], states[i + 1]) for i in range(last)] + [(states[last], states[last])]
    labels = {state: [] for state in states}
    for formula in base:
        labels[states[formula.depth]].append(formula.atom)
    return PointedKripke.build(states, edges, labels, states[0], name="chain")


def universal_model(signature: Collection[str]) -> PointedKripke:
    """One looping state labelled with every atom: a model of every base."""
    return PointedKripke.build(["u"], [("u", "u")], {"u": list(signature)}, "u", name="universal")


def satisfies_everything(model: PointedKripke, signature: Collection[str]) -> bool:
    """Whether every reachable state carries every atom, i.e. no formula is false in ``model``."""
    needed = set(signature)
    return all(needed <= model.label_of(state) for state in model.reachable())


def least_falsified(
    model: PointedKripke, signature: Tuple[str, ...], limit: Optional[int] = None
) -> Tuple[XFormula, ...]:
    """The formulas falsified at the least depth that falsifies anything, in signature order.

    Raises:
        BoundExceededError: nothing is falsified within the search depth.
    """
    limit = settings.LTLX_SEARCH_DEPTH if limit is None else limit
    frontier = frozenset((model.initial,))
    for depth in range(limit + 1):
        falsified = tuple(
            XFormula(depth, atom)
            for atom in signature
            if any(atom not in model.label_of(state) for state in frontier)
        )
        if falsified:
            return falsified
        frontier = frozenset(t for s in frontier for t in model.successors(s))
    raise BoundExceededError(f"no falsified formula within depth {limit} for model {model.name or model.initial}")


class LtlxSystem(SymbolicSatSystem):
    name = "ltlx"

    def __init__(self, atoms: Collection[str]):
        self.atoms = tuple(atoms)
        if not self.atoms:
            raise PreconditionError("ltlx needs a non-empty signature")

    def parse_formula(self, text: str) -> XFormula:
        return parse_xformula(text, self.atoms)

    def _describe(self, base: Base) -> str:
        return "Mod({" + ", ".join(str(f) for f in base) + "})"

    def evict(self, base: Base, models: LtlxModels, policy: SelectionPolicy, on_incompatible: str = "error") -> EvictionReport:
        """Maxichoice eviction: ``base`` plus a minimal set of formulas falsified by each remaining input model.

        Each model is excluded by a formula it falsifies at its least
        falsifying depth: the first in signature order under ``lex-min``, the
        last under ``lex-max``.

        No base excludes a model that satisfies everything, so an input
        holding such a model (every intensional input does) is incompatible.
        """
        self.check_policy(policy)
        if isinstance(models, IntensionalModels):
            blocking = universal_model(self.atoms)
        else:
            blocking = next((m for m in models.models if satisfies_everything(m, self.atoms)), None)
        if blocking is not None:
            explanation = (
                f"ltlx: the model {blocking.name or blocking.initial} satisfies every base, "
                "so no representable set excludes it"
            )
            logger.warning("eviction incompatible: %s", explanation)
            if on_incompatible == "keep":
                return EvictionReport(result_base=base, models_text=self._describe(base), kept=True)
            raise IncompatibleError(explanation, witness=universal_model(self.atoms))

        remaining = [m for m in models.models if sat_base(m, base)]
        added: List[XFormula] = []
        for model in remaining:
            if not any(not sat_x(model, f) for f in added):
                choices = least_falsified(model, self.atoms)
                added.append(choices[-1] if policy.mode == "lex-max" else choices[0])
        # drop additions the other additions already cover
        for formula in list(added):
            rest = [f for f in added if f != formula]
            if all(any(not sat_x(m, f) for f in rest) for m in remaining):
                added = rest
        result = base + tuple(added)
        logger.debug("evict: added %s", ", ".join(str(f) for f in added) or "nothing")
        return EvictionReport(result_base=result, models_text=self._describe(result))

    def receive(self, base: Base, models: LtlxModels, policy: SelectionPolicy, on_incompatible: str = "error") -> ReceptionReport:
        self.check_policy(policy)
        if isinstance(models, IntensionalModels):
            result = tuple(f for f in base if f in models.base)
        else:
            result = rcp_x(base, models)
        return ReceptionReport(result_base=result, models_text=self._describe(result))

    def eviction_probe(self) -> Tuple[Base, LtlxModels, str]:
        # evicting all models of the empty base leaves the empty set
        return (), IntensionalModels(base=()), "explicit model lists are excluded by falsified formulas"

    def reception_probe(self) -> Tuple[Base, LtlxModels, str]:
        first = XFormula(0, self.atoms[0])
        models = ExplicitModelSet.of([chain_model((), first)])
        return (first,), models, "every finite base is a theory, so the retained formulas give the least superset"
