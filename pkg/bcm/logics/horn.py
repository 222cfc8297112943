"""Propositional Horn logic: the classical valuations, with bases restricted to Horn formulas."""
import logging
from itertools import combinations
from typing import Collection, Dict, Iterator, List, Mapping, Optional, Tuple

from bcm.core.config import settings
from bcm.logics.base import FiniteSatSystem
from bcm.logics.prop import Valuation, check_signature, enumerate_valuations, valuation_label
from bcm.models.catalog import Base, Catalog
from bcm.models.formula import HornClause, HornFormula, horn_clause
from bcm.models.model_set import ModelSet
from bcm.utils.formula_parser import parse_horn

logger = logging.getLogger(__name__)

# Names used for the four valuations of a two-atom signature
TWO_ATOM_ALIASES = {"ha": "ff", "hb": "tf", "hc": "ft", "hd": "tt"}


def horn_sat(valuation: Mapping[str, bool], formula: HornFormula) -> bool:
    return formula.holds(valuation)


def all_clauses(atoms: Tuple[str, ...]) -> List[HornClause]:
    """Every clause over ``atoms`` whose head is not in its body, smallest bodies first."""
    clauses = []
    for size in range(len(atoms) + 1):
        for body in combinations(atoms, size):
            for head in atoms:
                if head not in body:
                    clauses.append(horn_clause(body, head))
            clauses.append(horn_clause(body, None))
    return clauses


def meet_closed(valuations: Collection[Valuation]) -> bool:
    """Whether a set of valuations is closed under pointwise conjunction.

    Over a finite signature these are exactly the Horn-definable sets.
    """
    valuations = list(valuations)
    for left in valuations:
        for right in valuations:
            meet = {atom: left[atom] and right[atom] for atom in left}
            if meet not in valuations:
                return False
    return True


class HornSystem(FiniteSatSystem):
    name = "horn"

    def __init__(self, atoms: Collection[str], bound: Optional[int] = None):
        bound = settings.MAX_HORN_ATOMS if bound is None else bound
        self.atoms = check_signature(atoms, bound, "horn")
        self.valuations = enumerate_valuations(self.atoms)
        self._labels = tuple(valuation_label(v) for v in self.valuations)
        self.clauses = all_clauses(self.atoms)

    @property
    def labels(self) -> Tuple[str, ...]:
        return self._labels

    def aliases(self) -> Dict[str, int]:
        if len(self.atoms) != 2:
            return {}
        return {alias: self._labels.index(label) for alias, label in TWO_ATOM_ALIASES.items()}

    def parse_formula(self, text: str) -> HornFormula:
        return parse_horn(text, self.atoms)

    def satisfies(self, index: int, formula: HornFormula) -> bool:
        return horn_sat(self.valuations[index], formula)

    def contradiction(self) -> Base:
        return (HornFormula.of([horn_clause((), None)]),)

    def tautology(self) -> Base:
        first = self.atoms[0]
        return (HornFormula.of([horn_clause((first,), first)]),)

    def catalog_entries(self) -> Iterator[Tuple[ModelSet, Base]]:
        yield self.empty(), self.contradiction()
        yield self.full(), self.tautology()
        for target in ModelSet.all_subsets(self.universe_size):
            # the strongest clause set true on the target; it pins the target down iff the target is meet-closed
            valuations = [self.valuations[i] for i in target.indices()]
            base = tuple(
                HornFormula.of([clause])
                for clause in self.clauses
                if all(clause.holds(valuation) for valuation in valuations)
            )
            denoted = self.models_of(base)
            if denoted == target:
                yield target, base
            else:
                logger.debug("horn: %s is not representable", self.format_set(target))

    def grid_bases(self) -> Tuple[Base, ...]:
        """Every base of at most two clauses, then the catalog witnesses."""
        singles = [HornFormula.of([clause]) for clause in self.clauses]
        bases: Dict[Base, None] = {(): None}
        for size in (1, 2):
            for chosen in combinations(singles, size):
                bases.setdefault(tuple(chosen), None)
        for base in super().grid_bases():
            bases.setdefault(base, None)
        return tuple(bases)


def build_catalog_horn(signature: Collection[str], bound: Optional[int] = None) -> Catalog:
    return HornSystem(signature, bound).catalog
