"""Classical propositional logic over a finite signature, and its two counterexample fragments.

The fragments restrict the language of bases: ``atoms`` admits bare atoms
only, ``atoms-falsum`` admits atoms and ``F``. With ``single_formula`` a
base holds at most one formula, so bases are no longer conjunctive.
"""
import logging
from itertools import combinations, product
from typing import Collection, Dict, Iterator, Literal, Optional, Tuple

from pydantic import BaseModel, ConfigDict

from bcm.core.config import settings
from bcm.core.exceptions import BoundExceededError, FormulaSyntaxError, PreconditionError
from bcm.logics.base import FiniteSatSystem
from bcm.models.catalog import Base, Catalog
from bcm.models.formula import And, Atom, Const, Not, PropFormula, conjoin, disjoin, eval_classical
from bcm.models.model_set import ModelSet
from bcm.utils.formula_parser import parse_prop

logger = logging.getLogger(__name__)

Valuation = Dict[str, bool]


class FragmentSpec(BaseModel):
    """Which formulas a base may contain."""

    model_config = ConfigDict(frozen=True)

    kind: Literal["full", "atoms", "atoms-falsum"] = "full"
    single_formula: bool = False

    def allows(self, formula: PropFormula) -> bool:
        if self.kind == "full":
            return True
        if isinstance(formula, Atom):
            return True
        return self.kind == "atoms-falsum" and formula == Const(False)

    @property
    def suffix(self) -> str:
        letter = {"full": "", "atoms": "-t", "atoms-falsum": "-p"}[self.kind]
        return letter + ("1" if self.single_formula else "")


FULL = FragmentSpec()
ATOMS_ONLY = FragmentSpec(kind="atoms")
ATOMS_FALSUM = FragmentSpec(kind="atoms-falsum")


def enumerate_valuations(atoms: Tuple[str, ...]) -> Tuple[Valuation, ...]:
    """All 2^n valuations, true before false, first atom varying slowest."""
    return tuple(dict(zip(atoms, values)) for values in product((True, False), repeat=len(atoms)))


def valuation_label(valuation: Valuation) -> str:
    return "".join("t" if value else "f" for value in valuation.values())


def check_signature(atoms: Collection[str], bound: int, logic: str) -> Tuple[str, ...]:
    atoms = tuple(atoms)
    if not atoms:
        raise PreconditionError(f"{logic} needs a non-empty signature")
    if len(atoms) > bound:
        raise BoundExceededError(f"{logic} signature of {len(atoms)} atoms exceeds the bound of {bound}")
    return atoms


class PropSystem(FiniteSatSystem):
    """Satisfaction system of classical propositional logic (or a fragment of it)."""

    def __init__(self, atoms: Collection[str], fragment: FragmentSpec = FULL, bound: Optional[int] = None):
        bound = settings.MAX_PROP_ATOMS if bound is None else bound
        self.atoms = check_signature(atoms, bound, "prop")
        self.fragment = fragment
        self.name = "prop" + fragment.suffix
        self.conjunctive = not fragment.single_formula
        self.valuations = enumerate_valuations(self.atoms)
        self._labels = tuple(valuation_label(v) for v in self.valuations)

    @property
    def labels(self) -> Tuple[str, ...]:
        return self._labels

    def parse_formula(self, text: str) -> PropFormula:
        formula = parse_prop(text, self.atoms)
        if not self.fragment.allows(formula):
            raise FormulaSyntaxError(f"formula not in the language of {self.name}", 1, text)
        return formula

    def check_base(self, base: Base) -> None:
        if self.fragment.single_formula and len(base) > 1:
            raise FormulaSyntaxError(f"{self.name} bases hold at most one formula", 1)

    def satisfies(self, index: int, formula: PropFormula) -> bool:
        return eval_classical(formula, self.valuations[index])

    def contradiction(self) -> Base:
        if self.fragment.kind == "full":
            first = Atom(self.atoms[0])
            return (And(first, Not(first)),)
        if self.fragment.kind == "atoms-falsum":
            return (Const(False),)
        raise PreconditionError(f"{self.name} has no inconsistent base")

    def dnf_formula(self, target: ModelSet) -> PropFormula:
        """Disjunction over the target valuations of their full literal conjunctions."""
        if target.is_empty():
            return self.contradiction()[0] if self.fragment.kind == "full" else Const(False)
        terms = []
        for index in target.indices():
            literals = tuple(
                Atom(atom) if value else Not(Atom(atom))
                for atom, value in self.valuations[index].items()
            )
            terms.append(conjoin(literals))
        return disjoin(tuple(terms))

    def fragment_bases(self) -> Tuple[Base, ...]:
        """Every base of the fragment, smallest first."""
        formulas = [Atom(atom) for atom in self.atoms]
        if self.fragment.kind == "atoms-falsum":
            formulas = [Const(False)] + formulas
        largest = 1 if self.fragment.single_formula else len(formulas)
        return tuple(
            tuple(chosen)
            for size in range(largest + 1)
            for chosen in combinations(formulas, size)
        )

    def catalog_entries(self) -> Iterator[Tuple[ModelSet, Base]]:
        if self.fragment.kind == "full":
            for target in ModelSet.all_subsets(self.universe_size):
                yield target, (self.dnf_formula(target),)
            return
        for base in self.fragment_bases():
            yield self.models_of(base), base

    def grid_bases(self) -> Tuple[Base, ...]:
        if self.fragment.kind == "full":
            return super().grid_bases()
        return self.fragment_bases()


def models_of_prop(base: Base, signature: Collection[str]) -> ModelSet:
    """``Mod(B)`` by full enumeration of the 2^n valuations."""
    return PropSystem(signature).models_of(base)


def dnf_base_for(target: ModelSet, signature: Collection[str]) -> Base:
    """Single-formula base whose models are exactly ``target``."""
    return (PropSystem(signature).dnf_formula(target),)


def build_catalog_prop(signature: Collection[str], fragment: FragmentSpec = FULL, bound: Optional[int] = None) -> Catalog:
    return PropSystem(signature, fragment, bound).catalog
