"""Strong Kleene (K3) and Priest (P3) three-valued propositional logics.

Both share the truth tables over ``f < u < t``; K3 designates ``t`` only,
P3 designates ``t`` and ``u``. The language has no truth constants of its
own: ``T`` and ``F`` abbreviate ``a | !a`` and ``a & !a`` for the first
atom ``a`` of the valuation, and ``x -> y`` abbreviates ``!x | y``.
"""
import logging
from itertools import product
from typing import Collection, Dict, FrozenSet, Iterator, Literal, Mapping, NamedTuple, Optional, Tuple

from bcm.core.config import settings
from bcm.core.exceptions import PreconditionError
from bcm.logics.base import FiniteSatSystem, connective_closure, intersection_closure
from bcm.logics.prop import check_signature
from bcm.models.catalog import Base, Catalog
from bcm.models.formula import And, Atom, Const, Implies, Not, Or, PropFormula
from bcm.models.model_set import ModelSet
from bcm.utils.formula_parser import parse_prop

logger = logging.getLogger(__name__)

FALSE, UNKNOWN, TRUE = 0, 1, 2
_LETTERS = {TRUE: "t", UNKNOWN: "u", FALSE: "f"}


def eval3(formula: PropFormula, valuation: Mapping[str, int]) -> int:
    """Strong-Kleene value; ``T`` and ``F`` go through the first atom of ``valuation``."""
    if isinstance(formula, Atom):
        return valuation[formula.name]
    if isinstance(formula, Const):
        first = valuation[next(iter(valuation))]
        excluded_middle = max(first, TRUE - first)
        return excluded_middle if formula.value else TRUE - excluded_middle
    if isinstance(formula, Not):
        return TRUE - eval3(formula.operand, valuation)
    if isinstance(formula, And):
        return min(eval3(formula.left, valuation), eval3(formula.right, valuation))
    if isinstance(formula, Or):
        return max(eval3(formula.left, valuation), eval3(formula.right, valuation))
    if isinstance(formula, Implies):
        return max(TRUE - eval3(formula.left, valuation), eval3(formula.right, valuation))
    raise TypeError(f"not a propositional formula: {formula!r}")


class TFPair(NamedTuple):
    """Where a formula is true and where it is false, as universe indices."""

    true: FrozenSet[int]
    false: FrozenSet[int]


def _negate(pair: TFPair, formula: PropFormula) -> Tuple[TFPair, PropFormula]:
    return TFPair(pair.false, pair.true), Not(formula)


def _conjoin(left: TFPair, lf: PropFormula, right: TFPair, rf: PropFormula) -> Tuple[TFPair, PropFormula]:
    return TFPair(left.true & right.true, left.false | right.false), And(lf, rf)


def _disjoin(left: TFPair, lf: PropFormula, right: TFPair, rf: PropFormula) -> Tuple[TFPair, PropFormula]:
    return TFPair(left.true | right.true, left.false & right.false), Or(lf, rf)


class ThreeValuedSystem(FiniteSatSystem):
    def __init__(self, atoms: Collection[str], variant: Literal["k3", "p3"], bound: Optional[int] = None):
        bound = settings.MAX_THREEVAL_ATOMS if bound is None else bound
        self.atoms = check_signature(atoms, bound, variant)
        self.variant = variant
        self.name = variant
        self.valuations = tuple(
            dict(zip(self.atoms, values))
            for values in product((TRUE, UNKNOWN, FALSE), repeat=len(self.atoms))
        )
        self._labels = tuple("".join(_LETTERS[v] for v in valuation.values()) for valuation in self.valuations)

    @property
    def labels(self) -> Tuple[str, ...]:
        return self._labels

    def parse_formula(self, text: str) -> PropFormula:
        return parse_prop(text, self.atoms)

    def designated(self, value: int) -> bool:
        return value == TRUE if self.variant == "k3" else value >= UNKNOWN

    def satisfies(self, index: int, formula: PropFormula) -> bool:
        return self.designated(eval3(formula, self.valuations[index]))

    def contradiction(self) -> Base:
        if self.variant == "p3":
            raise PreconditionError("p3 has no inconsistent base")
        first = Atom(self.atoms[0])
        return (And(first, Not(first)),)

    def tf_pairs(self) -> Dict[TFPair, PropFormula]:
        """Fixpoint of T/F pairs reachable from the atoms under the connectives."""
        seeds = []
        for atom in self.atoms:
            true = frozenset(i for i, v in enumerate(self.valuations) if v[atom] == TRUE)
            false = frozenset(i for i, v in enumerate(self.valuations) if v[atom] == FALSE)
            seeds.append((TFPair(true, false), Atom(atom)))
        return connective_closure(seeds, [_negate], [_conjoin, _disjoin])

    def catalog_entries(self) -> Iterator[Tuple[ModelSet, Base]]:
        entries = [(self.full(), ())]
        for pair, formula in self.tf_pairs().items():
            if self.variant == "k3":
                members = pair.true
            else:
                members = frozenset(range(self.universe_size)) - pair.false
            entries.append((ModelSet.of(members, self.universe_size), (formula,)))
        yield from intersection_closure(entries)


def build_catalog_k3(signature: Collection[str], bound: Optional[int] = None) -> Catalog:
    return build_catalog_3v(signature, "k3", bound)


def build_catalog_p3(signature: Collection[str], bound: Optional[int] = None) -> Catalog:
    return build_catalog_3v(signature, "p3", bound)


def build_catalog_3v(signature: Collection[str], variant: Literal["k3", "p3"], bound: Optional[int] = None) -> Catalog:
    return ThreeValuedSystem(signature, variant, bound).catalog
