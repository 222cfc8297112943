"""Goedel fuzzy logic with a satisfaction threshold, made finite by abstraction.

A valuation into [0,1] only matters up to the relative order of the atom
values and the threshold, plus which atoms sit at exactly 0. A
``PreorderClass`` records that: ordered blocks of equal values (the
threshold appears as the marker ``θ``) and a flag marking the lowest block
as the value 0. The threshold is always positive, so the marker never
shares the zero block.

Every formula evaluates to a symbolic rank on a class: ``ZERO`` (0), one
rank per block, and ``one_rank`` above them all. The map from ranks back to
real values is monotone, sends only ``ZERO`` to 0 and ``one_rank`` to 1, and
commutes with the connectives, which makes the abstraction exact.
"""
import logging
from fractions import Fraction
from itertools import combinations
from typing import Collection, Dict, FrozenSet, Iterator, List, Mapping, Optional, Tuple, Union

from pydantic import BaseModel, ConfigDict

from bcm.core.config import settings
from bcm.core.exceptions import PreconditionError
from bcm.logics.base import FiniteSatSystem, connective_closure, intersection_closure
from bcm.logics.prop import check_signature
from bcm.models.catalog import Base, Catalog
from bcm.models.formula import And, Atom, Const, Implies, Not, Or, PropFormula
from bcm.models.model_set import ModelSet
from bcm.utils.formula_parser import parse_prop

logger = logging.getLogger(__name__)

THETA = "θ"
ZERO = 0

SymValue = int
Real = Union[float, Fraction]


class PreorderClass(BaseModel):
    """Ordered blocks of atoms (and the threshold marker), lowest first."""

    model_config = ConfigDict(frozen=True)

    blocks: Tuple[FrozenSet[str], ...]
    zero_flag: bool = False

    @property
    def ranks(self) -> Dict[str, SymValue]:
        start = 0 if self.zero_flag else 1
        return {member: start + i for i, block in enumerate(self.blocks) for member in block}

    @property
    def one_rank(self) -> SymValue:
        return (0 if self.zero_flag else 1) + len(self.blocks)

    @property
    def threshold_rank(self) -> SymValue:
        return self.ranks[THETA]

    def label(self, order: Tuple[str, ...]) -> str:
        def block_text(block: FrozenSet[str]) -> str:
            return "=".join(member for member in order if member in block)

        text = "<".join(block_text(block) for block in self.blocks)
        return "0=" + text if self.zero_flag else text


def _ordered_partitions(elements: Tuple[str, ...]) -> Iterator[Tuple[FrozenSet[str], ...]]:
    if not elements:
        yield ()
        return
    for size in range(1, len(elements) + 1):
        for first in combinations(elements, size):
            rest = tuple(e for e in elements if e not in first)
            for tail in _ordered_partitions(rest):
                yield (frozenset(first),) + tail


def enumerate_classes(
    atoms: Collection[str], theta_is_one: bool = False, bound: Optional[int] = None
) -> List[PreorderClass]:
    """Every realizable class over ``atoms``.

    With a threshold of 1 nothing lies above the marker, so it must sit in
    the top block. Raises ``BoundExceededError`` above
    ``settings.MAX_GOEDEL_CLASS_ATOMS`` atoms.
    """
    bound = settings.MAX_GOEDEL_CLASS_ATOMS if bound is None else bound
    elements = check_signature(atoms, bound, "goedel") + (THETA,)
    classes = []
    for blocks in _ordered_partitions(elements):
        if theta_is_one and THETA not in blocks[-1]:
            continue
        classes.append(PreorderClass(blocks=blocks))
        if THETA not in blocks[0]:
            classes.append(PreorderClass(blocks=blocks, zero_flag=True))
    return classes


def _implies(left: SymValue, right: SymValue, one: SymValue) -> SymValue:
    return one if left <= right else right


def eval_goedel(cls: PreorderClass, formula: PropFormula) -> SymValue:
    ranks = cls.ranks
    one = cls.one_rank

    def value(node: PropFormula) -> SymValue:
        if isinstance(node, Atom):
            return ranks[node.name]
        if isinstance(node, Const):
            return one if node.value else ZERO
        if isinstance(node, Not):
            return one if value(node.operand) == ZERO else ZERO
        if isinstance(node, And):
            return min(value(node.left), value(node.right))
        if isinstance(node, Or):
            return max(value(node.left), value(node.right))
        return _implies(value(node.left), value(node.right), one)

    return value(formula)


def excluded_middle_guard(atoms: Collection[str]) -> PropFormula:
    first = Atom(next(iter(atoms)))
    return Or(Not(first), first)


def satisfies_goedel(cls: PreorderClass, base: Base, guard: Optional[PropFormula] = None) -> bool:
    """Every formula of ``base`` (and ``guard``, when given) reaches the threshold."""
    formulas = base if guard is None else base + (guard,)
    threshold = cls.threshold_rank
    return all(eval_goedel(cls, formula) >= threshold for formula in formulas)


def eval_numeric(valuation: Mapping[str, Real], formula: PropFormula) -> Real:
    """Standard Goedel semantics on real values in [0,1]."""
    if isinstance(formula, Atom):
        return valuation[formula.name]
    if isinstance(formula, Const):
        return 1 if formula.value else 0
    if isinstance(formula, Not):
        return 1 if eval_numeric(valuation, formula.operand) == 0 else 0
    if isinstance(formula, And):
        return min(eval_numeric(valuation, formula.left), eval_numeric(valuation, formula.right))
    if isinstance(formula, Or):
        return max(eval_numeric(valuation, formula.left), eval_numeric(valuation, formula.right))
    left = eval_numeric(valuation, formula.left)
    right = eval_numeric(valuation, formula.right)
    return 1 if left <= right else right


def classify(valuation: Mapping[str, Real], theta: Real) -> PreorderClass:
    """The class of a numeric valuation under threshold ``theta``."""
    if not 0 < theta <= 1:
        raise PreconditionError(f"threshold {theta} outside (0,1]")
    values: Dict[str, Real] = dict(valuation)
    values[THETA] = theta
    levels = sorted(set(values.values()))
    blocks = tuple(frozenset(name for name, v in values.items() if v == level) for level in levels)
    return PreorderClass(blocks=blocks, zero_flag=levels[0] == 0)


class GoedelSystem(FiniteSatSystem):
    name = "goedel"

    def __init__(
        self,
        atoms: Collection[str],
        theta: Real = 0.5,
        excluded_middle: Optional[bool] = None,
        bound: Optional[int] = None,
    ):
        bound = settings.MAX_GOEDEL_ATOMS if bound is None else bound
        self.atoms = check_signature(atoms, bound, "goedel")
        if not 0 < theta <= 1:
            raise PreconditionError(f"threshold {theta} outside (0,1]")
        self.theta = theta
        if excluded_middle is None:
            excluded_middle = settings.GOEDEL_EXCLUDED_MIDDLE
        self.guard = excluded_middle_guard(self.atoms) if excluded_middle else None
        self.classes = enumerate_classes(self.atoms, theta_is_one=theta == 1, bound=bound)
        order = self.atoms + (THETA,)
        self._labels = tuple(cls.label(order) for cls in self.classes)
        logger.debug("goedel: %d classes over %s", len(self.classes), ",".join(self.atoms))

    @property
    def labels(self) -> Tuple[str, ...]:
        return self._labels

    def parse_formula(self, text: str) -> PropFormula:
        return parse_prop(text, self.atoms)

    def satisfies(self, index: int, formula: PropFormula) -> bool:
        return satisfies_goedel(self.classes[index], (formula,), self.guard)

    def satisfies_base(self, index: int, base: Base) -> bool:
        return satisfies_goedel(self.classes[index], base, self.guard)

    def contradiction(self) -> Base:
        first = Atom(self.atoms[0])
        return (And(Not(first), first),)

    def value_vectors(self) -> Dict[Tuple[SymValue, ...], PropFormula]:
        """Fixpoint of per-class value vectors reachable from the atoms."""
        ones = tuple(cls.one_rank for cls in self.classes)

        def negate(vector, formula):
            return tuple(one if v == ZERO else ZERO for v, one in zip(vector, ones)), Not(formula)

        def conjoin(left, lf, right, rf):
            return tuple(map(min, left, right)), And(lf, rf)

        def disjoin(left, lf, right, rf):
            return tuple(map(max, left, right)), Or(lf, rf)

        def implies(left, lf, right, rf):
            return tuple(_implies(x, y, one) for x, y, one in zip(left, right, ones)), Implies(lf, rf)

        seeds = [(tuple(cls.ranks[atom] for cls in self.classes), Atom(atom)) for atom in self.atoms]
        return connective_closure(seeds, [negate], [conjoin, disjoin, implies])

    def catalog_entries(self) -> Iterator[Tuple[ModelSet, Base]]:
        entries = [(self.models_of(()), ()), (self.models_of(self.contradiction()), self.contradiction())]
        thresholds = [cls.threshold_rank for cls in self.classes]
        for vector, formula in self.value_vectors().items():
            members = [i for i, (v, t) in enumerate(zip(vector, thresholds)) if v >= t]
            entries.append((ModelSet.of(members, self.universe_size) & entries[0][0], (formula,)))
        yield from intersection_closure(entries)


def build_catalog_goedel(signature: Collection[str], theta: Real = 0.5, bound: Optional[int] = None) -> Catalog:
    return GoedelSystem(signature, theta, bound=bound).catalog
