"""Formula ASTs: propositional, Horn and LTL NeXt formulas.

Nodes are immutable and hashable so bases can be deduplicated and used as
dictionary keys. ``str()`` prints the ASCII surface syntax with the minimal
parentheses, and the printed text parses back to an equal tree.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import FrozenSet, Mapping, Optional, Tuple, Union

# Binding strength, lowest first
_IMPLIES, _OR, _AND, _NOT, _ATOMIC = 1, 2, 3, 4, 5


@dataclass(frozen=True, slots=True)
class Atom:
    name: str

    def __str__(self) -> str:
        return self.name


@dataclass(frozen=True, slots=True)
class Const:
    value: bool

    def __str__(self) -> str:
        return "T" if self.value else "F"


@dataclass(frozen=True, slots=True)
class Not:
    operand: PropFormula

    def __str__(self) -> str:
        return "!" + _wrap(self.operand, _NOT)


@dataclass(frozen=True, slots=True)
class And:
    left: PropFormula
    right: PropFormula

    def __str__(self) -> str:
        return f"{_wrap(self.left, _AND)} & {_wrap(self.right, _AND + 1)}"


@dataclass(frozen=True, slots=True)
class Or:
    left: PropFormula
    right: PropFormula

    def __str__(self) -> str:
        return f"{_wrap(self.left, _OR)} | {_wrap(self.right, _OR + 1)}"


@dataclass(frozen=True, slots=True)
class Implies:
    left: PropFormula
    right: PropFormula

    def __str__(self) -> str:
        return f"{_wrap(self.left, _IMPLIES + 1)} -> {_wrap(self.right, _IMPLIES)}"


PropFormula = Union[Atom, Const, Not, And, Or, Implies]


def _strength(formula: PropFormula) -> int:
    if isinstance(formula, Implies):
        return _IMPLIES
    if isinstance(formula, Or):
        return _OR
    if isinstance(formula, And):
        return _AND
    if isinstance(formula, Not):
        return _NOT
    return _ATOMIC


def _wrap(formula: PropFormula, required: int) -> str:
    text = str(formula)
    return f"({text})" if _strength(formula) < required else text


def atoms_of(formula: PropFormula) -> FrozenSet[str]:
    if isinstance(formula, Atom):
        return frozenset((formula.name,))
    if isinstance(formula, Const):
        return frozenset()
    if isinstance(formula, Not):
        return atoms_of(formula.operand)
    return atoms_of(formula.left) | atoms_of(formula.right)


def eval_classical(formula: PropFormula, valuation: Mapping[str, bool]) -> bool:
    if isinstance(formula, Atom):
        return valuation[formula.name]
    if isinstance(formula, Const):
        return formula.value
    if isinstance(formula, Not):
        return not eval_classical(formula.operand, valuation)
    if isinstance(formula, And):
        return eval_classical(formula.left, valuation) and eval_classical(formula.right, valuation)
    if isinstance(formula, Or):
        return eval_classical(formula.left, valuation) or eval_classical(formula.right, valuation)
    return (not eval_classical(formula.left, valuation)) or eval_classical(formula.right, valuation)


def conjoin(formulas: Tuple[PropFormula, ...]) -> PropFormula:
    """Left-nested conjunction; the empty conjunction is ``T``."""
    if not formulas:
        return Const(True)
    result = formulas[0]
    for formula in formulas[1:]:
        result = And(result, formula)
    return result


def disjoin(formulas: Tuple[PropFormula, ...]) -> PropFormula:
    """Left-nested disjunction; the empty disjunction is ``F``."""
    if not formulas:
        return Const(False)
    result = formulas[0]
    for formula in formulas[1:]:
        result = Or(result, formula)
    return result


@dataclass(frozen=True, slots=True)
class HornClause:
    """``body -> head``; ``head is None`` stands for falsum.

    A fact ``p`` is the clause with an empty body.
    """

    body: Tuple[str, ...]
    head: Optional[str]

    def __str__(self) -> str:
        head = "F" if self.head is None else self.head
        if not self.body:
            return head
        return f"{' & '.join(self.body)} -> {head}"

    def holds(self, valuation: Mapping[str, bool]) -> bool:
        if all(valuation[atom] for atom in self.body):
            return self.head is not None and valuation[self.head]
        return True


def _clause_key(clause: HornClause) -> Tuple[Tuple[str, ...], str]:
    return clause.body, "" if clause.head is None else clause.head


def horn_clause(body, head: Optional[str]) -> HornClause:
    """Clause with a normalised (sorted, duplicate-free) body."""
    return HornClause(body=tuple(sorted(set(body))), head=head)


@dataclass(frozen=True, slots=True)
class HornFormula:
    """Conjunction of clauses, kept sorted and duplicate-free."""

    clauses: Tuple[HornClause, ...]

    @classmethod
    def of(cls, clauses) -> HornFormula:
        return cls(clauses=tuple(sorted(set(clauses), key=_clause_key)))

    def __str__(self) -> str:
        if len(self.clauses) == 1:
            return str(self.clauses[0])
        return " & ".join(f"({c})" if c.body else str(c) for c in self.clauses)

    def holds(self, valuation: Mapping[str, bool]) -> bool:
        return all(clause.holds(valuation) for clause in self.clauses)


@dataclass(frozen=True, slots=True, order=True)
class XFormula:
    """``X^depth atom``; depth 0 is the atom itself."""

    depth: int
    atom: str

    def __post_init__(self):
        if self.depth < 0:
            raise ValueError("depth must be non-negative")

    def __str__(self) -> str:
        if self.depth == 0:
            return self.atom
        return f"X^{self.depth} {self.atom}"
