"""Satisfaction systems: the logic-independent interface the engine runs on."""
import logging
from abc import ABC, abstractmethod
from functools import cached_property
from typing import Any, Callable, Dict, Hashable, Iterable, Iterator, List, Mapping, Sequence, Tuple

from bcm.core.exceptions import BeliefChangeError, ModelSpecError, PreconditionError
from bcm.models.catalog import Base, Catalog
from bcm.models.model_set import ModelSet

logger = logging.getLogger(__name__)


class SatSystem(ABC):
    """A logic instance: language, model universe and satisfaction relation."""

    #: identifier used on the command line
    name: str = ""
    #: finite systems enumerate their universe and build a catalog
    finite: bool = True

    @abstractmethod
    def parse_formula(self, text: str) -> Any:
        """Parse one formula of the system's language."""

    def format_formula(self, formula: Any) -> str:
        return str(formula)

    def check_base(self, base: Base) -> None:
        """Reject bases outside the system's language of bases (fragments override)."""

    def parse_base(self, lines: Iterable[str]) -> Base:
        """Parse one formula per line; duplicates are dropped keeping first occurrence."""
        seen: Dict[Any, None] = {}
        for line in lines:
            seen.setdefault(self.parse_formula(line), None)
        base = tuple(seen)
        self.check_base(base)
        return base

    def format_base(self, base: Base) -> List[str]:
        return [self.format_formula(formula) for formula in base]


class FiniteSatSystem(SatSystem):
    """A system whose universe is a finite enumeration of model classes.

    Subclasses provide the universe labels, the satisfaction test and the
    entries from which the catalog is derived.
    """

    finite = True
    #: bases denote the joint satisfaction of their formulas
    conjunctive: bool = True

    @property
    @abstractmethod
    def labels(self) -> Tuple[str, ...]:
        """Printable name of every model class, in universe order."""

    @abstractmethod
    def satisfies(self, index: int, formula: Any) -> bool:
        """Whether the model class at ``index`` satisfies ``formula``."""

    @abstractmethod
    def contradiction(self) -> Base:
        """Canonical base with no models (only for systems that have one)."""

    @abstractmethod
    def catalog_entries(self) -> Iterator[Tuple[ModelSet, Base]]:
        """Candidate (set, witness) pairs in derivation order."""

    def grid_bases(self) -> Tuple[Base, ...]:
        """Bases used for exhaustive case grids: one witness per catalog set by default."""
        catalog = self.catalog
        return tuple(catalog.witness(model_set) for model_set in catalog.sets())

    def aliases(self) -> Mapping[str, int]:
        """Extra accepted model names (e.g. ``ha``..``hd`` for two-atom Horn)."""
        return {}

    @property
    def universe_size(self) -> int:
        return len(self.labels)

    def models_of(self, base: Base) -> ModelSet:
        """``Mod(B)``: the model classes satisfying every formula of ``base``."""
        return ModelSet.of(
            (i for i in range(self.universe_size) if self.satisfies_base(i, base)),
            self.universe_size,
        )

    def satisfies_base(self, index: int, base: Base) -> bool:
        return all(self.satisfies(index, formula) for formula in base)

    @cached_property
    def catalog(self) -> Catalog:
        """FRsets of this system, each set with the first witness derived for it."""
        entries: Dict[ModelSet, Base] = {}
        for model_set, base in self.catalog_entries():
            if model_set in entries:
                continue
            denoted = self.models_of(base)
            if denoted != model_set:
                raise BeliefChangeError(
                    f"{self.name}: witness {self.format_base(base)} denotes "
                    f"{self.format_set(denoted)}, not {self.format_set(model_set)}"
                )
            entries[model_set] = base
        catalog = Catalog(entries=entries, universe_size=self.universe_size, conjunctive=self.conjunctive)
        logger.info("%s catalog: %d of %d sets representable", self.name, len(catalog), 1 << self.universe_size)
        return catalog

    def full(self) -> ModelSet:
        return ModelSet.full(self.universe_size)

    def empty(self) -> ModelSet:
        return ModelSet.empty(self.universe_size)

    def label(self, index: int) -> str:
        return self.labels[index]

    def model_index(self, name: str) -> int:
        name = name.strip()
        try:
            return self.labels.index(name)
        except ValueError:
            pass
        aliases = self.aliases()
        if name in aliases:
            return aliases[name]
        raise ModelSpecError(f"unknown model {name!r} for {self.name}")

    def format_set(self, model_set: ModelSet) -> str:
        return "{" + ",".join(self.labels[i] for i in model_set.indices()) + "}"


def intersection_closure(
    entries: Iterable[Tuple[ModelSet, Base]],
) -> List[Tuple[ModelSet, Base]]:
    """Close (set, base) pairs under intersection; the witness of ``S & T`` is the concatenated base.

    Order is deterministic: original entries first, then new sets in the order
    they are discovered.
    """
    closed: Dict[ModelSet, Base] = {}
    for model_set, base in entries:
        closed.setdefault(model_set, base)
    frontier = list(closed.items())
    while frontier:
        fresh: List[Tuple[ModelSet, Base]] = []
        known = list(closed.items())
        for model_set, base in frontier:
            for other, other_base in known:
                meet = model_set & other
                if meet not in closed:
                    merged = tuple(dict.fromkeys(base + other_base))
                    closed[meet] = merged
                    fresh.append((meet, merged))
        frontier = fresh
    return list(closed.items())


def connective_closure(
    seeds: Iterable[Tuple[Hashable, Any]],
    unary: Sequence[Callable[[Hashable, Any], Tuple[Hashable, Any]]],
    binary: Sequence[Callable[[Hashable, Any, Hashable, Any], Tuple[Hashable, Any]]],
) -> Dict[Hashable, Any]:
    """Least set of semantic values containing the seeds and closed under the connectives.

    Values are whatever the logic uses to identify a formula up to
    equivalence on the finite universe (truth-value vectors, T/F pairs). Each
    value keeps the first formula that produced it. Operators map
    ``(value, formula)`` arguments to a ``(value, formula)`` result.
    """
    known: Dict[Hashable, Any] = {}
    for value, formula in seeds:
        known.setdefault(value, formula)
    frontier = list(known.items())
    while frontier:
        fresh: List[Tuple[Hashable, Any]] = []

        def add(result: Tuple[Hashable, Any]) -> None:
            if result[0] not in known:
                known[result[0]] = result[1]
                fresh.append(result)

        snapshot = list(known.items())
        for value, formula in frontier:
            for op in unary:
                add(op(value, formula))
            for other, other_formula in snapshot:
                for op in binary:
                    add(op(other, other_formula, value, formula))
                    add(op(value, formula, other, other_formula))
        frontier = fresh
        logger.debug("closure round: %d new values, %d known", len(fresh), len(known))
    return known


class SymbolicSatSystem(SatSystem):
    """A system with an infinite universe; change operators are computed symbolically.

    ``models`` arguments are system-specific descriptions of model sets
    (explicit Kripke lists, interval unions).
    """

    finite = False

    def check_policy(self, policy: Any) -> None:
        """Rankings name model sets of a finite universe and cannot order symbolic candidates."""
        if policy.mode == "ranking":
            raise PreconditionError(f"{self.name}: ranking selection needs a finite logic")

    @abstractmethod
    def eviction_probe(self) -> Tuple[Base, Any, str]:
        """(base, models, reason) exercising eviction; the reason is reported when it succeeds."""

    @abstractmethod
    def reception_probe(self) -> Tuple[Base, Any, str]:
        """Reception counterpart of ``eviction_probe``."""

    @abstractmethod
    def evict(self, base: Base, models: Any, policy: Any, on_incompatible: str = "error") -> Any:
        """Maxichoice eviction; raises IncompatibleError with a witness when no candidate exists."""

    @abstractmethod
    def receive(self, base: Base, models: Any, policy: Any, on_incompatible: str = "error") -> Any:
        """Maxichoice reception; raises IncompatibleError with a witness when no candidate exists."""
