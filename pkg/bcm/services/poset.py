"""Poset views of a catalog: immediate neighbours and the Hasse diagram export."""
import logging
from typing import Iterable, Optional, Sequence

import networkx as nx
from networkx.drawing.nx_pydot import to_pydot

from bcm.core.config import settings
from bcm.core.exceptions import BoundExceededError
from bcm.models.catalog import Catalog
from bcm.models.model_set import ModelSet
from bcm.models.reports import NeighborReport
from bcm.services.engine import frsubs

logger = logging.getLogger(__name__)


def immediate_neighbors(catalog: Catalog, target: ModelSet) -> NeighborReport:
    """Strict immediate predecessors and successors of ``target`` in (catalog ∪ {target}, ⊂)."""
    points = set(catalog.sets()) | {target}
    below = [s for s in points if s < target]
    above = [s for s in points if target < s]
    predecessors = [s for s in below if not any(s < other for other in below)]
    successors = [s for s in above if not any(other < s for other in above)]
    return NeighborReport(
        target=target,
        predecessors=tuple(sorted(predecessors, key=ModelSet.sort_key)),
        successors=tuple(sorted(successors, key=ModelSet.sort_key)),
    )


def _default_label(model_set: ModelSet) -> str:
    return "{" + ",".join(str(i) for i in model_set.indices()) + "}"


def hasse_graph(
    catalog: Catalog,
    highlight: Iterable[ModelSet] = (),
    labels: Optional[Sequence[str]] = None,
    bound: Optional[int] = None,
) -> nx.DiGraph:
    """Hasse diagram of the power set of the universe.

    Representable nodes are boxed. Thin edges go from a set to its one-model
    extensions. Each highlighted set gets thick edges to the elements of its
    FRsubs (other than itself).

    Raises:
        BoundExceededError: the universe is larger than the lattice bound.
    """
    bound = settings.MAX_LATTICE_UNIVERSE if bound is None else bound
    size = catalog.universe_size
    if size > bound:
        raise BoundExceededError(f"lattice over {size} models exceeds the bound of {bound}")

    def name(model_set: ModelSet) -> str:
        if labels is None:
            return _default_label(model_set)
        return "{" + ",".join(labels[i] for i in model_set.indices()) + "}"

    graph = nx.DiGraph(name="lattice")
    graph.graph["graph"] = {"rankdir": "BT"}
    nodes = ModelSet.all_subsets(size)
    ids = {model_set: f"n{position}" for position, model_set in enumerate(nodes)}
    for model_set in nodes:
        representable = model_set in catalog
        graph.add_node(
            ids[model_set],
            label=f'"{name(model_set)}"',
            shape="box" if representable else "plaintext",
        )
    for model_set in nodes:
        for index in range(size):
            if index not in model_set:
                larger = ModelSet.of(model_set.members | {index}, size)
                graph.add_edge(ids[model_set], ids[larger], penwidth="1")
    for target in highlight:
        for chosen in frsubs(target, catalog):
            if chosen != target:
                graph.add_edge(ids[target], ids[chosen], penwidth="3", color="gray")
    logger.info("lattice with %d nodes, %d representable", len(nodes), len(catalog))
    return graph


def lattice_export(
    catalog: Catalog,
    highlight: Iterable[ModelSet] = (),
    labels: Optional[Sequence[str]] = None,
    bound: Optional[int] = None,
) -> str:
    """DOT text of :func:`hasse_graph`."""
    return to_pydot(hasse_graph(catalog, highlight, labels, bound)).to_string()
