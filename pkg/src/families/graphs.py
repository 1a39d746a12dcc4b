"""
Graph Property Posets

LEARNING: Monotone graph properties as subposets of a boolean lattice

What we're building:
- Graphs on node set [n] as bitmasks over the edges of K_n
- Predicates evaluated with networkx: disconnected, connected, not k-connected,
  not d-edge-connected, no perfect matching
- graph_property_poset(n, predicate): graphs with the property, ordered by
  inclusion of edge sets

Key Concept:
- Every supported property is monotone (closed under taking subgraphs, or
  under adding edges), so two graphs of the family differing in one edge
  form a cover and no other pair does
"""

import logging
from itertools import combinations
from typing import Callable, Dict, List, Optional, Tuple

import networkx as nx

from src.exceptions import FamilyError, InfeasibleSizeError
from src.poset import Poset

# Set up module logger
logger = logging.getLogger(__name__)

GRAPH_PREDICATES = ("disconnected", "connected", "not_k_connected", "not_d_edge_connected",
                    "no_perfect_matching")
MAX_GRAPH_NODES = 6  # 2^15 graphs
EMPTY_GRAPH_LABEL = "{}"

Edge = Tuple[int, int]


def edges_of_complete_graph(n: int) -> List[Edge]:
    return list(combinations(range(1, n + 1), 2))


def to_graph(n: int, mask: int, edges: List[Edge]) -> nx.Graph:
    graph = nx.Graph()
    graph.add_nodes_from(range(1, n + 1))
    graph.add_edges_from(e for i, e in enumerate(edges) if mask >> i & 1)
    return graph


def is_k_connected(graph: nx.Graph, k: int) -> bool:
    """
    Vertex k-connectivity by exhaustive cut search.

    G is k-connected iff it has more than k nodes and removing any fewer than
    k nodes leaves it connected.
    """
    nodes = list(graph.nodes)
    if len(nodes) <= k:
        return False
    for size in range(k):
        for cut in combinations(nodes, size):
            rest = graph.subgraph(v for v in nodes if v not in cut)
            if not nx.is_connected(rest):
                return False
    return True


def has_perfect_matching(graph: nx.Graph) -> bool:
    n = graph.number_of_nodes()
    if n % 2:
        return False
    matching = nx.max_weight_matching(graph, maxcardinality=True)
    return len(matching) == n // 2


def graph_predicate(name: str, parameter: Optional[int] = None) -> Callable[[nx.Graph], bool]:
    """
    Look up a graph property by name.

    Raises:
        FamilyError: For unknown names or a missing k / d parameter
    """
    if name in ("not_k_connected", "not_d_edge_connected") and (parameter is None or parameter < 1):
        raise FamilyError(f"{name} needs a positive parameter")
    predicates: Dict[str, Callable[[nx.Graph], bool]] = {
        "disconnected": lambda g: not nx.is_connected(g),
        "connected": nx.is_connected,
        "not_k_connected": lambda g: not is_k_connected(g, parameter),
        "not_d_edge_connected": lambda g: g.number_of_nodes() < 2 or nx.edge_connectivity(g) < parameter,
        "no_perfect_matching": lambda g: not has_perfect_matching(g),
    }
    if name not in predicates:
        raise FamilyError(f"unknown graph predicate {name!r}, expected one of {', '.join(GRAPH_PREDICATES)}")
    return predicates[name]


def graph_label(graph_edges) -> str:
    if not graph_edges:
        return EMPTY_GRAPH_LABEL
    return ",".join(f"{a}{b}" if a < 10 and b < 10 else f"{a}-{b}" for a, b in graph_edges)


def graph_property_poset(n: int, predicate: str, parameter: Optional[int] = None) -> Poset:
    """
    Graphs on [n] having a property, ordered by edge-set inclusion.

    LEARNING POINT:
    - All 2^C(n,2) edge sets are tested, hence the small node bound
    - Elements are edge tuples; ids follow (edge count, bitmask)

    Args:
        n: Number of nodes
        predicate: One of GRAPH_PREDICATES
        parameter: k or d for the connectivity predicates

    Returns:
        Poset of graphs with the property (the empty graph included when it qualifies)

    Raises:
        InfeasibleSizeError: If n > MAX_GRAPH_NODES
    """
    if n < 1:
        raise FamilyError(f"graph posets need n >= 1, got {n}")
    if n > MAX_GRAPH_NODES:
        raise InfeasibleSizeError("graph poset nodes", n, MAX_GRAPH_NODES)
    test = graph_predicate(predicate, parameter)
    edges = edges_of_complete_graph(n)
    m = len(edges)
    kept = [mask for mask in range(1 << m) if test(to_graph(n, mask, edges))]
    kept.sort(key=lambda mask: (bin(mask).count("1"), mask))
    index = {mask: i for i, mask in enumerate(kept)}
    covers = []
    for mask in kept:
        for i in range(m):
            bigger = mask | 1 << i
            if bigger != mask and bigger in index:
                covers.append((index[mask], index[bigger]))
    elements = [tuple(e for i, e in enumerate(edges) if mask >> i & 1) for mask in kept]
    P = Poset([graph_label(e) for e in elements], covers, elements=elements)
    logger.info("Built %s graph poset on %d nodes: %d graphs", predicate, n, len(P))
    return P
