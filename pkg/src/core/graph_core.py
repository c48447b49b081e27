"""Graph-level predicates on finite simplicial graphs: links, joins, ≺ and maximal joins."""

import logging
from itertools import combinations
from typing import Dict, Iterable, List, Mapping, Optional, Tuple

import networkx as nx

from models.errors import DisconnectedSupportError, GraphProductError
from models.graph import (
    JoinDecomposition, PrecStructure, SimplicialGraph, VertexGrouping, VertexSet,
)

logger = logging.getLogger('gpkit.graph_core')

LINK = 'link'
STAR = 'star'

# exhaustive subset search stays desk-scale below this
MAX_EXHAUSTIVE_VERTICES = 12


def link_star(g: SimplicialGraph, u: str, mode: str = LINK) -> VertexSet:
    if mode not in (LINK, STAR):
        raise GraphProductError(f"Unknown mode '{mode}', expected 'link' or 'star'.")
    neighbours = g.neighbours(u)
    return neighbours if mode == LINK else neighbours | {u}


def link(g: SimplicialGraph, u: str) -> VertexSet:
    return link_star(g, u, LINK)


def star(g: SimplicialGraph, u: str) -> VertexSet:
    return link_star(g, u, STAR)


def common_link(g: SimplicialGraph, vertices: Iterable[str]) -> VertexSet:
    """Vertices outside the set adjacent to every member (all of V for the empty set)."""
    members = frozenset(vertices)
    result = set(g.vertices) - members
    for v in members:
        result &= g.neighbours(v)
    return frozenset(result)


def induced_subgraph(g: SimplicialGraph, vertices: Iterable[str]) -> SimplicialGraph:
    keep = frozenset(vertices)
    for v in keep:
        g.check_vertex(v)
    return SimplicialGraph(
        tuple(v for v in g.vertices if v in keep),
        frozenset(e for e in g.edges if e <= keep),
    )


def opposite_graph(g: SimplicialGraph) -> SimplicialGraph:
    edges = [
        (a, b) for i, a in enumerate(g.vertices) for b in g.vertices[i + 1:]
        if not g.adjacent(a, b)
    ]
    return SimplicialGraph.build(g.vertices, edges)


def is_complete(g: SimplicialGraph) -> bool:
    n = len(g.vertices)
    return len(g.edges) == n * (n - 1) // 2


def _opposite_components(g: SimplicialGraph, vertices: Optional[Iterable[str]] = None) -> List[VertexSet]:
    sub = g if vertices is None else induced_subgraph(g, vertices)
    opp = nx.complement(sub.to_networkx())
    components = [frozenset(c) for c in nx.connected_components(opp)]
    return sorted(components, key=lambda c: min(g.index(v) for v in c))


def is_join(g: SimplicialGraph, vertices: Optional[Iterable[str]] = None) -> bool:
    """Induced subgraph on ≥2 vertices whose opposite graph is disconnected."""
    members = g.vertex_set if vertices is None else frozenset(vertices)
    if len(members) < 2:
        return False
    return len(_opposite_components(g, members)) > 1


def lies_in_join(g: SimplicialGraph, vertices: Iterable[str]) -> bool:
    """Whether the vertex set is contained in some join subgraph of g."""
    members = frozenset(vertices)
    if not members:
        return False
    return is_join(g, members) or bool(common_link(g, members))


def join_decomposition(g: SimplicialGraph, vertices: Optional[Iterable[str]] = None) -> JoinDecomposition:
    components = _opposite_components(g, vertices)
    clique = frozenset(v for c in components if len(c) == 1 for v in c)
    factors = tuple(c for c in components if len(c) > 1)
    return JoinDecomposition(clique, factors)


def join_of(parts: Iterable[SimplicialGraph]) -> SimplicialGraph:
    """Join of graphs on disjoint vertex sets; order is concatenation order."""
    parts = list(parts)
    vertices = tuple(v for p in parts for v in p.vertices)
    edges = [tuple(e) for p in parts for e in p.edges]
    for i, p in enumerate(parts):
        for q in parts[i + 1:]:
            edges.extend((a, b) for a in p.vertices for b in q.vertices)
    return SimplicialGraph.build(vertices, edges)


def prec_structure(g: SimplicialGraph) -> PrecStructure:
    table: Dict[Tuple[str, str], bool] = {}
    for u in g.vertices:
        lu = link(g, u)
        for v in g.vertices:
            table[(u, v)] = lu <= star(g, v)
    classes: List[VertexSet] = []
    assigned = set()
    for u in g.vertices:
        if u in assigned:
            continue
        cls = frozenset(v for v in g.vertices if table[(u, v)] and table[(v, u)])
        classes.append(cls)
        assigned |= cls
    maximal = frozenset(
        u for u in g.vertices
        if not any(table[(u, v)] and not table[(v, u)] for v in g.vertices)
    )
    return PrecStructure(table, maximal, tuple(classes))


def simplify_same_star_link(
    g: SimplicialGraph, groups: Optional[Mapping[str, str]] = None,
) -> Tuple[SimplicialGraph, Dict[str, VertexGrouping]]:
    """Collapse same-star pairs (direct sums) and same-link pairs (free products) until neither occurs.

    groups maps each vertex to a display label of its vertex group.
    """
    labels = {v: (groups or {}).get(v, v) for v in g.vertices}
    grouping = {v: VertexGrouping('vertex', (v,), labels[v]) for v in g.vertices}
    current = g
    changed = True
    while changed:
        changed = False
        for kind, mode, symbol in (('direct-sum', STAR, ' ⊕ '), ('free-product', LINK, ' ∗ ')):
            pair = _same_star_or_link(current, mode)
            if pair is not None:
                current, grouping = _merge(current, grouping, *pair, kind, symbol)
                changed = True
                break
    if current != g:
        logger.debug("Simplified %d vertices to %d", len(g.vertices), len(current.vertices))
    return current, grouping


def _same_star_or_link(g: SimplicialGraph, mode: str) -> Optional[Tuple[str, str]]:
    """First pair with equal stars (adjacent) or equal links (non-adjacent)."""
    for a, b in combinations(g.vertices, 2):
        if g.adjacent(a, b) != (mode == STAR):
            continue
        if link_star(g, a, mode) - {a, b} == link_star(g, b, mode) - {a, b}:
            return a, b
    return None


def _merge(g, grouping, a, b, kind, symbol):
    merged_name = f"{a}+{b}"
    ga, gb = grouping[a], grouping[b]
    members = ga.members + gb.members
    parts = []
    for part in (ga, gb):
        if part.kind == kind:
            parts.append(part.structure[1:-1])
        else:
            parts.append(part.structure)
    record = VertexGrouping(kind, members, f"({symbol.join(parts)})")
    vertices = tuple(merged_name if v == a else v for v in g.vertices if v != b)
    edges = []
    for e in g.edges:
        if e == frozenset((a, b)):
            continue
        mapped = frozenset(merged_name if v in (a, b) else v for v in e)
        if len(mapped) == 2:
            edges.append(mapped)
    new_grouping = {v: r for v, r in grouping.items() if v not in (a, b)}
    new_grouping[merged_name] = record
    return SimplicialGraph(vertices, frozenset(edges)), new_grouping


def maximal_joins(g: SimplicialGraph) -> List[VertexSet]:
    """All inclusion-maximal join subgraphs, found by exhaustive subset search."""
    if len(g.vertices) > MAX_EXHAUSTIVE_VERTICES:
        logger.warning("maximal_joins on %d vertices: exhaustive search is slow", len(g.vertices))
    found: List[VertexSet] = []
    for size in range(len(g.vertices), 1, -1):
        for subset in combinations(g.vertices, size):
            members = frozenset(subset)
            if any(members <= f for f in found):
                continue
            if is_join(g, members):
                found.append(members)
    return sorted(found, key=lambda s: tuple(sorted(g.index(v) for v in s)))


def opp_diameter(g: SimplicialGraph, support: Iterable[str]) -> int:
    members = frozenset(support)
    if len(members) <= 1:
        return 0
    opp = nx.complement(induced_subgraph(g, members).to_networkx())
    if not nx.is_connected(opp):
        raise DisconnectedSupportError(members)
    return nx.diameter(opp)


def graph_diameter(g: SimplicialGraph) -> Optional[int]:
    """Diameter of g, or None when g is disconnected."""
    if len(g.vertices) <= 1:
        return 0
    graph = g.to_networkx()
    if not nx.is_connected(graph):
        return None
    return nx.diameter(graph)


def clique_number(g: SimplicialGraph) -> int:
    if not g.vertices:
        return 0
    return max(len(c) for c in nx.find_cliques(g.to_networkx()))


def factor_hash(g: SimplicialGraph, vertices: Iterable[str], labels: Mapping[str, str]) -> str:
    """Weisfeiler–Lehman hash of a labelled induced subgraph."""
    sub = induced_subgraph(g, vertices).to_networkx()
    nx.set_node_attributes(sub, {v: labels[v] for v in sub.nodes}, 'label')
    return nx.weisfeiler_lehman_graph_hash(sub, node_attr='label')
