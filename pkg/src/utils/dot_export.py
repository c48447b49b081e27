import logging
from typing import Callable, Optional

import networkx as nx

from models.graph import SimplicialGraph

logger = logging.getLogger('gpkit.dot_export')


def relabel(graph: nx.Graph, name: Callable[[object], str]) -> nx.Graph:
    """Copy with string node names; pydot cannot name nodes by words or hyperplanes."""
    mapping = {node: name(node) for node in graph.nodes}
    return nx.relabel_nodes(graph, mapping, copy=True)


def to_dot(graph: nx.Graph, name: Optional[Callable[[object], str]] = None, title: str = 'G') -> str:
    labelled = relabel(graph, name) if name is not None else graph
    dot = nx.nx_pydot.to_pydot(labelled)
    dot.set_name(title)
    return dot.to_string()


def simplicial_graph_dot(graph: SimplicialGraph, labels: Optional[dict] = None, title: str = 'Gamma') -> str:
    g = graph.to_networkx()
    for v in graph.vertices:
        g.nodes[v]['label'] = f'"{v}: {labels[v]}"' if labels else f'"{v}"'
    return to_dot(g, title=title)


def write_dot(text: str, path: str):
    with open(path, 'w', encoding='utf-8') as f:
        f.write(text)
    logger.info("Wrote DOT graph to %s", path)
