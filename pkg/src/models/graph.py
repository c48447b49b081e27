from dataclasses import dataclass, field
from typing import Dict, FrozenSet, Iterable, List, Tuple

import networkx as nx

from models.errors import GraphProductError, UnknownVertexError

VertexSet = FrozenSet[str]


@dataclass(frozen=True)
class SimplicialGraph:
    """Finite simplicial graph with a fixed total vertex order."""

    vertices: Tuple[str, ...]
    edges: FrozenSet[FrozenSet[str]] = field(default_factory=frozenset)

    def __post_init__(self):
        if len(set(self.vertices)) != len(self.vertices):
            raise GraphProductError(f"Duplicate vertex in {list(self.vertices)}.")
        known = set(self.vertices)
        for edge in self.edges:
            if len(edge) != 2:
                raise GraphProductError(f"Loop or malformed edge {sorted(edge)}.")
            for endpoint in edge:
                if endpoint not in known:
                    raise UnknownVertexError(endpoint)
        object.__setattr__(self, '_order', {v: i for i, v in enumerate(self.vertices)})
        neighbours: Dict[str, set] = {v: set() for v in self.vertices}
        for edge in self.edges:
            a, b = tuple(edge)
            neighbours[a].add(b)
            neighbours[b].add(a)
        object.__setattr__(self, '_neighbours', {v: frozenset(n) for v, n in neighbours.items()})

    @classmethod
    def build(cls, vertices: Iterable[str], edges: Iterable[Iterable[str]] = ()) -> 'SimplicialGraph':
        return cls(tuple(vertices), frozenset(frozenset(e) for e in edges))

    @classmethod
    def complete(cls, vertices: Iterable[str]) -> 'SimplicialGraph':
        vs = tuple(vertices)
        return cls.build(vs, [(a, b) for i, a in enumerate(vs) for b in vs[i + 1:]])

    def has_vertex(self, vertex: str) -> bool:
        return vertex in self._order

    def check_vertex(self, vertex: str) -> str:
        if vertex not in self._order:
            raise UnknownVertexError(vertex)
        return vertex

    def index(self, vertex: str) -> int:
        """Position of a vertex in the fixed order."""
        try:
            return self._order[vertex]
        except KeyError:
            raise UnknownVertexError(vertex) from None

    def neighbours(self, vertex: str) -> VertexSet:
        self.check_vertex(vertex)
        return self._neighbours[vertex]

    def adjacent(self, u: str, v: str) -> bool:
        return v in self._neighbours.get(u, ())

    def sort(self, vertices: Iterable[str]) -> List[str]:
        return sorted(vertices, key=self.index)

    @property
    def vertex_set(self) -> VertexSet:
        return frozenset(self.vertices)

    def edge_list(self) -> List[Tuple[str, str]]:
        """Edges as ordered pairs, sorted by vertex order."""
        pairs = [tuple(self.sort(e)) for e in self.edges]
        return sorted(pairs, key=lambda p: (self.index(p[0]), self.index(p[1])))

    def to_networkx(self) -> nx.Graph:
        graph = nx.Graph()
        graph.add_nodes_from(self.vertices)
        graph.add_edges_from(self.edge_list())
        return graph

    def to_dict(self) -> dict:
        return {'vertices': list(self.vertices), 'edges': [list(e) for e in self.edge_list()]}

    @classmethod
    def from_dict(cls, data: dict) -> 'SimplicialGraph':
        return cls.build(data['vertices'], data.get('edges', []))


@dataclass(frozen=True)
class JoinDecomposition:
    """Γ = Γ0 * Γ1 * ... * Γn with Γ0 complete and each Γi a non-join on ≥2 vertices."""

    clique_part: VertexSet
    factors: Tuple[VertexSet, ...]

    @property
    def n(self) -> int:
        return len(self.factors)

    @property
    def is_join(self) -> bool:
        return len(self.factors) + len(self.clique_part) > 1

    def parts(self) -> List[VertexSet]:
        return [frozenset({v}) for v in self.clique_part] + list(self.factors)

    def to_dict(self, order=None) -> dict:
        key = order or sorted
        return {
            'clique_part': list(key(self.clique_part)),
            'factors': [list(key(f)) for f in self.factors],
        }


@dataclass(frozen=True)
class PrecStructure:
    """The relation u ≺ v ⟺ link(u) ⊆ star(v), its maximal vertices and classes."""

    table: Dict[Tuple[str, str], bool]
    maximal: VertexSet
    classes: Tuple[VertexSet, ...]

    def prec(self, u: str, v: str) -> bool:
        return self.table[(u, v)]

    def class_of(self, u: str) -> VertexSet:
        for cls in self.classes:
            if u in cls:
                return cls
        raise UnknownVertexError(u)


@dataclass(frozen=True)
class VertexGrouping:
    """Record of original vertices collapsed into one vertex of a simplified graph."""

    kind: str  # 'vertex' | 'direct-sum' | 'free-product'
    members: Tuple[str, ...]
    structure: str

    def to_dict(self) -> dict:
        return {'kind': self.kind, 'members': list(self.members), 'structure': self.structure}
