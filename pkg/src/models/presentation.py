from collections import deque
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Dict, List, Optional, Tuple

import numpy as np
import sympy

from models.errors import (
    ERR_NO_IDENTITY, ERR_NO_INVERSES, ERR_NOT_ASSOCIATIVE, ERR_NOT_GENERATING,
    InvalidGroupSpecError, MalformedElementError, UnknownVertexError,
)
from models.graph import SimplicialGraph

KIND_CYCLIC = 'cyclic'
KIND_INFINITE_CYCLIC = 'infinite-cyclic'
KIND_TABLE = 'table'
GROUP_KINDS = (KIND_CYCLIC, KIND_INFINITE_CYCLIC, KIND_TABLE)


@dataclass(frozen=True, eq=False)
class VertexGroupSpec:
    """A vertex group whose elements are integers with identity 0.

    cyclic(n): residues mod n. infinite-cyclic: exponents of a generator.
    finite-table: indices into an m×m multiplication table.
    """

    kind: str
    order: Optional[int] = None
    table: Optional[Tuple[Tuple[int, ...], ...]] = None
    generators: Tuple[int, ...] = (1,)
    vertex: str = '?'

    def __post_init__(self):
        if self.kind not in GROUP_KINDS:
            raise InvalidGroupSpecError(f"Unknown group kind '{self.kind}' for G_{self.vertex}.")
        if self.kind == KIND_CYCLIC:
            if self.order is None or self.order < 2:
                raise InvalidGroupSpecError(f"Cyclic group G_{self.vertex} needs order ≥ 2.")
        if self.kind == KIND_INFINITE_CYCLIC:
            if tuple(self.generators) != (1,):
                raise InvalidGroupSpecError(f"Infinite cyclic G_{self.vertex} is generated by exponent 1.")
        if self.kind == KIND_TABLE:
            self._validate_table()
            object.__setattr__(self, 'order', len(self.table))
        for g in self.generators:
            self.check(g)
            if g == 0:
                raise InvalidGroupSpecError(f"Identity listed as generator of G_{self.vertex}.")
        if self.is_finite and len(self.closure(self.generators)) != self.order:
            raise InvalidGroupSpecError(
                ERR_NOT_GENERATING.format(generators=list(self.generators), vertex=self.vertex))

    @classmethod
    def cyclic(cls, n: int, vertex: str = '?', generators: Tuple[int, ...] = (1,)) -> 'VertexGroupSpec':
        return cls(KIND_CYCLIC, order=n, generators=tuple(generators), vertex=vertex)

    @classmethod
    def infinite_cyclic(cls, vertex: str = '?') -> 'VertexGroupSpec':
        return cls(KIND_INFINITE_CYCLIC, vertex=vertex)

    @classmethod
    def finite_table(cls, table, generators, vertex: str = '?') -> 'VertexGroupSpec':
        rows = tuple(tuple(int(x) for x in row) for row in table)
        return cls(KIND_TABLE, table=rows, generators=tuple(generators), vertex=vertex)

    def _validate_table(self):
        array = np.asarray(self.table, dtype=np.int64)
        m = array.shape[0]
        if array.ndim != 2 or array.shape != (m, m) or m < 2:
            raise InvalidGroupSpecError(f"Table of G_{self.vertex} must be square of size ≥ 2.")
        if array.min() < 0 or array.max() >= m:
            raise InvalidGroupSpecError(f"Table of G_{self.vertex} has entries outside 0..{m - 1}.")
        indices = np.arange(m)
        if not (np.array_equal(array[0], indices) and np.array_equal(array[:, 0], indices)):
            raise InvalidGroupSpecError(ERR_NO_IDENTITY.format(vertex=self.vertex))
        # (ab)c == a(bc) for every triple
        left = array[array]
        right = array[indices[:, None, None], array[None, :, :]]
        if not np.array_equal(left, right):
            raise InvalidGroupSpecError(ERR_NOT_ASSOCIATIVE.format(vertex=self.vertex))
        if not bool(np.all((array == 0).any(axis=1))):
            raise InvalidGroupSpecError(ERR_NO_INVERSES.format(vertex=self.vertex))
        object.__setattr__(self, '_array', array)
        object.__setattr__(self, '_inverses', tuple(int(np.argmax(row == 0)) for row in array))

    @property
    def is_finite(self) -> bool:
        return self.kind != KIND_INFINITE_CYCLIC

    @property
    def is_abelian(self) -> bool:
        if self.kind != KIND_TABLE:
            return True
        return bool(np.array_equal(self._array, self._array.T))

    @property
    def identity(self) -> int:
        return 0

    def check(self, element: int) -> int:
        if not isinstance(element, (int, np.integer)) or isinstance(element, bool):
            raise MalformedElementError(self.vertex, element)
        if self.is_finite and not 0 <= element < self.order:
            raise MalformedElementError(self.vertex, element)
        return int(element)

    def multiply(self, a: int, b: int) -> int:
        if self.kind == KIND_CYCLIC:
            return (a + b) % self.order
        if self.kind == KIND_INFINITE_CYCLIC:
            return a + b
        return int(self._array[a, b])

    def inverse(self, a: int) -> int:
        if self.kind == KIND_CYCLIC:
            return (-a) % self.order
        if self.kind == KIND_INFINITE_CYCLIC:
            return -a
        return self._inverses[a]

    def power(self, a: int, k: int) -> int:
        if k < 0:
            a, k = self.inverse(a), -k
        result = 0
        for _ in range(k):
            result = self.multiply(result, a)
        return result

    def commute(self, a: int, b: int) -> bool:
        return self.multiply(a, b) == self.multiply(b, a)

    def closure(self, generators) -> set:
        seen = {0}
        queue = deque([0])
        steps = list(generators) + [self.inverse(g) for g in generators]
        while queue:
            a = queue.popleft()
            for s in steps:
                b = self.multiply(a, s)
                if b not in seen:
                    seen.add(b)
                    queue.append(b)
        return seen

    def word_length(self, a: int) -> int:
        """Word length of a in S ∪ S⁻¹."""
        if self.kind == KIND_INFINITE_CYCLIC:
            return abs(a)
        return self._lengths()[a]

    @lru_cache(maxsize=None)
    def _lengths(self) -> Dict[int, int]:
        lengths = {0: 0}
        queue = deque([0])
        steps = list(self.generators) + [self.inverse(g) for g in self.generators]
        while queue:
            a = queue.popleft()
            for s in steps:
                b = self.multiply(a, s)
                if b not in lengths:
                    lengths[b] = lengths[a] + 1
                    queue.append(b)
        return lengths

    def elements(self, span: int = 2) -> List[int]:
        """Non-identity elements; infinite cyclic groups are truncated to ±1..±span."""
        if self.kind == KIND_INFINITE_CYCLIC:
            return [k for i in range(1, span + 1) for k in (i, -i)]
        return list(range(1, self.order))

    def centralizer(self, a: int) -> Optional[List[int]]:
        """Elements commuting with a, or None when that is the whole group."""
        if self.is_abelian:
            return None
        return [b for b in range(self.order) if self.commute(a, b)]

    def center(self) -> Optional[List[int]]:
        """Central elements, or None when the group is abelian."""
        if self.is_abelian:
            return None
        return [a for a in range(self.order) if all(self.commute(a, b) for b in range(self.order))]

    def label(self) -> str:
        if self.kind == KIND_CYCLIC:
            return f"Z{self.order}"
        if self.kind == KIND_INFINITE_CYCLIC:
            return "Z"
        return f"table({self.order})"

    def is_order_two(self) -> bool:
        return self.is_finite and self.order == 2

    def normal_closure(self, elements) -> frozenset:
        """Smallest normal subgroup containing the given elements."""
        subgroup = self.closure(elements)
        everything = range(self.order)
        while True:
            conjugates = {self.multiply(self.multiply(g, h), self.inverse(g)) for g in everything for h in subgroup}
            if conjugates <= subgroup:
                return frozenset(subgroup)
            subgroup = self.closure(subgroup | conjugates)

    def normal_subgroups(self) -> List[frozenset]:
        """Every normal subgroup of a finite group, as joins of normal closures of single elements."""
        found = {self.normal_closure([a]) for a in range(self.order)}
        frontier = set(found)
        while frontier:
            joined = {frozenset(self.closure(a | b)) for a in frontier for b in found} - found
            found |= joined
            frontier = joined
        return sorted(found, key=len)

    def is_directly_indecomposable(self) -> bool:
        """Whether the group is not N × M for nontrivial N, M; finite graph products are direct products."""
        if self.kind == KIND_INFINITE_CYCLIC:
            return True
        if self.kind == KIND_CYCLIC:
            return len(sympy.factorint(self.order)) == 1
        proper = [n for n in self.normal_subgroups() if 1 < len(n) < self.order]
        return not any(
            len(a) * len(b) == self.order and a & b == {0}
            for i, a in enumerate(proper) for b in proper[i:]
        )

    def to_dict(self) -> dict:
        data = {'kind': self.kind, 'generators': list(self.generators)}
        if self.kind == KIND_CYCLIC:
            data['order'] = self.order
        if self.kind == KIND_TABLE:
            data['table'] = [list(row) for row in self.table]
        return data

    @classmethod
    def from_dict(cls, data: dict, vertex: str = '?') -> 'VertexGroupSpec':
        kind = data['kind']
        if kind == KIND_CYCLIC:
            return cls.cyclic(int(data['order']), vertex, tuple(data.get('generators', (1,))))
        if kind == KIND_INFINITE_CYCLIC:
            return cls.infinite_cyclic(vertex)
        if kind == KIND_TABLE:
            return cls.finite_table(data['table'], data.get('generators', (1,)), vertex)
        raise InvalidGroupSpecError(f"Unknown group kind '{kind}' for G_{vertex}.")


@dataclass
class VertexGroupMeta:
    """Hypotheses about one vertex group consumed by the verdict layer."""

    is_finite: Optional[bool] = None
    has_finite_abelianization: Optional[bool] = None
    is_graphically_irreducible: Optional[bool] = None
    aut_is_finite: Optional[bool] = None
    asdim: Optional[int] = None
    dehn: Optional[str] = None

    def merged(self, overrides: dict) -> 'VertexGroupMeta':
        data = self.to_dict()
        data.update({k: v for k, v in overrides.items() if k in data})
        return VertexGroupMeta(**data)

    def to_dict(self) -> dict:
        return {
            'is_finite': self.is_finite,
            'has_finite_abelianization': self.has_finite_abelianization,
            'is_graphically_irreducible': self.is_graphically_irreducible,
            'aut_is_finite': self.aut_is_finite,
            'asdim': self.asdim,
            'dehn': self.dehn,
        }

    @classmethod
    def from_dict(cls, data: dict) -> 'VertexGroupMeta':
        return cls(**{k: data.get(k) for k in cls().to_dict()})


@dataclass(frozen=True, eq=False)
class Presentation:
    """Graph product Γ𝒢: a simplicial graph plus one vertex group per vertex."""

    graph: SimplicialGraph
    groups: Dict[str, VertexGroupSpec]
    name: str = 'presentation'
    meta_overrides: Dict[str, dict] = field(default_factory=dict)

    def __post_init__(self):
        missing = [v for v in self.graph.vertices if v not in self.groups]
        if missing:
            raise InvalidGroupSpecError(f"No vertex group given for {missing}.")
        for v in self.groups:
            self.graph.check_vertex(v)

    @property
    def vertices(self) -> Tuple[str, ...]:
        return self.graph.vertices

    def group(self, vertex: str) -> VertexGroupSpec:
        try:
            return self.groups[vertex]
        except KeyError:
            raise UnknownVertexError(vertex) from None

    def commute(self, u: str, v: str) -> bool:
        """Distinct vertex groups commute exactly across edges."""
        return self.graph.adjacent(u, v)

    def all_cyclic_of_order(self, n: int) -> bool:
        return all(g.kind == KIND_CYCLIC and g.order == n for g in self.groups.values())

    def is_raag(self) -> bool:
        return all(g.kind == KIND_INFINITE_CYCLIC for g in self.groups.values())

    def is_finite_vertex_groups(self) -> bool:
        return all(g.is_finite for g in self.groups.values())

    def to_dict(self) -> dict:
        data = self.graph.to_dict()
        data['name'] = self.name
        data['groups'] = {v: self.groups[v].to_dict() for v in self.graph.vertices}
        if self.meta_overrides:
            data['meta'] = dict(self.meta_overrides)
        return data

    @classmethod
    def from_dict(cls, data: dict) -> 'Presentation':
        graph = SimplicialGraph.from_dict(data)
        groups = {v: VertexGroupSpec.from_dict(data['groups'][v], v) for v in graph.vertices}
        return cls(graph, groups, data.get('name', 'presentation'), dict(data.get('meta', {})))
