from dataclasses import dataclass, field
from typing import Dict, FrozenSet, Iterator, Tuple


@dataclass(frozen=True, order=True)
class Syllable:
    """A non-identity element of one vertex group."""

    vertex: str
    element: int

    def to_dict(self) -> dict:
        return {'vertex': self.vertex, 'element': self.element}


@dataclass(frozen=True)
class Word:
    """Canonical graphically reduced word. The empty word is the identity.

    Only WordEngine.reduce builds canonical words; equality of canonical
    words is equality of group elements.
    """

    syllables: Tuple[Syllable, ...] = ()

    def __len__(self) -> int:
        return len(self.syllables)

    def __iter__(self) -> Iterator[Syllable]:
        return iter(self.syllables)

    def __getitem__(self, index):
        return self.syllables[index]

    @property
    def is_identity(self) -> bool:
        return not self.syllables

    @property
    def vertex_set(self) -> FrozenSet[str]:
        return frozenset(s.vertex for s in self.syllables)

    def vertex_counts(self) -> Dict[str, int]:
        counts: Dict[str, int] = {}
        for s in self.syllables:
            counts[s.vertex] = counts.get(s.vertex, 0) + 1
        return counts

    def to_dict(self) -> dict:
        return {'syllables': [s.to_dict() for s in self.syllables]}


IDENTITY = Word()


@dataclass(frozen=True)
class GradedDistance:
    """d, d_u, δ_u and δ between two elements."""

    d: int
    d_u: Dict[str, int] = field(default_factory=dict)
    delta_u: Dict[str, int] = field(default_factory=dict)
    delta: int = 0

    def to_dict(self) -> dict:
        return {'d': self.d, 'd_u': dict(self.d_u), 'delta_u': dict(self.delta_u), 'delta': self.delta}


@dataclass(frozen=True)
class RootResult:
    root: Word
    exponent: int


@dataclass(frozen=True)
class SupportClassification:
    support: FrozenSet[str]
    is_single_vertex: bool
    support_is_join: bool
    lies_in_join: bool
    is_irreducible: bool
    has_full_support: bool

    def to_dict(self, order=sorted) -> dict:
        return {
            'support': list(order(self.support)),
            'is_single_vertex': self.is_single_vertex,
            'support_is_join': self.support_is_join,
            'lies_in_join': self.lies_in_join,
            'is_irreducible': self.is_irreducible,
            'has_full_support': self.has_full_support,
        }
