from dataclasses import dataclass, field
from typing import Dict

from models.word import Word


@dataclass(frozen=True)
class TreeCoordinate:
    """Image under η: per vertex u, the component of QM minus the u-walls."""

    components: Dict[str, Word] = field(default_factory=dict)

    def to_dict(self, formatter=str) -> dict:
        return {u: formatter(rep) for u, rep in self.components.items()}


@dataclass(frozen=True)
class TreeOfSpacesCoordinate:
    """Image under π; same component ids as η, read in the trees of spaces."""

    components: Dict[str, Word] = field(default_factory=dict)

    def to_dict(self, formatter=str) -> dict:
        return {u: formatter(rep) for u, rep in self.components.items()}


@dataclass(frozen=True)
class AlmostMedianDefect:
    eta: float
    pi: float
    bound: int
    per_vertex: Dict[str, float] = field(default_factory=dict)

    @property
    def within_bound(self) -> bool:
        return self.eta <= self.bound

    def to_dict(self) -> dict:
        return {'eta': self.eta, 'pi': self.pi, 'bound': self.bound, 'per_vertex': dict(self.per_vertex)}
