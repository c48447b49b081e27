from dataclasses import dataclass, field
from typing import Dict, FrozenSet, Optional, Tuple

from models.word import Word


@dataclass(frozen=True)
class Coset:
    """Parabolic coset rep·⟨lambda⟩ with rep free of any lambda-tail."""

    rep: Word
    lambda_: FrozenSet[str]

    def to_dict(self, formatter=str, order=sorted) -> dict:
        return {'rep': formatter(self.rep), 'lambda': list(order(self.lambda_))}


@dataclass(frozen=True)
class Hyperplane:
    """Wall labelled by a vertex u, identified with its carrier coset of ⟨star(u)⟩."""

    label: str
    carrier: Coset

    def to_dict(self, formatter=str, order=sorted) -> dict:
        return {'label': self.label, 'carrier': self.carrier.to_dict(formatter, order)}


@dataclass(frozen=True)
class MedianTriangle:
    corners: Tuple[Word, Word, Word]
    prism: Coset
    # common side length; 0 for a median point
    size: int = 0


@dataclass(frozen=True)
class Bridge:
    """Minimal pair between two cosets and the hyperplanes separating them."""

    min_pair: Tuple[Word, Word]
    separators: Tuple[Hyperplane, ...]
    enclosing_join: Optional[Coset]
    common_labels: FrozenSet[str] = frozenset()

    @property
    def distance(self) -> int:
        return len(self.separators)

    @property
    def separator_labels(self) -> FrozenSet[str]:
        return frozenset(h.label for h in self.separators)


@dataclass(frozen=True)
class CentralizerDescription:
    """C(x) = h·(⟨link(supp)⟩ × Π vertex parts × Π ⟨c_j⟩)·h⁻¹."""

    conjugator: Word
    link_part: FrozenSet[str]
    vertex_parts: Tuple[Tuple[str, Optional[Tuple[int, ...]]], ...]
    cyclic_parts: Tuple[Word, ...]

    def to_dict(self, formatter=str, order=sorted) -> dict:
        return {
            'conjugator': formatter(self.conjugator),
            'link_part': list(order(self.link_part)),
            'vertex_parts': [
                {'vertex': v, 'centralizer': 'all' if elems is None else list(elems)}
                for v, elems in self.vertex_parts
            ],
            'cyclic_parts': [formatter(c) for c in self.cyclic_parts],
        }


@dataclass(frozen=True)
class CenterDescription:
    """Center of Γ𝒢 as a sum of vertex-group centers over the clique part."""

    parts: Dict[str, Optional[Tuple[int, ...]]] = field(default_factory=dict)

    @property
    def is_trivial(self) -> bool:
        return all(elems is not None and set(elems) <= {0} for elems in self.parts.values())

    def to_dict(self) -> dict:
        return {v: ('all' if e is None else list(e)) for v, e in self.parts.items()}

