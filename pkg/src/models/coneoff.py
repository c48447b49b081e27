from dataclasses import dataclass
from typing import FrozenSet, Optional, Tuple

from models.coset import Hyperplane
from models.word import Word

KIND_TRIVIAL = 'trivial'
KIND_VERTEX_CONJUGATE = 'vertex-conjugate'
KIND_REDUCIBLE = 'reducible'
KIND_IRREDUCIBLE = 'irreducible'


@dataclass(frozen=True)
class Block:
    """Consecutive separating walls whose labels cover every vertex."""

    walls: Tuple[Hyperplane, ...]

    @property
    def labels(self) -> FrozenSet[str]:
        return frozenset(h.label for h in self.walls)


@dataclass(frozen=True)
class BlockChainCertificate:
    x: Word
    y: Word
    blocks: Tuple[Block, ...]

    @property
    def n(self) -> int:
        return len(self.blocks)

    @property
    def lower_bound(self) -> int:
        """Cone-off distance lower bound: N+1 with N blocks."""
        if self.blocks:
            return self.n + 1
        return 0 if self.x == self.y else 1

    def to_dict(self, formatter=str) -> dict:
        return {
            'x': formatter(self.x),
            'y': formatter(self.y),
            'N': self.n,
            'lower_bound': self.lower_bound,
            'blocks': [[h.label for h in b.walls] for b in self.blocks],
        }


@dataclass(frozen=True)
class ConeOffDistance:
    """Upper bound found by hop search; exact when it meets a lower bound. None when the depth ran out."""

    value: Optional[int]
    exact: bool
    lower_bound: int
    depth_bound: int

    def to_dict(self) -> dict:
        return {
            'd_Y': self.value,
            'exact': self.exact,
            'lower_bound': self.lower_bound,
            'depth_bound': self.depth_bound,
        }


@dataclass(frozen=True)
class ElementClass:
    kind: str
    gen_loxodromic: bool
    rel_gen_loxodromic: bool

    def to_dict(self) -> dict:
        return {
            'kind': self.kind,
            'gen_loxodromic': self.gen_loxodromic,
            'rel_gen_loxodromic': self.rel_gen_loxodromic,
        }
