from dataclasses import dataclass
from typing import Tuple

from models.coset import Hyperplane

RELATION_EQUAL = 'equal'
RELATION_TRANSVERSE = 'transverse'
RELATION_TANGENT = 'tangent'
RELATION_SEPARATED = 'separated'


@dataclass(frozen=True)
class HyperplaneRelation:
    kind: str
    # number of walls separating the two carriers, only for 'separated'
    separators: int = 0

    @property
    def is_transverse(self) -> bool:
        return self.kind == RELATION_TRANSVERSE

    def to_dict(self) -> dict:
        data = {'relation': self.kind}
        if self.kind == RELATION_SEPARATED:
            data['separators'] = self.separators
        return data


@dataclass(frozen=True)
class DeltaChain:
    """Longest pairwise strongly separated chain among the walls between two hyperplanes.

    exact is False when some pair came back UNKNOWN; value is then a lower bound.
    """

    value: int
    exact: bool
    chain: Tuple[Hyperplane, ...] = ()

    def to_dict(self, formatter=str) -> dict:
        return {
            'delta': self.value,
            'exact': self.exact,
            'chain': [h.to_dict(formatter) for h in self.chain],
        }


@dataclass
class CoarseMedianDefects:
    c0: int = 0
    c1: int = 0
    c2: int = 0
    samples: int = 0

    def to_dict(self) -> dict:
        return {'c0': self.c0, 'c1': self.c1, 'c2': self.c2, 'samples': self.samples}

