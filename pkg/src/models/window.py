from dataclasses import dataclass, field
from typing import Dict, List, Optional, Tuple

import networkx as nx
import numpy as np

from models.coset import Coset, Hyperplane
from models.errors import PreconditionError
from models.verdict import Verdict3
from models.word import Word

CERT_EXACT = 'exact'
CERT_WINDOW = 'window'
CERT_UNKNOWN = 'unknown'


@dataclass
class HyperplaneWindow:
    """Finite piece of the crossing graph: every wall dual to an edge of a ball."""

    basepoint: Word
    radius: int
    walls: Tuple[Hyperplane, ...]
    adjacency: np.ndarray
    small_mask: np.ndarray
    small: bool = False
    _positions: Dict[Hyperplane, int] = field(default_factory=dict, init=False, repr=False)

    def __post_init__(self):
        self._positions = {wall: i for i, wall in enumerate(self.walls)}

    def __len__(self) -> int:
        return len(self.walls)

    def __contains__(self, wall: Hyperplane) -> bool:
        return wall in self._positions

    def index(self, wall: Hyperplane) -> int:
        try:
            return self._positions[wall]
        except KeyError:
            raise PreconditionError('window', f"wall {wall.label} is outside the window") from None

    def edge_count(self, small: bool = False) -> int:
        matrix = self.adjacency
        if small:
            matrix = matrix & np.outer(self.small_mask, self.small_mask)
        return int(matrix.sum()) // 2

    def to_dict(self, formatter=str) -> dict:
        edges = [[int(i), int(j)] for i, j in zip(*np.nonzero(np.triu(self.adjacency)))]
        return {
            'basepoint': formatter(self.basepoint),
            'radius': self.radius,
            'walls': [w.to_dict(formatter) for w in self.walls],
            'edges': edges,
            'small': [bool(flag) for flag in self.small_mask],
        }


@dataclass(frozen=True)
class CrossingDistance:
    """Window distance in the crossing graph.

    'exact' means the value meets a lower bound, 'window' that it is only an
    upper bound, 'unknown' that the walls are disconnected in the window.
    """

    value: Optional[int]
    lower_bound: int
    certificate: str

    @property
    def is_unknown(self) -> bool:
        return self.value is None

    def to_dict(self) -> dict:
        return {'d_T': self.value, 'lower_bound': self.lower_bound, 'certificate': self.certificate}


@dataclass(frozen=True)
class DeltaAudit:
    """Bounds on the crossing distance of two walls; passed is None when the window distance is not exact."""

    delta: int
    delta_exact: bool
    distance: CrossingDistance
    d_qm: int
    upper_delta: Optional[int]
    upper_qm: Optional[int]
    passed: Optional[bool]

    def to_dict(self) -> dict:
        return {
            'delta': self.delta,
            'delta_exact': self.delta_exact,
            **self.distance.to_dict(),
            'd_QM': self.d_qm,
            'upper_delta': self.upper_delta,
            'upper_qm': self.upper_qm,
            'passed': self.passed,
        }


@dataclass(frozen=True)
class BottleneckEntry:
    pair: Tuple[int, int]
    distance: Optional[int]
    midpoint: Optional[int]
    max_detour: int
    paths: int
    passed: bool


@dataclass
class BottleneckReport:
    delta: int
    degenerate: bool = False
    reason: str = ''
    entries: List[BottleneckEntry] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(e.passed for e in self.entries)

    def to_dict(self) -> dict:
        return {
            'delta': self.delta,
            'degenerate': self.degenerate,
            'reason': self.reason,
            'passed': self.passed,
            'entries': [
                {'pair': list(e.pair), 'd_T': e.distance, 'midpoint': e.midpoint,
                 'max_detour': e.max_detour, 'paths': e.paths, 'passed': e.passed}
                for e in self.entries
            ],
        }


@dataclass
class AxisChain:
    g: Word
    conjugator: Word
    core: Word
    j0: Hyperplane
    diameter: int
    step: int
    exponents: Tuple[int, ...]
    chain: Tuple[Hyperplane, ...]
    verdicts: Dict[Tuple[int, int], Verdict3] = field(default_factory=dict)
    nested: bool = True

    @property
    def all_certified(self) -> bool:
        return all(v.is_certified for v in self.verdicts.values())

    def to_dict(self, formatter=str) -> dict:
        return {
            'g': formatter(self.g),
            'core': formatter(self.core),
            'D': self.diameter,
            'step': self.step,
            'exponents': list(self.exponents),
            'chain': [h.to_dict(formatter) for h in self.chain],
            'verdicts': [
                {'pair': [i, j], **v.to_dict(lambda w: w.label if isinstance(w, Hyperplane) else str(w))}
                for (i, j), v in sorted(self.verdicts.items())
            ],
            'nested': self.nested,
        }


@dataclass
class MaximalProductsWindow:
    cosets: Tuple[Coset, ...]
    edges: Dict[Tuple[int, int], Verdict3] = field(default_factory=dict)

    def index(self, coset: Coset) -> Optional[int]:
        try:
            return self.cosets.index(coset)
        except ValueError:
            return None

    def graph(self) -> nx.Graph:
        graph = nx.Graph()
        graph.add_nodes_from(range(len(self.cosets)))
        graph.add_edges_from(pair for pair, verdict in self.edges.items() if verdict.is_certified)
        return graph

    def unknown_edges(self) -> List[Tuple[int, int]]:
        return [pair for pair, verdict in self.edges.items() if verdict.is_unknown]

    def to_dict(self, formatter=str) -> dict:
        return {
            'cosets': [c.to_dict(formatter) for c in self.cosets],
            'edges': [list(pair) for pair, v in sorted(self.edges.items()) if v.is_certified],
            'unknown': [list(pair) for pair in self.unknown_edges()],
        }


@dataclass(frozen=True)
class QIReport:
    additive: int
    ratio: float
    samples: int
    skipped: int

    def to_dict(self) -> dict:
        return {'additive': self.additive, 'ratio': self.ratio, 'samples': self.samples, 'skipped': self.skipped}
