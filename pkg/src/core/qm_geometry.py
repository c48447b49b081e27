"""Hyperplanes of the quasi-median graph and their combinatorics.

A hyperplane labelled u is identified with its carrier, the canonical coset
of ⟨star(u)⟩. Sectors of a wall are indexed by the vertex group G_u through
the gate projection onto one dual clique.
"""

import logging
from functools import lru_cache
from itertools import permutations, product
from typing import Iterable, List, Optional, Sequence

from core import graph_core
from core.parabolics import ParabolicAlgebra
from core.word_engine import WordEngine
from models.coset import Bridge, Coset, Hyperplane, MedianTriangle
from models.errors import PreconditionError
from models.geometry import (
    RELATION_EQUAL, RELATION_SEPARATED, RELATION_TANGENT, RELATION_TRANSVERSE,
    CoarseMedianDefects, DeltaChain, HyperplaneRelation,
)
from models.verdict import Verdict3
from models.word import IDENTITY, Word

logger = logging.getLogger('gpkit.qm_geometry')

MODE_RULES = 'rules'
MODE_SEARCH = 'search'


class QuasiMedianGeometry:
    def __init__(self, engine: WordEngine, parabolics: Optional[ParabolicAlgebra] = None):
        self.engine = engine
        self.graph = engine.graph
        self.parabolics = parabolics or ParabolicAlgebra(engine)

    # ------------------------------------------------------------------
    # walls

    def hyperplane_at(self, x: Word, u: str) -> Hyperplane:
        """The wall dual to the u-edges at x."""
        return Hyperplane(u, self.parabolics.coset(x, graph_core.star(self.graph, u)))

    def translate(self, g: Word, wall: Hyperplane) -> Hyperplane:
        return self.hyperplane_at(self.engine.compose(g, wall.carrier.rep), wall.label)

    def distance_to_carrier(self, x: Word, wall: Hyperplane) -> int:
        return self.parabolics.coset_distance(x, wall.carrier)

    def separating_hyperplanes(self, x: Word, y: Word) -> List[Hyperplane]:
        w = self.engine.compose(self.engine.invert(x), y)
        walls = []
        for i, s in enumerate(w):
            prefix = self.engine.compose(x, self.engine.reduce(w[:i]))
            walls.append(self.hyperplane_at(prefix, s.vertex))
        return walls

    # ------------------------------------------------------------------
    # sectors

    def sector_key(self, wall: Hyperplane, x: Word, via: Word = IDENTITY) -> int:
        """G_u element naming the sector of x, read off the clique rep·via·G_u.

        via must lie in ⟨link(u)⟩; every choice gives the same key.
        """
        base = self.engine.compose(wall.carrier.rep, via)
        gate = self.parabolics.project(x, Coset(base, frozenset((wall.label,))))
        offset = self.engine.compose(self.engine.invert(base), gate)
        return offset[0].element if offset else self.engine.presentation.group(wall.label).identity

    def separates(self, wall: Hyperplane, x: Word, y: Word) -> bool:
        return self.sector_key(wall, x) != self.sector_key(wall, y)

    def delta_j(self, wall: Hyperplane, x: Word, y: Word) -> int:
        group = self.engine.presentation.group(wall.label)
        a, b = self.sector_key(wall, x), self.sector_key(wall, y)
        return group.word_length(group.multiply(group.inverse(a), b))

    def separates_point_from(self, wall: Hyperplane, x: Word, other: Hyperplane) -> bool:
        """Whether other lies in one sector of wall, not the sector of x.

        A wall not transverse to ours has its whole carrier inside one sector,
        so any carrier point names it.
        """
        if wall == other or self.is_transverse(wall, other):
            return False
        return self.separates(wall, x, other.carrier.rep)

    def separates_hyperplanes(self, wall: Hyperplane, j: Hyperplane, k: Hyperplane) -> bool:
        """Whether wall separates the carriers of j and k."""
        if wall in (j, k):
            return False
        x, y = self.parabolics.min_pair(j.carrier, k.carrier)
        return self.separates(wall, x, y)

    # ------------------------------------------------------------------
    # relations

    def carriers_intersect(self, j1: Hyperplane, j2: Hyperplane) -> bool:
        gap = self.engine.compose(self.engine.invert(j1.carrier.rep), j2.carrier.rep)
        return self.parabolics.double_coset_member(gap, j1.carrier.lambda_, j2.carrier.lambda_).is_certified

    def hyperplane_relation(self, j1: Hyperplane, j2: Hyperplane) -> HyperplaneRelation:
        if j1 == j2:
            return HyperplaneRelation(RELATION_EQUAL)
        if self.carriers_intersect(j1, j2):
            if j1.label != j2.label and self.graph.adjacent(j1.label, j2.label):
                return HyperplaneRelation(RELATION_TRANSVERSE)
            return HyperplaneRelation(RELATION_TANGENT)
        return HyperplaneRelation(RELATION_SEPARATED, self.bridge(j1.carrier, j2.carrier).distance)

    def is_transverse(self, j1: Hyperplane, j2: Hyperplane) -> bool:
        if j1 == j2 or not self.graph.adjacent(j1.label, j2.label):
            return False
        return self.carriers_intersect(j1, j2)

    def bridge(self, c1: Coset, c2: Coset) -> Bridge:
        x1, y1 = self.parabolics.min_pair(c1, c2)
        separators = tuple(self.separating_hyperplanes(x1, y1))
        _, xi = self.parabolics.intersection_support(c1, c2)
        labels = frozenset(h.label for h in separators)
        enclosing = None
        if xi and labels:
            enclosing = self.parabolics.coset(x1, xi | labels)
        return Bridge((x1, y1), separators, enclosing, xi)

    def strongly_separated(self, j1: Hyperplane, j2: Hyperplane, radius: Optional[int] = None,
                           mode: str = MODE_RULES) -> Verdict3:
        """Whether no wall is transverse to both j1 and j2.

        In rules mode the verdict is exact; a radius adds a ball search that
        only cross-checks it. Search mode relies on the ball alone.
        """
        relation = self.hyperplane_relation(j1, j2)
        if relation.kind in (RELATION_EQUAL, RELATION_TRANSVERSE):
            raise PreconditionError('strongly_separated', f"walls are {relation.kind}")
        if mode == MODE_SEARCH:
            witness = self._search_common_transversal(j1, j2, radius or 0)
            if witness is not None:
                return Verdict3.refuted('ball-search', witness)
            return Verdict3.unknown('ball-search', radius or 0)

        common = graph_core.link(self.graph, j1.label) & graph_core.link(self.graph, j2.label)
        if not common:
            verdict = Verdict3.certified('disjoint-links')
        else:
            bridge = self.bridge(j1.carrier, j2.carrier)
            candidates = set(common)
            for label in bridge.separator_labels:
                candidates &= self.graph.neighbours(label)
            if candidates:
                w = self.graph.sort(candidates)[0]
                return Verdict3.refuted('bridge-labels', self.hyperplane_at(bridge.min_pair[0], w))
            verdict = Verdict3.certified('bridge-labels')

        if radius is not None and common:
            witness = self._search_common_transversal(j1, j2, radius)
            if witness is not None:
                logger.warning("Ball search refutes rule-certified strong separation of %s and %s",
                               j1.label, j2.label)
                return Verdict3.refuted('ball-search', witness)
        return verdict

    def _search_common_transversal(self, j1: Hyperplane, j2: Hyperplane, radius: int) -> Optional[Hyperplane]:
        common = graph_core.link(self.graph, j1.label) & graph_core.link(self.graph, j2.label)
        if not common:
            return None
        center = self.parabolics.min_pair(j1.carrier, j2.carrier)[0]
        seen = set()
        for w in self.engine.ball(radius, center):
            for label in self.graph.sort(common):
                wall = self.hyperplane_at(w, label)
                if wall in seen:
                    continue
                seen.add(wall)
                if self.is_transverse(wall, j1) and self.is_transverse(wall, j2):
                    return wall
        logger.debug("No common transversal within radius %d (%d walls tried)", radius, len(seen))
        return None

    def delta_chain(self, a: Hyperplane, b: Hyperplane, radius: Optional[int] = None) -> DeltaChain:
        """Longest chain of pairwise strongly separated walls separating a and b.

        Consecutive strong separation suffices: a wall crossing two chain
        members crosses every member between them.
        """
        if a == b or self.is_transverse(a, b):
            return DeltaChain(0, True)
        separators = list(self.bridge(a.carrier, b.carrier).separators)
        exact = True
        best = [1] * len(separators)
        previous: List[Optional[int]] = [None] * len(separators)
        for i, later in enumerate(separators):
            for j in range(i):
                earlier = separators[j]
                if self.is_transverse(earlier, later):
                    continue
                verdict = self.strongly_separated(earlier, later, radius)
                if verdict.is_unknown:
                    exact = False
                if verdict.is_certified and best[j] + 1 > best[i]:
                    best[i] = best[j] + 1
                    previous[i] = j
        if not separators:
            return DeltaChain(0, exact)
        end = max(range(len(separators)), key=lambda i: (best[i], -i))
        chain = []
        cursor: Optional[int] = end
        while cursor is not None:
            chain.append(separators[cursor])
            cursor = previous[cursor]
        return DeltaChain(best[end], exact, tuple(reversed(chain)))

    # ------------------------------------------------------------------
    # intervals and medians

    def interval(self, x: Word, y: Word) -> List[Word]:
        w = self.engine.compose(self.engine.invert(x), y)
        return [
            self.engine.compose(x, self.engine.prefix_word(w, positions))
            for positions in self.engine.trace_prefixes(w)
        ]

    def _corner(self, x: Word, y: Word, z: Word) -> Word:
        inverse = self.engine.invert(x)
        return self.engine.compose(
            x, self.engine.common_prefix(self.engine.compose(inverse, y), self.engine.compose(inverse, z)))

    def median_triangle(self, x: Word, y: Word, z: Word) -> MedianTriangle:
        x1 = self._corner(x, y, z)
        y1 = self._corner(y, x, z)
        z1 = self._corner(z, x, y)
        inverse = self.engine.invert(x1)
        spread = (self.engine.compose(inverse, y1).vertex_set
                  | self.engine.compose(inverse, z1).vertex_set)
        prism = self.parabolics.coset(x1, spread)
        return MedianTriangle((x1, y1, z1), prism, self.engine.distance(x1, y1))

    def coarse_median(self, x: Word, y: Word, z: Word) -> Word:
        return self.median_triangle(x, y, z).corners[0]

    def coarse_median_defects(self, points: Sequence[Word]) -> CoarseMedianDefects:
        """Measured constants of the coarse median axioms over every triple and quadruple of points.

        samples counts the quadruples.
        """
        points = list(points)
        d = lru_cache(maxsize=None)(self.engine.distance)
        mu = lru_cache(maxsize=None)(self.coarse_median)
        defects = CoarseMedianDefects()
        for a, b in product(points, repeat=2):
            defects.c1 = max(defects.c1, d(mu(a, a, b), a))
        for a, b, c in product(points, repeat=3):
            m = mu(a, b, c)
            defects.c0 = max(defects.c0, max(d(m, mu(*p)) for p in permutations((a, b, c))))
        for a, b, c, e in product(points, repeat=4):
            defects.c2 = max(defects.c2, d(mu(mu(a, b, c), b, e), mu(a, b, mu(c, b, e))))
            defects.samples += 1
        logger.debug("Coarse median defects over %d quadruples: %s", defects.samples, defects.to_dict())
        return defects

    def walls_through(self, x: Word, labels: Iterable[str] = ()) -> List[Hyperplane]:
        labels = list(labels) or list(self.graph.vertices)
        return [self.hyperplane_at(x, u) for u in labels]
