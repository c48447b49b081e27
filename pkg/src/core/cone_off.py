"""Cone-off of the quasi-median graph over proper parabolic cosets."""

import logging
from typing import List, Optional, Sequence

from core.qm_geometry import QuasiMedianGeometry
from models.coneoff import (
    KIND_IRREDUCIBLE, KIND_REDUCIBLE, KIND_TRIVIAL, KIND_VERTEX_CONJUGATE,
    Block, BlockChainCertificate, ConeOffDistance, ElementClass,
)
from models.coset import Hyperplane
from models.errors import PreconditionError
from models.verdict import Verdict3
from models.word import IDENTITY, Word

logger = logging.getLogger('gpkit.cone_off')


class ConeOff:
    def __init__(self, geometry: QuasiMedianGeometry, depth_bound: int = 6):
        self.geometry = geometry
        self.engine = geometry.engine
        self.parabolics = geometry.parabolics
        self.graph = geometry.graph
        self.depth_bound = depth_bound

    def _is_proper(self, w: Word) -> bool:
        return w.vertex_set != self.graph.vertex_set

    def coneoff_adjacent(self, x: Word, y: Word) -> bool:
        return x != y and self._is_proper(self.engine.compose(self.engine.invert(x), y))

    def _hop_distance(self, w: Word, depth_bound: int) -> Optional[int]:
        """Fewest proper-support factors w splits into, each hop peeling a maximal head."""
        if w.is_identity:
            return 0
        frontier = [w]
        seen = {w}
        for depth in range(1, depth_bound + 1):
            if any(self._is_proper(r) for r in frontier):
                return depth
            following = []
            for r in frontier:
                for v in self.graph.vertices:
                    head, rest = self.parabolics.head_decompose(r, self.graph.vertex_set - {v})
                    if head.is_identity or rest in seen:
                        continue
                    seen.add(rest)
                    following.append(rest)
            frontier = following
            logger.debug("Cone-off hop search depth %d: %d residues", depth, len(frontier))
        return None

    def coneoff_distance(self, x: Word, y: Word, depth_bound: Optional[int] = None) -> ConeOffDistance:
        depth_bound = self.depth_bound if depth_bound is None else depth_bound
        lower = self.block_chain_certificate(x, y).lower_bound
        value = self._hop_distance(self.engine.compose(self.engine.invert(x), y), depth_bound)
        exact = value is not None and (value <= 2 or value == lower)
        return ConeOffDistance(value, exact, lower, depth_bound)

    def block_chain_certificate(self, x: Word, y: Word) -> BlockChainCertificate:
        """Greedy label-covering blocks of the separators, merged until consecutive blocks are ordered.

        Blocks B, B' are ordered when every wall of B separates x from every
        wall of B' and every wall of B' separates y from every wall of B.
        N ordered blocks bound d_Y(x, y) below by N+1.
        """
        separators = self.geometry.separating_hyperplanes(x, y)
        everything = self.graph.vertex_set
        groups: List[List[Hyperplane]] = []
        current: List[Hyperplane] = []
        for wall in separators:
            current.append(wall)
            if {h.label for h in current} == everything:
                groups.append(current)
                current = []
        changed = True
        while changed and len(groups) >= 2:
            changed = False
            for i in range(len(groups) - 1):
                if not self._ordered_blocks(x, y, groups[i], groups[i + 1]):
                    logger.debug("Merging blocks %d and %d of %d", i, i + 1, len(groups))
                    groups[i:i + 2] = [groups[i] + groups[i + 1]]
                    changed = True
                    break
        return BlockChainCertificate(x, y, tuple(Block(tuple(g)) for g in groups))

    def _ordered_blocks(self, x: Word, y: Word, earlier: Sequence[Hyperplane],
                        later: Sequence[Hyperplane]) -> bool:
        return all(
            self.geometry.separates_point_from(j, x, k) and self.geometry.separates_point_from(k, y, j)
            for j in earlier for k in later
        )

    def lower_bound(self, certificate: BlockChainCertificate) -> int:
        return certificate.lower_bound

    def _within(self, x: Word, y: Word, epsilon: int) -> Optional[bool]:
        """Whether d_Y(x, y) ≤ epsilon; None when neither bound decides it."""
        if self.block_chain_certificate(x, y).lower_bound > epsilon:
            return False
        value = self._hop_distance(self.engine.compose(self.engine.invert(x), y), epsilon)
        if value is not None and value <= epsilon:
            return True
        return None

    def wpd_sample_audit(self, g: Word, epsilon: int, n: int, radius: int) -> Verdict3:
        """Finiteness of {h : d_Y(1,h) ≤ ε, d_Y(gⁿ,hgⁿ) ≤ ε} inside a ball."""
        if not self.engine.support_classify(g).has_full_support:
            raise PreconditionError('wpd_sample_audit', "element must have full support")
        if epsilon == 0:
            return Verdict3.certified('free-action', (IDENTITY,))
        gn = self.engine.power(g, n)
        members, undecided = [], 0
        for h in self.engine.ball(radius):
            near = self._within(IDENTITY, h, epsilon)
            if near is False:
                continue
            far = self._within(gn, self.engine.compose(h, gn), epsilon)
            if far is False:
                continue
            if near and far:
                members.append(h)
            else:
                undecided += 1
        on_sphere = any(len(h) == radius for h in members)
        logger.debug("WPD audit: %d members, %d undecided within radius %d", len(members), undecided, radius)
        if undecided or on_sphere:
            return Verdict3.unknown('sphere-clear', radius)
        return Verdict3.certified('sphere-clear', tuple(members))

    def classify_element(self, x: Word) -> ElementClass:
        if x.is_identity:
            return ElementClass(KIND_TRIVIAL, False, False)
        classification = self.engine.support_classify(x)
        if classification.is_single_vertex:
            kind = KIND_VERTEX_CONJUGATE
        elif classification.is_irreducible:
            kind = KIND_IRREDUCIBLE
        else:
            kind = KIND_REDUCIBLE
        return ElementClass(kind, classification.is_irreducible, classification.has_full_support)

    def bigon_hausdorff(self, x: Word, y: Word, limit: int = 16) -> int:
        """Largest Y-Hausdorff distance between the canonical geodesic and other spellings."""
        w = self.engine.compose(self.engine.invert(x), y)
        spellings = self.engine.linearizations(w, limit)
        paths = [self._path(x, spelling) for spelling in spellings]
        worst = 0
        for other in paths[1:]:
            worst = max(worst, self._hausdorff(paths[0], other))
        return worst

    def _path(self, x: Word, spelling) -> List[Word]:
        points, current = [x], x
        for s in spelling:
            current = self.engine.compose(current, Word((s,)))
            points.append(current)
        return points

    def _hausdorff(self, p: List[Word], q: List[Word]) -> int:
        def d(a: Word, b: Word) -> int:
            value = self._hop_distance(self.engine.compose(self.engine.invert(a), b), self.depth_bound)
            return self.depth_bound + 1 if value is None else value

        one = max(min(d(a, b) for b in q) for a in p)
        two = max(min(d(a, b) for a in p) for b in q)
        return max(one, two)
