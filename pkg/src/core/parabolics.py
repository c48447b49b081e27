"""Parabolic cosets g⟨Λ⟩: canonical representatives, projections, centralizers."""

import logging
from typing import Iterable, List, Optional, Tuple

from core import graph_core
from core.word_engine import WordEngine
from models.coset import CenterDescription, CentralizerDescription, Coset
from models.graph import VertexSet
from models.verdict import Verdict3
from models.word import IDENTITY, Syllable, Word

logger = logging.getLogger('gpkit.parabolics')


class ParabolicAlgebra:
    """Coset arithmetic over one WordEngine."""

    def __init__(self, engine: WordEngine):
        self.engine = engine
        self.graph = engine.graph

    def _vertex_set(self, vertices: Iterable[str]) -> VertexSet:
        return frozenset(self.graph.check_vertex(v) for v in vertices)

    def _first(self, syllables: List[Syllable]) -> Syllable:
        return min(syllables, key=lambda s: self.graph.index(s.vertex))

    def head_decompose(self, w: Word, lambda_: Iterable[str]) -> Tuple[Word, Word]:
        """Split w = head·rest with head the maximal left factor in ⟨Λ⟩."""
        members = self._vertex_set(lambda_)
        head: List[Syllable] = []
        rest = w
        while True:
            movable = [
                rest[i] for i in range(len(rest))
                if rest[i].vertex in members and self.engine.is_head(rest, i)
            ]
            if not movable:
                break
            s = self._first(movable)
            head.append(s)
            rest = self.engine.compose(self.engine.invert(Word((s,))), rest)
        return self.engine.reduce(head), rest

    def tail_decompose(self, w: Word, lambda_: Iterable[str]) -> Tuple[Word, Word]:
        """Split w = rest·tail with tail the maximal right factor in ⟨Λ⟩."""
        members = self._vertex_set(lambda_)
        tail: List[Syllable] = []
        rest = w
        while True:
            movable = [
                rest[i] for i in range(len(rest))
                if rest[i].vertex in members and self.engine.is_tail(rest, i)
            ]
            if not movable:
                break
            s = self._first(movable)
            tail.insert(0, s)
            rest = self.engine.compose(rest, self.engine.invert(Word((s,))))
        return rest, self.engine.reduce(tail)

    def coset(self, g: Word, lambda_: Iterable[str]) -> Coset:
        members = self._vertex_set(lambda_)
        rep, _ = self.tail_decompose(g, members)
        return Coset(rep, members)

    def membership(self, x: Word, c: Coset) -> bool:
        offset = self.engine.compose(self.engine.invert(c.rep), x)
        return offset.vertex_set <= c.lambda_

    def project(self, x: Word, c: Coset) -> Word:
        """Gate of x on the coset: the unique closest coset element."""
        offset = self.engine.compose(self.engine.invert(c.rep), x)
        head, _ = self.head_decompose(offset, c.lambda_)
        return self.engine.compose(c.rep, head)

    def coset_distance(self, x: Word, c: Coset) -> int:
        return self.engine.distance(x, self.project(x, c))

    def normalizer_support(self, lambda_: Iterable[str]) -> VertexSet:
        members = self._vertex_set(lambda_)
        return members | graph_core.common_link(self.graph, members)

    def double_coset_member(self, w: Word, a: Iterable[str], b: Iterable[str]) -> Verdict3:
        """Greedy test for w ∈ ⟨A⟩·⟨B⟩: strip the ⟨A⟩-head, then the ⟨B⟩-tail."""
        _, rest = self.head_decompose(w, a)
        residual, _ = self.tail_decompose(rest, b)
        if residual.is_identity:
            return Verdict3.certified('greedy-strip')
        return Verdict3.refuted('greedy-strip', residual)

    def intersection_support(self, c1: Coset, c2: Coset) -> Tuple[Word, VertexSet]:
        """x and Ξ with rep1⟨Λ1⟩rep1⁻¹ ∩ rep2⟨Λ2⟩rep2⁻¹ = x⟨Ξ⟩x⁻¹.

        Ξ is the set of labels shared by both cosets and commuting with
        every hyperplane separating them; x is the c1-end of the bridge.
        """
        x1, y1 = self.min_pair(c1, c2)
        gap = self.engine.compose(self.engine.invert(x1), y1)
        xi = c1.lambda_ & c2.lambda_
        for s in gap:
            xi &= self.graph.neighbours(s.vertex)
        return x1, frozenset(xi)

    def min_pair(self, c1: Coset, c2: Coset) -> Tuple[Word, Word]:
        """Closest pair of points by alternating projections until stable."""
        x = self.project(c2.rep, c1)
        y = self.project(x, c2)
        while True:
            x_next = self.project(y, c1)
            y_next = self.project(x_next, c2)
            if x_next == x and y_next == y:
                return x, y
            x, y = x_next, y_next

    def centralizer_description(self, x: Word, root_bound: Optional[int] = None) -> CentralizerDescription:
        engine = self.engine
        conjugator, core = engine.cyclic_reduce(x)
        supp = core.vertex_set
        if not supp:
            return CentralizerDescription(IDENTITY, self.graph.vertex_set, (), ())
        decomposition = graph_core.join_decomposition(self.graph, supp)
        vertex_parts = []
        for v in self.graph.sort(decomposition.clique_part):
            element = next(s.element for s in core if s.vertex == v)
            centralizer = engine.presentation.group(v).centralizer(element)
            vertex_parts.append((v, None if centralizer is None else tuple(centralizer)))
        cyclic_parts = []
        for factor in decomposition.factors:
            sub = engine.reduce(s for s in core if s.vertex in factor)
            cyclic_parts.append(engine.primitive_root(sub, root_bound).root)
        logger.debug("Centralizer of %s: %d vertex parts, %d cyclic parts",
                     engine.format_word(x), len(vertex_parts), len(cyclic_parts))
        return CentralizerDescription(
            conjugator=conjugator,
            link_part=graph_core.common_link(self.graph, supp),
            vertex_parts=tuple(vertex_parts),
            cyclic_parts=tuple(cyclic_parts),
        )

    def centralizer_generators(self, desc: CentralizerDescription) -> List[Word]:
        """Sample generators of the described centralizer, conjugated back."""
        engine = self.engine
        generators: List[Word] = []
        for v in self.graph.sort(desc.link_part):
            generators.extend(Word((s,)) for s in engine.generator_syllables(v))
        for v, elements in desc.vertex_parts:
            group = engine.presentation.group(v)
            pool = group.elements(engine.span) if elements is None else elements
            generators.extend(engine.reduce([(v, e)]) for e in pool if e != group.identity)
        generators.extend(desc.cyclic_parts)
        return [engine.conjugate(desc.conjugator, g) for g in generators]

    def center(self) -> CenterDescription:
        clique = graph_core.join_decomposition(self.graph).clique_part
        presentation = self.engine.presentation
        parts = {}
        for v in self.graph.sort(clique):
            center = presentation.group(v).center()
            parts[v] = None if center is None else tuple(center)
        return CenterDescription(parts)
