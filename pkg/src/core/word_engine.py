import logging
import re
from collections import deque
from typing import Dict, FrozenSet, Iterable, Iterator, List, Optional, Sequence, Tuple, Union

from core import graph_core
from models.errors import (
    GraphProductError, MalformedElementError, ReducibleElementError, RootNotFoundError,
)
from models.presentation import KIND_TABLE, Presentation
from models.word import (
    IDENTITY, GradedDistance, RootResult, SupportClassification, Syllable, Word,
)

logger = logging.getLogger('gpkit.word_engine')

RawSyllable = Union[Syllable, Tuple[str, int]]

TOKEN_PATTERN = re.compile(r'^(?P<vertex>[^\s^:]+)(?:\^(?P<power>-?\d+)|:(?P<index>\d+))?$')


class WordEngine:
    """Normal forms and word arithmetic in a graph product.

    Words are reduced by syllable insertion (merge with a same-vertex syllable
    reachable across a commuting suffix, drop identities) and then put in
    greedy front normal form: the least-index front-shufflable syllable first.
    """

    def __init__(self, presentation: Presentation, span: int = 2):
        self.presentation = presentation
        self.graph = presentation.graph
        self.span = span
        self._balls: Dict[int, List[List[Word]]] = {}

    # ------------------------------------------------------------------
    # syllables

    def syllable(self, vertex: str, element: int) -> Syllable:
        group = self.presentation.group(vertex)
        element = group.check(element)
        if element == group.identity:
            raise MalformedElementError(vertex, element)
        return Syllable(vertex, element)

    def commute(self, s: Syllable, t: Syllable) -> bool:
        return s.vertex != t.vertex and self.presentation.commute(s.vertex, t.vertex)

    def generator_syllables(self, vertex: str) -> List[Syllable]:
        return [Syllable(vertex, g) for g in self.presentation.group(vertex).generators]

    def vertex_syllables(self, vertex: str) -> List[Syllable]:
        """All non-identity syllables of G_v, infinite groups truncated to the span."""
        return [Syllable(vertex, e) for e in self.presentation.group(vertex).elements(self.span)]

    def all_syllables(self) -> List[Syllable]:
        return [s for v in self.graph.vertices for s in self.vertex_syllables(v)]

    # ------------------------------------------------------------------
    # normal form

    def reduce(self, raw: Iterable[RawSyllable]) -> Word:
        stack: List[Syllable] = []
        for item in raw:
            vertex, element = (item.vertex, item.element) if isinstance(item, Syllable) else item
            group = self.presentation.group(vertex)
            element = group.check(element)
            if element == group.identity:
                continue
            self._insert(stack, Syllable(vertex, element))
        return Word(self._front_normal_form(stack))

    def _insert(self, stack: List[Syllable], syl: Syllable):
        group = self.presentation.group(syl.vertex)
        j = len(stack) - 1
        while j >= 0:
            other = stack[j]
            if other.vertex == syl.vertex:
                merged = group.multiply(other.element, syl.element)
                if merged == group.identity:
                    del stack[j]
                else:
                    stack[j] = Syllable(syl.vertex, merged)
                return
            if not self.presentation.commute(other.vertex, syl.vertex):
                break
            j -= 1
        stack.append(syl)

    def _front_normal_form(self, syllables: Sequence[Syllable]) -> Tuple[Syllable, ...]:
        remaining = list(syllables)
        ordered = []
        while remaining:
            best = None
            for i, s in enumerate(remaining):
                if all(self.commute(t, s) for t in remaining[:i]):
                    if best is None or self.graph.index(s.vertex) < self.graph.index(remaining[best].vertex):
                        best = i
            ordered.append(remaining.pop(best))
        return tuple(ordered)

    # ------------------------------------------------------------------
    # group law

    def compose(self, *words: Word) -> Word:
        stack: List[Syllable] = []
        for w in words:
            for s in w:
                self._insert(stack, s)
        return Word(self._front_normal_form(stack))

    def invert(self, x: Word) -> Word:
        return self.reduce(
            Syllable(s.vertex, self.presentation.group(s.vertex).inverse(s.element))
            for s in reversed(x.syllables)
        )

    def power(self, x: Word, n: int) -> Word:
        base = x if n >= 0 else self.invert(x)
        result = IDENTITY
        for _ in range(abs(n)):
            result = self.compose(result, base)
        return result

    def conjugate(self, g: Word, x: Word) -> Word:
        """g·x·g⁻¹."""
        return self.compose(g, x, self.invert(g))

    def commutator(self, x: Word, y: Word) -> Word:
        return self.compose(x, y, self.invert(x), self.invert(y))

    def commutes(self, x: Word, y: Word) -> bool:
        return self.compose(x, y) == self.compose(y, x)

    def letter(self, vertex: str, element: int) -> Word:
        return Word((self.syllable(vertex, element),))

    def word_length(self, vertex: str, element: int) -> int:
        """Length of a vertex-group element in its generators S_v."""
        group = self.presentation.group(vertex)
        return group.word_length(group.check(element))

    # ------------------------------------------------------------------
    # heads, tails and traces

    def is_head(self, x: Word, i: int) -> bool:
        return all(self.commute(x[j], x[i]) for j in range(i))

    def is_tail(self, x: Word, i: int) -> bool:
        return all(self.commute(x[j], x[i]) for j in range(i + 1, len(x)))

    def head(self, x: Word) -> FrozenSet[Syllable]:
        return frozenset(x[i] for i in range(len(x)) if self.is_head(x, i))

    def tail(self, x: Word) -> FrozenSet[Syllable]:
        """Syllables that shuffle to the right end of x."""
        return frozenset(x[i] for i in range(len(x)) if self.is_tail(x, i))

    def predecessors(self, x: Word) -> List[FrozenSet[int]]:
        """For each position, the earlier positions it cannot be shuffled past."""
        return [
            frozenset(i for i in range(j) if not self.commute(x[i], x[j]))
            for j in range(len(x))
        ]

    def trace_prefixes(self, x: Word, max_size: Optional[int] = None) -> Iterator[FrozenSet[int]]:
        """Downward-closed position sets of the commutation poset, by increasing size."""
        preds = self.predecessors(x)
        limit = len(x) if max_size is None else min(max_size, len(x))
        layer = {frozenset()}
        yield frozenset()
        for _ in range(limit):
            following = set()
            for prefix in layer:
                for j in range(len(x)):
                    if j not in prefix and preds[j] <= prefix:
                        following.add(prefix | {j})
            for prefix in sorted(following, key=sorted):
                yield prefix
            layer = following

    def prefix_word(self, x: Word, positions: Iterable[int]) -> Word:
        keep = set(positions)
        return self.reduce(x[i] for i in range(len(x)) if i in keep)

    def linearizations(self, x: Word, limit: int = 64) -> List[Tuple[Syllable, ...]]:
        """Up to limit reduced spellings of x (linear extensions of its trace)."""
        preds = self.predecessors(x)
        found: List[Tuple[Syllable, ...]] = []

        def extend(done: FrozenSet[int], spelled: Tuple[Syllable, ...]):
            if len(found) >= limit:
                return
            if len(done) == len(x):
                found.append(spelled)
                return
            for j in range(len(x)):
                if j not in done and preds[j] <= done:
                    extend(done | {j}, spelled + (x[j],))

        extend(frozenset(), ())
        return found

    def common_prefix(self, a: Word, b: Word) -> Word:
        """Greatest common trace prefix of two words."""
        prefix: List[Syllable] = []
        while True:
            heads_b = self.head(b)
            shared = [s for s in a if s in heads_b and self.is_head(a, a.syllables.index(s))]
            if not shared:
                return self.reduce(prefix)
            s = min(shared, key=lambda t: self.graph.index(t.vertex))
            prefix.append(s)
            letter = self.invert(Word((s,)))
            a = self.compose(letter, a)
            b = self.compose(letter, b)

    # ------------------------------------------------------------------
    # cyclic reduction and supports

    def cyclic_reduce(self, x: Word) -> Tuple[Word, Word]:
        """x = conjugator·core·conjugator⁻¹ with core graphically cyclically reduced."""
        conjugator, core = IDENTITY, x
        while True:
            heads = [i for i in range(len(core)) if self.is_head(core, i)]
            tails = [j for j in range(len(core)) if self.is_tail(core, j)]
            pairs = [
                (i, j) for i in heads for j in tails
                if i < j and core[i].vertex == core[j].vertex
            ]
            if not pairs:
                return conjugator, core
            i, _ = min(pairs, key=lambda p: self.graph.index(core[p[0]].vertex))
            letter = Word((core[i],))
            conjugator = self.compose(conjugator, letter)
            core = self.compose(self.invert(letter), core, letter)

    def is_cyclically_reduced(self, x: Word) -> bool:
        return self.cyclic_reduce(x)[0].is_identity

    def support(self, x: Word) -> FrozenSet[str]:
        return self.cyclic_reduce(x)[1].vertex_set

    def support_classify(self, x: Word) -> SupportClassification:
        supp = self.support(x)
        single = len(supp) == 1
        in_join = graph_core.lies_in_join(self.graph, supp) if len(supp) >= 2 else single
        return SupportClassification(
            support=supp,
            is_single_vertex=single,
            support_is_join=graph_core.is_join(self.graph, supp),
            lies_in_join=in_join,
            is_irreducible=len(supp) >= 2 and not in_join,
            has_full_support=supp == self.graph.vertex_set,
        )

    # ------------------------------------------------------------------
    # metrics

    def graded_distance(self, x: Word, y: Word) -> GradedDistance:
        w = self.compose(self.invert(x), y)
        d_u = {v: 0 for v in self.graph.vertices}
        delta_u = {v: 0 for v in self.graph.vertices}
        for s in w:
            d_u[s.vertex] += 1
            delta_u[s.vertex] += self.word_length(s.vertex, s.element)
        return GradedDistance(len(w), d_u, delta_u, sum(delta_u.values()))

    def distance(self, x: Word, y: Word) -> int:
        return len(self.compose(self.invert(x), y))

    def delta_length(self, x: Word) -> int:
        return sum(self.word_length(s.vertex, s.element) for s in x)

    # ------------------------------------------------------------------
    # roots

    def primitive_root(self, x: Word, bound: Optional[int] = None) -> RootResult:
        """Root of maximal exponent among roots of syllable length ≤ bound.

        Roots are searched among trace prefixes of the cyclic core, whose
        support must span a non-join subgraph on at least two vertices.
        """
        conjugator, core = self.cyclic_reduce(x)
        supp = core.vertex_set
        if len(supp) < 2:
            raise ReducibleElementError(self.format_word(x), "support has fewer than two vertices")
        if graph_core.is_join(self.graph, supp):
            raise ReducibleElementError(self.format_word(x), "support spans a join")
        total = len(core)
        bound = total if bound is None else bound
        for n in range(total, 0, -1):
            if total % n or total // n > bound:
                continue
            size = total // n
            for positions in self.trace_prefixes(core, size):
                if len(positions) != size:
                    continue
                candidate = self.prefix_word(core, positions)
                if self.power(candidate, n) == core:
                    logger.debug("Root of exponent %d found for %s", n, self.format_word(x))
                    return RootResult(self.conjugate(conjugator, candidate), n)
        raise RootNotFoundError(self.format_word(x), bound)

    # ------------------------------------------------------------------
    # balls

    def ball(self, radius: int, center: Word = IDENTITY) -> List[Word]:
        """Syllable-metric ball, layer by layer, around center."""
        layers = self._ball_layers(radius)
        words = [w for layer in layers[:radius + 1] for w in layer]
        if center.is_identity:
            return words
        return [self.compose(center, w) for w in words]

    def sphere(self, radius: int) -> List[Word]:
        return list(self._ball_layers(radius)[radius])

    def _ball_layers(self, radius: int) -> List[List[Word]]:
        cached = self._balls.get(max(self._balls, default=-1))
        if cached is not None and len(cached) > radius:
            return cached
        layers = cached or [[IDENTITY]]
        seen = {w for layer in layers for w in layer}
        letters = [Word((s,)) for s in self.all_syllables()]
        while len(layers) <= radius:
            following = []
            for w in layers[-1]:
                for letter in letters:
                    candidate = self.compose(w, letter)
                    if len(candidate) == len(layers) and candidate not in seen:
                        seen.add(candidate)
                        following.append(candidate)
            layers.append(following)
            logger.debug("Ball layer %d has %d elements", len(layers) - 1, len(following))
        self._balls[len(layers) - 1] = layers
        return layers

    # ------------------------------------------------------------------
    # text form

    def format_syllable(self, s: Syllable) -> str:
        group = self.presentation.group(s.vertex)
        if group.kind == KIND_TABLE:
            return f"{s.vertex}:{s.element}"
        generator = group.generators[0]
        if group.is_finite:
            k = next(k for k in range(1, group.order) if group.power(generator, k) == s.element)
        else:
            k = s.element
        return s.vertex if k == 1 else f"{s.vertex}^{k}"

    def format_word(self, x: Word) -> str:
        return ' '.join(self.format_syllable(s) for s in x)

    def parse_word(self, text: str) -> Word:
        raw = []
        for token in text.split():
            match = TOKEN_PATTERN.match(token)
            if not match:
                raise GraphProductError(f"Malformed word token '{token}'.")
            vertex = self.graph.check_vertex(match.group('vertex'))
            group = self.presentation.group(vertex)
            if match.group('index') is not None:
                raw.append((vertex, group.check(int(match.group('index')))))
            else:
                k = int(match.group('power') or 1)
                raw.append((vertex, group.power(group.generators[0], k)))
        return self.reduce(raw)
