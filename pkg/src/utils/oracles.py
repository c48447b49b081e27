"""Brute-force oracles used to cross-check the algebraic shortcuts.

None of these rely on the canonical normal form for their answer: words are
compared by exhaustive rewriting, walls by union-find over squares and
triangles, medians by exhaustive search over intervals.
"""

import logging
from collections import deque
from itertools import combinations
from typing import Dict, FrozenSet, Iterable, List, Optional, Sequence, Set, Tuple

from networkx.utils import UnionFind

from core.word_engine import WordEngine
from models.presentation import Presentation
from models.word import IDENTITY, Syllable, Word

logger = logging.getLogger('gpkit.oracles')

RawWord = Tuple[Tuple[str, int], ...]
Edge = FrozenSet[Word]


# ----------------------------------------------------------------------
# rewriting

def _moves(presentation: Presentation, word: RawWord) -> Iterable[RawWord]:
    """Words one elementary move away: drop an identity, merge or swap a neighbouring pair."""
    for i, (v, e) in enumerate(word):
        if e == presentation.group(v).identity:
            yield word[:i] + word[i + 1:]
    for i in range(len(word) - 1):
        (v, e), (w, f) = word[i], word[i + 1]
        if v == w:
            yield word[:i] + ((v, presentation.group(v).multiply(e, f)),) + word[i + 2:]
        elif presentation.commute(v, w):
            yield word[:i] + (word[i + 1], word[i]) + word[i + 2:]


def rewriting_length(presentation: Presentation, word: Sequence[Tuple[str, int]]) -> int:
    """Shortest syllable length reachable from word by non-lengthening moves."""
    start = tuple(word)
    seen = {start}
    queue = deque([start])
    best = len(start)
    while queue:
        current = queue.popleft()
        best = min(best, len(current))
        if best == 0:
            break
        for following in _moves(presentation, current):
            if following not in seen:
                seen.add(following)
                queue.append(following)
    return best


def is_trivial(presentation: Presentation, word: Sequence[Tuple[str, int]]) -> bool:
    return rewriting_length(presentation, word) == 0


def raw_inverse(presentation: Presentation, word: Sequence[Tuple[str, int]]) -> RawWord:
    return tuple((v, presentation.group(v).inverse(e)) for v, e in reversed(word))


def raw_words(engine: WordEngine, length: int) -> List[RawWord]:
    """Every syllable sequence of exactly the given length, including unreduced ones."""
    letters = [(s.vertex, s.element) for s in engine.all_syllables()]
    words: List[RawWord] = [()]
    for _ in range(length):
        words = [w + (letter,) for w in words for letter in letters]
    return words


# ----------------------------------------------------------------------
# Cayley graphs

def cayley_distances(engine: WordEngine, radius: int, generators_only: bool = True) -> Dict[Word, int]:
    """BFS distances from the identity in the Cayley graph.

    generators_only=True walks over ∪S_u (the δ-metric); otherwise over all
    non-trivial syllables (the quasi-median graph).
    """
    if generators_only:
        steps = []
        for v in engine.graph.vertices:
            group = engine.presentation.group(v)
            for g in group.generators:
                steps.extend({Syllable(v, g), Syllable(v, group.inverse(g))})
    else:
        steps = engine.all_syllables()
    letters = [Word((s,)) for s in steps]
    distances = {IDENTITY: 0}
    queue = deque([IDENTITY])
    while queue:
        current = queue.popleft()
        if distances[current] == radius:
            continue
        for letter in letters:
            following = engine.compose(current, letter)
            if following not in distances:
                distances[following] = distances[current] + 1
                queue.append(following)
    logger.debug("Cayley BFS reached %d elements within radius %d", len(distances), radius)
    return distances


def double_coset_search(engine: WordEngine, w: Word, a: Iterable[str], b: Iterable[str],
                        radius: int) -> bool:
    """Whether w = α·β with α ∈ ⟨A⟩, β ∈ ⟨B⟩ of syllable length ≤ radius each."""
    a_letters = [Word((s,)) for v in a for s in engine.vertex_syllables(v)]
    b_letters = [Word((s,)) for v in b for s in engine.vertex_syllables(v)]

    def reach(letters: List[Word]) -> Set[Word]:
        found = {IDENTITY}
        frontier = [IDENTITY]
        for _ in range(radius):
            frontier = [engine.compose(x, s) for x in frontier for s in letters]
            frontier = [x for x in frontier if x not in found]
            found.update(frontier)
        return found

    rights = reach(b_letters)
    return any(engine.compose(engine.invert(alpha), w) in rights for alpha in reach(a_letters))


# ----------------------------------------------------------------------
# walls by union-find

class WallOracle:
    """Hyperplanes of a ball as union-find classes of edges.

    Edges of a common clique and opposite edges of a square are merged.
    Squares and cliques are collected over the ball of twice the radius, so
    two walls meeting the radius ball that cross anywhere cross inside it.
    """

    def __init__(self, engine: WordEngine, radius: int):
        self.engine = engine
        self.radius = radius
        self.classes = UnionFind()
        self.squares: List[Tuple[Edge, Edge]] = []
        self._build()

    def _edge(self, x: Word, s: Syllable) -> Edge:
        return frozenset({x, self.engine.compose(x, Word((s,)))})

    def _build(self):
        engine = self.engine
        points = engine.ball(2 * self.radius)
        by_vertex: Dict[str, List[Syllable]] = {}
        for s in engine.all_syllables():
            by_vertex.setdefault(s.vertex, []).append(s)
        for x in points:
            for v, syllables in by_vertex.items():
                corners = [x] + [engine.compose(x, Word((s,))) for s in syllables]
                edges = [frozenset(pair) for pair in combinations(corners, 2)]
                self.classes.union(*edges)
            for u, v in engine.graph.edge_list():
                for s in by_vertex[u]:
                    for t in by_vertex[v]:
                        xs = engine.compose(x, Word((s,)))
                        xt = engine.compose(x, Word((t,)))
                        self.classes.union(self._edge(x, s), self._edge(xt, s))
                        self.classes.union(self._edge(x, t), self._edge(xs, t))
                        self.squares.append((self._edge(x, s), self._edge(x, t)))
        logger.debug("Wall oracle over %d points, %d squares", len(points), len(self.squares))

    def edges(self) -> List[Tuple[Word, Syllable]]:
        """Edges (x, x·s) with x in the radius ball."""
        return [(x, s) for x in self.engine.ball(self.radius) for s in self.engine.all_syllables()]

    def wall_of(self, x: Word, s: Syllable) -> Edge:
        return self.classes[self._edge(x, s)]

    def transverse_classes(self) -> Set[FrozenSet[Edge]]:
        """Pairs of classes that share a square."""
        pairs = set()
        for e, f in self.squares:
            a, b = self.classes[e], self.classes[f]
            if a != b:
                pairs.add(frozenset({a, b}))
        return pairs


# ----------------------------------------------------------------------
# medians

def interval_points(engine: WordEngine, x: Word, y: Word) -> List[Word]:
    d = engine.distance(x, y)
    return [p for p in engine.ball(d, x) if engine.distance(x, p) + engine.distance(p, y) == d]


def brute_force_median_size(engine: WordEngine, x: Word, y: Word, z: Word) -> Optional[int]:
    """Least size of a triple (x', y', z') satisfying the three median identities."""
    d = engine.distance
    xy, xz, yz = (set(interval_points(engine, *pair)) for pair in ((x, y), (x, z), (y, z)))
    xs, ys, zs = xy & xz, xy & yz, xz & yz
    best = None
    for a in xs:
        for b in ys:
            size = d(a, b)
            if best is not None and size >= best:
                continue
            if d(x, y) != d(x, a) + size + d(b, y):
                continue
            for c in zs:
                if d(b, c) != size or d(a, c) != size:
                    continue
                if d(y, z) == d(y, b) + size + d(c, z) and d(x, z) == d(x, a) + size + d(c, z):
                    best = size
                    break
    return best
