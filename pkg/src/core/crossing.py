"""Windows of the crossing graph, the small crossing graph and the graph of maximal products."""

import logging
import random
from itertools import combinations, islice
from typing import Iterable, List, Optional, Sequence, Tuple

import networkx as nx
import numpy as np

from core import graph_core
from core.qm_geometry import QuasiMedianGeometry
from models.coset import Coset, Hyperplane
from models.errors import NotGeodesicError, PreconditionError, ReducibleElementError
from models.verdict import Verdict3
from models.window import (
    CERT_EXACT, CERT_UNKNOWN, CERT_WINDOW,
    AxisChain, BottleneckEntry, BottleneckReport, CrossingDistance, DeltaAudit,
    HyperplaneWindow, MaximalProductsWindow, QIReport,
)
from models.word import IDENTITY, Word

logger = logging.getLogger('gpkit.crossing')


class CrossingGraphs:
    def __init__(self, geometry: QuasiMedianGeometry):
        self.geometry = geometry
        self.engine = geometry.engine
        self.parabolics = geometry.parabolics
        self.graph = geometry.graph
        self._prec = graph_core.prec_structure(self.graph)

    # ------------------------------------------------------------------
    # windows

    def build_window(self, basepoint: Word = IDENTITY, radius: int = 1, small: bool = False) -> HyperplaneWindow:
        """Every wall dual to an edge of the radius-ball around basepoint.

        Such a wall passes through a ball point at distance < radius.
        """
        if radius < 1:
            raise PreconditionError('build_window', "radius must be at least 1")
        walls: List[Hyperplane] = []
        seen = set()
        for w in self.engine.ball(radius - 1, basepoint):
            for u in self.graph.vertices:
                wall = self.geometry.hyperplane_at(w, u)
                if wall not in seen:
                    seen.add(wall)
                    walls.append(wall)
        n = len(walls)
        adjacency = np.zeros((n, n), dtype=bool)
        for i, j in combinations(range(n), 2):
            if not self.graph.adjacent(walls[i].label, walls[j].label):
                continue
            if self.geometry.carriers_intersect(walls[i], walls[j]):
                adjacency[i, j] = adjacency[j, i] = True
        small_mask = np.array([w.label in self._prec.maximal for w in walls], dtype=bool)
        window = HyperplaneWindow(basepoint, radius, tuple(walls), adjacency, small_mask, small)
        logger.debug("Window of radius %d: %d walls, %d crossings", radius, n, window.edge_count())
        return window

    def window_graph(self, window: HyperplaneWindow, small: Optional[bool] = None) -> nx.Graph:
        small = window.small if small is None else small
        graph = nx.Graph()
        for i, wall in enumerate(window.walls):
            if not small or window.small_mask[i]:
                graph.add_node(i, label=wall.label)
        rows, cols = np.nonzero(np.triu(window.adjacency))
        graph.add_edges_from(
            (int(i), int(j)) for i, j in zip(rows, cols) if i in graph and j in graph
        )
        return graph

    def small_is_geodesic(self, window: HyperplaneWindow) -> bool:
        """Distances between ≺-maximal walls agree in the small and full windows."""
        full = dict(nx.all_pairs_shortest_path_length(self.window_graph(window, small=False)))
        small = dict(nx.all_pairs_shortest_path_length(self.window_graph(window, small=True)))
        for i, lengths in small.items():
            for j, d in lengths.items():
                if full[i].get(j) != d:
                    logger.warning("Small crossing graph distance %d differs from %s for walls %d, %d",
                                   d, full[i].get(j), i, j)
                    return False
        return True

    # ------------------------------------------------------------------
    # distances and audits

    def _lower_bound(self, a: Hyperplane, b: Hyperplane, delta: int) -> int:
        if a == b:
            return 0
        if self.geometry.is_transverse(a, b):
            return 1
        bound = max(2, delta)
        if self.geometry.strongly_separated(a, b).is_certified:
            bound = max(bound, 3)
        return bound

    def crossing_distance(self, window: HyperplaneWindow, a: Hyperplane, b: Hyperplane) -> CrossingDistance:
        i, j = window.index(a), window.index(b)
        delta = self.geometry.delta_chain(a, b).value
        lower = self._lower_bound(a, b, delta)
        try:
            value = nx.shortest_path_length(self.window_graph(window), i, j)
        except nx.NetworkXNoPath:
            return CrossingDistance(None, lower, CERT_UNKNOWN)
        certificate = CERT_EXACT if value == lower else CERT_WINDOW
        return CrossingDistance(value, lower, certificate)

    def delta_estimate_audit(self, window: HyperplaneWindow, a: Hyperplane, b: Hyperplane) -> DeltaAudit:
        """Δ ≤ d_T ≤ (4+diam Γ)(Δ+1) and d_T ≤ diam Γ·(d_QM(N(a),N(b))+2).

        The upper bounds are only checked on window distances certified exact;
        other pairs pass as None unless Δ already exceeds the window distance.
        """
        chain = self.geometry.delta_chain(a, b)
        distance = self.crossing_distance(window, a, b)
        d_qm = self.geometry.bridge(a.carrier, b.carrier).distance
        diam = graph_core.graph_diameter(self.graph)
        upper_delta = None if diam is None else (4 + diam) * (chain.value + 1)
        upper_qm = None if diam is None else diam * (d_qm + 2)
        passed: Optional[bool] = None
        if distance.value is not None and chain.value > distance.value:
            passed = False
        elif distance.certificate == CERT_EXACT:
            passed = all(upper is None or distance.value <= upper for upper in (upper_delta, upper_qm))
        if passed is False:
            logger.error("Delta estimate audit failed: Δ=%d d_T=%s", chain.value, distance.value)
        return DeltaAudit(chain.value, chain.exact, distance, d_qm, upper_delta, upper_qm, passed)

    def bottleneck_delta(self) -> Optional[int]:
        diam = graph_core.graph_diameter(self.graph)
        return None if diam is None else 1 + 3 * (5 + diam)

    def bottleneck_audit(self, window: HyperplaneWindow,
                         pairs: Iterable[Tuple[Hyperplane, Hyperplane]],
                         path_samples: int = 12) -> BottleneckReport:
        """Every sampled window path between a pair passes near a geodesic midpoint."""
        delta = self.bottleneck_delta()
        graph = self.window_graph(window)
        if delta is None:
            return BottleneckReport(0, True, "graph is disconnected")
        if graph.number_of_edges() == 0:
            return BottleneckReport(delta, True, "window has no crossings")
        report = BottleneckReport(delta)
        for a, b in pairs:
            i, j = window.index(a), window.index(b)
            try:
                geodesic = nx.shortest_path(graph, i, j)
            except nx.NetworkXNoPath:
                report.entries.append(BottleneckEntry((i, j), None, None, 0, 0, True))
                continue
            distance = len(geodesic) - 1
            midpoint = geodesic[len(geodesic) // 2]
            if distance <= 1:
                report.entries.append(BottleneckEntry((i, j), distance, midpoint, 0, 1, True))
                continue
            from_mid = nx.single_source_shortest_path_length(graph, midpoint)
            detour, count = 0, 0
            for path in islice(nx.shortest_simple_paths(graph, i, j), path_samples):
                detour = max(detour, min(from_mid[node] for node in path))
                count += 1
            report.entries.append(BottleneckEntry((i, j), distance, midpoint, detour, count, detour <= delta))
        logger.debug("Bottleneck audit over %d pairs, δ=%d", len(report.entries), delta)
        return report

    # ------------------------------------------------------------------
    # straight geodesics

    def _check_geodesic(self, geodesic: Sequence[Hyperplane]):
        for i in range(len(geodesic) - 1):
            if not self.geometry.is_transverse(geodesic[i], geodesic[i + 1]):
                raise NotGeodesicError(f"walls {i} and {i + 1} are not transverse")
        for i, j in combinations(range(len(geodesic)), 2):
            if j - i >= 2 and self.geometry.is_transverse(geodesic[i], geodesic[j]):
                raise NotGeodesicError(f"walls {i} and {j} are transverse, so the path has a shortcut")

    def straight_path(self, geodesic: Sequence[Hyperplane]) -> List[Word]:
        """x1 closest to the last carrier on the first, then successive carrier projections."""
        self._check_geodesic(geodesic)
        if not geodesic:
            return []
        x = self.parabolics.min_pair(geodesic[0].carrier, geodesic[-1].carrier)[0]
        path = [x]
        for wall in geodesic[1:]:
            x = self.parabolics.project(x, wall.carrier)
            path.append(x)
        return path

    def is_straight(self, geodesic: Sequence[Hyperplane]) -> bool:
        path = self.straight_path(geodesic)
        if len(path) < 2:
            return True
        walked = sum(self.engine.distance(p, q) for p, q in zip(path, path[1:]))
        return walked == self.engine.distance(path[0], path[-1])

    def straighten(self, geodesic: Sequence[Hyperplane]) -> List[Hyperplane]:
        """Replace interior walls by transversals closest to the straight path."""
        walls = list(geodesic)
        self._check_geodesic(walls)
        if len(walls) < 3:
            raise NotGeodesicError("straightening needs at least three walls")
        if self.is_straight(walls):
            return walls
        for i in range(1, len(walls) - 1):
            x = self.straight_path(walls)[i - 1]
            before, after = walls[i - 1], walls[i + 1]
            chosen = min(
                self._straightening_candidates(x, before, walls[i], after),
                key=lambda h: (
                    self.geometry.distance_to_carrier(x, h),
                    h != walls[i],
                    self.graph.index(h.label),
                    len(h.carrier.rep),
                ),
            )
            walls[i] = chosen
        if not self.is_straight(walls):
            logger.warning("Straightened geodesic still has a non-geodesic straight path")
        return walls

    def _straightening_candidates(self, x: Word, before: Hyperplane, current: Hyperplane,
                                  after: Hyperplane) -> List[Hyperplane]:
        labels = graph_core.link(self.graph, before.label) & graph_core.link(self.graph, after.label)
        gate = self.parabolics.project(x, after.carrier)
        points = self.geometry.interval(x, gate)
        candidates = [current]
        for p in points:
            for u in self.graph.sort(labels):
                wall = self.geometry.hyperplane_at(p, u)
                if wall in candidates:
                    continue
                if self.geometry.is_transverse(wall, before) and self.geometry.is_transverse(wall, after):
                    candidates.append(wall)
        return candidates

    # ------------------------------------------------------------------
    # contracting axes

    def contracting_axis(self, g: Word, exponents: Iterable[int] = range(-2, 3),
                         radius: Optional[int] = None) -> AxisChain:
        """Walls g^{2Dk}·J0 along the axis of an irreducible element."""
        classification = self.engine.support_classify(g)
        if not classification.is_irreducible:
            raise ReducibleElementError(self.engine.format_word(g), "support is a single vertex or lies in a join")
        conjugator, core = self.engine.cyclic_reduce(g)
        diameter = graph_core.opp_diameter(self.graph, core.vertex_set)
        step = 2 * diameter
        j0 = self.geometry.hyperplane_at(conjugator, core[0].vertex)
        exponents = tuple(exponents)
        chain = tuple(
            self.geometry.translate(self.engine.conjugate(conjugator, self.engine.power(core, step * k)), j0)
            for k in exponents
        )
        axis = AxisChain(g, conjugator, core, j0, diameter, step, exponents, chain)
        for i, j in combinations(range(len(chain)), 2):
            axis.verdicts[(i, j)] = self.geometry.strongly_separated(chain[i], chain[j], radius)
            if axis.verdicts[(i, j)].is_refuted:
                logger.error("Axis walls %d and %d of %s are not strongly separated",
                             i, j, self.engine.format_word(g))
        for i in range(1, len(chain) - 1):
            if not self.geometry.separates_hyperplanes(chain[i], chain[i - 1], chain[i + 1]):
                axis.nested = False
        return axis

    # ------------------------------------------------------------------
    # maximal products

    def maximal_products(self) -> List[frozenset]:
        """Maximal joins plus isolated vertices."""
        products = list(graph_core.maximal_joins(self.graph))
        products.extend(frozenset((v,)) for v in self.graph.vertices if not self.graph.neighbours(v))
        return products

    def maximal_products_window(self, basepoint: Word = IDENTITY, radius: int = 1) -> MaximalProductsWindow:
        products = self.maximal_products()
        cosets: List[Coset] = []
        for w in self.engine.ball(radius, basepoint):
            for members in products:
                c = self.parabolics.coset(w, members)
                if c not in cosets:
                    cosets.append(c)
        window = MaximalProductsWindow(tuple(cosets))
        for i, j in combinations(range(len(cosets)), 2):
            window.edges[(i, j)] = self.intersection_verdict(cosets[i], cosets[j])
        logger.debug("Maximal products window: %d cosets, %d edges",
                     len(cosets), window.graph().number_of_edges())
        return window

    def intersection_verdict(self, c1: Coset, c2: Coset) -> Verdict3:
        """Certified with a nontrivial common element, refuted when the conjugates meet trivially."""
        x, xi = self.parabolics.intersection_support(c1, c2)
        if not xi:
            return Verdict3.refuted('trivial-intersection', x)
        v = self.graph.sort(xi)[0]
        letter = Word((self.engine.generator_syllables(v)[0],))
        return Verdict3.certified('common-subgroup', self.engine.conjugate(x, letter))

    def product_of_wall(self, wall: Hyperplane) -> Coset:
        """A maximal product coset containing the carrier of the wall."""
        star = graph_core.star(self.graph, wall.label)
        container = next((p for p in self.maximal_products() if star <= p), star)
        return self.parabolics.coset(wall.carrier.rep, container)

    def qi_compare(self, window: HyperplaneWindow, products: MaximalProductsWindow,
                   samples: int = 50, seed: int = 0) -> QIReport:
        """Distortion of wall ↦ containing maximal product between ST and 𝓜 windows."""
        small = self.window_graph(window, small=True)
        product_graph = products.graph()
        images = {i: products.index(self.product_of_wall(window.walls[i])) for i in small.nodes}
        nodes = [i for i in sorted(small.nodes) if images[i] is not None]
        pairs = list(combinations(nodes, 2))
        rng = random.Random(seed)
        if len(pairs) > samples:
            pairs = rng.sample(pairs, samples)
        additive, ratio, counted, skipped = 0, 1.0, 0, 0
        for i, j in pairs:
            try:
                d_small = nx.shortest_path_length(small, i, j)
                d_products = nx.shortest_path_length(product_graph, images[i], images[j])
            except nx.NetworkXNoPath:
                skipped += 1
                continue
            counted += 1
            additive = max(additive, abs(d_small - d_products))
            if d_small and d_products:
                ratio = max(ratio, d_small / d_products, d_products / d_small)
        return QIReport(additive, ratio, counted, skipped)
