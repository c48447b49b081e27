"""Trees T_u, trees of spaces TS_u and the embeddings η, π into their products.

Vertices of T_u are components of QM cut along the u-walls (component ids
are canonical reps of x⟨V∖{u}⟩) and the u-walls themselves. TS_u replaces
each u-wall by a copy of the Cayley graph of (G_u, S_u).
"""

import logging
from itertools import combinations
from typing import Callable, Tuple

import networkx as nx

from core.qm_geometry import QuasiMedianGeometry
from models.trees import AlmostMedianDefect, TreeCoordinate, TreeOfSpacesCoordinate
from models.word import Word

logger = logging.getLogger('gpkit.trees_embedding')


class TreeEmbedding:
    def __init__(self, geometry: QuasiMedianGeometry):
        self.geometry = geometry
        self.engine = geometry.engine
        self.parabolics = geometry.parabolics
        self.graph = geometry.graph

    def component_id(self, x: Word, u: str) -> Word:
        return self.parabolics.coset(x, self.graph.vertex_set - {u}).rep

    def embed(self, x: Word) -> Tuple[TreeCoordinate, TreeOfSpacesCoordinate]:
        components = {u: self.component_id(x, u) for u in self.graph.vertices}
        return TreeCoordinate(components), TreeOfSpacesCoordinate(dict(components))

    def tree_distance(self, u: str, x: Word, y: Word) -> Tuple[int, int]:
        """(d_{T_u}, d_{TS_u}) = (2·d_u, 2·d_u + δ_u)."""
        self.graph.check_vertex(u)
        graded = self.engine.graded_distance(x, y)
        return 2 * graded.d_u[u], 2 * graded.d_u[u] + graded.delta_u[u]

    # ------------------------------------------------------------------
    # explicit windows

    def tree_window(self, u: str, radius: int) -> nx.Graph:
        """Bipartite piece of T_u spanned by the radius-ball: components and u-walls."""
        tree = nx.Graph()
        for p in self.engine.ball(radius):
            component = ('component', self.component_id(p, u))
            wall = ('wall', self.geometry.hyperplane_at(p, u))
            tree.add_edge(component, wall)
        logger.debug("T_%s window of radius %d: %d nodes", u, radius, tree.number_of_nodes())
        return tree

    def tree_of_spaces_window(self, u: str, radius: int) -> nx.Graph:
        """Piece of TS_u: components hang off fiber points of each u-wall's Cayley graph."""
        group = self.engine.presentation.group(u)
        fiber_points = [group.identity] + group.elements(self.engine.span)
        space = nx.Graph()
        walls = set()
        for p in self.engine.ball(radius):
            wall = self.geometry.hyperplane_at(p, u)
            walls.add(wall)
            key = self.geometry.sector_key(wall, p)
            space.add_edge(('component', self.component_id(p, u)), ('fiber', wall, key))
        for wall in walls:
            for k in fiber_points:
                for s in group.generators:
                    for step in (s, group.inverse(s)):
                        target = group.multiply(k, step)
                        if target in fiber_points:
                            space.add_edge(('fiber', wall, k), ('fiber', wall, target))
        logger.debug("TS_%s window of radius %d: %d nodes", u, radius, space.number_of_nodes())
        return space

    def window_tree_distance(self, window: nx.Graph, u: str, x: Word, y: Word) -> int:
        return nx.shortest_path_length(
            window, ('component', self.component_id(x, u)), ('component', self.component_id(y, u)))

    # ------------------------------------------------------------------
    # almost medians

    def almost_median_defect(self, x: Word, y: Word, z: Word) -> AlmostMedianDefect:
        """Distance from the image of the median point to the coordinatewise tree medians.

        In a tree the distance from m to the median of a, b, c is the largest
        distance from m to one of the three geodesics.
        """
        m = self.geometry.coarse_median(x, y, z)
        eta_total, pi_total = 0.0, 0.0
        per_vertex = {}
        for u in self.graph.vertices:
            eta = self._gap(m, (x, y, z), lambda a, b: self.tree_distance(u, a, b)[0])
            pi = self._gap(m, (x, y, z), lambda a, b: self.tree_distance(u, a, b)[1])
            per_vertex[u] = eta
            eta_total += eta
            pi_total += pi
        defect = AlmostMedianDefect(eta_total, pi_total, len(self.graph.vertices), per_vertex)
        if not defect.within_bound:
            logger.warning("Almost-median defect %.1f exceeds |V| = %d", defect.eta, defect.bound)
        return defect

    @staticmethod
    def _gap(m: Word, corners, distance: Callable[[Word, Word], int]) -> float:
        return max(
            (distance(m, a) + distance(m, b) - distance(a, b)) / 2
            for a, b in combinations(corners, 2)
        )
