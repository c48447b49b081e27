from itertools import combinations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from core.qm_geometry import MODE_SEARCH
from models.coset import Coset
from models.errors import PreconditionError
from models.geometry import RELATION_SEPARATED, RELATION_TANGENT, RELATION_TRANSVERSE
from models.word import IDENTITY
from utils import oracles


class TestSeparatingHyperplanes:
    def test_pentagon_word(self, c5):
        walls = c5.geometry.separating_hyperplanes(IDENTITY, c5.word('v1 v3 v1'))
        assert [h.label for h in walls] == ['v1', 'v3', 'v1']
        assert len(set(walls)) == 3

    def test_free_product_word(self, fp):
        walls = fp.geometry.separating_hyperplanes(IDENTITY, fp.word('u v'))
        assert [h.label for h in walls] == ['u', 'v']
        assert [h.carrier.rep for h in walls] == [IDENTITY, fp.word('u')]

    @pytest.mark.parametrize('name,radius', [('c5', 2), ('p4', 1), ('fp', 2)])
    def test_count_is_word_length(self, toolkits, name, radius):
        toolkit = toolkits[name]
        engine = toolkit.engine
        for x, y in combinations(engine.ball(radius), 2):
            assert len(toolkit.geometry.separating_hyperplanes(x, y)) == engine.distance(x, y)

    def test_each_separator_separates(self, c5):
        geometry = c5.geometry
        x, y = c5.word('v2'), c5.word('v2 v4 v1 v3')
        for wall in geometry.separating_hyperplanes(x, y):
            assert geometry.separates(wall, x, y)


class TestSectors:
    def test_delta_j_in_cyclic_factor(self, fp):
        wall = fp.geometry.hyperplane_at(IDENTITY, 'u')
        x, y = fp.word('u^2'), fp.word('v')
        assert fp.geometry.separates(wall, x, y)
        assert fp.geometry.delta_j(wall, x, y) == 2

    def test_sector_key_is_independent_of_link_path(self, c5):
        wall = c5.geometry.hyperplane_at(IDENTITY, 'v1')
        x = c5.word('v1 v3')
        assert c5.geometry.sector_key(wall, x) == c5.geometry.sector_key(wall, x, via=c5.word('v2'))

    def test_points_in_carrier_side(self, c5):
        wall = c5.geometry.hyperplane_at(IDENTITY, 'v1')
        assert not c5.geometry.separates(wall, IDENTITY, c5.word('v2 v5'))
        assert c5.geometry.separates(wall, IDENTITY, c5.word('v1 v3'))


class TestRelations:
    def test_transverse_in_pentagon(self, c5):
        geometry = c5.geometry
        j1, j2 = geometry.hyperplane_at(IDENTITY, 'v1'), geometry.hyperplane_at(IDENTITY, 'v2')
        assert geometry.hyperplane_relation(j1, j2).kind == RELATION_TRANSVERSE

    def test_tangent_in_pentagon(self, c5):
        geometry = c5.geometry
        j1, j3 = geometry.hyperplane_at(IDENTITY, 'v1'), geometry.hyperplane_at(IDENTITY, 'v3')
        assert geometry.hyperplane_relation(j1, j3).kind == RELATION_TANGENT

    def test_separated_in_free_product(self, fp):
        geometry = fp.geometry
        j = geometry.hyperplane_at(IDENTITY, 'u')
        relation = geometry.hyperplane_relation(j, geometry.translate(fp.word('u v'), j))
        assert relation.kind == RELATION_SEPARATED
        assert relation.separators == 1

    def test_translate_keeps_label(self, c5):
        j = c5.geometry.hyperplane_at(IDENTITY, 'v1')
        moved = c5.geometry.translate(c5.word('v2'), j)
        assert moved == j
        assert c5.geometry.translate(c5.word('v3'), j).label == 'v1'

    @pytest.mark.parametrize('name', ['c5', 'fp', 'dinf'])
    def test_walls_match_union_find(self, toolkits, name):
        toolkit = toolkits[name]
        geometry = toolkit.geometry
        oracle = oracles.WallOracle(toolkit.engine, 1)
        edges = oracle.edges()
        walls = {e: geometry.hyperplane_at(e[0], e[1].vertex) for e in edges}
        transverse = oracle.transverse_classes()
        for e, f in combinations(edges, 2):
            same = oracle.wall_of(*e) == oracle.wall_of(*f)
            assert same == (walls[e] == walls[f])
            if not same:
                crossing = frozenset({oracle.wall_of(*e), oracle.wall_of(*f)}) in transverse
                assert crossing == geometry.is_transverse(walls[e], walls[f])


class TestStrongSeparation:
    def test_disjoint_links(self, fp):
        geometry = fp.geometry
        j = geometry.hyperplane_at(IDENTITY, 'u')
        verdict = geometry.strongly_separated(j, geometry.translate(fp.word('u v'), j))
        assert verdict.is_certified
        assert verdict.rule == 'disjoint-links'

    def test_common_transversal(self, c5):
        geometry = c5.geometry
        j = geometry.hyperplane_at(IDENTITY, 'v1')
        other = geometry.translate(c5.word('v1 v3 v1 v3'), j)
        verdict = geometry.strongly_separated(j, other)
        assert verdict.is_refuted
        assert verdict.witness.label == 'v2'
        assert geometry.is_transverse(verdict.witness, j)
        assert geometry.is_transverse(verdict.witness, other)

    def test_transverse_pair_is_rejected(self, c5):
        geometry = c5.geometry
        with pytest.raises(PreconditionError):
            geometry.strongly_separated(geometry.hyperplane_at(IDENTITY, 'v1'),
                                        geometry.hyperplane_at(IDENTITY, 'v2'))

    def test_search_mode_finds_witness(self, c5):
        geometry = c5.geometry
        j = geometry.hyperplane_at(IDENTITY, 'v1')
        other = geometry.translate(c5.word('v1 v3 v1 v3'), j)
        verdict = geometry.strongly_separated(j, other, radius=2, mode=MODE_SEARCH)
        assert verdict.is_refuted

    def test_search_mode_without_common_link(self, fp):
        geometry = fp.geometry
        j = geometry.hyperplane_at(IDENTITY, 'u')
        verdict = geometry.strongly_separated(j, geometry.translate(fp.word('u v'), j), radius=2, mode=MODE_SEARCH)
        assert verdict.is_unknown
        assert verdict.radius == 2

    def test_delta_chain(self, fp):
        geometry = fp.geometry
        j = geometry.hyperplane_at(IDENTITY, 'u')
        chain = geometry.delta_chain(j, geometry.translate(fp.engine.power(fp.word('u v'), 2), j))
        assert chain.value == 3
        assert chain.exact
        assert len(chain.chain) == 3

    def test_delta_chain_of_transverse_pair(self, c5):
        geometry = c5.geometry
        chain = geometry.delta_chain(geometry.hyperplane_at(IDENTITY, 'v1'), geometry.hyperplane_at(IDENTITY, 'v2'))
        assert chain.value == 0


class TestMedians:
    def test_pentagon_median_point(self, c5):
        triangle = c5.geometry.median_triangle(IDENTITY, c5.word('v1'), c5.word('v3'))
        assert triangle.corners == (IDENTITY, IDENTITY, IDENTITY)
        assert triangle.size == 0

    def test_clique_triangle(self, fp):
        triangle = fp.geometry.median_triangle(IDENTITY, fp.word('u'), fp.word('u^2'))
        assert triangle.corners == (IDENTITY, fp.word('u'), fp.word('u^2'))
        assert triangle.size == 1
        assert triangle.prism == Coset(IDENTITY, frozenset({'u'}))

    def test_interval_matches_geodesic_points(self, c5):
        engine = c5.engine
        x, y = c5.word('v2'), c5.word('v2 v4 v1')
        assert set(c5.geometry.interval(x, y)) == set(oracles.interval_points(engine, x, y))

    @settings(max_examples=25, deadline=None)
    @given(data=st.data())
    def test_triangle_size_is_minimal(self, fp, data):
        points = fp.engine.ball(2)
        x, y, z = (data.draw(st.sampled_from(points)) for _ in range(3))
        assert fp.geometry.median_triangle(x, y, z).size == oracles.brute_force_median_size(fp.engine, x, y, z)

    @settings(max_examples=25, deadline=None)
    @given(data=st.data())
    def test_involutions_give_median_points(self, c5, data):
        points = c5.engine.ball(2)
        x, y, z = (data.draw(st.sampled_from(points)) for _ in range(3))
        triangle = c5.geometry.median_triangle(x, y, z)
        assert triangle.size == 0
        assert c5.geometry.coarse_median(y, z, x) == triangle.corners[0]

    def test_coarse_median_defects(self, c5):
        points = c5.engine.ball(1)
        defects = c5.geometry.coarse_median_defects(points)
        assert defects.samples == len(points) ** 4
        assert defects.c1 == 0
        assert defects.c0 <= 2 and defects.c2 <= 6

    def test_separates_point_from(self, c5):
        j = c5.geometry.hyperplane_at(IDENTITY, 'v1')
        beyond = c5.geometry.hyperplane_at(c5.word('v1'), 'v3')
        assert c5.geometry.separates_point_from(j, IDENTITY, beyond)
        assert not c5.geometry.separates_point_from(j, c5.word('v1'), beyond)
        assert not c5.geometry.separates_point_from(j, IDENTITY, c5.geometry.hyperplane_at(IDENTITY, 'v3'))
        assert not c5.geometry.separates_point_from(j, IDENTITY, c5.geometry.hyperplane_at(IDENTITY, 'v2'))
