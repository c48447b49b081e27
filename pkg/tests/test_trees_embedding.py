import networkx as nx
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from models.errors import UnknownVertexError
from models.word import IDENTITY


class TestTreeDistances:
    def test_free_product(self, fp):
        assert fp.trees.tree_distance('u', IDENTITY, fp.word('u v u^2')) == (4, 7)
        assert fp.trees.tree_distance('v', IDENTITY, fp.word('u v u^2')) == (2, 3)

    def test_pentagon(self, c5):
        assert c5.trees.tree_distance('v1', IDENTITY, c5.word('v1 v3 v1')) == (4, 6)
        assert c5.trees.tree_distance('v2', IDENTITY, c5.word('v1 v3 v1')) == (0, 0)

    def test_unknown_vertex(self, c5):
        with pytest.raises(UnknownVertexError):
            c5.trees.tree_distance('w', IDENTITY, IDENTITY)

    def test_sum_over_vertices(self, p4):
        x, y = p4.word('a^2 c'), p4.word('b d^-1 a')
        graded = p4.engine.graded_distance(x, y)
        total = sum(p4.trees.tree_distance(u, x, y)[0] for u in p4.engine.graph.vertices)
        assert total == 2 * graded.d


class TestComponents:
    def test_component_ids(self, c5):
        assert c5.trees.component_id(c5.word('v2'), 'v1') == IDENTITY
        assert c5.trees.component_id(c5.word('v1 v3'), 'v1') == c5.word('v1')

    def test_embedding(self, fp):
        eta, pi = fp.trees.embed(fp.word('u v'))
        assert eta.components == {'u': fp.word('u'), 'v': fp.word('u v')}
        assert pi.components == eta.components

    @pytest.mark.parametrize('name,u', [('fp', 'u'), ('c5', 'v1'), ('p3', 'b')])
    def test_window_is_tree(self, toolkits, name, u):
        assert nx.is_tree(toolkits[name].trees.tree_window(u, 2))

    def test_window_distance_matches_formula(self, fp):
        window = fp.trees.tree_window('u', 2)
        for y in fp.engine.ball(2):
            expected = fp.trees.tree_distance('u', IDENTITY, y)[0]
            assert fp.trees.window_tree_distance(window, 'u', IDENTITY, y) == expected

    def test_tree_of_spaces_distance(self, fp):
        window = fp.trees.tree_of_spaces_window('u', 1)
        y = fp.word('u^2')
        assert fp.trees.window_tree_distance(window, 'u', IDENTITY, y) == fp.trees.tree_distance('u', IDENTITY, y)[1]


class TestAlmostMedians:
    def test_median_point(self, c5):
        defect = c5.trees.almost_median_defect(IDENTITY, c5.word('v1'), c5.word('v3'))
        assert defect.bound == 5
        assert defect.within_bound

    @settings(max_examples=30, deadline=None)
    @given(data=st.data())
    def test_defect_within_vertex_count(self, fp, data):
        points = fp.engine.ball(2)
        x, y, z = (data.draw(st.sampled_from(points)) for _ in range(3))
        defect = fp.trees.almost_median_defect(x, y, z)
        assert defect.within_bound
        assert set(defect.per_vertex) == {'u', 'v'}
