from itertools import combinations

import networkx as nx
import pytest

from core import graph_core
from models.errors import DisconnectedSupportError, UnknownVertexError
from models.graph import SimplicialGraph

K3 = SimplicialGraph.complete(['x', 'y', 'z'])


def all_graphs(n):
    vertices = [f"w{i}" for i in range(n)]
    pairs = list(combinations(vertices, 2))
    for mask in range(1 << len(pairs)):
        yield SimplicialGraph.build(vertices, [p for i, p in enumerate(pairs) if mask >> i & 1])


class TestLinksAndStars:
    def test_link_of_path_vertex(self, p4):
        assert graph_core.link(p4.engine.graph, 'b') == {'a', 'c'}

    def test_isolated_vertex_has_empty_link(self, fp):
        assert graph_core.link(fp.engine.graph, 'u') == frozenset()

    def test_star_in_pentagon(self, c5):
        assert graph_core.star(c5.engine.graph, 'v1') == {'v5', 'v1', 'v2'}

    def test_unknown_vertex(self, c5):
        with pytest.raises(UnknownVertexError):
            graph_core.link(c5.engine.graph, 'v9')

    def test_common_link(self, c5):
        assert graph_core.common_link(c5.engine.graph, {'v1', 'v3'}) == {'v2'}
        assert graph_core.common_link(c5.engine.graph, {'v1', 'v3', 'v5'}) == frozenset()


class TestOppositeAndJoins:
    def test_opposite_of_path(self, p3):
        opp = graph_core.opposite_graph(p3.engine.graph)
        assert opp.vertices == ('a', 'b', 'c')
        assert opp.edges == {frozenset({'a', 'c'})}

    def test_opposite_of_complete_graph(self):
        assert not graph_core.opposite_graph(K3).edges

    def test_opposite_of_pentagon_is_pentagram(self, c5):
        opp = graph_core.opposite_graph(c5.engine.graph)
        expected = {frozenset({f"v{i}", f"v{(i + 1) % 5 + 1}"}) for i in range(1, 6)}
        assert opp.edges == expected

    def test_join_decomposition_of_p3(self, p3):
        decomposition = graph_core.join_decomposition(p3.engine.graph)
        assert decomposition.clique_part == {'b'}
        assert decomposition.factors == (frozenset({'a', 'c'}),)

    def test_join_decomposition_of_p4(self, p4):
        decomposition = graph_core.join_decomposition(p4.engine.graph)
        assert decomposition.clique_part == frozenset()
        assert decomposition.factors == (frozenset({'a', 'b', 'c', 'd'}),)
        assert not graph_core.is_join(p4.engine.graph)

    def test_join_decomposition_of_clique(self):
        decomposition = graph_core.join_decomposition(K3)
        assert decomposition.clique_part == {'x', 'y', 'z'}
        assert decomposition.factors == ()

    @pytest.mark.parametrize('n', [2, 3, 4, 5])
    def test_is_join_iff_opposite_disconnected(self, n):
        for g in all_graphs(n):
            opp = graph_core.opposite_graph(g).to_networkx()
            assert graph_core.is_join(g) == (not nx.is_connected(opp))

    @pytest.mark.parametrize('n', [3, 4])
    def test_join_of_parts_rebuilds_graph(self, n):
        for g in all_graphs(n):
            decomposition = graph_core.join_decomposition(g)
            parts = [graph_core.induced_subgraph(g, part) for part in decomposition.parts()]
            rebuilt = graph_core.join_of(parts)
            assert rebuilt.edges == g.edges

    def test_lies_in_join(self, c5):
        graph = c5.engine.graph
        assert graph_core.lies_in_join(graph, {'v1', 'v3'})
        assert not graph_core.lies_in_join(graph, {'v1', 'v3', 'v5'})


class TestPrecAndSimplification:
    def test_prec_on_path(self, p4):
        prec = graph_core.prec_structure(p4.engine.graph)
        assert prec.prec('a', 'c')
        assert not prec.prec('b', 'a')

    def test_pentagon_has_no_relations(self, c5):
        prec = graph_core.prec_structure(c5.engine.graph)
        vertices = c5.engine.graph.vertices
        assert not any(prec.prec(u, v) for u in vertices for v in vertices if u != v)
        assert prec.maximal == set(vertices)

    def test_complete_graph_is_one_class(self):
        prec = graph_core.prec_structure(K3)
        assert prec.classes == (frozenset({'x', 'y', 'z'}),)

    def test_clique_collapses_to_direct_sum(self):
        simplified, grouping = graph_core.simplify_same_star_link(K3)
        assert len(simplified.vertices) == 1
        (record,) = grouping.values()
        assert record.kind == 'direct-sum'
        assert sorted(record.members) == ['x', 'y', 'z']

    def test_isolated_pair_collapses_to_free_product(self, dinf):
        labels = {v: 'Z2' for v in dinf.engine.graph.vertices}
        simplified, grouping = graph_core.simplify_same_star_link(dinf.engine.graph, labels)
        assert len(simplified.vertices) == 1
        (record,) = grouping.values()
        assert record.kind == 'free-product'
        assert record.structure == '(Z2 ∗ Z2)'

    def test_pentagon_is_unchanged(self, c5):
        simplified, grouping = graph_core.simplify_same_star_link(c5.engine.graph)
        assert simplified == c5.engine.graph
        assert all(record.kind == 'vertex' for record in grouping.values())

    def test_simplification_is_idempotent(self):
        g = SimplicialGraph.build(['a', 'b', 'c', 'd'], [('a', 'b'), ('a', 'c'), ('b', 'd'), ('c', 'd')])
        once, _ = graph_core.simplify_same_star_link(g)
        twice, _ = graph_core.simplify_same_star_link(once)
        assert once == twice


class TestMaximalJoins:
    def test_pentagon_stars(self, c5):
        graph = c5.engine.graph
        joins = graph_core.maximal_joins(graph)
        assert set(joins) == {graph_core.star(graph, v) for v in graph.vertices}

    def test_path_on_four_vertices(self, p4):
        assert set(graph_core.maximal_joins(p4.engine.graph)) == {
            frozenset({'a', 'b', 'c'}), frozenset({'b', 'c', 'd'}),
        }

    def test_complete_graph(self):
        assert graph_core.maximal_joins(K3) == [frozenset({'x', 'y', 'z'})]

    @pytest.mark.parametrize('n', [3, 4])
    def test_members_are_maximal_joins_covering_edges(self, n):
        for g in all_graphs(n):
            joins = graph_core.maximal_joins(g)
            assert all(graph_core.is_join(g, j) for j in joins)
            assert not any(a < b for a in joins for b in joins)
            for edge in g.edges:
                assert any(edge <= j for j in joins)


class TestDiameters:
    def test_opp_diameter(self, c5, fp):
        assert graph_core.opp_diameter(c5.engine.graph, {'v1', 'v3'}) == 1
        assert graph_core.opp_diameter(c5.engine.graph, c5.engine.graph.vertices) == 2
        assert graph_core.opp_diameter(fp.engine.graph, {'u', 'v'}) == 1

    def test_opp_diameter_of_join_support(self, p4):
        with pytest.raises(DisconnectedSupportError):
            graph_core.opp_diameter(p4.engine.graph, {'a', 'b'})

    def test_graph_diameter(self, c5, fp):
        assert graph_core.graph_diameter(c5.engine.graph) == 2
        assert graph_core.graph_diameter(fp.engine.graph) is None

    def test_clique_number(self, c5, z_z3z2):
        assert graph_core.clique_number(c5.engine.graph) == 2
        assert graph_core.clique_number(z_z3z2.engine.graph) == 2
