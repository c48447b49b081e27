import pytest

from core import graph_core
from models.word import IDENTITY
from utils import oracles


class TestHeadDecompose:
    def test_commuting_letter_is_exposed(self, p3):
        parabolics, engine = p3.parabolics, p3.engine
        head, rest = parabolics.head_decompose(engine.parse_word('b a'), {'a'})
        assert engine.format_word(head) == 'a'
        assert engine.format_word(rest) == 'b'

    def test_blocked_letter(self, c5):
        parabolics, engine = c5.parabolics, c5.engine
        w = engine.parse_word('v1 v3')
        assert parabolics.head_decompose(w, {'v3'}) == (IDENTITY, w)

    def test_everything_is_head(self, c5):
        w = c5.engine.parse_word('v1 v3 v5 v2')
        assert c5.parabolics.head_decompose(w, c5.engine.graph.vertices) == (w, IDENTITY)

    def test_factorisations_recompose(self, c5):
        parabolics, engine = c5.parabolics, c5.engine
        for w in engine.ball(3):
            head, rest = parabolics.head_decompose(w, {'v1', 'v2'})
            assert engine.compose(head, rest) == w
            rest2, tail = parabolics.tail_decompose(w, {'v1', 'v2'})
            assert engine.compose(rest2, tail) == w


class TestCosets:
    def test_membership(self, c5, p4):
        assert c5.parabolics.membership(c5.word('v1 v3'), c5.parabolics.coset(IDENTITY, {'v1', 'v3'}))
        assert not p4.parabolics.membership(p4.word('a'), p4.parabolics.coset(IDENTITY, {'b', 'c'}))

    def test_canonical_representative(self, c5):
        parabolics = c5.parabolics
        assert parabolics.coset(c5.word('v1'), {'v2'}) == parabolics.coset(c5.word('v1 v2'), {'v2'})
        assert parabolics.coset(c5.word('v1 v2'), {'v2'}).rep == c5.word('v1')

    def test_projection(self, c5, fp):
        coset = c5.parabolics.coset(IDENTITY, {'v1'})
        assert c5.parabolics.project(c5.word('v1 v3 v1'), coset) == c5.word('v1')
        assert fp.parabolics.project(fp.word('u v'), fp.parabolics.coset(IDENTITY, {'u'})) == fp.word('u')

    def test_projection_of_member(self, c5):
        coset = c5.parabolics.coset(c5.word('v3'), {'v1', 'v2'})
        x = c5.word('v3 v1 v2')
        assert c5.parabolics.project(x, coset) == x

    @pytest.mark.parametrize('name,lambda_', [('c5', {'v1', 'v2'}), ('fp', {'u'}), ('p4', {'b', 'c'})])
    def test_gate_property(self, toolkits, name, lambda_):
        toolkit = toolkits[name]
        engine, parabolics = toolkit.engine, toolkit.parabolics
        coset = parabolics.coset(IDENTITY, lambda_)
        members = [w for w in engine.ball(2) if parabolics.membership(w, coset)]
        for x in engine.ball(2):
            gate = parabolics.project(x, coset)
            for w in members:
                assert engine.distance(x, w) == engine.distance(x, gate) + engine.distance(gate, w)

    def test_nested_projections(self, c5):
        parabolics, engine = c5.parabolics, c5.engine
        small = parabolics.coset(IDENTITY, {'v1'})
        large = parabolics.coset(IDENTITY, {'v1', 'v2'})
        for x in engine.ball(3):
            assert parabolics.project(parabolics.project(x, large), small) == parabolics.project(x, small)

    def test_normalizer_support(self, p4, c5):
        assert p4.parabolics.normalizer_support({'b'}) == {'a', 'b', 'c'}
        assert c5.parabolics.normalizer_support({'v1', 'v3'}) == {'v1', 'v2', 'v3'}
        assert c5.parabolics.normalizer_support(c5.engine.graph.vertices) == c5.engine.graph.vertex_set


class TestDoubleCosets:
    def test_common_star_letter(self, c5):
        graph = c5.engine.graph
        verdict = c5.parabolics.double_coset_member(
            c5.word('v2'), graph_core.star(graph, 'v1'), graph_core.star(graph, 'v3'))
        assert verdict.is_certified

    def test_not_in_double_coset(self, c5):
        graph = c5.engine.graph
        verdict = c5.parabolics.double_coset_member(
            c5.word('v4 v1'), graph_core.star(graph, 'v2'), graph_core.star(graph, 'v2'))
        assert verdict.is_refuted
        assert verdict.witness == c5.word('v4')

    def test_identity(self, fp):
        assert fp.parabolics.double_coset_member(IDENTITY, {'u'}, {'v'}).is_certified

    @pytest.mark.parametrize('name,a,b', [
        ('c5', {'v1', 'v2'}, {'v3', 'v4'}),
        ('c5', {'v1'}, {'v1', 'v3'}),
        ('fp', {'u'}, {'v'}),
    ])
    def test_agrees_with_search(self, toolkits, name, a, b):
        toolkit = toolkits[name]
        for w in toolkit.engine.ball(3):
            greedy = toolkit.parabolics.double_coset_member(w, a, b).is_certified
            assert greedy == oracles.double_coset_search(toolkit.engine, w, a, b, 3)


class TestCentralizers:
    def test_vertex_letter(self, p3):
        description = p3.parabolics.centralizer_description(p3.word('a'))
        assert description.conjugator == IDENTITY
        assert description.link_part == {'b'}
        assert description.vertex_parts == (('a', None),)
        assert description.cyclic_parts == ()

    def test_pentagon_pair(self, c5):
        description = c5.parabolics.centralizer_description(c5.word('v1 v3'))
        assert description.cyclic_parts == (c5.word('v1 v3'),)
        assert description.link_part == {'v2'}

    @pytest.mark.parametrize('text', ['v1 v3', 'v1 v3 v5', 'v2 v1 v3 v2', 'v4'])
    def test_generators_commute(self, c5, text):
        x = c5.word(text)
        description = c5.parabolics.centralizer_description(x)
        for g in c5.parabolics.centralizer_generators(description):
            assert c5.engine.commutes(g, x)

    def test_centers(self, c5, z_z3z2):
        assert c5.parabolics.center().is_trivial
        center = z_z3z2.parabolics.center()
        assert center.parts == {'z': None}
        assert not center.is_trivial
