import pytest

from core import invariant_suite
from core.invariant_suite import CHECKS, run_suite
from models.errors import PreconditionError
from models.graph import SimplicialGraph
from models.report import ANSWER_DIHEDRAL, ANSWER_NO, ANSWER_YES, STATUS_FAIL, STATUS_PASS, STATUS_UNKNOWN
from tests import ACCEPTANCE_SETTINGS, TEST_SETTINGS


class TestChecks:
    def test_normal_form(self, fp):
        (record,) = invariant_suite.check_normal_form(fp, TEST_SETTINGS)
        assert record.status == STATUS_PASS
        assert record.instance.endswith('words <= 3')

    def test_distance_formula_covers_every_pair(self, p3):
        (record,) = invariant_suite.check_distance_formula(p3, dict(TEST_SETTINGS, oracle_radius=1))
        assert record.status == STATUS_PASS
        n = len(p3.engine.ball(1))
        assert record.instance == f"{n * (n - 1) // 2} pairs"

    def test_median_triangles(self, fp):
        (record,) = invariant_suite.check_median_triangles(fp, dict(TEST_SETTINGS, median_radius=1))
        assert record.status == STATUS_PASS
        n = len(fp.engine.ball(1))
        assert record.instance == f"{n * (n + 1) * (n + 2) // 6} triples"

    def test_transversality(self, c5):
        records = invariant_suite.check_transversality(c5, dict(TEST_SETTINGS, oracle_radius=1))
        assert [r.check for r in records] == ['wall-partition', 'transversality']
        assert all(r.status == STATUS_PASS for r in records)

    def test_tree_formulas(self, fp):
        (record,) = invariant_suite.check_tree_formulas(fp, TEST_SETTINGS)
        assert record.status == STATUS_PASS

    def test_delta_estimate_needs_enough_exact_pairs(self, c5):
        settings = dict(TEST_SETTINGS, delta_estimate_radius=1)
        (record,) = invariant_suite.check_delta_estimate(c5, dict(settings, delta_estimate_min_pairs=1))
        assert record.status == STATUS_PASS
        (record,) = invariant_suite.check_delta_estimate(c5, dict(settings, delta_estimate_min_pairs=10 ** 6))
        assert record.status == STATUS_UNKNOWN
        assert record.value == 0

    def test_coneoff_bound(self, c5):
        (record,) = invariant_suite.check_coneoff_bound(c5, dict(TEST_SETTINGS, suite_sample_pairs=5))
        assert record.status != STATUS_FAIL
        assert record.value == 0

    def test_verdict_table(self, c5):
        records = invariant_suite.check_verdict_table(c5, dict(TEST_SETTINGS, verdict_table_vertices=3))
        assert [r.check for r in records] == [
            'verdict-table-raag', 'verdict-table-racg', 'verdict-example', 'verdict-example',
        ]
        assert [r.instance for r in records[:2]] == ['11 graphs', '11 graphs']
        assert all(r.status == STATUS_PASS for r in records)
        assert [r.value for r in records[2:]] == [ANSWER_DIHEDRAL, ANSWER_YES]

    def test_racg_predicate(self):
        dihedral = SimplicialGraph.build(['a', 'b'])
        square = SimplicialGraph.build(['a', 'b', 'c', 'd'], [('a', 'b'), ('b', 'c'), ('c', 'd'), ('d', 'a')])
        pentagon = SimplicialGraph.build(['a', 'b', 'c', 'd', 'e'],
                                         [('a', 'b'), ('b', 'c'), ('c', 'd'), ('d', 'e'), ('e', 'a')])
        cone = SimplicialGraph.build(['a', 'b', 'c'], [('a', 'c'), ('b', 'c')])
        assert invariant_suite._racg_predicate(dihedral) == ANSWER_DIHEDRAL
        assert invariant_suite._racg_predicate(square) == ANSWER_NO
        assert invariant_suite._racg_predicate(pentagon) == ANSWER_YES
        assert invariant_suite._racg_predicate(cone) == ANSWER_NO

    def test_genset_skips_joins(self, p3):
        (record,) = invariant_suite.check_genset(p3, TEST_SETTINGS)
        assert record.status == STATUS_UNKNOWN

    def test_coarse_median(self, c5):
        (record,) = invariant_suite.check_coarse_median(c5, dict(TEST_SETTINGS, median_radius=1))
        assert record.status == STATUS_PASS
        assert record.instance == f"{len(c5.engine.ball(1)) ** 4} quadruples"
        assert record.expected == 2 * 2 + 2

    def test_axis_candidates(self, c5):
        assert invariant_suite.axis_candidates(c5) == [
            c5.word('v1 v3 v5'), c5.word('v1 v3 v5 v2 v4'), c5.word('v1 v2 v3 v4 v5'),
        ]

    def test_axis_candidates_free_product(self, fp):
        assert invariant_suite.axis_candidates(fp) == [fp.word('u v')]

    def test_no_axis_candidates_on_a_join(self, p3):
        assert invariant_suite.axis_candidates(p3) == []

    def test_small_graph_enumeration(self):
        assert len(invariant_suite.all_graphs(3)) == 8
        assert len(invariant_suite.all_graphs(4)) == 64


class TestRunSuite:
    def test_records_follow_check_order(self, make_toolkit):
        records = run_suite(lambda: make_toolkit('fp'), TEST_SETTINGS, threads=2)
        assert [r.check for r in records if r.check in CHECKS][0] == 'normal-form'
        assert not [r.to_dict() for r in records if r.failed]

    def test_selection(self, make_toolkit):
        records = run_suite(lambda: make_toolkit('c5'), TEST_SETTINGS, selected=['delta-isometry', 'genset'])
        assert [r.check for r in records] == ['delta-isometry', 'genset']
        assert all(r.status == STATUS_PASS for r in records)

    def test_errors_become_failed_records(self):
        def broken():
            raise PreconditionError('factory', "no presentation")

        (record,) = run_suite(broken, TEST_SETTINGS, selected=['normal-form'])
        assert record.status == STATUS_FAIL
        assert record.instance == 'error'

    @pytest.mark.slow
    @pytest.mark.parametrize('name', ['p4', 'z_z3z2'])
    def test_full_suite(self, make_toolkit, name):
        records = run_suite(lambda: make_toolkit(name), TEST_SETTINGS, threads=4)
        assert not [r.to_dict() for r in records if r.failed]

    @pytest.mark.slow
    @pytest.mark.parametrize('name', ['c5', 'fp'])
    def test_full_suite_at_shipped_scale(self, make_toolkit, name):
        records = run_suite(lambda: make_toolkit(name), ACCEPTANCE_SETTINGS, threads=4)
        assert not [r.to_dict() for r in records if r.failed]
        if name == 'c5':
            (delta,) = [r for r in records if r.check == 'delta-estimate']
            assert delta.status == STATUS_PASS
