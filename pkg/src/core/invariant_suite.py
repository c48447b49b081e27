"""Invariant batteries run against one presentation.

Each check compares an algebraic shortcut with an exhaustive oracle or a
stated inequality, and yields SuiteRecords. Checks run in a thread pool
capped by GPKIT_THREADS; records are emitted in check order.
"""

import logging
import random
from concurrent.futures import ThreadPoolExecutor
from itertools import combinations, combinations_with_replacement, product
from typing import Callable, Dict, List, Sequence

import networkx as nx

from core import graph_core
from core.aut_structure import TARGET_AUT, TARGET_RAAG, TARGET_RACG, AutStructure
from core.word_engine import WordEngine
from models.errors import GraphProductError
from models.graph import SimplicialGraph
from models.presentation import Presentation, VertexGroupSpec
from models.report import (
    ANSWER_DIHEDRAL, ANSWER_NO, ANSWER_YES, STATUS_FAIL, STATUS_PASS, STATUS_UNKNOWN, SuiteRecord,
)
from models.word import Word
from utils import oracles

logger = logging.getLogger('gpkit.invariant_suite')

Check = Callable[[object, dict], List[SuiteRecord]]


def _status(ok: bool) -> str:
    return STATUS_PASS if ok else STATUS_FAIL


def check_normal_form(toolkit, settings: dict) -> List[SuiteRecord]:
    """reduce(w) is the identity exactly when exhaustive rewriting empties w, for every short word."""
    engine = toolkit.engine
    length = settings['normal_form_length']
    mismatches, checked = 0, 0
    for n in range(length + 1):
        for raw in oracles.raw_words(engine, n):
            checked += 1
            if engine.reduce(raw).is_identity != oracles.is_trivial(engine.presentation, raw):
                mismatches += 1
    logger.debug("Normal form checked on %d words", checked)
    return [SuiteRecord('normal-form', f"{checked} words <= {length}", _status(mismatches == 0), mismatches, 0)]


def check_distance_formula(toolkit, settings: dict) -> List[SuiteRecord]:
    """d(x, y) = number of separating walls = shortest rewritten length of x⁻¹y, on every pair of the ball."""
    engine, geometry = toolkit.engine, toolkit.geometry
    pairs = list(combinations(engine.ball(settings['oracle_radius']), 2))
    violations = 0
    for x, y in pairs:
        d = engine.distance(x, y)
        raw = oracles.raw_inverse(engine.presentation, [(s.vertex, s.element) for s in x])
        raw += tuple((s.vertex, s.element) for s in y)
        walls = len(geometry.separating_hyperplanes(x, y))
        if d != walls or d != oracles.rewriting_length(engine.presentation, raw):
            violations += 1
    return [SuiteRecord('distance-formula', f"{len(pairs)} pairs", _status(violations == 0), violations, 0)]


def check_delta_isometry(toolkit, settings: dict) -> List[SuiteRecord]:
    """δ(1, x) equals the BFS distance over ∪S_u."""
    engine = toolkit.engine
    radius = settings['oracle_radius'] + 1
    distances = oracles.cayley_distances(engine, radius)
    violations = sum(1 for x, d in distances.items() if engine.delta_length(x) != d)
    return [SuiteRecord('delta-isometry', f"radius {radius}", _status(violations == 0), violations, 0)]


def check_median_triangles(toolkit, settings: dict) -> List[SuiteRecord]:
    """Every triple of the ball: median identities, a complete prism and no smaller median triple."""
    engine, geometry = toolkit.engine, toolkit.geometry
    d = engine.distance
    violations, checked = 0, 0
    for x, y, z in combinations_with_replacement(engine.ball(settings['median_radius']), 3):
        checked += 1
        triangle = geometry.median_triangle(x, y, z)
        a, b, c = triangle.corners
        identities = (
            d(x, y) == d(x, a) + triangle.size + d(b, y)
            and d(y, z) == d(y, b) + triangle.size + d(c, z)
            and d(x, z) == d(x, a) + triangle.size + d(c, z)
        )
        in_prism = all(toolkit.parabolics.membership(p, triangle.prism) for p in triangle.corners)
        complete = graph_core.is_complete(graph_core.induced_subgraph(engine.graph, triangle.prism.lambda_))
        minimal = oracles.brute_force_median_size(engine, x, y, z) == triangle.size
        if not (identities and in_prism and complete and minimal):
            violations += 1
    return [SuiteRecord('median-triangles', f"{checked} triples", _status(violations == 0), violations, 0)]


def check_transversality(toolkit, settings: dict) -> List[SuiteRecord]:
    """Walls and crossings from union-find over squares agree with the algebraic rules on every wall pair."""
    engine, geometry = toolkit.engine, toolkit.geometry
    radius = settings['oracle_radius']
    oracle = oracles.WallOracle(engine, radius)
    by_class: Dict[object, set] = {}
    by_wall: Dict[object, set] = {}
    for x, s in oracle.edges():
        cls, wall = oracle.wall_of(x, s), geometry.hyperplane_at(x, s.vertex)
        by_class.setdefault(cls, set()).add(wall)
        by_wall.setdefault(wall, set()).add(cls)
    partition_errors = sum(1 for walls in by_class.values() if len(walls) != 1)
    partition_errors += sum(1 for classes in by_wall.values() if len(classes) != 1)
    class_of = {wall: next(iter(classes)) for wall, classes in by_wall.items()}
    crossings = oracle.transverse_classes()
    crossing_errors = 0
    for j1, j2 in combinations(list(class_of), 2):
        found = frozenset({class_of[j1], class_of[j2]}) in crossings
        if found != geometry.is_transverse(j1, j2):
            crossing_errors += 1
    return [
        SuiteRecord('wall-partition', f"radius {radius}", _status(partition_errors == 0), partition_errors, 0),
        SuiteRecord('transversality', f"{len(class_of)} walls", _status(crossing_errors == 0), crossing_errors, 0),
    ]


def check_delta_estimate(toolkit, settings: dict) -> List[SuiteRecord]:
    """Bounds on every window pair; unknown until enough pairs have exact window distances."""
    crossing = toolkit.crossing
    window = crossing.build_window(radius=settings['delta_estimate_radius'])
    certified, failures = 0, 0
    for a, b in combinations(window.walls, 2):
        passed = crossing.delta_estimate_audit(window, a, b).passed
        if passed is not None:
            certified += 1
        if passed is False:
            failures += 1
    wanted = settings['delta_estimate_min_pairs']
    status = STATUS_FAIL if failures else (STATUS_UNKNOWN if certified < wanted else STATUS_PASS)
    return [SuiteRecord('delta-estimate', f"{certified} certified wall pairs", status, failures, 0)]


def _opposite_walk(graph: SimplicialGraph) -> List[str]:
    """Vertex order stepping each time to the first unvisited vertex not adjacent to the last one."""
    order = [graph.vertices[0]]
    while len(order) < len(graph.vertices):
        rest = [v for v in graph.vertices if v not in order]
        apart = [v for v in rest if not graph.adjacent(order[-1], v)]
        order.append((apart or rest)[0])
    return order


def axis_candidates(toolkit) -> List[Word]:
    """Irreducible test elements: the shortest irreducible prefix of the opposite-graph walk,
    the whole walk, and the generators in vertex order."""
    engine, graph = toolkit.engine, toolkit.engine.graph
    walk = _opposite_walk(graph)
    spelled = [engine.reduce(engine.generator_syllables(v)[0] for v in order)
               for order in (walk[:n] for n in range(2, len(walk) + 1))]
    prefix = next((g for g in spelled if engine.support_classify(g).is_irreducible), None)
    full = engine.reduce(engine.generator_syllables(v)[0] for v in graph.vertices)
    candidates = []
    for g in (prefix, spelled[-1] if spelled else None, full):
        if g is not None and g not in candidates and engine.support_classify(g).is_irreducible:
            candidates.append(g)
    return candidates


def check_contracting_axes(toolkit, settings: dict) -> List[SuiteRecord]:
    records = []
    for g in axis_candidates(toolkit):
        axis = toolkit.crossing.contracting_axis(g, range(-2, 3), settings['strong_separation_radius'])
        refuted = sum(1 for verdict in axis.verdicts.values() if verdict.is_refuted)
        unknown = sum(1 for verdict in axis.verdicts.values() if verdict.is_unknown)
        status = STATUS_FAIL if refuted else (STATUS_UNKNOWN if unknown else STATUS_PASS)
        records.append(SuiteRecord('contracting-axis', toolkit.engine.format_word(g), status, refuted, 0))
    if not records:
        records.append(SuiteRecord('contracting-axis', 'no irreducible element', STATUS_UNKNOWN, None, None))
    return records


def check_tree_formulas(toolkit, settings: dict) -> List[SuiteRecord]:
    """Closed forms 2d_u and 2d_u + δ_u against BFS in the tree windows, on every pair of the ball."""
    engine, trees = toolkit.engine, toolkit.trees
    radius = settings['oracle_radius']
    pairs = list(combinations(engine.ball(radius), 2))
    violations = 0
    for u in engine.graph.vertices:
        tree = trees.tree_window(u, radius)
        space = trees.tree_of_spaces_window(u, radius)
        for x, y in pairs:
            expected = trees.tree_distance(u, x, y)
            measured = (trees.window_tree_distance(tree, u, x, y), trees.window_tree_distance(space, u, x, y))
            if measured != expected:
                violations += 1
    return [SuiteRecord('tree-formulas', f"{len(pairs)} pairs", _status(violations == 0), violations, 0)]


def _random_word(engine: WordEngine, rng: random.Random, max_length: int) -> Word:
    syllables = engine.all_syllables()
    return engine.reduce([rng.choice(syllables) for _ in range(rng.randint(0, max_length))])


def check_coneoff_bound(toolkit, settings: dict) -> List[SuiteRecord]:
    """d_Y ≥ N+1 on random pairs of long words."""
    engine, coneoff = toolkit.engine, toolkit.coneoff
    rng = random.Random(settings['seed'])
    length = settings['coneoff_word_length']
    samples = settings['suite_sample_pairs']
    violations, undecided = 0, 0
    for _ in range(samples):
        x, y = _random_word(engine, rng, length), _random_word(engine, rng, length)
        distance = coneoff.coneoff_distance(x, y)
        if distance.value is None:
            undecided += 1
        elif distance.value < distance.lower_bound:
            logger.error("Cone-off bound violated: d_Y=%d < %d", distance.value, distance.lower_bound)
            violations += 1
    status = STATUS_FAIL if violations else (STATUS_UNKNOWN if samples and undecided == samples else STATUS_PASS)
    return [SuiteRecord('coneoff-bound', f"{samples} pairs", status, violations, 0)]


def all_graphs(n: int) -> List[SimplicialGraph]:
    vertices = [f"v{i}" for i in range(1, n + 1)]
    slots = list(combinations(vertices, 2))
    return [
        SimplicialGraph.build(vertices, [slot for slot, keep in zip(slots, mask) if keep])
        for mask in product((False, True), repeat=len(slots))
    ]


def _opposite_factors(graph: SimplicialGraph) -> List[set]:
    """Components of the complement, computed without join_decomposition."""
    return [set(c) for c in nx.connected_components(nx.complement(graph.to_networkx()))]


def _raag_predicate(graph: SimplicialGraph) -> str:
    """At least two vertices and a connected complement."""
    return ANSWER_YES if len(graph.vertices) >= 2 and len(_opposite_factors(graph)) == 1 else ANSWER_NO


def _racg_predicate(graph: SimplicialGraph) -> str:
    """One non-clique factor; two isolated ℤ2 vertices on their own are the dihedral exception."""
    factors = [c for c in _opposite_factors(graph) if len(c) > 1]
    if len(factors) != 1:
        return ANSWER_NO
    if len(factors[0]) > 2:
        return ANSWER_YES
    return ANSWER_DIHEDRAL if len(graph.vertices) == 2 else ANSWER_NO


def _named_verdicts() -> List[tuple]:
    """Fixed examples: D∞ and Aut(ℤ ⊕ (ℤ3 ∗ ℤ2))."""
    dihedral = SimplicialGraph.build(['a', 'b'], [])
    mixed = SimplicialGraph.build(['z', 'p', 'q'], [('z', 'p'), ('z', 'q')])
    return [
        ('infinite dihedral', TARGET_RACG, ANSWER_DIHEDRAL,
         Presentation(dihedral, {v: VertexGroupSpec.cyclic(2, v) for v in 'ab'})),
        ('Z + (Z3 * Z2)', TARGET_AUT, ANSWER_YES,
         Presentation(mixed, {'z': VertexGroupSpec.infinite_cyclic('z'),
                              'p': VertexGroupSpec.cyclic(3, 'p'), 'q': VertexGroupSpec.cyclic(2, 'q')})),
    ]


def check_verdict_table(toolkit, settings: dict) -> List[SuiteRecord]:
    """RAAG and RACG verdicts on every small graph against predicates read off the complement."""
    limit = settings['verdict_table_vertices']
    labels = {
        TARGET_RAAG: (VertexGroupSpec.infinite_cyclic, _raag_predicate),
        TARGET_RACG: (lambda v: VertexGroupSpec.cyclic(2, v), _racg_predicate),
    }
    records = []
    for target, (label, predicate) in labels.items():
        mismatches, checked = 0, 0
        for n in range(1, limit + 1):
            for graph in all_graphs(n):
                groups = {v: label(v) for v in graph.vertices}
                verdict = AutStructure(WordEngine(Presentation(graph, groups))).acyl_verdict(target)
                if verdict.answer != predicate(graph):
                    mismatches += 1
                checked += 1
        records.append(SuiteRecord(f"verdict-table-{target}", f"{checked} graphs", _status(mismatches == 0),
                                   mismatches, 0))
    for name, target, expected, presentation in _named_verdicts():
        answer = AutStructure(WordEngine(presentation)).acyl_verdict(target).answer
        records.append(SuiteRecord('verdict-example', name, _status(answer == expected), answer, expected))
    return records


def check_genset(toolkit, settings: dict) -> List[SuiteRecord]:
    graph = toolkit.engine.graph
    if len(graph.vertices) < 2 or graph_core.is_join(graph):
        return [SuiteRecord('genset', 'join or single vertex', STATUS_UNKNOWN, None, None)]
    words = toolkit.aut.build_noncommuting_genset()
    result = toolkit.aut.verify_genset(words)
    return [SuiteRecord('genset', f"{len(words)} words", _status(result.passed), list(result.failures), [])]


def check_coarse_median(toolkit, settings: dict) -> List[SuiteRecord]:
    """Coarse median constants over every triple and quadruple of the ball, against 2·clique + 2."""
    engine = toolkit.engine
    defects = toolkit.geometry.coarse_median_defects(engine.ball(settings['median_radius']))
    bound = 2 * graph_core.clique_number(engine.graph) + 2
    worst = max(defects.c0, defects.c1, defects.c2)
    return [SuiteRecord('coarse-median', f"{defects.samples} quadruples", _status(worst <= bound), worst, bound)]


CHECKS: Dict[str, Check] = {
    'normal-form': check_normal_form,
    'distance-formula': check_distance_formula,
    'delta-isometry': check_delta_isometry,
    'median-triangles': check_median_triangles,
    'transversality': check_transversality,
    'delta-estimate': check_delta_estimate,
    'contracting-axis': check_contracting_axes,
    'tree-formulas': check_tree_formulas,
    'coneoff-bound': check_coneoff_bound,
    'verdict-table': check_verdict_table,
    'genset': check_genset,
    'coarse-median': check_coarse_median,
}


def _run_one(name: str, check: Check, factory: Callable[[], object], settings: dict) -> List[SuiteRecord]:
    try:
        return check(factory(), settings)
    except GraphProductError as e:
        logger.error("Check %s failed with %s", name, e)
        return [SuiteRecord(name, 'error', STATUS_FAIL, str(e), None)]


def run_suite(factory: Callable[[], object], settings: dict, threads: int = 1,
              selected: Sequence[str] = ()) -> List[SuiteRecord]:
    """Run the selected checks (all by default); each worker builds its own toolkit."""
    names = [name for name in CHECKS if not selected or name in selected]
    with ThreadPoolExecutor(max_workers=max(1, threads)) as pool:
        futures = [pool.submit(_run_one, name, CHECKS[name], factory, settings) for name in names]
        records = [record for future in futures for record in future.result()]
    for record in records:
        if record.failed:
            logger.error("Suite check %s failed on %s: %s (expected %s)",
                         record.check, record.instance, record.value, record.expected)
    logger.info("Suite finished: %d records, %d failed", len(records), sum(r.failed for r in records))
    return records
