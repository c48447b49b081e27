import argparse
import json
import logging
import os
import sys
from typing import Dict, List, Optional, Sequence

from core import graph_core
from core.aut_structure import TARGETS, AutStructure
from core.cone_off import ConeOff
from core.crossing import CrossingGraphs
from core.invariant_suite import CHECKS, run_suite
from core.parabolics import ParabolicAlgebra
from core.qm_geometry import MODE_RULES, MODE_SEARCH, QuasiMedianGeometry
from core.trees_embedding import TreeEmbedding
from core.word_engine import WordEngine
from models.coset import Coset, Hyperplane
from models.errors import GraphProductError
from models.presentation import Presentation
from models.word import Syllable, Word
from utils import (
    EXIT_CHECK_FAILED, EXIT_OK, configure_logging, handle_cli_errors, load_settings, parse_config,
    thread_cap,
)
from utils.dot_export import simplicial_graph_dot, to_dot, write_dot

logger = logging.getLogger('gpkit.cli')

CONFIG_DIR = os.path.join(os.path.dirname(os.path.dirname(os.path.abspath(__file__))), 'config')
DEFAULT_SETTINGS_PATH = os.path.join(CONFIG_DIR, 'default_settings.json')


class GraphProductToolkit:
    """Every module of the toolkit built over one presentation and one settings dict."""

    def __init__(self, presentation: Presentation, settings: dict):
        self.presentation = presentation
        self.settings = settings
        self.engine = WordEngine(presentation, span=settings['infinite_cyclic_span'])
        self.parabolics = ParabolicAlgebra(self.engine)
        self.geometry = QuasiMedianGeometry(self.engine, self.parabolics)
        self.crossing = CrossingGraphs(self.geometry)
        self.coneoff = ConeOff(self.geometry, settings['coneoff_depth_bound'])
        self.trees = TreeEmbedding(self.geometry)
        self.aut = AutStructure(self.engine)

    # ------------------------------------------------------------------
    # text forms

    def word(self, text: Optional[str]) -> Word:
        return self.engine.parse_word(text or '')

    def fmt(self, value) -> object:
        """Printable form of words, walls, cosets and tuples of them."""
        if isinstance(value, Word):
            return self.engine.format_word(value)
        if isinstance(value, Hyperplane):
            return value.to_dict(self.engine.format_word, self.graph_order)
        if isinstance(value, Coset):
            return value.to_dict(self.engine.format_word, self.graph_order)
        if isinstance(value, (tuple, list)):
            return [self.fmt(v) for v in value]
        return value

    def graph_order(self, vertices) -> List[str]:
        return self.engine.graph.sort(vertices)

    def wall(self, text: str) -> Hyperplane:
        """'u@word' is the u-wall through the point word."""
        label, _, point = text.partition('@')
        return self.geometry.hyperplane_at(self.word(point), self.engine.graph.check_vertex(label.strip()))

    def vertex_list(self, text: Optional[str]) -> List[str]:
        if not text:
            return []
        return [self.engine.graph.check_vertex(v.strip()) for v in text.split(',') if v.strip()]


def emit(data, as_json: bool = True):
    if as_json:
        print(json.dumps(data, ensure_ascii=False))
    else:
        print(data)


# ----------------------------------------------------------------------
# commands

def cmd_reduce(toolkit: GraphProductToolkit, args) -> int:
    w = toolkit.word(args.word)
    classification = toolkit.engine.support_classify(w)
    emit({'word': toolkit.fmt(w), 'length': len(w), 'delta_length': toolkit.engine.delta_length(w),
          **classification.to_dict(toolkit.graph_order)})
    return EXIT_OK


def cmd_dist(toolkit: GraphProductToolkit, args) -> int:
    graded = toolkit.engine.graded_distance(toolkit.word(args.x), toolkit.word(args.y))
    if args.json:
        emit(graded.to_dict())
        return EXIT_OK
    parts = [f"d={graded.d}"]
    parts += [f"d_{u}={graded.d_u[u]}" for u in toolkit.engine.graph.vertices if graded.d_u[u]]
    parts.append(f"delta={graded.delta}")
    emit(' '.join(parts), as_json=False)
    return EXIT_OK


def cmd_hyperplanes(toolkit: GraphProductToolkit, args) -> int:
    geometry = toolkit.geometry
    if args.wall:
        if len(args.wall) != 2:
            raise GraphProductError("--wall takes exactly two walls")
        j1, j2 = (toolkit.wall(w) for w in args.wall)
        relation = geometry.hyperplane_relation(j1, j2)
        data = {'walls': [toolkit.fmt(j1), toolkit.fmt(j2)], **relation.to_dict()}
        if not relation.is_transverse and j1 != j2:
            mode = MODE_SEARCH if args.search else MODE_RULES
            verdict = geometry.strongly_separated(j1, j2, toolkit.settings['strong_separation_radius'], mode)
            data['strongly_separated'] = verdict.to_dict(toolkit.fmt)
            data['delta_chain'] = geometry.delta_chain(j1, j2).to_dict(toolkit.engine.format_word)
        emit(data)
        return EXIT_OK
    x, y = toolkit.word(args.x), toolkit.word(args.y)
    walls = geometry.separating_hyperplanes(x, y)
    emit({'d': len(walls), 'walls': [toolkit.fmt(h) for h in walls]})
    return EXIT_OK


def cmd_median(toolkit: GraphProductToolkit, args) -> int:
    x, y, z = (toolkit.word(w) for w in (args.x, args.y, args.z))
    triangle = toolkit.geometry.median_triangle(x, y, z)
    data = {'corners': toolkit.fmt(triangle.corners), 'prism': toolkit.fmt(triangle.prism), 'size': triangle.size}
    if triangle.size == 0:
        data['median'] = toolkit.fmt(triangle.corners[0])
    emit(data)
    return EXIT_OK


def cmd_crossing(toolkit: GraphProductToolkit, args) -> int:
    crossing = toolkit.crossing
    radius = args.radius or toolkit.settings['window_radius']
    window = crossing.build_window(toolkit.word(args.basepoint), radius, small=args.small)
    emit({'walls': len(window), 'crossings': window.edge_count(), 'small_crossings': window.edge_count(True),
          'small_is_geodesic': crossing.small_is_geodesic(window)})
    if args.wall:
        a, b = (toolkit.wall(w) for w in args.wall)
        emit(crossing.delta_estimate_audit(window, a, b).to_dict())
    if args.bottleneck:
        walls = list(window.walls)
        pairs = [(walls[0], w) for w in walls[1:]]
        report = crossing.bottleneck_audit(window, pairs, toolkit.settings['bottleneck_path_samples'])
        emit(report.to_dict())
    return EXIT_OK


def cmd_coneoff(toolkit: GraphProductToolkit, args) -> int:
    x, y = toolkit.word(args.x), toolkit.word(args.y)
    coneoff = toolkit.coneoff
    data = coneoff.coneoff_distance(x, y, args.depth).to_dict()
    data['certificate'] = coneoff.block_chain_certificate(x, y).to_dict(toolkit.engine.format_word)
    data['classification'] = coneoff.classify_element(toolkit.engine.compose(toolkit.engine.invert(x), y)).to_dict()
    if args.wpd:
        g = toolkit.engine.compose(toolkit.engine.invert(x), y)
        verdict = coneoff.wpd_sample_audit(g, args.epsilon, args.power, toolkit.settings['wpd_radius'])
        data['wpd'] = verdict.to_dict(toolkit.fmt)
    emit(data)
    return EXIT_OK


def cmd_trees(toolkit: GraphProductToolkit, args) -> int:
    x, y = toolkit.word(args.x), toolkit.word(args.y)
    trees = toolkit.trees
    vertices = toolkit.vertex_list(args.vertex) or list(toolkit.engine.graph.vertices)
    distances = {}
    for u in vertices:
        d_tree, d_space = trees.tree_distance(u, x, y)
        distances[u] = {'T': d_tree, 'TS': d_space}
    eta, _ = trees.embed(x)
    emit({'distances': distances, 'eta_x': eta.to_dict(toolkit.engine.format_word)})
    if args.z:
        defect = trees.almost_median_defect(x, y, toolkit.word(args.z))
        emit(defect.to_dict())
    return EXIT_OK


def cmd_verdict(toolkit: GraphProductToolkit, args) -> int:
    aut = toolkit.aut
    target = args.target
    if target in TARGETS:
        emit(aut.acyl_verdict(target).to_dict())
    elif target == 'extension':
        emit(aut.extension_verdict(args.kernel_finite).to_dict())
    elif target == 'structure':
        emit(aut.structure_report().to_dict(toolkit.graph_order))
    elif target == 'vastness':
        emit(aut.vastness_report().to_dict())
        emit(aut.cyclic_extension_vastness().to_dict())
    elif target == 'bounds':
        emit(aut.invariant_bounds_report().to_dict())
    return EXIT_OK


def cmd_genset(toolkit: GraphProductToolkit, args) -> int:
    words = toolkit.aut.build_noncommuting_genset()
    check = toolkit.aut.verify_genset(words)
    emit({'words': toolkit.fmt(words), **check.to_dict()})
    return EXIT_OK if check.passed else EXIT_CHECK_FAILED


def cmd_export_dot(toolkit: GraphProductToolkit, args) -> int:
    graph = toolkit.engine.graph
    what = args.what
    if what == 'graph':
        labels = {v: toolkit.presentation.group(v).label() for v in graph.vertices}
        text = simplicial_graph_dot(graph, labels, toolkit.presentation.name)
    elif what == 'opposite':
        text = simplicial_graph_dot(graph_core.opposite_graph(graph), title='opposite')
    elif what in ('window', 'small-window'):
        window = toolkit.crossing.build_window(radius=args.radius or toolkit.settings['window_radius'])
        g = toolkit.crossing.window_graph(window, small=what == 'small-window')
        text = to_dot(g, lambda i: f'"{window.walls[i].label}#{i}"', title=what.replace('-', '_'))
    elif what == 'products':
        products = toolkit.crossing.maximal_products_window(radius=args.radius or 1)
        text = to_dot(products.graph(), lambda i: f'"M{i}"', title='products')
    else:
        u = toolkit.vertex_list(args.vertex)[0] if args.vertex else graph.vertices[0]
        tree = toolkit.trees.tree_window(u, args.radius or toolkit.settings['window_radius'])
        names = {node: f'"n{i}"' for i, node in enumerate(sorted(tree.nodes, key=str))}
        text = to_dot(tree, names.get, title=f"T_{u}")
    if args.out:
        write_dot(text, args.out)
    else:
        emit(text, as_json=False)
    return EXIT_OK


def cmd_suite(toolkit: GraphProductToolkit, args) -> int:
    settings = dict(toolkit.settings)
    if args.radius is not None:
        settings['oracle_radius'] = args.radius
    presentation = toolkit.presentation
    records = run_suite(lambda: GraphProductToolkit(presentation, settings), settings, thread_cap(), args.check or ())
    for record in records:
        emit(record.to_dict())
    return EXIT_CHECK_FAILED if any(r.failed for r in records) else EXIT_OK


def cmd_cyclic(toolkit: GraphProductToolkit, args) -> int:
    x = toolkit.word(args.word)
    conjugator, core = toolkit.engine.cyclic_reduce(x)
    emit({'conjugator': toolkit.fmt(conjugator), 'core': toolkit.fmt(core),
          'cyclically_reduced': toolkit.engine.is_cyclically_reduced(x)})
    return EXIT_OK


def cmd_root(toolkit: GraphProductToolkit, args) -> int:
    x = toolkit.word(args.word)
    bound = args.bound if args.bound is not None else toolkit.settings['root_bound']
    result = toolkit.engine.primitive_root(x, bound)
    data = {'root': toolkit.fmt(result.root), 'exponent': result.exponent}
    if args.centralizer:
        description = toolkit.parabolics.centralizer_description(x, bound)
        data['centralizer'] = description.to_dict(toolkit.engine.format_word, toolkit.graph_order)
    emit(data)
    return EXIT_OK


def cmd_project(toolkit: GraphProductToolkit, args) -> int:
    parabolics = toolkit.parabolics
    x = toolkit.word(args.word)
    coset = parabolics.coset(toolkit.word(args.rep), toolkit.vertex_list(args.subgraph))
    data = {
        'coset': toolkit.fmt(coset),
        'member': parabolics.membership(x, coset),
        'projection': toolkit.fmt(parabolics.project(x, coset)),
        'distance': parabolics.coset_distance(x, coset),
        'normalizer_support': toolkit.graph_order(parabolics.normalizer_support(coset.lambda_)),
    }
    if args.double is not None:
        verdict = parabolics.double_coset_member(x, coset.lambda_, toolkit.vertex_list(args.double))
        data['double_coset'] = verdict.to_dict(toolkit.fmt)
    emit(data)
    return EXIT_OK


def cmd_axis(toolkit: GraphProductToolkit, args) -> int:
    g = toolkit.word(args.word)
    exponents = range(-args.span, args.span + 1)
    axis = toolkit.crossing.contracting_axis(g, exponents, toolkit.settings['strong_separation_radius'])
    emit(axis.to_dict(toolkit.engine.format_word))
    return EXIT_OK if not any(v.is_refuted for v in axis.verdicts.values()) else EXIT_CHECK_FAILED


def cmd_window(toolkit: GraphProductToolkit, args) -> int:
    crossing = toolkit.crossing
    radius = args.radius or 1
    products = crossing.maximal_products_window(radius=radius)
    window = crossing.build_window(radius=radius + 1)
    emit(products.to_dict(toolkit.engine.format_word))
    report = crossing.qi_compare(window, products, toolkit.settings['suite_sample_pairs'], toolkit.settings['seed'])
    emit(report.to_dict())
    return EXIT_OK


def cmd_endo(toolkit: GraphProductToolkit, args) -> int:
    """Images given as 'v=word' for the first generator of v; unlisted generators are fixed."""
    engine = toolkit.engine
    images: Dict[Syllable, Word] = {}
    for v in engine.graph.vertices:
        for s in engine.generator_syllables(v):
            images[s] = Word((s,))
    for item in args.image or ():
        vertex, _, word = item.partition('=')
        vertex = engine.graph.check_vertex(vertex.strip())
        images[engine.generator_syllables(vertex)[0]] = toolkit.word(word)
    result = toolkit.aut.check_endomorphism(images)
    emit(result.to_dict())
    return EXIT_OK if result.valid else EXIT_CHECK_FAILED


COMMANDS = {
    'reduce': cmd_reduce,
    'dist': cmd_dist,
    'hyperplanes': cmd_hyperplanes,
    'median': cmd_median,
    'crossing': cmd_crossing,
    'coneoff': cmd_coneoff,
    'trees': cmd_trees,
    'verdict': cmd_verdict,
    'genset': cmd_genset,
    'export-dot': cmd_export_dot,
    'suite': cmd_suite,
    'cyclic': cmd_cyclic,
    'root': cmd_root,
    'project': cmd_project,
    'axis': cmd_axis,
    'window': cmd_window,
    'endo': cmd_endo,
}


def _tristate(text: str) -> Optional[bool]:
    return {'yes': True, 'true': True, 'no': False, 'false': False}.get(text.lower())


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog='gpkit', description="Exact computation in graph products of groups.")
    parser.add_argument('--settings', default=DEFAULT_SETTINGS_PATH, help="Settings JSON (created when missing).")
    parser.add_argument('--log-level', default=None, help="Overrides the settings log level.")
    parser.add_argument('--seed', type=int, default=None, help="Seed for every sampled check.")
    parser.add_argument('--json', action='store_true', help="JSON output for commands that print text.")
    sub = parser.add_subparsers(dest='command', required=True)

    def command(name: str, help_text: str) -> argparse.ArgumentParser:
        p = sub.add_parser(name, help=help_text)
        p.add_argument('--config', required=True, help="Presentation config file.")
        return p

    p = command('reduce', "Canonical normal form and support of a word.")
    p.add_argument('--word', default='')
    p = command('dist', "Graded distances d, d_u, δ_u, δ.")
    p.add_argument('--x', default='')
    p.add_argument('--y', default='')
    p = command('hyperplanes', "Separating walls, or the relation of two walls given as u@word.")
    p.add_argument('--x', default='')
    p.add_argument('--y', default='')
    p.add_argument('--wall', action='append')
    p.add_argument('--search', action='store_true', help="Decide strong separation by ball search only.")
    p = command('median', "Median triangle of three points.")
    for name in ('--x', '--y', '--z'):
        p.add_argument(name, default='')
    p = command('crossing', "Crossing graph window, Δ-estimate and bottleneck audits.")
    p.add_argument('--radius', type=int, default=None)
    p.add_argument('--basepoint', default='')
    p.add_argument('--small', action='store_true')
    p.add_argument('--wall', action='append')
    p.add_argument('--bottleneck', action='store_true')
    p = command('coneoff', "Cone-off distance with its block certificate.")
    p.add_argument('--x', default='')
    p.add_argument('--y', default='')
    p.add_argument('--depth', type=int, default=None)
    p.add_argument('--wpd', action='store_true', help="Also audit WPD for x⁻¹y.")
    p.add_argument('--epsilon', type=int, default=1)
    p.add_argument('--power', type=int, default=3)
    p = command('trees', "Distances in T_u and TS_u, and the almost-median defect with --z.")
    p.add_argument('--x', default='')
    p.add_argument('--y', default='')
    p.add_argument('--z', default=None)
    p.add_argument('--vertex', default=None)
    p = command('verdict', "Verdicts about Aut(Γ𝒢).")
    p.add_argument('--target', required=True, choices=list(TARGETS) + ['extension', 'structure', 'vastness', 'bounds'])
    p.add_argument('--kernel-finite', type=_tristate, default=None)
    command('genset', "Pairwise non-commuting generating set.")
    p = command('export-dot', "Graphviz DOT of the graph or a window.")
    p.add_argument('--what', default='graph',
                   choices=['graph', 'opposite', 'window', 'small-window', 'products', 'tree'])
    p.add_argument('--radius', type=int, default=None)
    p.add_argument('--vertex', default=None)
    p.add_argument('--out', default=None)
    p = command('suite', "Invariant batteries as JSON lines.")
    p.add_argument('--radius', type=int, default=None)
    p.add_argument('--check', action='append', choices=list(CHECKS))
    p = command('cyclic', "Cyclic reduction.")
    p.add_argument('--word', default='')
    p = command('root', "Primitive root of an irreducible element.")
    p.add_argument('--word', default='')
    p.add_argument('--bound', type=int, default=None)
    p.add_argument('--centralizer', action='store_true')
    p = command('project', "Coset membership, projection and double cosets.")
    p.add_argument('--word', default='')
    p.add_argument('--rep', default='')
    p.add_argument('--subgraph', required=True, help="Comma-separated vertices of Λ.")
    p.add_argument('--double', default=None, help="Comma-separated B for ⟨Λ⟩·w·⟨B⟩ membership of the word.")
    p = command('axis', "Strongly separated walls along the axis of an irreducible element.")
    p.add_argument('--word', required=True)
    p.add_argument('--span', type=int, default=2)
    p = command('window', "Graph of maximal products window and its comparison with the small crossing graph.")
    p.add_argument('--radius', type=int, default=None)
    p = command('endo', "Check that generator images define an endomorphism.")
    p.add_argument('--image', action='append', help="v=word")
    return parser


@handle_cli_errors
def run(args: argparse.Namespace) -> int:
    settings = load_settings(args.settings)
    if args.seed is not None:
        settings['seed'] = args.seed
    configure_logging(settings, args.log_level)
    toolkit = GraphProductToolkit(parse_config(args.config), settings)
    logger.info("Running %s on %s", args.command, toolkit.presentation.name)
    return COMMANDS[args.command](toolkit, args)


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    return run(args)


if __name__ == "__main__":
    sys.exit(main())
