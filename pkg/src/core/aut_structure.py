"""Verdicts about Aut(Γ𝒢): structure formula, acylindrical hyperbolicity, extensions and vastness.

Properties that cannot be computed from a vertex-group backend are read from
VertexGroupMeta, derived for the built-in kinds and overridable in the
presentation config. A verdict never returns a bare boolean: it lists the
conditions it was decided on.
"""

import logging
from collections import deque
from itertools import combinations
from typing import Dict, Iterable, List, Mapping, Optional

import networkx as nx
import sympy

from core import graph_core
from core.word_engine import WordEngine
from models.errors import MissingMetadataError, PreconditionError, RootNotFoundError
from models.graph import VertexSet
from models.presentation import KIND_INFINITE_CYCLIC, VertexGroupMeta
from models.report import (
    ANSWER_DIHEDRAL, ANSWER_NO, ANSWER_UNKNOWN, ANSWER_YES, FLAG_ACYL, FLAG_DIHEDRAL,
    AcylVerdict, Condition, EndomorphismCheck, GensetCheck, InvariantBounds, StructureReport,
    VastnessReport,
)
from models.word import IDENTITY, Syllable, Word

logger = logging.getLogger('gpkit.aut_structure')

TARGET_GROUP = 'group'
TARGET_AUT = 'aut'
TARGET_RAAG = 'raag'
TARGET_RACG = 'racg'
TARGETS = (TARGET_GROUP, TARGET_AUT, TARGET_RAAG, TARGET_RACG)

N = sympy.Symbol('n', positive=True)


def _all(values: Iterable[Optional[bool]]) -> Optional[bool]:
    values = list(values)
    if any(v is False for v in values):
        return False
    if any(v is None for v in values):
        return None
    return True


def _any(values: Iterable[Optional[bool]]) -> Optional[bool]:
    values = list(values)
    if any(v is True for v in values):
        return True
    if any(v is None for v in values):
        return None
    return False


def _answer(value: Optional[bool]) -> str:
    if value is None:
        return ANSWER_UNKNOWN
    return ANSWER_YES if value else ANSWER_NO


class AutStructure:
    def __init__(self, engine: WordEngine):
        self.engine = engine
        self.presentation = engine.presentation
        self.graph = engine.graph

    # ------------------------------------------------------------------
    # metadata

    def derive_meta(self) -> Dict[str, VertexGroupMeta]:
        """Metadata derived from the group kinds, then overridden by the config."""
        derived = {}
        for v in self.graph.vertices:
            group = self.presentation.group(v)
            if group.kind == KIND_INFINITE_CYCLIC:
                meta = VertexGroupMeta(False, False, True, True, 1, 'n')
            else:
                meta = VertexGroupMeta(True, True, group.is_directly_indecomposable(), True, 0, 'n')
            derived[v] = meta.merged(self.presentation.meta_overrides.get(v, {}))
        return derived

    def _meta(self, meta: Optional[Mapping[str, VertexGroupMeta]]) -> Mapping[str, VertexGroupMeta]:
        return self.derive_meta() if meta is None else meta

    def is_z2_pair(self, factor: VertexSet) -> bool:
        """Two isolated vertices both labelled by ℤ2."""
        if len(factor) != 2:
            return False
        a, b = tuple(factor)
        return (not self.graph.adjacent(a, b)
                and self.presentation.group(a).is_order_two()
                and self.presentation.group(b).is_order_two())

    def clique_aut_finite(self, meta: Optional[Mapping[str, VertexGroupMeta]] = None,
                          clique: Optional[VertexSet] = None) -> Optional[bool]:
        """Aut(⟨Γ0⟩) is finite iff each Aut(G_u) is finite, at most one G_u is ℤ and the rest are finite."""
        meta = self._meta(meta)
        if clique is None:
            clique = graph_core.join_decomposition(self.graph).clique_part
        infinite_cyclic = [v for v in clique if self.presentation.group(v).kind == KIND_INFINITE_CYCLIC]
        others_finite = _all(meta[v].is_finite for v in clique if v not in infinite_cyclic)
        auts_finite = _all(meta[v].aut_is_finite for v in clique)
        return _all([len(infinite_cyclic) <= 1, others_finite, auts_finite])

    def _irreducibility_condition(self, meta) -> Condition:
        values = [meta[v].is_graphically_irreducible for v in self.graph.vertices]
        missing = [v for v in self.graph.vertices if meta[v].is_graphically_irreducible is None]
        return Condition('vertex groups graphically irreducible', _all(values),
                         f"missing for {missing}" if missing else '')

    # ------------------------------------------------------------------
    # structure

    def _group_name(self, vertices: Iterable[str], symbol: str) -> str:
        return f" {symbol} ".join(self.presentation.group(v).label() for v in self.graph.sort(vertices))

    def _factor_name(self, factor: VertexSet) -> str:
        sub = graph_core.induced_subgraph(self.graph, factor)
        if not sub.edges:
            return self._group_name(factor, '∗')
        return "⟨" + ",".join(self.graph.sort(factor)) + "⟩"

    def structure_report(self, meta: Optional[Mapping[str, VertexGroupMeta]] = None) -> StructureReport:
        """Aut ≅ Hom(⊕⟨Γi⟩ → Z(⟨Γ0⟩)) ⋊ (Aut(⟨Γ0⟩) ⊕ [(⊕Aut(⟨Γi⟩)) ⋊ S])."""
        meta = self._meta(meta)
        for v in self.graph.vertices:
            flag = meta[v].is_graphically_irreducible
            if flag is None:
                raise MissingMetadataError('is_graphically_irreducible', v)
            if not flag:
                raise PreconditionError('structure_report', f"G_{v} is graphically reducible, simplify first")
        decomposition = graph_core.join_decomposition(self.graph)
        clique, factors = decomposition.clique_part, decomposition.factors
        names = [self._factor_name(f) for f in factors]
        labels = {v: self.presentation.group(v).label() for v in self.graph.vertices}
        hashes = [graph_core.factor_hash(self.graph, f, labels) for f in factors]
        permuted = len(set(hashes)) < len(hashes)

        summands = []
        if clique:
            summands.append(f"Aut({self._group_name(clique, '⊕')})")
        if factors:
            auts = " ⊕ ".join(f"Aut({name})" for name in names)
            if permuted:
                auts = f"({auts}) ⋊ S"
            summands.append(auts)
        core = " ⊕ ".join(summands)
        if clique and factors:
            hom = f"Hom({' ⊕ '.join(names)} → {self._group_name(clique, '⊕')})"
            formula = f"{hom} ⋊ ({core})"
        else:
            formula = core
        flags = [FLAG_DIHEDRAL if self.is_z2_pair(f) else FLAG_ACYL for f in factors]
        logger.debug("Structure formula: %s", formula)
        return StructureReport(decomposition, formula, flags, permuted)

    # ------------------------------------------------------------------
    # verdicts

    def acyl_verdict(self, target: str, meta: Optional[Mapping[str, VertexGroupMeta]] = None) -> AcylVerdict:
        if target not in TARGETS:
            raise PreconditionError('acyl_verdict', f"unknown target '{target}', expected one of {TARGETS}")
        meta = self._meta(meta)
        decomposition = graph_core.join_decomposition(self.graph)
        clique, factors = decomposition.clique_part, decomposition.factors
        one_factor = len(factors) == 1
        pair = one_factor and self.is_z2_pair(factors[0])
        single = Condition('n = 1 and Γ1 is not a pair of isolated ℤ2 vertices', one_factor and not pair,
                           f"n = {len(factors)}")

        if target == TARGET_RAAG:
            conditions = [
                Condition('all vertex groups infinite cyclic', self.presentation.is_raag()),
                Condition('Γ is not a join', not graph_core.is_join(self.graph)),
                Condition('Γ has at least two vertices', len(self.graph.vertices) >= 2),
            ]
            if not conditions[0].passed:
                return AcylVerdict(target, ANSWER_UNKNOWN, conditions)
            return AcylVerdict(target, _answer(_all(c.passed for c in conditions[1:])), conditions)

        if target == TARGET_RACG:
            conditions = [
                Condition('all vertex groups finite', self.presentation.is_finite_vertex_groups()),
                single,
            ]
            if not conditions[0].passed:
                return AcylVerdict(target, ANSWER_UNKNOWN, conditions)
            if pair and not clique:
                return AcylVerdict(target, ANSWER_DIHEDRAL, conditions)
            return AcylVerdict(target, _answer(single.passed), conditions)

        clique_finite = Condition('G_u finite on Γ0', _all(meta[v].is_finite for v in clique))
        if target == TARGET_GROUP:
            conditions = [clique_finite, single]
            return AcylVerdict(target, _answer(_all(c.passed for c in conditions)), conditions)

        not_clique = Condition('Γ is not a clique', bool(factors))
        irreducible = self._irreducibility_condition(meta)
        abelianisation = Condition(
            'G_u has finite abelianisation on Γ1..Γn',
            _all(meta[v].has_finite_abelianization for f in factors for v in f))
        aut_finite = Condition('Aut(⟨Γ0⟩) finite', self.clique_aut_finite(meta, clique))
        conditions = [not_clique, irreducible, clique_finite, single, abelianisation, aut_finite]
        if not not_clique.passed or irreducible.passed is not True:
            return AcylVerdict(target, ANSWER_UNKNOWN, conditions)
        if pair and not clique:
            return AcylVerdict(target, ANSWER_DIHEDRAL, conditions)
        first = _all([clique_finite.passed, single.passed])
        second = _all([abelianisation.passed, aut_finite.passed, single.passed])
        return AcylVerdict(target, _answer(_any([first, second])), conditions)

    def extension_verdict(self, kernel_finite: Optional[bool],
                          meta: Optional[Mapping[str, VertexGroupMeta]] = None) -> AcylVerdict:
        """Γ𝒢 ⋊_φ H is acylindrically hyperbolic iff ⟨Γ0⟩ is finite, n = 1 without a ℤ2 pair
        and ker(H → Out) is finite.
        """
        meta = self._meta(meta)
        decomposition = graph_core.join_decomposition(self.graph)
        factors = decomposition.factors
        one_factor = len(factors) == 1
        conditions = [
            Condition('Γ is not a clique', bool(factors)),
            self._irreducibility_condition(meta),
            Condition('G_u finite on Γ0', _all(meta[v].is_finite for v in decomposition.clique_part)),
            Condition('n = 1 and Γ1 is not a pair of isolated ℤ2 vertices',
                      one_factor and not self.is_z2_pair(factors[0]), f"n = {len(factors)}"),
            Condition('kernel of H → Out(Γ𝒢) finite', kernel_finite),
        ]
        if not conditions[0].passed:
            return AcylVerdict('extension', ANSWER_UNKNOWN, conditions)
        return AcylVerdict('extension', _answer(_all(c.passed for c in conditions[2:])), conditions)

    def _vastness(self, statement: str, meta) -> VastnessReport:
        factors = graph_core.join_decomposition(self.graph).factors
        excluded = all(self.is_z2_pair(f) for f in factors)
        conditions = [
            self._irreducibility_condition(meta),
            Condition('Γ is not a join of a clique with pairs of isolated ℤ2 vertices', not excluded),
        ]
        value = _all(c.passed for c in conditions) or None
        return VastnessReport(statement, value, value, value, conditions)

    def vastness_report(self, meta: Optional[Mapping[str, VertexGroupMeta]] = None) -> VastnessReport:
        return self._vastness('Aut(Γ𝒢)', self._meta(meta))

    def cyclic_extension_vastness(self, meta: Optional[Mapping[str, VertexGroupMeta]] = None) -> VastnessReport:
        return self._vastness('Γ𝒢 ⋊ ℤ', self._meta(meta))

    # ------------------------------------------------------------------
    # generating sets

    def build_noncommuting_genset(self) -> List[Word]:
        """Pairwise non-commuting generators with maximal centralisers."""
        if len(self.graph.vertices) < 2:
            raise PreconditionError('build_noncommuting_genset', "graph needs at least two vertices")
        if graph_core.is_join(self.graph):
            raise PreconditionError('build_noncommuting_genset', "graph is a join")
        components = sorted(
            (frozenset(c) for c in nx.connected_components(self.graph.to_networkx())),
            key=lambda c: min(self.graph.index(v) for v in c),
        )
        if len(components) > 1:
            return self._free_product_genset(components[0], frozenset().union(*components[1:]))
        return self._connected_genset()

    def _letter(self, v: str) -> Word:
        return Word((self.engine.generator_syllables(v)[0],))

    def _vertex_elements(self, vertices: Iterable[str]) -> List[Word]:
        return [Word((Syllable(v, e),))
                for v in self.graph.sort(vertices) for e in self.presentation.group(v).elements(self.engine.span)]

    def _connected_genset(self) -> List[Word]:
        opposite = graph_core.opposite_graph(self.graph).to_networkx()
        walks = {}
        for u in self.graph.vertices:
            alpha, omega = self._alpha_omega(u)
            walk = [alpha]
            for target in self.graph.vertices:
                if target not in walk:
                    walk.extend(nx.shortest_path(opposite, walk[-1], target)[1:])
            walk.extend(nx.shortest_path(opposite, walk[-1], omega)[1:])
            walks[u] = walk
        lengths: List[int] = []
        words = []
        for u in self.graph.vertices:
            walk = walks[u]
            omega = walk[-1]
            # round trips ω→u→ω keep the ends and add 2
            while any(abs(len(walk) - other) < 2 for other in lengths):
                walk = walk + [u, omega]
            lengths.append(len(walk))
            g_u = self.engine.reduce(self.engine.generator_syllables(v)[0] for v in walk)
            words.append(g_u)
            words.extend(self.engine.compose(g_u, s) for s in self._vertex_elements([u]))
        return words

    def _alpha_omega(self, u: str):
        """ω in link_opp(u) and α outside star_opp(u) ∪ star_opp(ω)."""
        for omega in self.graph.sort(self.graph.vertex_set - self.graph.neighbours(u) - {u}):
            for alpha in self.graph.sort(self.graph.neighbours(u) & self.graph.neighbours(omega)):
                return alpha, omega
        raise PreconditionError('build_noncommuting_genset', f"no α, ω for vertex {u}; graph is a join")

    def _free_product_genset(self, a_part: VertexSet, b_part: VertexSet) -> List[Word]:
        def tiny(part: VertexSet) -> bool:
            return len(part) == 1 and self.presentation.group(next(iter(part))).is_order_two()

        if tiny(a_part) and tiny(b_part):
            return [self._letter(v) for v in self.graph.sort(a_part | b_part)]
        if len(a_part) == 1 and self.presentation.group(next(iter(a_part))).is_finite \
                and self.presentation.group(next(iter(a_part))).order < 3:
            a_part, b_part = b_part, a_part
        first = self.graph.sort(a_part)[0]
        a1 = self._letter(first)
        square = self.engine.power(a1, 2)
        if not square.is_identity and square != a1:
            a2 = square
        else:
            a2 = self._letter(self.graph.sort(a_part)[1])
        b = self._letter(self.graph.sort(b_part)[0])
        g = self.engine.compose(a1, b, a2)
        h = self.engine.compose(a1, b, a1, b, a2, b)
        words = [g] + [self.engine.compose(g, r) for r in self._vertex_elements(b_part)]
        words += [h] + [self.engine.compose(h, s) for s in self._vertex_elements(a_part)]
        return words

    def verify_genset(self, words: List[Word]) -> GensetCheck:
        failures = []
        for x, y in combinations(words, 2):
            if self.engine.commutator(x, y).is_identity:
                failures.append(f"{self.engine.format_word(x)} commutes with {self.engine.format_word(y)}")
        noncommuting = not failures
        irreducible = True
        primitive = True
        for w in words:
            if not self.engine.support_classify(w).is_irreducible:
                irreducible = False
                failures.append(f"{self.engine.format_word(w)} is reducible")
                continue
            try:
                if self.engine.primitive_root(w).exponent != 1:
                    primitive = False
                    failures.append(f"{self.engine.format_word(w)} is a proper power")
            except RootNotFoundError:
                pass
        return GensetCheck(noncommuting, irreducible, primitive, tuple(failures))

    # ------------------------------------------------------------------
    # endomorphisms and invariants

    def check_endomorphism(self, images: Mapping[Syllable, Word]) -> EndomorphismCheck:
        """Whether generator images respect every vertex-group relation and every edge commutation."""
        violations = []
        extended: Dict[Syllable, Word] = {}
        for v in self.graph.vertices:
            group = self.presentation.group(v)
            generators = self.engine.generator_syllables(v)
            missing = [s for s in generators if s not in images]
            if missing:
                violations.extend(f"missing image for {self.engine.format_syllable(s)}" for s in missing)
                continue
            if not group.is_finite:
                extended[generators[0]] = images[generators[0]]
                continue
            values = {group.identity: IDENTITY}
            queue = deque([group.identity])
            broken = False
            while queue and not broken:
                k = queue.popleft()
                for s in generators:
                    target = group.multiply(k, s.element)
                    image = self.engine.compose(values[k], images[s])
                    if target not in values:
                        values[target] = image
                        queue.append(target)
                    elif values[target] != image:
                        violations.append(f"relation of G_{v} fails at element {target}")
                        broken = True
                        break
            for s in generators:
                extended[s] = images[s]
        for u, v in self.graph.edge_list():
            for s in self.engine.generator_syllables(u):
                for t in self.engine.generator_syllables(v):
                    if s in extended and t in extended and not self.engine.commutes(extended[s], extended[t]):
                        violations.append(f"commutation across edge ({u}, {v})")
        return EndomorphismCheck(tuple(violations))

    def invariant_bounds_report(self, meta: Optional[Mapping[str, VertexGroupMeta]] = None) -> InvariantBounds:
        """asdim ≤ Σ max(1, asdim G_u) and δ ≺ ∏ max(n, δ_{G_u})."""
        meta = self._meta(meta)
        asdims = [meta[v].asdim for v in self.graph.vertices]
        asdim = None if any(a is None for a in asdims) else sum(max(1, a) for a in asdims)
        dehns = [meta[v].dehn for v in self.graph.vertices]
        dehn = None
        if all(d is not None for d in dehns):
            product = sympy.Mul(*[sympy.Max(N, sympy.sympify(d, locals={'n': N})) for d in dehns])
            dehn = str(sympy.simplify(product))
        return InvariantBounds(asdim, dehn)
