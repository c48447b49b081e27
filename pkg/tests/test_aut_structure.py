import pytest

from core.aut_structure import TARGET_AUT, TARGET_GROUP, TARGET_RAAG, TARGET_RACG
from models.errors import MissingMetadataError, PreconditionError
from models.presentation import VertexGroupMeta
from models.report import ANSWER_DIHEDRAL, ANSWER_NO, ANSWER_UNKNOWN, ANSWER_YES, FLAG_ACYL, FLAG_DIHEDRAL
from models.word import Word


def identity_images(toolkit):
    engine = toolkit.engine
    return {s: Word((s,)) for v in engine.graph.vertices for s in engine.generator_syllables(v)}


class TestMetadata:
    def test_derived_for_cyclic_groups(self, z_z3z2):
        meta = z_z3z2.aut.derive_meta()
        assert meta['z'].is_finite is False
        assert meta['p'].is_finite is True
        assert meta['p'].is_graphically_irreducible is True
        assert meta['z'].asdim == 1 and meta['p'].asdim == 0

    def test_z2_pair(self, dinf, c5):
        assert dinf.aut.is_z2_pair(frozenset({'s', 't'}))
        assert not c5.aut.is_z2_pair(frozenset({'v1', 'v3', 'v5'}))

    def test_clique_aut_finite(self, z_z3z2):
        assert z_z3z2.aut.clique_aut_finite() is True
        assert z_z3z2.aut.clique_aut_finite(clique=frozenset({'z', 'p'})) is True


class TestStructure:
    def test_clique_and_free_factor(self, z_z3z2):
        report = z_z3z2.aut.structure_report()
        assert report.formula == "Hom(Z3 ∗ Z2 → Z) ⋊ (Aut(Z) ⊕ Aut(Z3 ∗ Z2))"
        assert report.n == 1
        assert report.factor_flags == [FLAG_ACYL]

    def test_pentagon(self, c5):
        report = c5.aut.structure_report()
        assert report.formula == "Aut(⟨v1,v2,v3,v4,v5⟩)"
        assert report.n == 1
        assert not report.permuted_factors

    def test_dihedral_flag(self, dinf):
        assert dinf.aut.structure_report().factor_flags == [FLAG_DIHEDRAL]

    def test_missing_metadata(self, c5):
        meta = c5.aut.derive_meta()
        meta['v3'] = VertexGroupMeta()
        with pytest.raises(MissingMetadataError):
            c5.aut.structure_report(meta)


class TestVerdicts:
    @pytest.mark.parametrize('name,target,answer', [
        ('p4', TARGET_RAAG, ANSWER_YES),
        ('p3', TARGET_RAAG, ANSWER_NO),
        ('c5', TARGET_RACG, ANSWER_YES),
        ('dinf', TARGET_RACG, ANSWER_DIHEDRAL),
        ('c5', TARGET_GROUP, ANSWER_YES),
        ('c5', TARGET_AUT, ANSWER_YES),
        ('z_z3z2', TARGET_AUT, ANSWER_YES),
        ('p3', TARGET_GROUP, ANSWER_NO),
        ('c5', TARGET_RAAG, ANSWER_UNKNOWN),
    ])
    def test_acyl_verdicts(self, toolkits, name, target, answer):
        verdict = toolkits[name].aut.acyl_verdict(target)
        assert verdict.answer == answer
        assert verdict.conditions

    def test_unknown_target(self, c5):
        with pytest.raises(PreconditionError):
            c5.aut.acyl_verdict('monoid')

    @pytest.mark.parametrize('kernel_finite,answer', [(True, ANSWER_YES), (False, ANSWER_NO), (None, ANSWER_UNKNOWN)])
    def test_extension(self, p4, kernel_finite, answer):
        assert p4.aut.extension_verdict(kernel_finite).answer == answer

    def test_extension_with_infinite_clique(self, p3):
        assert p3.aut.extension_verdict(True).answer == ANSWER_NO

    def test_vastness(self, p4, c5, dinf):
        assert p4.aut.vastness_report().sq_universal is True
        assert c5.aut.cyclic_extension_vastness().not_boundedly_generated is True
        assert dinf.aut.vastness_report().many_quasimorphisms is None

    def test_invariant_bounds(self, c5, p4):
        bounds = c5.aut.invariant_bounds_report()
        assert bounds.asdim == 5
        assert bounds.dehn == 'n**5'
        assert p4.aut.invariant_bounds_report().asdim == 4


class TestGeneratingSets:
    def test_pentagon(self, c5):
        words = c5.aut.build_noncommuting_genset()
        assert len(words) == 10
        assert c5.aut.verify_genset(words).passed

    def test_free_product(self, fp):
        words = fp.aut.build_noncommuting_genset()
        assert len(words) == 7
        assert fp.engine.format_word(words[0]) == 'u v u^2'
        assert fp.engine.format_word(words[3]) == 'u v u v u^2 v'
        assert fp.aut.verify_genset(words).passed

    def test_join_is_rejected(self, p3):
        with pytest.raises(PreconditionError):
            p3.aut.build_noncommuting_genset()

    def test_commuting_pair_fails(self, p4):
        check = p4.aut.verify_genset([p4.word('a'), p4.word('b')])
        assert not check.noncommuting
        assert not check.passed


class TestEndomorphisms:
    def test_identity(self, c5):
        assert c5.aut.check_endomorphism(identity_images(c5)).valid

    def test_broken_commutation(self, c5):
        images = identity_images(c5)
        (s,) = c5.engine.generator_syllables('v1')
        images[s] = c5.word('v2')
        check = c5.aut.check_endomorphism(images)
        assert not check.valid
        assert any('commutation' in v for v in check.violations)

    def test_partial_conjugation(self, c5):
        images = identity_images(c5)
        for v in ('v3', 'v4'):
            (s,) = c5.engine.generator_syllables(v)
            images[s] = c5.word(f"v1 {v} v1")
        assert c5.aut.check_endomorphism(images).valid

    def test_relation_of_finite_factor(self, fp):
        images = identity_images(fp)
        (s,) = fp.engine.generator_syllables('u')
        images[s] = fp.word('v')
        check = fp.aut.check_endomorphism(images)
        assert any('relation of G_u' in v for v in check.violations)

    def test_missing_image(self, c5):
        images = identity_images(c5)
        del images[c5.engine.generator_syllables('v2')[0]]
        assert not c5.aut.check_endomorphism(images).valid
