from django.test import SimpleTestCase

from .dsl import format_field, parse_field
from .errors import Infeasible, LieToolkitError, Truncation
from .linalg import RowSpan
from .liepresent import closure_check
from .modsearch import (
    BorelChoice,
    Relation,
    ansatz_space,
    borel_from_roots,
    centralizer_in_ansatz,
    check_stable,
    extend_by_relations,
    highest_weight_vectors,
    staged_extension_protocol,
)
from .serializers import SolutionFamilySerializer
from .utils.scalars import scalar


def F(text, dim=1):
    return parse_field(text, dim)


def presentation(texts, dim):
    return closure_check([F(t, dim) for t in texts])


PLANE_SL3 = ('Dx', 'Dy', 'x*Dx', 'y*Dx', 'x*Dy', 'y*Dy', 'x^2*Dx + x*y*Dy', 'x*y*Dx + y^2*Dy')


class AnsatzSpaceTests(SimpleTestCase):
    def test_sizes(self):
        self.assertEqual(ansatz_space(1, 2).size, 3)
        self.assertEqual(ansatz_space(2, 1).size, 6)
        self.assertEqual(ansatz_space(1, 1, [(0,), (1,)]).size, 4)

    def test_default_degree(self):
        self.assertEqual(ansatz_space(1).degree, 3)

    def test_describe(self):
        self.assertEqual(ansatz_space(1, 2).describe(), {'d': 2, 'lambda_set': [['0']]})

    def test_membership(self):
        A = ansatz_space(1, 2, [(0,), (1,)])
        self.assertTrue(A.contains(F('x*exp(x)*Dx + x^2*Dx')))
        self.assertFalse(A.contains(F('x^3*Dx')))
        self.assertEqual(A.field(A.coordinates(F('exp(x)*Dx'))), F('exp(x)*Dx'))
        with self.assertRaises(Truncation):
            A.coordinates(F('exp(2*x)*Dx'))


class HighestWeightTests(SimpleTestCase):
    def test_line_has_no_new_vectors(self):
        sl2 = presentation(['Dx', 'x*Dx', 'x^2*Dx'], 1)
        borel = BorelChoice((F('-2*x*Dx'),), (F('Dx'),))
        self.assertEqual(highest_weight_vectors(sl2, borel, ansatz_space(1, 6)), [])

    def test_vectors_transverse_to_the_action(self):
        sl2 = presentation(['Dx', 'x*Dx', 'x^2*Dx'], 2)
        borel = BorelChoice((F('x*Dx', 2),), (F('Dx', 2),))
        found = highest_weight_vectors(sl2, borel, ansatz_space(2, 1))
        self.assertEqual([format_field(w.field) for w in found], ['y*Dx', 'y*Dy', 'Dy'])
        self.assertEqual([w.weight for w in found], [(scalar(-1),), (scalar(0),), (scalar(0),)])

    def test_unstable_ansatz(self):
        sl2 = presentation(['Dx', 'x*Dx', 'x^2*Dx'], 1)
        borel = BorelChoice((F('x^3*Dx'),), ())
        with self.assertRaises(Truncation):
            highest_weight_vectors(sl2, borel, ansatz_space(1, 2))

    def test_borel_from_roots(self):
        borel = borel_from_roots(presentation(['Dx', 'x*Dx', 'x^2*Dx'], 1))
        self.assertEqual(borel.cartan, (F('x*Dx'),))
        self.assertEqual(borel.positives, (F('x^2*Dx'),))

    def test_borel_choice_follows_the_ansatz(self):
        sl2 = presentation(['Dx', 'x*Dx', 'x^2*Dx'], 1)
        borel = borel_from_roots(sl2, A=ansatz_space(1, 1))
        self.assertEqual(borel.cartan, (F('x*Dx'),))
        self.assertEqual(borel.positives, (F('Dx'),))

    def test_no_borel_keeps_the_ansatz(self):
        sl2 = presentation(['Dx', 'exp(x)*Dx', 'exp(-x)*Dx'], 1)
        with self.assertRaises(Truncation):
            borel_from_roots(sl2, A=ansatz_space(1, 1))

    def test_plane_sl3_has_no_highest_weight_vectors(self):
        sl3 = presentation(PLANE_SL3, 2)
        for degree in range(1, 5):
            A = ansatz_space(2, degree)
            with self.subTest(degree=degree):
                borel = borel_from_roots(sl3, A=A)
                check_stable(A, borel.cartan + borel.positives)
                self.assertEqual(highest_weight_vectors(sl3, borel, A), [])

    def test_plane_sl3_lex_borel_truncates(self):
        sl3 = presentation(PLANE_SL3, 2)
        with self.assertRaises(Truncation):
            highest_weight_vectors(sl3, borel_from_roots(sl3), ansatz_space(2, 2))

    def test_plane_sl3_with_a_given_borel(self):
        sl3 = presentation(PLANE_SL3, 2)
        borel = BorelChoice((F('x*Dx', 2), F('y*Dy', 2)), (F('Dx', 2), F('x*Dy', 2)))
        self.assertEqual(highest_weight_vectors(sl3, borel, ansatz_space(2, 3)), [])

    def test_vectors_survive_a_larger_ansatz(self):
        sl2 = presentation(['Dx', 'x*Dx', 'x^2*Dx'], 2)
        borel = BorelChoice((F('x*Dx', 2),), (F('Dx', 2),))
        small = highest_weight_vectors(sl2, borel, ansatz_space(2, 1))
        large_space = ansatz_space(2, 2)
        large = highest_weight_vectors(sl2, borel, large_space)
        modulo = [large_space.coordinates(v) for v in sl2.basis]
        for w in small:
            same_weight = [large_space.coordinates(u.field) for u in large if u.weight == w.weight]
            self.assertTrue(same_weight)
            span = RowSpan(same_weight + modulo, large_space.size)
            self.assertTrue(span.contains(large_space.coordinates(w.field)))


class RelationSolverTests(SimpleTestCase):
    def test_centralizer(self):
        self.assertEqual(len(centralizer_in_ansatz([F('Dx', 2)], ansatz_space(2, 1))), 4)
        self.assertEqual(centralizer_in_ansatz([F('Dx'), F('x*Dx')], ansatz_space(1, 3)), [])

    def test_eigen_relation(self):
        family = extend_by_relations({'h': F('x*Dx')}, [Relation('h', {}, 2)], ansatz_space(1, 3))
        self.assertTrue(family.particular.is_zero())
        self.assertEqual(family.directions, (F('x^3*Dx'),))

    def test_free_parameter(self):
        family = extend_by_relations({'e': F('Dx')}, [Relation('e', {'e': None})], ansatz_space(1, 2))
        self.assertEqual(len(family.directions), 2)
        self.assertIn((0, 'e'), family.parameters)

    def test_family_serializes_with_parameters(self):
        family = extend_by_relations({'e': F('Dx')}, [Relation('e', {'e': None})], ansatz_space(1, 2))
        data = SolutionFamilySerializer(family).data
        self.assertEqual(data['particular'], '0')
        self.assertEqual(len(data['directions']), 2)
        self.assertEqual(data['parameters'], [{'relation': 0, 'label': 'e', 'value': '0'}])

    def test_fixed_expansion(self):
        family = extend_by_relations({'e': F('Dx')}, [Relation('e', {'e': 1})], ansatz_space(1, 2))
        self.assertEqual(F('Dx').bracket(family.particular), F('Dx'))
        member = family.member([scalar(5)])
        self.assertEqual(F('Dx').bracket(member), F('Dx'))

    def test_first_violated_relation(self):
        relations = [Relation('h', {}, 0), Relation('e', {'e': 1})]
        with self.assertRaises(Infeasible) as ctx:
            extend_by_relations({'e': F('Dx'), 'h': F('x*Dx')}, relations, ansatz_space(1, 0))
        self.assertEqual(ctx.exception.relation_index, 1)
        self.assertEqual(ctx.exception.residual, F('Dx'))

    def test_unknown_label(self):
        with self.assertRaises(LieToolkitError):
            extend_by_relations({'e': F('Dx')}, [Relation('f')], ansatz_space(1, 1))


class StagedExtensionTests(SimpleTestCase):
    def test_b2_does_not_extend_sl2_squared_on_the_plane(self):
        S = presentation(['Dx', 'x*Dx', 'x^2*Dx', 'Dy', 'y*Dy', 'y^2*Dy'], 2)
        outcome = staged_extension_protocol(S, 'B2', A=ansatz_space(2, 3))
        self.assertFalse(outcome.feasible)
        self.assertIsNone(outcome.presentation)
        self.assertEqual(outcome.report.ansatz.degree, 3)
        self.assertEqual(outcome.report.stage, 1)
        self.assertEqual(outcome.report.unknown_root, (0, 1))
        self.assertTrue(outcome.report.exhaustive)
        self.assertEqual(outcome.stages, ())

    def test_same_type_is_immediate(self):
        S = presentation(['Dx', 'x*Dx', 'x^2*Dx'], 1)
        outcome = staged_extension_protocol(S, 'A1')
        self.assertTrue(outcome.feasible)
        self.assertIs(outcome.presentation, S)
        self.assertEqual(outcome.stages, ())

    def test_rank_mismatch(self):
        S = presentation(['Dx', 'x*Dx', 'x^2*Dx'], 1)
        with self.assertRaises(LieToolkitError):
            staged_extension_protocol(S, 'G2')

    def test_dependent_embedding(self):
        S = presentation(['Dx', 'x*Dx', 'x^2*Dx', 'Dy', 'y*Dy', 'y^2*Dy'], 2)
        with self.assertRaises(LieToolkitError):
            staged_extension_protocol(S, 'B2', embedding=((1, 0), (2, 0)), A=ansatz_space(2, 1))
