from django.test import SimpleTestCase
from hypothesis import given, settings, strategies as st

from .cartan_roots import (
    chevalley_basis,
    chevalley_constants,
    chevalley_index,
    find_cartan,
    identify_type,
    rebase,
    root_decomposition,
    simple_system,
)
from .dsl import parse_field
from .errors import LieInternalError, NotSemisimple, UnsupportedType
from .liepresent import LiePresentation, closure_check
from .utils.scalars import is_integer, scalar


def presentation(texts, dim):
    return closure_check([parse_field(t, dim) for t in texts])


SL2 = ('Dx', 'x*Dx', 'x^2*Dx')
SL2_SQUARED = ('Dx', 'x*Dx', 'x^2*Dx', 'Dy', 'y*Dy', 'y^2*Dy')
SL3 = ('Dx', 'Dy', 'x*Dx', 'y*Dx', 'x*Dy', 'y*Dy',
       'x^2*Dx + x*y*Dy', 'x*y*Dx + y^2*Dy')


class CartanSubalgebraTests(SimpleTestCase):
    def test_sl2_prefers_the_toral_element(self):
        C = find_cartan(presentation(SL2, 1))
        self.assertEqual(C.rank, 1)
        self.assertEqual(C.csa.fields(), [parse_field('x*Dx', 1)])

    def test_rank_of_products(self):
        self.assertEqual(find_cartan(presentation(SL2_SQUARED, 2)).rank, 2)

    def test_seed_does_not_change_the_rank(self):
        L = presentation(SL3, 2)
        self.assertEqual({find_cartan(L, seed=seed).rank for seed in range(4)}, {2})

    def test_solvable_algebra_is_its_own_cartan(self):
        # the Heisenberg algebra is nilpotent
        L = presentation(('Dx', 'x*Dy', 'Dy'), 2)
        self.assertEqual(find_cartan(L).rank, 3)


class RootDecompositionTests(SimpleTestCase):
    def test_sl2_roots(self):
        L = presentation(SL2, 1)
        R = root_decomposition(L)
        self.assertEqual(R.roots, ((scalar(1),), (scalar(-1),)))
        # [x Dx, x^2 Dx] = x^2 Dx, so x^2 Dx spans the positive root space
        self.assertEqual(R.root_spaces[(scalar(1),)].fields(), [parse_field('x^2*Dx', 1)])
        self.assertEqual(R.zero_space.dim, 1)

    def test_sl3_has_six_roots(self):
        R = root_decomposition(presentation(SL3, 2))
        self.assertEqual(len(R.roots), 6)
        self.assertEqual(len(R.positive_roots()), 3)
        self.assertEqual(len(simple_system(R).simple), 2)

    def test_not_semisimple(self):
        with self.assertRaises(NotSemisimple):
            root_decomposition(presentation(('Dx', 'x*Dx'), 1))


class TypeIdentificationTests(SimpleTestCase):
    def test_types(self):
        self.assertEqual(str(identify_type(presentation(SL2, 1))), 'A1')
        self.assertEqual(str(identify_type(presentation(SL2_SQUARED, 2))), 'A1xA1')
        self.assertEqual(str(identify_type(presentation(SL3, 2))), 'A2')

    def test_exponential_realization(self):
        L = presentation(('Dx', 'exp(x)*Dx', 'exp(-x)*Dx'), 1)
        self.assertEqual(str(identify_type(L)), 'A1')

    @settings(max_examples=20, deadline=None)
    @given(
        st.sampled_from((
            (SL2, 1, 'A1'),
            (SL2_SQUARED, 2, 'A1xA1'),
            (SL3, 2, 'A2'),
            (SL2_SQUARED + ('Dz', 'z*Dz', 'z^2*Dz'), 3, 'A1xA1xA1'),
        )).flatmap(
            lambda case: st.tuples(
                st.just(case),
                st.permutations(range(len(case[0]))),
                st.lists(st.integers(1, 4).map(lambda n: n if n % 2 else -n), min_size=len(case[0]), max_size=len(case[0])),
            )
        )
    )
    def test_type_ignores_basis_order_and_scale(self, drawn):
        (texts, dim, label), order, scales = drawn
        basis = [parse_field(texts[k], dim).scale(c) for k, c in zip(order, scales)]
        self.assertEqual(str(identify_type(closure_check(basis))), label)


class ChevalleyBasisTests(SimpleTestCase):
    def test_sl2_relations(self):
        L = chevalley_basis(presentation(SL2, 1))
        self.assertEqual(L.labels, ('h1', 'e(1)', 'f(1)'))
        self.assertEqual(L.table[(0, 1)], {1: scalar(2)})
        self.assertEqual(L.table[(0, 2)], {2: scalar(-2)})
        self.assertEqual(L.table[(1, 2)], {0: scalar(1)})

    def test_basis_fields_are_kept(self):
        L = chevalley_basis(presentation(SL2, 1))
        self.assertIsInstance(L, LiePresentation)
        self.assertEqual(len(L.basis), 3)

    def test_realizations_share_constants(self):
        polynomial = chevalley_basis(presentation(SL2, 1))
        exponential = chevalley_basis(presentation(('Dx', 'exp(x)*Dx', 'exp(-x)*Dx'), 1))
        self.assertEqual(polynomial.sc, exponential.sc)

    def test_sl3_constants_are_integers(self):
        L = chevalley_basis(presentation(SL3, 2))
        self.assertEqual(L.dim, 8)
        self.assertTrue(all(is_integer(c) for row in L.table.values() for c in row.values()))

    def test_rebase_rejects_non_basis(self):
        L = presentation(SL2, 1)
        with self.assertRaises(LieInternalError):
            rebase(L, [L.basis_vector(0), L.basis_vector(0), L.basis_vector(1)])


class ChevalleyConstantsTests(SimpleTestCase):
    def test_dimensions(self):
        for label, dim in (('A1', 3), ('A2', 8), ('B2', 10), ('A1xA1', 6)):
            L = chevalley_constants(label)
            self.assertEqual(L.dim, dim, label)
            self.assertTrue(L.check_axioms())

    def test_g2(self):
        L = chevalley_constants('G2')
        self.assertEqual(L.dim, 14)
        cartan, roots = chevalley_index(L)
        self.assertEqual(len(cartan), 2)
        self.assertEqual(len(roots), 12)
        self.assertIn((3, 2), roots)
        self.assertIn((-3, -2), roots)
        self.assertTrue(all(is_integer(c) for row in L.table.values() for c in row.values()))

    def test_b2_type_round_trip(self):
        self.assertEqual(str(identify_type(chevalley_constants('B2'))), 'B2')

    def test_unsupported(self):
        for label in ('E6', 'D4', 'A4'):
            with self.assertRaises(UnsupportedType):
                chevalley_constants(label)

    def test_index_of_sl2(self):
        cartan, roots = chevalley_index(chevalley_constants('A1'))
        self.assertEqual(cartan, [0])
        self.assertEqual(roots, {(1,): 1, (-1,): 2})
