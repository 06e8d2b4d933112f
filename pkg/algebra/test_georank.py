from django.test import SimpleTestCase
from hypothesis import given, settings, strategies as st

from .dsl import parse_field, parse_function
from .errors import NoExactWitness, NotSemisimple
from .georank import geometric_rank, rank_at_point, rank_equality_report, witness_point
from .liepresent import closure_check
from .utils.scalars import scalar
from .vfields import combine


def fields(texts, dim):
    return [parse_field(t, dim) for t in texts]


SL2_DIAGONAL = ('Dx + Dy', 'x*Dx + y*Dy', 'x^2*Dx + y^2*Dy')


class GeometricRankTests(SimpleTestCase):
    def test_line(self):
        result = geometric_rank(fields(['Dx', 'x*Dx', 'x^2*Dx'], 1))
        self.assertEqual(result.rank, 1)
        self.assertEqual(result.certificate, parse_function('1', 1))

    def test_diagonal_sl2_has_rank_two(self):
        result = geometric_rank(closure_check(fields(SL2_DIAGONAL, 2)))
        self.assertEqual(result.rank, 2)
        self.assertEqual((result.rows, result.cols), ((0, 1), (0, 1)))
        self.assertEqual(result.certificate, parse_function('y - x', 2))

    def test_rank_is_seed_independent(self):
        L = fields(SL2_DIAGONAL, 2)
        self.assertEqual({geometric_rank(L, seed=seed).rank for seed in range(5)}, {2})

    def test_rank_below_dimension(self):
        self.assertEqual(geometric_rank(fields(['Dx', 'x*Dy', 'Dy'], 3)).rank, 2)

    def test_exponential_fields(self):
        result = geometric_rank(fields(['Dx', 'exp(x)*Dx', 'exp(-x)*Dx'], 1))
        self.assertEqual(result.rank, 1)

    def test_empty_list(self):
        self.assertEqual(geometric_rank([]).rank, 0)

    @settings(max_examples=40, deadline=None)
    @given(
        st.sampled_from((
            (('Dx', 'x*Dx', 'x^2*Dx'), 1, 1),
            (SL2_DIAGONAL, 2, 2),
            (('Dx', 'x*Dy', 'Dy'), 3, 2),
            (('Dx', 'Dy', 'x*Dz', 'y*Dz', 'Dz'), 3, 3),
        )).flatmap(
            lambda case: st.tuples(
                st.just(case),
                st.lists(st.integers(-2, 2), min_size=len(case[0]) ** 2, max_size=len(case[0]) ** 2),
            )
        )
    )
    def test_rank_survives_a_change_of_basis(self, drawn):
        (texts, dim, rank), entries = drawn
        base = fields(texts, dim)
        n = len(base)
        # unitriangular, so the span is unchanged
        mixed = [
            combine(base, [entries[k * n + l] if l < k else int(l == k) for l in range(n)], dim)
            for k in range(n)
        ]
        self.assertEqual(geometric_rank(mixed).rank, rank)
        self.assertEqual(geometric_rank(list(reversed(mixed))).rank, rank)

    def test_rank_at_point_drops_on_the_diagonal(self):
        L = fields(SL2_DIAGONAL, 2)
        self.assertEqual(rank_at_point(L, (1, 1)), 1)
        self.assertEqual(rank_at_point(L, (0, 1)), 2)


class WitnessTests(SimpleTestCase):
    def test_first_point_in_search_order(self):
        witness = witness_point(parse_function('x*(x - 1)', 1))
        self.assertEqual(witness.point, (-1,))
        self.assertEqual(witness.value, scalar(2))
        self.assertTrue(witness.exact)

    def test_diagonal_certificate(self):
        # L1 ties are broken lexicographically on absolute coordinates
        witness = witness_point(parse_function('y - x', 2))
        self.assertEqual(witness.point, (0, 1))
        self.assertEqual(witness.value, scalar(1))

    def test_box_is_enlarged_once(self):
        f = parse_function('x*(x - 1)*(x + 1)*(x - 2)', 1)
        self.assertEqual(witness_point(f, box=1).point, (-2,))

    def test_no_witness(self):
        f = parse_function('x*(x - 1)*(x + 1)*(x - 2)*(x + 2)', 1)
        with self.assertRaises(NoExactWitness):
            witness_point(f, box=1)
        with self.assertRaises(NoExactWitness):
            witness_point(parse_function('0', 1))

    def test_exponential_witness_is_approximate(self):
        witness = witness_point(parse_function('exp(x) - 1', 1), precision=30)
        self.assertEqual(witness.point, (1,))
        self.assertFalse(witness.exact)


class RankEqualityTests(SimpleTestCase):
    def test_diagonal_sl2(self):
        report = rank_equality_report(closure_check(fields(SL2_DIAGONAL, 2)))
        self.assertTrue(report.equal)
        self.assertEqual((report.csa_dim, report.csa_geometric_rank), (1, 1))
        self.assertEqual((report.algebra_dim, report.algebra_geometric_rank), (3, 2))
        self.assertIsNotNone(report.witness)

    def test_linear_sl3(self):
        texts = ['x*Dx - y*Dy', 'y*Dy - z*Dz', 'y*Dx', 'z*Dx', 'z*Dy', 'x*Dy', 'x*Dz', 'y*Dz']
        report = rank_equality_report(closure_check(fields(texts, 3)))
        self.assertTrue(report.equal)
        self.assertEqual(report.csa_dim, 2)
        self.assertEqual(report.algebra_geometric_rank, 3)

    def test_requires_semisimple(self):
        with self.assertRaises(NotSemisimple):
            rank_equality_report(closure_check(fields(['Dx', 'x*Dx'], 1)))
