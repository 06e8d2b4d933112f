from django.test import SimpleTestCase
from hypothesis import given, settings, strategies as st

from .errors import DimensionMismatch, OutOfClass
from .kernel import ApproxValue, CoeffFn, ExpTerm, cf_add, cf_diff, cf_eval, cf_is_zero, cf_mul
from .utils.scalars import I_UNIT, ZERO, scalar

x = CoeffFn.variable(2, 0)
y = CoeffFn.variable(2, 1)


def polys(dim=2, max_degree=2):
    """Small polynomials with integer coefficients."""
    exponent = st.tuples(*[st.integers(0, max_degree)] * dim)
    term = st.tuples(st.integers(-3, 3), exponent)
    return st.lists(term, max_size=4).map(
        lambda terms: CoeffFn.from_terms(dim, [(c, alpha, (0,) * dim) for c, alpha in terms])
    )


DIMS = st.sampled_from((1, 2, 3))


def exp_polys(dim=2):
    lam = st.tuples(*[st.integers(-1, 1)] * dim)
    term = st.tuples(st.integers(-2, 2), st.tuples(*[st.integers(0, 1)] * dim), lam)
    return st.lists(term, max_size=3).map(lambda terms: CoeffFn.from_terms(dim, terms))


class CoeffFnCanonicalFormTests(SimpleTestCase):
    def test_zero_has_no_parts(self):
        self.assertTrue(CoeffFn.zero(2).is_zero())
        self.assertTrue((x - x).is_zero())
        self.assertEqual(x - x, 0)

    def test_like_terms_merge(self):
        f = CoeffFn.from_terms(2, [(1, (1, 0), (0, 0)), (2, (1, 0), (0, 0))])
        self.assertEqual(f, x.scale(3))

    def test_cancelling_exponentials(self):
        e = CoeffFn.exponential(2, (1, 0))
        self.assertTrue((e * x - x * e).is_zero())
        self.assertEqual(e.frequencies(), ((scalar(1), ZERO),))

    def test_degree(self):
        self.assertEqual((x * x * y + y).degree(), 3)
        self.assertEqual(CoeffFn.zero(2).degree(), -1)

    def test_dimension_mismatch(self):
        with self.assertRaises(DimensionMismatch):
            x + CoeffFn.variable(3, 0)

    def test_as_poly_rejects_exponentials(self):
        with self.assertRaises(OutOfClass):
            CoeffFn.exponential(2, (1, 0)).as_poly()

    def test_immutable(self):
        with self.assertRaises(AttributeError):
            x.dim = 3

    def test_zero_term_is_rejected(self):
        with self.assertRaises(ValueError):
            ExpTerm(ZERO, (1, 0), (ZERO, ZERO))


class CoeffFnCalculusTests(SimpleTestCase):
    def test_diff_polynomial(self):
        self.assertEqual((x * x * y).diff(0), (x * y).scale(2))
        self.assertEqual((x * x * y).diff(1), x * x)

    def test_diff_exponential(self):
        e = CoeffFn.exponential(2, (2, 0))
        self.assertEqual(e.diff(0), e.scale(2))
        self.assertTrue(e.diff(1).is_zero())
        # d/dx (x e^x) = e^x + x e^x
        f = CoeffFn.exponential(2, (1, 0))
        self.assertEqual((x * f).diff(0), f + x * f)

    def test_diff_bad_axis(self):
        with self.assertRaises(IndexError):
            x.diff(2)

    def test_evaluate_exact(self):
        f = x * x + CoeffFn.constant(2, 1)
        self.assertEqual(f.evaluate((I_UNIT, 0)), ZERO)
        self.assertEqual(f.evaluate((2, 5)), scalar(5))

    def test_evaluate_exponential_is_approximate(self):
        value = CoeffFn.exponential(2, (1, 0)).evaluate((0, 0), precision=30)
        self.assertIsInstance(value, ApproxValue)
        self.assertFalse(value.exact)
        self.assertLess(abs(value.value - 1), 1e-25)

    def test_compose_linear_substitution(self):
        # e^{x} under x -> x + y becomes e^{x+y}
        e = CoeffFn.exponential(2, (1, 0))
        self.assertEqual(e.compose((x + y, y)), CoeffFn.exponential(2, (1, 1)))

    def test_compose_rejects_nonlinear_exponent(self):
        with self.assertRaises(OutOfClass):
            CoeffFn.exponential(2, (1, 0)).compose((x * x, y))


class CoeffFnRingLawTests(SimpleTestCase):
    @settings(max_examples=60, deadline=None)
    @given(DIMS.flatmap(lambda n: st.tuples(exp_polys(n), exp_polys(n), exp_polys(n))))
    def test_ring_axioms(self, fgh):
        f, g, h = fgh
        self.assertEqual(f + g, g + f)
        self.assertEqual(f * g, g * f)
        self.assertEqual((f * g) * h, f * (g * h))
        self.assertEqual(f * (g + h), f * g + f * h)

    @settings(max_examples=60, deadline=None)
    @given(DIMS.flatmap(lambda n: st.tuples(exp_polys(n), exp_polys(n))))
    def test_leibniz_rule(self, fg):
        f, g = fg
        for axis in range(f.dim):
            self.assertEqual((f * g).diff(axis), f.diff(axis) * g + f * g.diff(axis))

    @settings(max_examples=60, deadline=None)
    @given(DIMS.flatmap(exp_polys))
    def test_partials_commute(self, f):
        for i in range(f.dim):
            for j in range(f.dim):
                self.assertEqual(f.diff(i).diff(j), f.diff(j).diff(i))

    @settings(max_examples=60, deadline=None)
    @given(DIMS.flatmap(exp_polys))
    def test_terms_have_nonzero_coefficients(self, f):
        self.assertTrue(all(term.coeff for term in f.terms()))
        self.assertEqual(CoeffFn.from_terms(f.dim, f.terms()), f)

    @settings(max_examples=30, deadline=None)
    @given(polys(), polys(), st.tuples(st.integers(-3, 3), st.integers(-3, 3)))
    def test_evaluation_is_a_homomorphism(self, f, g, point):
        self.assertEqual((f * g).evaluate(point), f.evaluate(point) * g.evaluate(point))
        self.assertEqual((f + g).evaluate(point), f.evaluate(point) + g.evaluate(point))


class FunctionalFormTests(SimpleTestCase):
    def test_functions_match_methods(self):
        e = CoeffFn.exponential(2, (1, 0))
        f = cf_mul(x, e)
        self.assertEqual(cf_add(f, y), f + y)
        self.assertEqual(cf_diff(f, 0), e + f)
        self.assertEqual(cf_eval(cf_add(x, y), (scalar(1), scalar(2))), scalar(3))
        self.assertTrue(cf_is_zero(cf_add(f, -f)))
        self.assertFalse(cf_is_zero(f))
