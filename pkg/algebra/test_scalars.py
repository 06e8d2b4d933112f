from fractions import Fraction

from django.test import SimpleTestCase

from .utils.scalars import (
    I_UNIT,
    ONE,
    ZERO,
    format_scalar,
    is_integer,
    is_positive,
    is_rational,
    parse_scalar,
    scalar,
    to_scalar,
)


class ScalarParsingTests(SimpleTestCase):
    def test_parse_rational_and_imaginary(self):
        self.assertEqual(parse_scalar('3/2'), scalar(Fraction(3, 2)))
        self.assertEqual(parse_scalar('-i'), -I_UNIT)
        self.assertEqual(parse_scalar('1/2-3*i'), scalar('1/2', -3))
        self.assertEqual(parse_scalar('2i'), scalar(0, 2))
        self.assertEqual(parse_scalar('-3*i'), scalar(0, -3))
        self.assertEqual(parse_scalar('3+i'), scalar(3, 1))

    def test_parse_rejects_garbage(self):
        for text in ('', 'abc', '1/2/3', '1.5'):
            with self.assertRaises(ValueError):
                parse_scalar(text)

    def test_format_is_canonical(self):
        self.assertEqual(format_scalar(ZERO), '0')
        self.assertEqual(format_scalar(ONE), '1')
        self.assertEqual(format_scalar(scalar('-3/4')), '-3/4')
        self.assertEqual(format_scalar(I_UNIT), 'i')
        self.assertEqual(format_scalar(scalar(1, -2)), '1-2*i')
        self.assertEqual(format_scalar(scalar('1/2', '1/3')), '1/2+1/3*i')

    def test_format_then_parse_is_identity(self):
        for z in (scalar(5), scalar(0, -1), scalar('7/3', '-2/5')):
            self.assertEqual(parse_scalar(format_scalar(z)), z)


class ScalarPredicateTests(SimpleTestCase):
    def test_positivity_is_lexicographic(self):
        self.assertTrue(is_positive(scalar(1, -5)))
        self.assertTrue(is_positive(I_UNIT))
        self.assertFalse(is_positive(scalar(-1, 5)))
        self.assertFalse(is_positive(ZERO))

    def test_rational_and_integer(self):
        self.assertTrue(is_integer(scalar(-4)))
        self.assertFalse(is_integer(scalar('1/2')))
        self.assertTrue(is_rational(scalar('1/2')))
        self.assertFalse(is_rational(I_UNIT))

    def test_to_scalar_coercions(self):
        self.assertEqual(to_scalar(3), scalar(3))
        self.assertEqual(to_scalar(Fraction(1, 3)), scalar('1/3'))
        self.assertEqual(to_scalar('i'), I_UNIT)
