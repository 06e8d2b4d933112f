"""Gaussian-rational scalars.

Scalars are elements of sympy's `QQ_I` domain (exact complex numbers with
rational real and imaginary parts). This module converts to and from the
text form used in JSON and on the command line: ``"a/b+c/d*i"``.
"""
import re
from fractions import Fraction

import mpmath
from sympy.polys.domains import QQ, QQ_I
from sympy.polys.domains.gaussiandomains import GaussianRational

Scalar = GaussianRational

ZERO = QQ_I.zero
ONE = QQ_I.one
I_UNIT = QQ_I(0, 1)

_RATIONAL = r"\d+(?:/\d+)?"
_IMAGINARY_RE = re.compile(rf"^(?P<im>[+-]?(?:{_RATIONAL})?)\*?i$")
_COMPLEX_RE = re.compile(rf"^(?P<re>[+-]?{_RATIONAL})(?:(?P<im>[+-](?:{_RATIONAL})?)\*?i)?$")


def _to_qq(value):
    if isinstance(value, Fraction):
        return QQ(value.numerator, value.denominator)
    if isinstance(value, str):
        num, _, den = value.partition("/")
        return QQ(int(num), int(den or 1))
    return QQ.convert(value)


def to_fraction(q) -> Fraction:
    """Convert a QQ element to a `fractions.Fraction`."""
    return Fraction(int(q.numerator), int(q.denominator))


def scalar(re_part=0, im_part=0) -> Scalar:
    """Build a Scalar from real and imaginary parts (ints, Fractions, 'a/b')."""
    return QQ_I(_to_qq(re_part), _to_qq(im_part))


def to_scalar(value) -> Scalar:
    """Coerce ints, Fractions, strings and sympy numbers to a Scalar."""
    if isinstance(value, GaussianRational):
        return value
    if isinstance(value, str):
        return parse_scalar(value)
    if isinstance(value, (int, Fraction)):
        return scalar(value)
    return QQ_I.from_sympy(value)


def parse_scalar(text: str) -> Scalar:
    """Parse ``"a/b+c/d*i"`` style text.

    Examples:
        parse_scalar('3/2') -> 3/2
        parse_scalar('-i') -> -i
        parse_scalar('1/2-3*i') -> 1/2 - 3i
    """
    compact = text.replace(" ", "")
    match = _IMAGINARY_RE.match(compact) or _COMPLEX_RE.match(compact)
    if not match:
        raise ValueError(f"not a Gaussian rational: {text!r}")
    groups = match.groupdict()
    re_text, im_text = groups.get("re"), groups.get("im")
    real = _to_qq(re_text.lstrip("+")) if re_text else QQ.zero
    imag = QQ.zero
    if im_text is not None:
        if im_text in ("", "+"):
            imag = QQ.one
        elif im_text == "-":
            imag = -QQ.one
        else:
            imag = _to_qq(im_text.lstrip("+"))
    return QQ_I(real, imag)


def _format_rational(q) -> str:
    frac = to_fraction(q)
    if frac.denominator == 1:
        return str(frac.numerator)
    return f"{frac.numerator}/{frac.denominator}"


def format_scalar(z: Scalar) -> str:
    """Render a Scalar as ``"a/b+c/d*i"`` (the JSON form)."""
    if not z.y:
        return _format_rational(z.x)
    if z.y == QQ.one:
        imag = "i"
    elif z.y == -QQ.one:
        imag = "-i"
    else:
        imag = f"{_format_rational(z.y)}*i"
    if not z.x:
        return imag
    sign = "" if imag.startswith("-") else "+"
    return f"{_format_rational(z.x)}{sign}{imag}"


def scalar_key(z: Scalar):
    """Total order used for canonical sorting: real part, then imaginary part."""
    return (to_fraction(z.x), to_fraction(z.y))


def is_positive(z: Scalar) -> bool:
    """Lexicographic positivity on (re, im); used for root orderings."""
    return z.x > 0 or (not z.x and z.y > 0)


def is_rational(z: Scalar) -> bool:
    return not z.y


def is_integer(z: Scalar) -> bool:
    return not z.y and to_fraction(z.x).denominator == 1


def to_mpc(z: Scalar):
    """Arbitrary-precision complex value (uses the current mpmath precision)."""
    re_f, im_f = to_fraction(z.x), to_fraction(z.y)
    return mpmath.mpc(
        mpmath.mpf(re_f.numerator) / re_f.denominator,
        mpmath.mpf(im_f.numerator) / im_f.denominator,
    )
