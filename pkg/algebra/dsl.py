"""
Text syntax for coefficient functions and vector fields.

    expr    := term (("+" | "-") term)*
    term    := factor ("*" factor)*
    factor  := rational | "i" | var | var "^" nat | "exp" "(" linform ")"
             | "D" var | "(" expr ")"

A leading sign is allowed before any term. Variables are x1..xN, with the
aliases x, y, z when N <= 3. Whitespace is ignored. The printer emits the
canonical form, which parses back to the same value.
"""
import re
from dataclasses import dataclass

from .errors import ParseError
from .kernel import CoeffFn
from .utils.scalars import ONE, ZERO, format_scalar, scalar
from .vfields import VectorField

ALIASES = ("x", "y", "z")

_TOKEN_RE = re.compile(r"\s*(?:(?P<number>\d+)|(?P<ident>[A-Za-z_][A-Za-z0-9_]*)|(?P<op>[-+*/^()]))")


@dataclass(frozen=True)
class Token:
    kind: str
    text: str
    line: int
    column: int


def variable_names(dim):
    if dim <= len(ALIASES):
        return list(ALIASES[:dim])
    return [f"x{k}" for k in range(1, dim + 1)]


def _variable_index(name, dim):
    if dim <= len(ALIASES) and name in ALIASES[:dim]:
        return ALIASES.index(name)
    match = re.fullmatch(r"x(\d+)", name)
    if match and 1 <= int(match.group(1)) <= dim:
        return int(match.group(1)) - 1
    return None


def tokenize(text, line=1):
    tokens, pos = [], 0
    text = text.rstrip()
    while pos < len(text):
        match = _TOKEN_RE.match(text, pos)
        if not match or match.end() == pos:
            column = pos + 1 + (len(text[pos:]) - len(text[pos:].lstrip()))
            raise ParseError(f"unexpected character {text[column - 1]!r}", line, column)
        start = match.start(match.lastgroup) + 1
        tokens.append(Token(match.lastgroup, match.group(match.lastgroup), line, start))
        pos = match.end()
    tokens.append(Token("end", "", line, len(text) + 1))
    return tokens


class _Parser:
    """Recursive descent over the token list; values are CoeffFn or VectorField."""

    def __init__(self, text, dim, line=1):
        self.dim = dim
        self.tokens = tokenize(text, line)
        self.pos = 0

    @property
    def current(self):
        return self.tokens[self.pos]

    def fail(self, message, expected=()):
        tok = self.current
        raise ParseError(message, tok.line, tok.column, expected)

    def accept(self, text):
        if self.current.text == text and self.current.kind == "op":
            self.pos += 1
            return True
        return False

    def expect(self, text):
        if not self.accept(text):
            self.fail(f"unexpected {self.current.text or 'end of input'!r}", [text])

    def parse(self):
        value = self.expr()
        if self.current.kind != "end":
            self.fail(f"unexpected {self.current.text!r}", ["+", "-", "*", "end of input"])
        return value

    def expr(self):
        if self.accept("-"):
            value = -self.term()
        else:
            self.accept("+")
            value = self.term()
        while self.current.text in ("+", "-") and self.current.kind == "op":
            tok = self.current
            self.pos += 1
            rhs = self.term()
            value = self._combine(value, rhs if tok.text == "+" else self._scaled(rhs, -1), tok)
        return value

    def term(self):
        value = self.factor()
        while self.current.text == "*" and self.current.kind == "op":
            tok = self.current
            self.pos += 1
            value = self._product(value, self.factor(), tok)
        return value

    def factor(self):
        tok = self.current
        if tok.kind == "number":
            self.pos += 1
            num = int(tok.text)
            if self.accept("/"):
                den_tok = self.current
                if den_tok.kind != "number" or int(den_tok.text) == 0:
                    self.fail("expected a nonzero denominator", ["integer"])
                self.pos += 1
                return CoeffFn.constant(self.dim, scalar(f"{num}/{den_tok.text}"))
            return CoeffFn.constant(self.dim, scalar(num))
        if tok.kind == "ident":
            self.pos += 1
            if tok.text == "i":
                return CoeffFn.constant(self.dim, scalar(0, 1))
            if tok.text == "exp":
                self.expect("(")
                inner = self.expr()
                self.expect(")")
                return CoeffFn.exponential(self.dim, self._linear_form(inner, tok))
            if tok.text.startswith("D") and _variable_index(tok.text[1:], self.dim) is not None:
                return VectorField.partial(self.dim, _variable_index(tok.text[1:], self.dim))
            index = _variable_index(tok.text, self.dim)
            if index is None:
                self.pos -= 1
                self.fail(f"unknown name {tok.text!r}", self._names())
            value = CoeffFn.variable(self.dim, index)
            if self.accept("^"):
                power = self.current
                if power.kind != "number":
                    self.fail("expected an exponent", ["integer"])
                self.pos += 1
                value = CoeffFn.monomial(self.dim, tuple(int(power.text) if k == index else 0 for k in range(self.dim)))
            return value
        if self.accept("("):
            value = self.expr()
            self.expect(")")
            return value
        self.fail(f"unexpected {tok.text or 'end of input'!r}", ["number", "i", "exp", "(", *self._names()])

    def _names(self):
        names = variable_names(self.dim)
        return names + [f"D{n}" for n in names]

    def _linear_form(self, value, tok):
        if isinstance(value, VectorField) or not value.is_polynomial():
            raise ParseError("exp needs a linear form", tok.line, tok.column, ["linear form"])
        lam = [ZERO] * self.dim
        for term in value.terms():
            if sum(term.alpha) != 1:
                raise ParseError("exp needs a homogeneous linear form", tok.line, tok.column, ["linear form"])
            lam[term.alpha.index(1)] = term.coeff
        return tuple(lam)

    @staticmethod
    def _scaled(value, sign):
        return value if sign == 1 else -value

    def _combine(self, a, b, tok):
        if isinstance(a, VectorField) != isinstance(b, VectorField):
            a, b = self._as_field(a, tok), self._as_field(b, tok)
        return a + b

    def _as_field(self, value, tok):
        if isinstance(value, VectorField):
            return value
        if value.is_zero():
            return VectorField.zero(self.dim)
        raise ParseError("cannot add a function and a vector field", tok.line, tok.column, ["D<var>"])

    def _product(self, a, b, tok):
        if isinstance(a, VectorField) and isinstance(b, VectorField):
            raise ParseError("product of two partials is not a vector field", tok.line, tok.column)
        if isinstance(a, VectorField):
            return a.multiply(b)
        if isinstance(b, VectorField):
            return b.multiply(a)
        return a * b


def parse_function(text, dim, line=1) -> CoeffFn:
    value = _Parser(text, dim, line).parse()
    if isinstance(value, VectorField):
        raise ParseError("expected a function, found a vector field", line, 1)
    return value


def parse_field(text, dim, line=1) -> VectorField:
    value = _Parser(text, dim, line).parse()
    if isinstance(value, VectorField):
        return value
    if value.is_zero():
        return VectorField.zero(dim)
    raise ParseError("expected a vector field (no D<var> factor)", line, 1, ["D<var>"])


def parse_fields(text, dim):
    """One field per non-empty line; '#' starts a comment."""
    fields = []
    for number, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0]
        if line.strip():
            fields.append(parse_field(line, dim, number))
    return fields


def _coeff_text(c):
    """Multiplier text for a coefficient magnitude; '' for 1."""
    if c == ONE:
        return ""
    text = format_scalar(c)
    if text == "i" or (not c.y and "/" not in text):
        return text
    return f"({text})"


def _split_sign(c):
    if (not c.y and c.x < 0) or (not c.x and c.y < 0):
        return "-", -c
    return "+", c


def _linear_text(lam, names):
    parts = []
    for c, name in zip(lam, names):
        if not c:
            continue
        sign, mag = _split_sign(c)
        coeff = _coeff_text(mag)
        parts.append((sign, f"{coeff}*{name}" if coeff else name))
    return _join(parts) if parts else "0"


def _monomial_text(alpha, names):
    return [name if a == 1 else f"{name}^{a}" for a, name in zip(alpha, names) if a]


def _term_text(term, names, partial=None):
    sign, mag = _split_sign(term.coeff)
    factors = _monomial_text(term.alpha, names)
    if any(term.lam):
        factors.append(f"exp({_linear_text(term.lam, names)})")
    if partial:
        factors.append(partial)
    coeff = _coeff_text(mag)
    if coeff:
        factors.insert(0, coeff)
    return sign, "*".join(factors) or "1"


def _join(parts):
    out = ""
    for n, (sign, text) in enumerate(parts):
        if n == 0:
            out = text if sign == "+" else f"-{text}"
        else:
            out += f" {sign} {text}"
    return out


def format_function(f: CoeffFn) -> str:
    names = variable_names(f.dim)
    parts = [_term_text(term, names) for term in f.terms()]
    return _join(parts) if parts else "0"


def format_field(v: VectorField) -> str:
    names = variable_names(v.dim)
    parts = [_term_text(term, names, f"D{names[k]}") for k, comp in enumerate(v.comps) for term in comp.terms()]
    return _join(parts) if parts else "0"


print_field = format_field
