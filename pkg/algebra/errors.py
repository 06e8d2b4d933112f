"""
Typed errors raised by the toolkit.

Every error carries an `exit_code` used by the management commands:
1 for a mathematical negative (still a valid answer), 2 for usage or parse
problems, 3 for a broken internal assertion.
"""

EXIT_NEGATIVE = 1
EXIT_USAGE = 2
EXIT_INTERNAL = 3


class LieToolkitError(Exception):
    """Base class for all toolkit errors"""
    exit_code = EXIT_USAGE

    def __init__(self, message=None, **details):
        self.message = message or self.__class__.__name__
        self.details = details
        super().__init__(self.message)

    def as_dict(self):
        return {"error": self.__class__.__name__, "message": self.message}


class DimensionMismatch(LieToolkitError):
    """Raised when operands live on different ambient spaces C^N"""

    def __init__(self, left, right):
        self.left = left
        self.right = right
        super().__init__(f"ambient dimension mismatch: {left} != {right}")


class OutOfClass(LieToolkitError):
    """Raised when a substitution leaves the exponential-polynomial class"""


class NotInvertible(LieToolkitError):
    """Raised when a supplied automorphism pair does not compose to the identity"""


class UnknownFixture(LieToolkitError):
    """Raised for a catalog name that is not shipped"""


class UnsupportedType(LieToolkitError):
    """Raised for a type label outside the supported table"""


class ParseError(LieToolkitError):
    """Raised by the field DSL with the position of the failure"""

    def __init__(self, message, line=1, column=1, expected=()):
        self.line = line
        self.column = column
        self.expected = tuple(sorted(set(expected)))
        text = f"{message} at line {line}, column {column}"
        if self.expected:
            text += f" (expected one of: {', '.join(self.expected)})"
        super().__init__(text)

    def as_dict(self):
        data = super().as_dict()
        data.update({"line": self.line, "column": self.column, "expected": list(self.expected)})
        return data


class MathematicalNegative(LieToolkitError):
    """A valid answer that says no: not closed, infeasible, not semisimple"""
    exit_code = EXIT_NEGATIVE


class NotClosed(MathematicalNegative):
    """Raised when the bracket of two basis fields leaves their span.

    `i` and `j` are 0-based basis indices, `residual` is the bracket reduced
    modulo the span (a nonzero VectorField).
    """

    def __init__(self, i, j, residual):
        self.i = i
        self.j = j
        self.residual = residual
        super().__init__(f"bracket of basis elements {i + 1} and {j + 1} leaves the span")


class Infeasible(MathematicalNegative):
    """Raised when a linear system or an extension stage has no solution"""

    def __init__(self, message="infeasible", stage=None, relation_index=None, residual=None, report=None):
        self.stage = stage
        self.relation_index = relation_index
        self.residual = residual
        self.report = report
        super().__init__(message)


class NotSemisimple(MathematicalNegative):
    """Raised when an operation requires a semisimple algebra"""


class NoExactWitness(MathematicalNegative):
    """Raised when no witness point is found in the search box"""


class CartanNotFound(MathematicalNegative):
    """Raised when the regular-element search never yields a verified CSA"""


class IrrationalSpectrum(MathematicalNegative):
    """Raised when an ad-operator has eigenvalues outside Q(i)"""

    def __init__(self, message, factor=None):
        self.factor = factor
        super().__init__(message)


class Truncation(MathematicalNegative):
    """Raised when an ansatz space is not stable under the acting fields"""

    def __init__(self, message, field=None, generator=None):
        self.field = field
        self.generator = generator
        super().__init__(message)


class UnrecognizedDiagram(LieToolkitError):
    """Raised when a Cartan matrix matches no simple type"""
    exit_code = EXIT_INTERNAL


class LieInternalError(LieToolkitError):
    """Raised when an exact identity that must hold does not"""
    exit_code = EXIT_INTERNAL
