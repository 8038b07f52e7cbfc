"""Exception hierarchy shared by all germlab modules."""


class GermLabError(Exception):
    """Base class for every error raised by germlab."""


class RingMismatch(GermLabError, ValueError):
    pass


class IndexOutOfRange(GermLabError, IndexError):
    pass


class ArityMismatch(GermLabError, ValueError):
    pass


class NotDivisible(GermLabError, ArithmeticError):
    pass


class DivisionByZero(GermLabError, ZeroDivisionError):
    pass


class ConstantInput(GermLabError, ValueError):
    pass


class ZeroPolynomial(GermLabError, ValueError):
    pass


class EmptyIdeal(GermLabError, ValueError):
    pass


class DegreeCapExceeded(GermLabError, RuntimeError):
    """Raised when Mora reduction grows past the configured total-degree cap."""

    def __init__(self, degree, cap):
        super().__init__(f"intermediate degree {degree} exceeds cap {cap}")
        self.degree = degree
        self.cap = cap


class ReductionBudgetExceeded(DegreeCapExceeded):
    """A single normal form took more reduction steps than allowed.

    Slow descents show up on non-isolated germs, where the local normal
    form can creep upward in degree for a very long time before the degree
    cap is reached.  Callers treat it exactly like the degree cap.
    """

    def __init__(self, degree, cap, steps):
        GermLabError.__init__(self, f"normal form exceeded {steps} reduction steps at degree {degree}")
        self.degree = degree
        self.cap = cap
        self.steps = steps


class CapExceededWithoutStabilization(GermLabError, RuntimeError):
    """The truncated quotient dimension did not stabilize below the cap.

    This is not a proof of a non-isolated singularity.
    """


class NotThroughOrigin(GermLabError, ValueError):
    pass


class ZeroPullback(GermLabError, ValueError):
    pass


class InvalidParameter(GermLabError, ValueError):
    pass


class GenerationExhausted(GermLabError, RuntimeError):
    pass


class ParseError(GermLabError, ValueError):
    """Malformed polynomial text; carries a 1-based line and column."""

    def __init__(self, message, line=1, column=1):
        super().__init__(f"{message} (line {line}, column {column})")
        self.line = line
        self.column = column


class UnknownVariable(ParseError):
    pass


class NegativeExponent(ParseError):
    pass
