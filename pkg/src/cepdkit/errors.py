"""Exception hierarchy.

``MathError`` subclasses are refusals grounded in the mathematics (a
hypothesis does not hold for the given matrix); the CLI maps them to exit
status 1. ``InputError`` subclasses are malformed input and map to exit 2.
"""


class CepdError(Exception):
    """Base class for every error raised by this package."""


class MathError(CepdError):
    pass


class InputError(CepdError, ValueError):
    pass


class NonFiniteEntry(InputError):
    pass


class DimensionMismatch(InputError):
    pass


class ParseError(InputError):
    def __init__(self, message, line=None, column=None):
        self.line = line
        self.column = column
        where = ""
        if line is not None:
            where = f" (line {line}" + (f", column {column})" if column is not None else ")")
        super().__init__(message + where)


class NonSquare(MathError):
    pass


class ZeroMatrix(MathError):
    pass


class ConvergenceFailure(MathError):
    pass


class IndexTooLarge(MathError):
    pass


class DefiningEquationsViolated(MathError):
    """A computed inverse failed its own defining equations.

    Almost always a symptom of a rank decision landing on the wrong side of
    the threshold; loosening ``rank_rtol`` is the usual remedy.
    """

    def __init__(self, kind, residuals):
        self.kind = kind
        self.residuals = dict(residuals)
        worst = max(self.residuals.items(), key=lambda kv: kv[1])
        super().__init__(f"{kind}: defining equation {worst[0]!r} has residual {worst[1]:.3e}")


class InfeasibleSpec(MathError):
    pass


class NotCepd(MathError):
    pass


class NotPartialIsometry(MathError):
    pass


class ConsistencyViolated(MathError):
    pass


class RightSideNotInRange(MathError):
    pass
