"""Exception hierarchy.

Errors fall into four families that the command-line layer maps onto exit
codes: malformed input, unmet preconditions, size limits and numerical
failure.
"""


class HypercutError(Exception):
    """Base class for every error raised by this package."""

    exit_code = 1


class InputError(HypercutError, ValueError):
    exit_code = 2


class EmptyEdge(InputError):
    pass


class VertexOutOfRange(InputError):
    pass


class DuplicateVertexInEdge(InputError):
    pass


class ParseError(InputError):
    def __init__(self, message, line=None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class InvalidCut(InputError):
    pass


class ZeroFunction(InputError):
    pass


class GenerationFailed(InputError):
    pass


class PreconditionError(HypercutError):
    exit_code = 3


class ZeroDegreeVertex(PreconditionError):
    pass


class NotClassical(PreconditionError):
    pass


class NotConnected(PreconditionError):
    pass


class NotUniform(PreconditionError):
    pass


class NotRegular(PreconditionError):
    pass


class DegreeAssumptionViolated(PreconditionError):
    pass


class DegenerateFunction(PreconditionError):
    pass


class TooLarge(HypercutError):
    exit_code = 4


class NoConvergence(HypercutError, ArithmeticError):
    exit_code = 5
