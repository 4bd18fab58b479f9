"""Exception hierarchy shared by every layer of the package.

Errors split into two families that the command line maps to exit codes:
``InputError`` (bad or invalid data, exit 1) and ``UnsupportedComputation``
(valid data the implementation declines to handle, exit 2).
"""


class MonoglueError(Exception):
    exit_code = 1


class InputError(MonoglueError):
    exit_code = 1


class UnsupportedComputation(MonoglueError):
    exit_code = 2


class ShapeMismatch(InputError):
    pass


class NotSquare(InputError):
    pass


class Singular(InputError):
    pass


class ZeroPolynomial(InputError):
    pass


class NotMonodromic(InputError):
    pass


class NotCommuting(InputError):
    pass


class NotFiltration(InputError):
    pass


class NotPure(InputError):
    pass


class NotHodgeMorphism(InputError):
    pass


class Malformed(InputError):
    pass


class ValidationFailed(InputError):
    """Wraps a validator error raised while parsing a document."""

    def __init__(self, cause):
        self.cause = cause
        super().__init__(f"{type(cause).__name__}: {cause}")


class UnsupportedDegree(UnsupportedComputation):
    pass


class DimensionTooLarge(UnsupportedComputation):
    pass
