"""Exception and warning types shared across the package."""


class ZetaJoinError(Exception):
    """Base class for all errors raised by this package."""


# -- graph construction and validation --------------------------------------


class OutOfRangeError(ZetaJoinError):
    """An edge endpoint is not a valid vertex index."""


class LoopEdgeError(ZetaJoinError):
    """An edge joins a vertex to itself."""


class DuplicateEdgeError(ZetaJoinError):
    """The same undirected edge was supplied more than once."""


class NotBipartiteError(ZetaJoinError):
    """The graph contains an odd cycle."""


class NotSemiRegularError(ZetaJoinError):
    """Degrees are not constant on each side of the bipartition."""


class DisconnectedError(ZetaJoinError):
    """The graph is not connected."""


class NotRegularError(ZetaJoinError):
    """The graph is not regular."""


# -- exact arithmetic --------------------------------------------------------


class ExactDivisionFailure(ZetaJoinError):
    """A division that should be exact left a remainder (bug signal)."""


class IntegralityViolation(ZetaJoinError):
    """Interpolated determinant coefficients were not integers.

    Signals a wrong degree bound or an arithmetic bug; never expected on
    valid input.
    """


class ConstantTermNotOneError(ZetaJoinError):
    """The truncated logarithm requires constant term 1."""


# -- numerics ----------------------------------------------------------------


class NotSymmetricError(ZetaJoinError):
    """The eigensolver requires a symmetric matrix."""


class NoConvergenceError(ZetaJoinError):
    """An iteration exceeded its sweep or iteration budget."""


# -- closed-form verification ------------------------------------------------


class IdentityViolation(ZetaJoinError):
    """An exact polynomial identity that must hold failed (bug signal)."""


class OracleMismatchError(ZetaJoinError):
    """A closed-form value disagrees with its independent oracle."""


class BiconditionalViolation(ZetaJoinError):
    """Zeta equality and cospectrality disagreed for a pair of joins."""


class DegreeOneWarning(UserWarning):
    """The zeta interpretation assumes no degree-1 vertices; the
    determinant polynomial is still well defined."""
