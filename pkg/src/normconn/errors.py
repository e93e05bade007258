"""Exception types raised across the package."""


class NormConnError(Exception):
    """Base class for every error raised by normconn."""


# numeric substrate
class NonFiniteError(NormConnError, ValueError):
    pass


class NoConvergenceError(NormConnError, RuntimeError):
    pass


class IndexOutOfRangeError(NormConnError, IndexError):
    pass


class DimensionMismatchError(NormConnError, ValueError):
    pass


# graphs
class TooSmallError(NormConnError, ValueError):
    pass


class TooLargeError(NormConnError, ValueError):
    pass


class DisconnectedError(NormConnError, ValueError):
    pass


class NegativeWeightError(NormConnError, ValueError):
    pass


class NonPSDWeightError(NormConnError, ValueError):
    pass


class WrongEdgeCountError(NormConnError, ValueError):
    pass


# normed spaces
class ZeroVectorError(NormConnError, ValueError):
    pass


class NotSmoothError(NormConnError, ValueError):
    pass


class NotIsometryError(NormConnError, ValueError):
    def __init__(self, message, worst_vector=None, ratio=None):
        super().__init__(message)
        self.worst_vector = worst_vector
        self.ratio = ratio


class SingularError(NormConnError, ValueError):
    pass


# frameworks
class CoincidentEndpointsError(NormConnError, ValueError):
    def __init__(self, edge):
        super().__init__(f"edge {edge[0]}-{edge[1]} has coincident endpoints")
        self.edge = edge


class NonSmoothEdgeError(NormConnError, ValueError):
    def __init__(self, edge):
        super().__init__(
            f"edge {edge[0]}-{edge[1]}: norm is not smooth at the edge direction"
        )
        self.edge = edge


class UnsatisfiableError(NormConnError, RuntimeError):
    pass


# l-infinity engine
class TieOnEdgeError(NormConnError, ValueError):
    pass


class BudgetExceededError(NormConnError, RuntimeError):
    pass


# bounds
class HypothesisViolatedError(NormConnError, ValueError):
    pass


class KernelMismatchError(NormConnError, ValueError):
    pass


class TooDenseError(NormConnError, ValueError):
    pass


# file formats
class ParseError(NormConnError, ValueError):
    def __init__(self, message, line=None, path=None):
        where = ""
        if path is not None:
            where += f"{path}:"
        if line is not None:
            where += f"{line}: "
        elif where:
            where += " "
        super().__init__(where + message)
        self.line = line
        self.path = path
