"""Exception types shared by the package."""


class ConsistencyError(AssertionError):
    """A computed identity that must hold did not hold."""

    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness


class GroupNotFinite(ValueError):
    """Enumeration was requested for a group without a finiteness certificate."""


class BoundExceeded(RuntimeError):
    """A search or iteration budget ran out before a verdict was reached."""


class PreconditionError(ValueError):
    """Arguments violate a documented precondition."""


class PartitionError(ValueError):
    """The split S = I + J is invalid; ``path`` is an odd path from I to J."""

    def __init__(self, message, path=()):
        super().__init__(message)
        self.path = tuple(path)
