"""Exception types raised by the library.

Every domain error derives from :class:`YoungError`; the CLI maps these to
exit code 1.
"""


class YoungError(Exception):
    pass


class DimensionError(YoungError, ValueError):
    pass


class EmptyDiagram(YoungError, ValueError):
    pass


class NotAnInnerCorner(YoungError, ValueError):
    pass


class BoxNotInDiagram(YoungError, ValueError):
    pass


class NotCofinite(YoungError, ValueError):
    """Some codim variable has no pure power among the generators."""


class NotSupportedIdeal(YoungError, ValueError):
    """A generator involves a support variable."""


class VariableMismatch(YoungError, ValueError):
    pass


class InvalidPair(YoungError, ValueError):
    pass


class InvalidRange(YoungError, ValueError):
    pass


class InconsistentValues(YoungError, ValueError):
    """Interpolation points do not lie on a polynomial of the requested degree."""


class ResourceLimit(YoungError, RuntimeError):
    pass


class UnknownVariable(YoungError, ValueError):
    pass


class ParseError(YoungError, ValueError):
    def __init__(self, message, position=None):
        self.position = position
        if position is not None:
            message = f"{message} (at position {position})"
        super().__init__(message)
