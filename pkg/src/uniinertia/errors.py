"""Exception hierarchy shared by every module."""


class InertiaError(ValueError):
    """Base class for all errors raised by this package."""


class ZeroWeightError(InertiaError):
    pass


class DuplicateEdgeError(InertiaError):
    pass


class SelfLoopError(InertiaError):
    pass


class VertexOutOfRangeError(InertiaError):
    pass


class NotOnCycleError(InertiaError):
    pass


class BadParamsError(InertiaError):
    pass


class NotAForestError(InertiaError):
    pass


class NotUnicyclicError(InertiaError):
    pass


class NotACycleError(InertiaError):
    pass


class NotPendantError(InertiaError):
    pass


class NoTwinError(InertiaError):
    pass


class NotSymmetricError(InertiaError):
    pass


class UnsupportedClassError(InertiaError):
    """Raised when a graph has more than one independent cycle."""


class GirthOutOfRangeError(InertiaError):
    pass


class OrderTooSmallError(InertiaError):
    pass


class OrderTooLargeError(InertiaError):
    pass


class ParseError(InertiaError):
    """Malformed edge-list input."""
