"""Exception hierarchy.

Every user-facing failure derives from :class:`WalkDomError` so the CLI can
turn it into a one-line diagnostic.
"""


class WalkDomError(ValueError):
    pass


class IndexOutOfRangeError(WalkDomError):
    pass


class SelfLoopError(WalkDomError):
    pass


class MalformedGraph6Error(WalkDomError):
    pass


class UnsupportedSizeError(WalkDomError):
    pass


class EmptySelectionError(WalkDomError):
    pass


class NotAWalkError(WalkDomError):
    pass


class AdjacentEndpointsError(WalkDomError):
    pass


class NotRealizableError(WalkDomError):
    pass


class EndpointMismatchError(WalkDomError):
    pass


class DisconnectedGraphError(WalkDomError):
    pass


class UnknownPatternNameError(WalkDomError):
    pass


class SizeTooLargeError(WalkDomError):
    pass
