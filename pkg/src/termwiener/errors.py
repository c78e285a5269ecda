"""Exception hierarchy shared across the package."""


class TerminalWienerError(Exception):
    """Base class for every error raised by this package."""


class NotATreeError(TerminalWienerError):
    """Edge list is not a tree: bad edge count, loop, duplicate, or disconnected."""


class IdOutOfRangeError(TerminalWienerError):
    """A vertex id lies outside 0..n-1."""


class TreeFormatError(TerminalWienerError):
    """Malformed tree text input."""


class OrderTooSmallError(TerminalWienerError):
    """Operation is undefined below its minimum order."""


class BadDiameterError(TerminalWienerError):
    """Diameter outside the feasible range for the given order."""


class BadLeafCountError(TerminalWienerError):
    """Leaf count outside the feasible range for the given order."""


class BadArgError(TerminalWienerError):
    """Argument outside an operation's stated domain."""


class InfeasibleShapeError(TerminalWienerError):
    """The (n, k, t) triple does not describe a realizable spine shape."""


class InfeasibleError(TerminalWienerError):
    """Requested construction does not exist for these parameters."""


class BadSpecError(TerminalWienerError):
    """Invalid caterpillar/backbone specification."""


class BadPosError(TerminalWienerError):
    """Pendant position outside 1..floor(d/2)."""


class ParityMismatchError(TerminalWienerError):
    """Pendant position supplied or omitted against the parity rule."""


class BadIdError(TerminalWienerError):
    """Unknown reference-tree id."""


class TooLargeError(TerminalWienerError):
    """Requested range exceeds the configured cap."""


class TooShortError(TerminalWienerError):
    """Sequence too short for this operation."""


class InconsistentOrderError(TerminalWienerError):
    """Stated order does not match the backbone vector."""


class EmptyClassError(TerminalWienerError):
    """No tree matches the given filter."""


class UnknownCheckError(TerminalWienerError):
    """Check id is not registered."""


class RangeTooLargeError(TerminalWienerError):
    """Verification range exceeds the hard cap for this check."""


class NotCaterpillarError(TerminalWienerError):
    """Input tree is not a caterpillar."""
