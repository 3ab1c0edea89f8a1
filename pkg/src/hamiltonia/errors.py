"""Exception types raised across the package."""


class HamiltoniaError(Exception):
    """Base class for all errors raised by hamiltonia."""


class BadParameters(HamiltoniaError, ValueError):
    pass


class VertexOutOfRange(HamiltoniaError, ValueError):
    pass


class SelfLoop(HamiltoniaError, ValueError):
    pass


class NTooLarge(HamiltoniaError, ValueError):
    pass


class DisconnectedInput(HamiltoniaError, ValueError):
    pass


class MalformedHeader(HamiltoniaError, ValueError):
    """graph6 text that cannot be decoded."""


class TrailingBits(HamiltoniaError, ValueError):
    """graph6 text with the wrong number of body bytes or nonzero padding."""


class UndecidableAtPrecision(HamiltoniaError, ArithmeticError):
    pass


class EmptyClass(HamiltoniaError, LookupError):
    """No graph exists for the requested (n, k) cell."""
