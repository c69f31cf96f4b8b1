"""Exception types raised across the package."""


class SolcobError(Exception):
    """Base class for every error raised by solcob."""


class WellDefinednessError(SolcobError):
    """A lattice map does not carry the source relations into the target relations."""


class InfiniteGroupError(SolcobError):
    """An operation that needs a finite group received one with free rank."""


class TooLargeError(SolcobError):
    """A group is larger than the configured enumeration cap."""


class DeterminantError(SolcobError):
    """A gluing matrix does not have determinant -1."""


class DegenerateError(SolcobError):
    """A parameter that must be nonzero is zero."""


class ZeroFiberError(SolcobError):
    """The Euler number is undefined because b = 0."""


class ParityError(SolcobError):
    """The (a, b) parity case (1, 0) was supplied where a normalized case is required."""
