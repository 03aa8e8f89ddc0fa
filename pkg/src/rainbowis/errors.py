"""Exception hierarchy shared by every module of the package."""


class RainbowError(Exception):
    """Base class for all errors raised by :mod:`rainbowis`."""


class InvalidGraphError(RainbowError, ValueError):
    pass


class DescriptorParseError(InvalidGraphError):
    """A graph descriptor string could not be parsed.

    ``position`` is the 0-based character offset where parsing failed.
    """

    def __init__(self, message: str, descriptor: str, position: int) -> None:
        super().__init__(f"{message} at position {position} in {descriptor!r}")
        self.descriptor = descriptor
        self.position = position


class InvalidSetError(RainbowError, ValueError):
    pass


class InvalidParameterError(RainbowError, ValueError):
    pass


class InvalidOrderingError(RainbowError, ValueError):
    pass


class InvalidCertificateError(RainbowError, ValueError):
    pass


class PreconditionError(RainbowError, ValueError):
    """A documented hypothesis of an operation does not hold.

    ``clause`` names the violated hypothesis.
    """

    def __init__(self, clause: str, detail: str = "") -> None:
        super().__init__(f"{clause}: {detail}" if detail else clause)
        self.clause = clause


class EmptyFamilyError(PreconditionError):
    """The graph has no independent set of the requested size."""


class ContractViolation(RainbowError, AssertionError):
    """A guaranteed outcome did not happen; indicates a bug, never bad input."""
