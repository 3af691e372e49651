"""Exception hierarchy shared by all services."""

from typing import Optional


class WalksigError(Exception):
    """Base class for every error raised by walksig."""


class GraphFormatError(WalksigError):
    """A graph record could not be decoded."""

    def __init__(self, message: str, offset: Optional[int] = None, line: Optional[int] = None):
        self.offset = offset
        self.line = line
        where = []
        if line is not None:
            where.append(f"line {line}")
        if offset is not None:
            where.append(f"byte {offset}")
        prefix = f"{', '.join(where)}: " if where else ""
        super().__init__(f"{prefix}{message}")
        self.message = message

    def at_line(self, line: int) -> "GraphFormatError":
        return GraphFormatError(self.message, offset=self.offset, line=line)


class GraphStructureError(WalksigError):
    """A graph violates a structural precondition (isolated vertex, min degree...)."""


class ArcNotFoundError(WalksigError, KeyError):
    """An ordered pair is not an arc of D_G."""

    def __str__(self) -> str:
        return Exception.__str__(self)


class DimensionCutoffError(WalksigError):
    """A matrix is too large for the requested backend."""


class PrimeError(WalksigError, ValueError):
    """A modulus is not usable as a prime field."""


class EigenConvergenceError(WalksigError):
    """The eigensolver did not converge."""


class SpectrumInputError(WalksigError, ValueError):
    """A spectrum handed to a closed-form construction is out of range."""


class NotRegularError(WalksigError):
    """A regular graph was required."""


class SrgSpectrumError(WalksigError):
    """SRG parameters do not yield integral eigenvalue multiplicities."""


class SrgMismatchError(WalksigError):
    """A graph does not match the strongly regular parameters it was given."""


class SrgConditionOverlapError(WalksigError):
    """Two S+(U^3) conditions matched the same arc pair."""
