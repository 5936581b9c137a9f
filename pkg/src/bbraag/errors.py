"""Exception hierarchy shared by the whole package.

The CLI maps these onto its documented exit codes, so raising the right
class matters more than the message text.
"""


class BBRaagError(Exception):
    """Base class for all package-specific errors."""


class GraphParseError(BBRaagError):
    """Malformed textual graph input; carries a line or byte position."""

    def __init__(self, message, line=None, position=None):
        detail = message
        if line is not None:
            detail = f"line {line}: {message}"
        elif position is not None:
            detail = f"byte {position}: {message}"
        super().__init__(detail)
        self.line = line
        self.position = position


class ValidationError(GraphParseError):
    """Well-formed text describing an invalid graph (self-loop, duplicate edge)."""


class DomainError(BBRaagError):
    """Operation called outside its stated precondition."""


class CapacityError(BBRaagError):
    """Configured size bound exceeded (vertex count, scan range, entry magnitude)."""


class NotSupportedError(BBRaagError):
    """Input is valid but outside the structural cases the operation handles."""
