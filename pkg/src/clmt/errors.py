"""Exception hierarchy shared across the toolkit.

The CLI maps these onto exit codes: format/config problems are input
errors, disconnection is a domain error, anything else is an internal
invariant violation.
"""


class ClmtError(Exception):
    """Base class for all toolkit errors."""


class InvalidNodeError(ClmtError):
    """A node id does not exist in the graph."""


class ContractError(ClmtError):
    """An operation was called outside its contract (bad argument, invalid tree)."""


class DisconnectedError(ClmtError):
    """The operation requires a connected graph."""


class TopologyFormatError(ClmtError):
    """A topology or result document failed to parse."""

    def __init__(self, message: str, location: str | None = None):
        super().__init__(f"{location}: {message}" if location else message)
        self.location = location


class ConfigError(ClmtError):
    """Invalid simulation or experiment configuration."""


class GenerationError(ClmtError):
    """Random instance generation could not produce a connected graph."""


class EnumerationLimitError(ClmtError):
    """Spanning-tree enumeration refused: the instance exceeds a configured cap."""
