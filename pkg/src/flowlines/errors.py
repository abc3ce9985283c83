"""Exception types shared across the library."""


class FlowlinesError(Exception):
    """Base class for all library-specific failures."""


class DomainError(FlowlinesError):
    """An input lies outside the region where the requested computation is meaningful."""


class QuadratureError(FlowlinesError):
    """The requested quadrature resolution is unattainable within the configured cap."""


class NonConvergence(FlowlinesError):
    """An adaptive routine failed to meet its tolerance within its subdivision budget."""


class LaunchError(FlowlinesError):
    """A flow line cannot be started from the requested point."""


class InsufficientResolution(FlowlinesError):
    """A sampled profile contains too little structure for the requested measurement."""


class ConfigError(FlowlinesError):
    """A scenario configuration failed to load.

    ``kind`` distinguishes syntactic problems (``"parse"``: malformed lines,
    unknown or duplicate keys, unreadable files) from semantic ones
    (``"validation"``: values that parse but describe an impossible scenario).
    The command-line front end maps the two kinds to different exit codes.
    """

    def __init__(self, message: str, kind: str = "validation"):
        super().__init__(message)
        self.kind = kind
