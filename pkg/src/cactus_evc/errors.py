"""Exception types shared across the package."""


class EvcError(Exception):
    """Base class for every error raised by this package."""


class GraphParseError(EvcError, ValueError):
    """Malformed edge-list input. ``line`` is 1-based (0 when not line-specific)."""

    def __init__(self, message, line=0):
        self.line = line
        prefix = f"line {line}: " if line else ""
        super().__init__(prefix + message)


class DisconnectedGraphError(EvcError, ValueError):
    def __init__(self, components):
        self.components = components
        super().__init__(f"graph is disconnected ({components} components)")


class UnsupportedGraphError(EvcError, ValueError):
    """A block is neither an edge, a cycle nor a biconnected chordal graph."""

    def __init__(self, message, block=None):
        self.block = block
        super().__init__(message)


class OracleCapError(EvcError, ValueError):
    """The exact game solver refuses graphs above its size cap."""
