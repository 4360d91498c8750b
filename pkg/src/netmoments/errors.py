"""Exception hierarchy shared by all modules."""


class NetMomentsError(Exception):
    """Base class for data-level failures (mapped to exit code 3 by the CLI)."""


class EdgeListError(NetMomentsError, ValueError):
    """Malformed edge-list input."""

    def __init__(self, lineno, line, reason):
        self.lineno = lineno
        self.line = line
        super().__init__(f"line {lineno}: {reason}: {line!r}")


class UndefinedMomentError(NetMomentsError, ValueError):
    """Moments requested for a graph with no nodes."""


class BoundsError(NetMomentsError, ValueError):
    """Moment data cannot come from a genuine spectral measure, or bracketing failed."""


class GameError(NetMomentsError, ValueError):
    """Invalid game configuration or a refused game computation."""
