"""Exception types shared across the package."""


class TypeParseError(ValueError):
    """Malformed or non-canonical Coxeter type symbol."""

    def __init__(self, message, symbol="", position=None):
        self.symbol = symbol
        self.position = position
        where = f" at position {position}" if position is not None else ""
        super().__init__(f"{message}{where}: {symbol!r}" if symbol else message)


class ResourceLimitError(RuntimeError):
    """A computation was refused because it would exceed a configured limit."""

    def __init__(self, what, needed, limit):
        self.what = what
        self.needed = needed
        self.limit = limit
        super().__init__(f"refusing to enumerate {what}: needs {needed}, limit is {limit}")


class InsufficientDepthError(ValueError):
    """The intersection lattice was not built deep enough for a query."""

    def __init__(self, needed, built):
        self.needed = needed
        self.built = built
        super().__init__(f"lattice built to codimension {built}, query needs {needed}")


class CorrectnessAlarm(AssertionError):
    """Two independent computations disagreed, or a proven invariant failed."""


class StaleCacheError(ValueError):
    """A cache file does not match the current root system."""
