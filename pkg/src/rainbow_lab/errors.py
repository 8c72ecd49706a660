"""Exception hierarchy shared by the library and the CLI."""


class RainbowLabError(ValueError):
    """Base class for domain errors (bad parameters for a formula or search)."""


class OrientationError(RainbowLabError):
    """Raised when an operation requires m >= n but got m < n."""


class MatchingDoesNotFitError(RainbowLabError):
    """Raised when k is outside 1..n, so no kK2 fits in K_{m,n}."""


class OracleLimitError(RainbowLabError):
    """Raised when the brute-force oracle is asked for more edges than its limit."""


class FormatError(Exception):
    """Malformed graph or coloring interchange document."""
