"""Exception types shared across the package.

The CLI maps these onto exit codes, so analysis code should raise the
most specific type that applies.
"""


class SymrichError(Exception):
    """Base class for all errors raised by this package."""


class AlphabetError(SymrichError):
    """Invalid alphabet or a word using glyphs outside its alphabet."""


class SourceError(SymrichError):
    """A word source that cannot produce the requested prefix."""


class GroupError(SymrichError):
    """Invalid symmetry map or group (non-bijective map, missing antimorphism, ...)."""


class IndexRangeError(SymrichError):
    """A query outside the indexed factor-length range."""


class ClosureError(SymrichError):
    """Factor data is not closed under the group where an operation requires it."""


class InsufficientPrefixError(SymrichError):
    """The analyzed prefix is too short to complete an operation."""


class ConsistencyError(SymrichError):
    """An internal cross-check that must always hold was violated."""


class ConfigError(SymrichError):
    """Malformed analysis configuration."""
