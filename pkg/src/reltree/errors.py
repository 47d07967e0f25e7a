"""Exception types shared across the package.

Everything raised on purpose derives from RelTreeError so callers
(CLI, HTTP server) can map failures to a diagnostic in one place.
"""


class RelTreeError(Exception):
    """Base class for all errors raised by this package."""


class FormatError(RelTreeError):
    """Malformed input data (corpus record, lexicon line, index file, qrels row)."""


class EncodingError(FormatError):
    """Input stream is not valid UTF-8 text."""


class IndexVersionError(FormatError):
    """Index file declares a version this build does not understand."""


class DuplicateIdError(FormatError):
    """Two records share one document id."""


class ConfigError(RelTreeError):
    """Bad configuration key, value, or file."""


class EmptyQueryError(RelTreeError):
    """Query text yields no usable terms after normalization."""


class NoMatchError(RelTreeError):
    """A document was scored without any matched term."""


class DomainError(RelTreeError):
    """A numeric argument is outside its legal range."""


class DocumentNotFoundError(RelTreeError):
    """Lookup of an unknown document id."""


class ConsistencyError(RelTreeError):
    """Internal cross-references disagree (ids, origins, cluster membership)."""
