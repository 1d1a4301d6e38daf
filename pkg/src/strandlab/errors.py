"""Exception hierarchy shared by every strandlab module."""


class StrandlabError(Exception):
    """Base class for all library errors."""


class InvalidInput(StrandlabError, ValueError):
    """Malformed argument: wrong length, bad sign string, non-interval row, ..."""


class InvalidVertex(InvalidInput):
    """A vertex index that is out of range or frozen where a mutable one is needed."""


class ResourceLimit(StrandlabError):
    """An enumeration or exploration exceeded its configured bound."""

    def __init__(self, message, budget=None):
        super().__init__(message)
        self.budget = budget


class NotACollection(InvalidInput):
    """A set of interval representations that admits no exceptional ordering."""

    def __init__(self, message, pair=None):
        super().__init__(message)
        self.pair = pair


class UnsupportedOrientation(InvalidInput):
    """An operation restricted to constant-sign vectors got a mixed one."""


class InvariantError(StrandlabError, AssertionError):
    """An internal consistency check failed. This always indicates a bug."""
