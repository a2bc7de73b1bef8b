"""Exception hierarchy shared across the package."""


class EventPairsError(Exception):
    """Base class for all errors raised by this package."""


class CorpusFormatError(EventPairsError):
    """A corpus, labels, or snapshot file violates its format contract."""


class ConfigError(EventPairsError):
    """A pipeline configuration is missing keys or holds invalid values."""


class MissingInputError(EventPairsError):
    """A pipeline stage input file does not exist or is stale."""

    def __init__(self, path, reason="missing"):
        super().__init__(f"{reason} input: {path}")
        self.path = str(path)
        self.reason = reason
