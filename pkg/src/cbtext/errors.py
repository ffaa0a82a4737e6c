"""Exception types shared across the toolkit."""


class ToolkitError(Exception):
    """Base class for fatal toolkit errors (CLI exit code 1)."""


class DataError(ToolkitError):
    """A data file (manifest, lexicon, series CSV) is missing or malformed."""


class ConfigError(ToolkitError):
    """The run configuration is invalid (CLI exit code 2).

    The message starts with the dotted path of the offending field,
    e.g. ``lexicons.sentiment.lm: file not found``.
    """
