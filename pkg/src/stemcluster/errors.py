"""Exception types shared across the pipeline."""


class StemclusterError(Exception):
    """Base class for every error this package raises on purpose."""


class InputEncodingError(StemclusterError):
    """An input file is not valid UTF-8."""


class ConfigError(StemclusterError, ValueError):
    """A configuration value is out of its documented domain."""


class FormatError(StemclusterError, ValueError):
    """A data file is malformed; carries the offending path and line."""

    def __init__(self, message: str, path=None, line: int | None = None):
        location = ""
        if path is not None:
            location = f"{path}:"
            if line is not None:
                location += f"{line}:"
            location += " "
        super().__init__(f"{location}{message}")
        self.path = path
        self.line = line


class PartitionError(StemclusterError):
    """Clusters that must partition a lexicon overlap."""


class CapacityError(StemclusterError):
    """An input exceeds a configured size guard."""


class DegenerateClusteringError(StemclusterError):
    """Affinity propagation finished without electing any exemplar."""
