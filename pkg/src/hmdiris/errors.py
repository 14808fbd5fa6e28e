"""Exception hierarchy for the iris verification pipeline.

Configuration problems and dataset problems are kept on separate branches
so the CLI can map them to distinct exit codes.
"""


class HmdIrisError(Exception):
    """Base class for all pipeline errors."""


class ConfigError(HmdIrisError):
    """Invalid run configuration (CLI exit code 1)."""


class DatasetError(HmdIrisError):
    """Problem with input data on disk (CLI exit code 2)."""


# -- capture ingest ----------------------------------------------------------

class FileMissing(DatasetError):
    pass


class DimensionMismatch(DatasetError):
    """Image and label map dimensions differ."""


class IllegalLabelValue(DatasetError):
    """Label map contains a pixel value outside {0, 1, 2, 3}."""


# -- geometry fitting --------------------------------------------------------

class GeometryError(HmdIrisError):
    """A capture whose label map does not yield usable circle geometry."""


class NoPupil(GeometryError):
    pass


class NoIris(GeometryError):
    pass


class DegenerateGeometry(GeometryError):
    """Fitted iris radius does not exceed the pupil radius."""


# -- encoding / matching -----------------------------------------------------

class ParamMismatch(ConfigError):
    """Encoder parameters incompatible with the normalized grid."""


class EncoderMismatch(HmdIrisError):
    """Attempt to compare templates produced by different encoders."""


class LengthMismatch(HmdIrisError):
    """Attempt to compare templates of different bit lengths."""


class InsufficientOverlap(HmdIrisError):
    """Joint mask of a comparison has fewer usable bits than min_overlap."""


class TemplateFormatError(HmdIrisError):
    """Template file is corrupt or not in the expected format."""


# -- protocol / metrics ------------------------------------------------------

class SessionTooShort(HmdIrisError):
    """Identity session has too few captures for the reference/probe split."""


class EmptyPool(HmdIrisError):
    pass


class EmptyScores(HmdIrisError):
    """Metric computation requires non-empty genuine and impostor sets."""


class InvalidScore(HmdIrisError):
    """Comparison score outside [0, 1]."""


# -- pipeline stages ---------------------------------------------------------

class DatasetNotFound(DatasetError):
    pass


class MissingPreparedData(DatasetError):
    """verify/bench invoked before prepare outputs exist."""


class MissingScores(DatasetError):
    """trust invoked before the configured matcher's score dumps exist."""
