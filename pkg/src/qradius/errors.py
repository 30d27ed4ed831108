"""Exception hierarchy shared by every module."""


class QRadiusError(ValueError):
    """Base class for all domain errors raised by :mod:`qradius`."""


class DimensionError(QRadiusError):
    """Vectors, matrices or Gram weights have incompatible or too small dimensions."""


class DegenerateInputError(QRadiusError):
    """Input is degenerate for the requested quantity (zero vector, zero operator)."""


class ParameterError(QRadiusError):
    """A scalar parameter lies outside its admissible range."""
