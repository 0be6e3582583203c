class ScheduleRangeError(ValueError):
    """This error is thrown when a schedule length falls outside the frequency grid."""
    pass


class UnsupportedDimensionError(ValueError):
    """This error is thrown when image dimensions are not positive and even."""
    pass


class ScheduleConsistencyError(ValueError):
    """This error is thrown when a frequency sample does not belong to the grid's schedule."""
    pass


class DimensionMismatchError(ValueError):
    """This error is thrown when array shapes disagree with a schedule or a model."""
    pass


class InsufficientDataError(ValueError):
    """This error is thrown when a class or dataset has no samples to work with."""
    pass


class IdxFormatError(ValueError):
    """This error is thrown when IDX data has a wrong magic number or invalid contents."""
    pass


class IdxLengthError(IdxFormatError):
    """This error is thrown when an IDX payload is truncated or has trailing bytes."""
    pass


class FeatureRangeError(ValueError):
    """This error is thrown when a classification prefix length is outside the model."""
    pass
