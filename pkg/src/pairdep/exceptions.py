"""Exception hierarchy shared across the package."""


class PairdepError(Exception):
    """Base class for all errors raised by pairdep."""


class DataValidationError(PairdepError, ValueError):
    """Input violates a contract: wrong shape, non-finite values, too few rows."""


class DegenerateDataError(PairdepError, ValueError):
    """Input is constant or otherwise carries no usable variation."""


class CsvFormatError(PairdepError, ValueError):
    """A CSV file could not be parsed; the message names the offending location."""


class StatisticEvaluationError(PairdepError, RuntimeError):
    """A statistic failed while being evaluated on a permutation replicate."""


class InternalConsistencyError(PairdepError, RuntimeError):
    """A numerical invariant that should hold by construction was violated."""
