"""Exception hierarchy.

Errors fall into three families that the command line maps onto exit codes:
data errors (bad or inconsistent input files), model errors (a fit cannot be
carried out) and scenario errors (invalid what-if parameters).
"""


class TechParkError(Exception):
    """Base class for every error raised by this package."""


class DataError(TechParkError):
    pass


class ModelError(TechParkError):
    pass


class ScenarioError(TechParkError, ValueError):
    pass


# -- data ------------------------------------------------------------------


class MalformedRow(DataError):
    def __init__(self, line: int, message: str):
        self.line = line
        super().__init__(f"line {line}: {message}")


class MissingColumns(DataError):
    pass


class DuplicateYear(DataError):
    def __init__(self, year: int, line: int | None = None):
        self.year = year
        where = f"line {line}: " if line is not None else ""
        super().__init__(f"{where}duplicate year {year}")


class NonPositiveInflation(DataError):
    def __init__(self, year: int, value: float, line: int | None = None):
        self.year = year
        where = f"line {line}: " if line is not None else ""
        super().__init__(f"{where}inflation factor for {year} must be > 0, got {value!r}")


class CategoryExceedsTotal(DataError):
    pass


class MissingBaseYear(DataError):
    pass


class GapInYears(DataError):
    pass


class MissingNominal(DataError):
    pass


class MissingYearData(DataError):
    pass


# -- models ----------------------------------------------------------------


class InsufficientData(ModelError):
    def __init__(self, message: str, model: str | None = None):
        self.model = model
        if model is not None:
            message = f"{model}: {message}"
        super().__init__(message)


class DegenerateDesign(ModelError):
    pass


class AllZeroRegressor(ModelError):
    pass


class ShareOutOfRange(ModelError, ValueError):
    pass


class NoYearOverlap(ModelError):
    pass


class ZeroIncludedCount(ModelError):
    pass


# -- scenarios -------------------------------------------------------------


class KOutOfRange(ScenarioError):
    pass


class BetaOutOfRange(ScenarioError):
    pass
