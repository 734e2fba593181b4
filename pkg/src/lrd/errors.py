"""Exception taxonomy.

Three branches, matching the CLI exit-code contract:

* ``ValidationError`` - malformed input, bad parameters, parse failures
  (exit code 1),
* ``DegeneracyError``  - structurally valid input on which a quantity is
  numerically undefined, e.g. zero volatility or zero kernel mass
  (exit code 2),
* ``IoError``          - filesystem problems (exit code 3).
"""


class LRDError(Exception):
    """Base class for all errors raised by this package."""


class ValidationError(LRDError):
    """Input or parameter failed validation."""


class DegeneracyError(LRDError):
    """A quantity is numerically undefined for this input."""


class IoError(LRDError):
    """Reading or writing a file failed."""


# -- series validation -------------------------------------------------------

class TooShort(ValidationError):
    """Fewer than two samples."""


class NonFinite(ValidationError):
    """A sample is NaN or infinite; ``index`` locates the first offender."""

    def __init__(self, index: int):
        self.index = index
        super().__init__(f"non-finite value at index {index}")


class LabelMismatch(ValidationError):
    """Label column is the wrong length, out of order, or not ISO dates."""


# -- decomposition ------------------------------------------------------------

class HorizonTooSmall(ValidationError):
    """Horizon below the two-sample minimum needed for a linear fit."""


class HorizonTooLarge(ValidationError):
    """Horizon exceeds the series length."""


class DegenerateBox(ValidationError):
    """Box too short to fit a line through."""


class InsufficientBoxes(DegeneracyError):
    """A horizon yields fewer than two boxes, so box averages are undefined."""


# -- measures -----------------------------------------------------------------

class ZeroVolatility(DegeneracyError):
    """Return standard deviation at or below the floor; ratio undefined."""


class ZeroMeanRisk(DegeneracyError):
    """Mean local risk at or below the floor; scaling factor undefined."""


class ZeroFieldSpread(DegeneracyError):
    """Field has zero spread across cells; normalization undefined."""


# -- kernels ------------------------------------------------------------------

class ZeroKernelMass(DegeneracyError):
    """Every cell is either degenerate or gets zero kernel weight."""


# -- resampling ---------------------------------------------------------------

class TooFewUnits(DegeneracyError):
    """Jackknife needs at least two resampling units."""


class EstimatorFailure(DegeneracyError):
    """A leave-one-out replicate raised; ``index`` is the deleted unit."""

    def __init__(self, index: int, cause: Exception):
        self.index = index
        super().__init__(f"estimator failed on replicate {index}: {cause}")


# -- synthesis ----------------------------------------------------------------

class SpecInvalid(ValidationError):
    """Synthetic-series specification is inconsistent."""


# -- files and CLI ------------------------------------------------------------

class ParseError(ValidationError):
    """A file failed to parse; ``line`` is the 1-based offending line."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class UsageError(ValidationError):
    """Bad command-line arguments or configuration."""
