"""Exception hierarchy for the hra package.

Everything raised on purpose derives from HraError so callers can catch one
type; the subclasses mirror the distinct failure conditions of the public
operations.
"""


class HraError(Exception):
    """Base class for all errors raised by this package."""


# -- validation -------------------------------------------------------------

class ShapeMismatch(HraError):
    """Array/label/weight lengths do not agree."""


class DomainViolation(HraError):
    """A matrix value falls outside its criterion's fixed domain."""


class DegenerateDomain(HraError):
    """Criterion domain has d1 >= d2."""


class ZeroUpperBound(HraError):
    """Criterion domain upper bound d2 <= 0; the d1/d2 anchor is undefined."""


class DegenerateIdeals(HraError):
    """S+ + S- is zero for some alternative, so closeness is undefined."""


class InvalidWeights(HraError):
    """Weights are not all positive or do not sum to 1 within tolerance."""


class NonFiniteValue(HraError):
    """A NaN or infinity appeared where a finite number is required."""


class MissingCell(HraError):
    """A dataset lacks values for one or more (dimension, measure,
    algorithm, function) tuples."""

    def __init__(self, missing):
        self.missing = list(missing)
        preview = ", ".join(map(str, self.missing[:5]))
        more = "" if len(self.missing) <= 5 else f" and {len(self.missing) - 5} more"
        super().__init__(f"dataset is missing {len(self.missing)} cell(s): {preview}{more}")


class EmptyRuns(HraError):
    """A run list is empty; statistics are undefined."""


class InconsistentStatistics(HraError):
    """Statistic values violate best <= median/mean <= worst or std >= 0."""


# -- parsing ----------------------------------------------------------------

class ParseError(HraError):
    """Malformed input file; message carries row/column diagnostics."""


class DuplicateTuple(HraError):
    """The same dataset cell appears twice in one file."""


class EmptyMatrix(HraError):
    """A matrix file contains no data rows or no criterion columns."""


# -- I/O and network --------------------------------------------------------

class IoError(HraError):
    """Filesystem operation failed."""


class NetworkError(HraError):
    """Download failed."""


class ChecksumMismatch(HraError):
    """Fetched file does not match its inventory checksum."""


class UnknownLayout(HraError):
    """Raw run file does not match any supported layout."""
