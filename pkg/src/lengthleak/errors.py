"""Exception types shared across the package."""


class LengthLeakError(Exception):
    """Base class for all library errors."""


# -- corpus ingestion -------------------------------------------------------

class CorpusError(LengthLeakError):
    """Base class for corpus loading and validation errors."""


class MalformedLine(CorpusError):
    """A line of input could not be parsed in the declared format."""

    def __init__(self, line_no, text):
        self.line_no = line_no
        self.text = text
        super().__init__(f"line {line_no}: cannot parse {text!r}")


class NotSorted(CorpusError):
    """Adjacent counts increase where a non-increasing order is required."""

    def __init__(self, position, lo, hi):
        self.position = position
        super().__init__(f"counts increase at entry {position}: {lo} < {hi}")


class NegativeCount(CorpusError):
    """A count or multiplicity is negative."""

    def __init__(self, position, value):
        self.position = position
        super().__init__(f"negative count {value} at entry {position}")


class EmptyCorpus(CorpusError):
    """An operation needs a non-empty list or corpus."""


class UnknownLength(CorpusError):
    """The corpus has no sublist for the requested password length."""

    def __init__(self, length):
        self.length = length
        super().__init__(f"no passwords of length {length} in corpus")


class LengthTagsUnavailable(CorpusError):
    """Per-rank length tags are required but absent (non-plaintext corpus)."""


# -- differentially private release -----------------------------------------

class InvalidParams(LengthLeakError):
    """Privacy parameters are out of range."""


class InconsistentInput(LengthLeakError):
    """A corpus-level release needs a consistent (un-noised) corpus."""


# -- payload length inference ------------------------------------------------

class PayloadError(LengthLeakError):
    """Base class for payload-to-length mapping errors."""


class PayloadTooSmall(PayloadError):
    """Observed payload is smaller than the profile allows for one character."""


class NonIntegralLength(PayloadError):
    """Payload minus overhead is not a multiple of bytes-per-char."""


class InsufficientData(PayloadError):
    """Calibration needs at least two observations with distinct lengths."""


class InconsistentObservations(PayloadError):
    """Calibration observations do not lie on a single integer line."""


class NonIntegerProfile(PayloadError):
    """The fitted line has a non-integer, non-positive, or negative profile."""
