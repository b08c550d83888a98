"""Exception types shared across the package."""


class NextwordError(Exception):
    """Base class for all errors raised by this package."""


# --- text normalization ---

class InvalidEncoding(NextwordError):
    """Input bytes are not valid UTF-8."""


class CyclicMap(NextwordError):
    """A codepoint map does not converge to a fixed point."""


class UnmappedCodepoint(NextwordError):
    """A letter has no entry in the transliteration tables."""

    def __init__(self, codepoint: str, token: str):
        self.codepoint = codepoint
        self.token = token
        super().__init__(
            f"no transliteration for U+{ord(codepoint):04X} ({codepoint!r}) in token {token!r}"
        )


# --- counting and probabilities ---

class OrderOutOfRange(NextwordError):
    """Requested n-gram order outside 1..max_order."""


class MarkerCollision(NextwordError):
    """A cleaned token equals a reserved boundary marker."""


class ContextTooLong(NextwordError):
    """Context longer than max_order - 1 tokens."""


class UndefinedDistribution(NextwordError):
    """The conditioning context has count zero; no distribution exists."""


# --- prediction ---

class EmptyModel(NextwordError):
    """Model has no usable tables."""


# --- persistence ---

class IoFailure(NextwordError):
    """Underlying filesystem operation failed."""


class WriteCollision(NextwordError):
    """Target directory already holds a model and overwrite was not requested."""


class MissingFile(NextwordError):
    """A required model file is absent."""


class CorruptRow(NextwordError):
    """A table row failed to parse or violated a table invariant."""

    def __init__(self, path, line_number: int, reason: str):
        self.path = path
        self.line_number = line_number
        self.reason = reason
        super().__init__(f"{path}:{line_number}: {reason}")


class VersionMismatch(NextwordError):
    """Manifest format version is not understood by this loader."""


class TableMismatch(NextwordError):
    """Table file disagrees with the manifest (row count, totals, or missing order)."""


# --- evaluation ---

class EmptyTestSet(NextwordError):
    """No test sentences to evaluate."""


class InsufficientCorpus(NextwordError):
    """Corpus too small for the requested benchmark sizes."""
