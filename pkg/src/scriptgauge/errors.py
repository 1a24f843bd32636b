"""Exception hierarchy shared across the toolkit.

CLI exit-code mapping: UsageError -> 1, DataError -> 2, InternalError and
anything unexpected -> 3.
"""


class ScriptgaugeError(Exception):
    """Base class for every toolkit error."""


class UsageError(ScriptgaugeError):
    """Caller misuse: bad flags, unknown names, malformed requests."""


class DataError(ScriptgaugeError):
    """Problem with input data: documents, lexicons, manifests, labels."""


class InternalError(ScriptgaugeError):
    """Invariant violated inside the toolkit; a bug, not a user error."""


# parsing

class EmptyDocument(DataError):
    pass


class MalformedEncoding(DataError):
    pass


class NoDialogue(DataError):
    pass


class InsufficientDialogue(DataError):
    """Fewer speaking characters, or fewer spoken tokens, than the run requires."""


# segmentation

class InvalidLength(DataError):
    pass


class IndexOutOfRange(DataError):
    pass


# lexicons and serialized files

class ParseError(DataError):
    def __init__(self, message, line_no=None, offset=None):
        if line_no is not None:
            message = f"line {line_no}: {message}"
        if offset is not None:
            message = f"byte {offset}: {message}"
        super().__init__(message)
        self.line_no = line_no
        self.offset = offset


class RangeError(DataError):
    pass


class EmptyLexicon(DataError):
    pass


# numeric operations

class DimensionMismatch(DataError):
    pass


class NoTokens(DataError):
    pass


class TooFewPoints(DataError):
    pass


class NoUtterances(DataError):
    pass


class EmptyCorpus(DataError):
    pass


# classifier

class TooFewDocuments(DataError):
    pass


class SingleClass(DataError):
    pass


class DegenerateInput(DataError):
    pass


class LengthMismatch(DataError):
    pass


# pipeline

class UnknownBlock(UsageError):
    pass


class UnknownFeature(UsageError):
    pass


class VersionMismatch(DataError):
    pass


class OverlappingSplit(DataError):
    pass


class EmptyEvaluation(DataError):
    pass


class StageError(DataError):
    """A per-document pipeline stage failed; carries the stage and document id."""

    def __init__(self, stage, doc_id, cause):
        super().__init__(f"stage {stage!r} failed for document {doc_id!r}: {cause}")
        self.stage = stage
        self.doc_id = doc_id
        self.cause = cause
