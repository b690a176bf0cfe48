"""Exception types shared across the package."""


class SpamvisionError(Exception):
    """Base class for all package-specific errors."""


class MalformedHeaders(SpamvisionError):
    """Email file has no header/body separator and no parseable header line."""


class ContentOverflow(SpamvisionError):
    """Rendered content exceeded the configured maximum canvas height."""


class EmptyVocab(SpamvisionError):
    """No token survived the document-frequency cutoff."""


class DegenerateLabels(SpamvisionError):
    """Training data contains only one class."""


class VocabMismatch(SpamvisionError):
    """Feature vector indices exceed the model's vocabulary size."""


class ShapeMismatch(SpamvisionError):
    """Input tensor shape does not match the network architecture."""


class NonFinite(SpamvisionError):
    """Training loss became NaN or infinite (divergent learning rate)."""


class TooFewSamples(SpamvisionError):
    """Not enough samples per class for the requested split or fold count."""


class LengthMismatch(SpamvisionError):
    """Prediction and label sequences have different lengths."""


class ManifestMismatch(SpamvisionError):
    """Corpus directory does not match its labels.tsv manifest."""


class IoFailure(SpamvisionError):
    """Filesystem write failed while emitting a corpus."""
