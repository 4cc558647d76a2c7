"""Exception types shared across the pipeline.

Every error the toolkit raises derives from SevbenchError so the CLI can
map any failure to a single machine-parseable error report.
"""

from __future__ import annotations


class SevbenchError(Exception):
    """Base class for all toolkit errors."""


class EmptyInput(SevbenchError):
    """An operation that requires at least one record received none."""


class MalformedEntry(SevbenchError):
    """A single export entry could not be normalized.

    Collected per record during parsing (with the source line number)
    rather than aborting the stream.
    """

    def __init__(self, line: int, reason: str) -> None:
        super().__init__(f"line {line}: {reason}")
        self.line = line
        self.reason = reason


class UnlabeledRecord(SevbenchError):
    """A record without a severity label reached a labels-required operation."""


class InsufficientSupply(SevbenchError):
    """The sampling budget cannot be met by the available records."""


class MissingLabel(SevbenchError):
    """A labeled rendering was requested for an unlabeled record."""


class BackendUnavailable(SevbenchError):
    """The embedding backend could not be reached or kept failing."""


class DimensionMismatch(SevbenchError):
    """A vector's dimension does not match the configured/stored dimension."""


class PartialBatch(SevbenchError):
    """The embedding backend returned fewer vectors than inputs."""


class DuplicateId(SevbenchError):
    """Two index entries share a record id."""


class CorruptIndex(SevbenchError):
    """An index file failed its magic, structure, or checksum validation."""


class ExemplarFromEvalSplit(SevbenchError):
    """A few-shot exemplar was drawn from the evaluation split (leakage)."""


class EmptyNeighbors(SevbenchError):
    """A RAG prompt was requested with no retrieved neighbors."""


class EndpointTimeout(SevbenchError):
    """The chat-completions request exceeded the configured timeout."""


class TransportError(SevbenchError):
    """The chat-completions request failed at the transport or protocol level."""


class LengthMismatch(SevbenchError):
    """Prediction and label sequences differ in length."""


class SplitMismatch(SevbenchError):
    """An index or exemplar set does not belong to the split being evaluated."""
