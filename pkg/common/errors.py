from __future__ import annotations


class SharpstabError(ValueError):
    """Base class of every user-facing error raised by sharpstab."""


class PartitionSyntaxError(SharpstabError):
    pass


class InvalidPartitionError(SharpstabError):
    pass


class EmptyPartitionError(SharpstabError):
    pass


class SizeMismatchError(SharpstabError):
    pass


class DegreeRangeError(SharpstabError):
    pass


class ReducedDataError(SharpstabError):
    pass


class HypothesisError(SharpstabError):
    pass


class NegativeOffsetError(SharpstabError):
    pass


class VariableCountError(SharpstabError):
    pass


class OracleRangeError(SharpstabError):
    pass


class CacheFormatError(SharpstabError):
    def __init__(self, path: str, line_no: int, reason: str) -> None:
        super().__init__(f"{path}:{line_no}: {reason}")
        self.path = path
        self.line_no = line_no
