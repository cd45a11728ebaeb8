from typing import Optional
from morphseg.domain.exceptions import MorphsegError

class MorphException(MorphsegError):
    """Base exception for analyzed-corpus handling"""
    pass

class MorphParseError(MorphException):
    """Raised when an analyzed line cannot be split into stem and suffixes"""
    def __init__(self, detail: str, column: int, line_number: Optional[int] = None):
        self.detail = detail
        self.column = column
        self.line_number = line_number
        where = f"line {line_number}, column {column}" if line_number is not None else f"column {column}"
        super().__init__(f"{where}: {detail}", "MORPH_PARSE_ERROR")

    def at_line(self, line_number: int) -> "MorphParseError":
        return MorphParseError(self.detail, self.column, line_number)

class InvalidDelimiterError(MorphException):
    """Raised when the morpheme delimiter is not a single usable character"""
    def __init__(self, delimiter: str):
        super().__init__(
            f"Morpheme delimiter must be one non-whitespace character other than backslash, got {delimiter!r}",
            "INVALID_DELIMITER"
        )

class InvalidMorphWordError(MorphException):
    """Raised when a stem or suffix is empty or contains whitespace"""
    def __init__(self, unit: str, reason: str):
        super().__init__(f"Invalid morpheme {unit!r}: {reason}", "INVALID_MORPH_WORD")
