from typing import Optional
from morphseg.domain.exceptions import MorphsegError

class BpeException(MorphsegError):
    """Base exception for BPE learning, application and model files"""
    pass

class BpeModelFormatError(BpeException):
    """Raised when a model file is malformed"""
    def __init__(self, detail: str, line_number: Optional[int] = None):
        self.detail = detail
        self.line_number = line_number
        prefix = f"line {line_number}: " if line_number is not None else ""
        super().__init__(f"{prefix}{detail}", "BPE_MODEL_FORMAT_ERROR")

class BpeModelWriteError(BpeException):
    """Raised when a model holds a symbol the file format cannot represent"""
    def __init__(self, symbol: str):
        super().__init__(
            f"Symbol {symbol!r} ends with the end-of-word suffix and cannot be written",
            "BPE_MODEL_WRITE_ERROR"
        )

class BpeInputError(BpeException):
    """Raised when a word handed to the BPE applier is empty or contains whitespace"""
    def __init__(self, word: str):
        super().__init__(f"BPE input must be a non-empty whitespace-free word, got {word!r}", "BPE_INPUT_ERROR")
