from typing import Optional
from morphseg.domain.exceptions import MorphsegError

class SegmentationException(MorphsegError):
    """Base exception for the segmentation strategies"""
    pass

class MarkerCollisionError(SegmentationException):
    """Raised when input text already contains one of the marker glyphs"""
    def __init__(self, text: str, glyph: str, token_index: Optional[int] = None):
        self.text = text
        self.glyph = glyph
        self.token_index = token_index
        where = f"token {token_index}: " if token_index is not None else ""
        super().__init__(
            f"{where}{text!r} contains the marker glyph {glyph!r}; choose different markers for this corpus",
            "MARKER_COLLISION"
        )

    def at_token(self, token_index: int) -> "MarkerCollisionError":
        return MarkerCollisionError(self.text, self.glyph, token_index)

class InvalidMarkerConfigError(SegmentationException):
    """Raised when marker glyphs are empty, contain whitespace or are not pairwise distinct"""
    def __init__(self, detail: str):
        super().__init__(detail, "INVALID_MARKER_CONFIG")

class StrategyConfigError(SegmentationException):
    """Raised when a BPE strategy lacks a model or a morphological one is given a model"""
    def __init__(self, detail: str):
        super().__init__(detail, "STRATEGY_CONFIG_ERROR")

class StrategyInputError(SegmentationException):
    """Raised when a strategy receives the wrong kind of sentence"""
    def __init__(self, strategy: str, expected: str):
        super().__init__(f"Strategy '{strategy}' expects {expected} input", "STRATEGY_INPUT_ERROR")
