from typing import Any, Dict, Optional, Tuple
from pydantic import BaseModel, ConfigDict, Field, ValidationError, model_validator
from morphseg.domain.bpe.dtos.bpe_dto import BpeModel
from morphseg.domain.segmentation.exceptions import InvalidMarkerConfigError, StrategyConfigError
from morphseg.enums.marker_kinds import MarkerKind
from morphseg.enums.strategy_types import StrategyType


class MarkerConfig(BaseModel):
    """Marker glyphs appended to emitted subword units"""
    model_config = ConfigDict(frozen=True, extra="forbid")

    stem_join: str = Field("##", description="Stem followed by suffixes")
    suffix_unit: str = Field("$$", description="Suffix unit, joins backward")
    bpe_continuation: str = Field("@@", description="Non-final BPE subword")

    @model_validator(mode="after")
    def validate_glyphs(self) -> "MarkerConfig":
        glyphs = self.glyphs()
        for glyph in glyphs:
            if not glyph or any(ch.isspace() for ch in glyph):
                raise InvalidMarkerConfigError(f"Marker glyph {glyph!r} must be non-empty and whitespace-free")
        if len(set(glyphs)) != len(glyphs):
            raise InvalidMarkerConfigError(f"Marker glyphs must be pairwise distinct, got {glyphs}")
        # a glyph ending another would make marker resolution ambiguous
        for glyph in glyphs:
            for other in glyphs:
                if glyph != other and other.endswith(glyph):
                    raise InvalidMarkerConfigError(f"Marker glyph {glyph!r} is a suffix of {other!r}")
        return self

    @classmethod
    def from_overrides(cls, overrides: Optional[Dict[str, Any]]) -> "MarkerConfig":
        """Defaults updated with the given glyphs; unknown keys are rejected"""
        try:
            return cls(**(overrides or {}))
        except ValidationError as e:
            raise InvalidMarkerConfigError(f"Invalid marker configuration {overrides}: {e.errors()[0]['msg']}") from e

    def glyphs(self) -> Tuple[str, str, str]:
        return (self.stem_join, self.suffix_unit, self.bpe_continuation)

    def glyph_for(self, kind: MarkerKind) -> str:
        return self.glyph_table()[kind]

    def glyph_table(self) -> Dict[MarkerKind, str]:
        return {
            MarkerKind.STEM_JOIN: self.stem_join,
            MarkerKind.SUFFIX_UNIT: self.suffix_unit,
            MarkerKind.BPE_CONTINUATION: self.bpe_continuation,
            MarkerKind.PLAIN: "",
        }


class MarkedToken(BaseModel):
    """A subword unit and the marker it is emitted with"""
    model_config = ConfigDict(frozen=True)

    text: str = Field(..., min_length=1, description="Subword text without marker")
    marker: MarkerKind = Field(MarkerKind.PLAIN, description="Boundary marker kind")


class Strategy(BaseModel):
    """A segmentation strategy and, for BPE-bearing ones, its model"""
    model_config = ConfigDict(frozen=True)

    kind: StrategyType = Field(..., description="Segmentation strategy")
    model: Optional[BpeModel] = Field(None, description="Merge table for BPE-bearing strategies")

    @model_validator(mode="after")
    def validate_model(self) -> "Strategy":
        if self.kind.requires_model and self.model is None:
            raise StrategyConfigError(f"Strategy '{self.kind.value}' requires a BPE model")
        if not self.kind.requires_model and self.model is not None:
            raise StrategyConfigError(f"Strategy '{self.kind.value}' does not take a BPE model")
        return self


class SegmentedLine(BaseModel):
    """A rendered line of marked tokens"""
    model_config = ConfigDict(frozen=True)

    tokens: Tuple[str, ...] = Field(default=(), description="Tokens with marker glyphs as suffixes")

    @classmethod
    def from_line(cls, line: str) -> "SegmentedLine":
        return cls(tokens=tuple(line.split()))

    @property
    def text(self) -> str:
        return " ".join(self.tokens)
