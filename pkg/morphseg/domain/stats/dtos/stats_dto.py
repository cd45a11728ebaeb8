import math
from fractions import Fraction
from typing import List, Optional
from pydantic import BaseModel, ConfigDict, Field, computed_field


class CorpusStats(BaseModel):
    """Token and type counts over a line corpus"""
    model_config = ConfigDict(frozen=True)

    label: Optional[str] = Field(None, description="Corpus or strategy name")
    sentences: int = Field(..., ge=0, description="Number of lines")
    tokens: int = Field(..., ge=0, description="Whitespace-delimited tokens")
    vocabulary: int = Field(..., ge=0, description="Distinct token types, markers included")

    def average_length_exact(self) -> Fraction:
        if self.sentences == 0:
            return Fraction(0)
        return Fraction(self.tokens, self.sentences)

    @computed_field
    @property
    def average_length_defined(self) -> bool:
        return self.sentences > 0

    @computed_field
    @property
    def average_length(self) -> float:
        return float(self.average_length_exact())

    @computed_field
    @property
    def average_length_rounded(self) -> int:
        # half-up: 18.73 -> 19, 18.5 -> 19
        return math.floor(self.average_length_exact() + Fraction(1, 2))


class MorphStats(BaseModel):
    """Type inventories of an analyzed corpus"""
    model_config = ConfigDict(frozen=True)

    label: Optional[str] = Field(None, description="Corpus name")
    stem_types: int = Field(..., ge=0, description="Distinct stems")
    combined_suffix_types: int = Field(..., ge=0, description="Distinct non-empty full suffix sequences")
    singular_suffix_types: int = Field(..., ge=0, description="Distinct individual suffixes")


class SweepRow(BaseModel):
    """Vocabulary produced by one merge count"""
    model_config = ConfigDict(frozen=True)

    merges: int = Field(..., ge=0, description="Requested merge operations")
    learned_merges: int = Field(..., ge=0, description="Merges actually available (learner may stop early)")
    vocabulary: int = Field(..., ge=0, description="Distinct emitted token types")
    symbol_types: int = Field(..., ge=0, description="Distinct BPE symbols over the learning dictionary")
    symbol_bound: int = Field(..., ge=0, description="Initial symbol types + merges")


class StatsRequestDTO(BaseModel):
    lines: List[str] = Field(default_factory=list, description="Corpus lines")
    label: Optional[str] = Field(None, description="Name reported with the counts")
