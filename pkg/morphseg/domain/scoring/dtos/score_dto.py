from typing import List
from pydantic import BaseModel, ConfigDict, Field
from morphseg.enums.metric_types import MetricType


class ScoredPair(BaseModel):
    """One hypothesis line and its single reference"""
    model_config = ConfigDict(frozen=True)

    hypothesis: str = Field("", description="System output line (may be empty)")
    reference: str = Field(..., description="Reference translation line")


class ScoreResult(BaseModel):
    """Corpus-level score"""
    model_config = ConfigDict(frozen=True)

    metric: MetricType = Field(..., description="Metric used")
    score: float = Field(..., ge=0.0, le=100.0, description="Score on a 0-100 scale")
    sentences: int = Field(..., ge=0, description="Number of scored pairs")

    def display(self) -> str:
        return f"{self.score:.1f}"


class ScoreRequestDTO(BaseModel):
    metric: MetricType = Field(MetricType.BLEU, description="bleu or chrf3")
    hypotheses: List[str] = Field(default_factory=list, description="System output lines")
    references: List[str] = Field(default_factory=list, description="Reference lines, aligned with hypotheses")
