from typing import Dict, List, Optional
from pydantic import BaseModel, Field
from morphseg.domain.morpho.mappers.analyzed_line_mapper import DEFAULT_DELIMITER
from morphseg.enums.strategy_types import StrategyType


class SegmentRequestDTO(BaseModel):
    strategy: StrategyType = Field(..., description="Segmentation strategy")
    lines: List[str] = Field(default_factory=list, description="Raw or analyzed lines, depending on the strategy")
    delimiter: str = Field(DEFAULT_DELIMITER, description="Morpheme delimiter of analyzed lines")
    markers: Optional[Dict[str, str]] = Field(None, description="Marker glyph overrides (stem_join, suffix_unit, bpe_continuation)")


class DesegmentRequestDTO(BaseModel):
    lines: List[str] = Field(default_factory=list, description="Segmented lines")
    markers: Optional[Dict[str, str]] = Field(None, description="Marker glyph overrides")
    lenient: bool = Field(False, description="Strip dangling markers instead of failing")


class LinesResponseDTO(BaseModel):
    lines: List[str] = Field(..., description="Output lines, one per input line")
