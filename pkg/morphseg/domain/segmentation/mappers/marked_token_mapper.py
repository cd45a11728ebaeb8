from typing import Iterable, List
from morphseg.domain.segmentation.dtos.segmentation_dto import MarkedToken, MarkerConfig, SegmentedLine


def map_marked_token_to_text(token: MarkedToken, markers: MarkerConfig) -> str:
    return token.text + markers.glyph_for(token.marker)


def map_marked_tokens_to_segmented_line(tokens: Iterable[MarkedToken], markers: MarkerConfig) -> SegmentedLine:
    return SegmentedLine(tokens=tuple(map_marked_token_to_text(token, markers) for token in tokens))


def render_tokens(tokens: Iterable[MarkedToken], markers: MarkerConfig) -> str:
    """Rendered output line: marker glyphs appended, single spaces between tokens"""
    return " ".join(map_marked_token_to_text(token, markers) for token in tokens)


def map_tokens_to_texts(tokens: Iterable[MarkedToken], markers: MarkerConfig) -> List[str]:
    return [map_marked_token_to_text(token, markers) for token in tokens]
