import logging
from typing import List, Optional, Tuple
from morphseg.domain.desegmentation.exceptions import DesegmentationStructureError
from morphseg.domain.morpho.dtos.morph_dto import RawSentence
from morphseg.domain.segmentation.dtos.segmentation_dto import MarkerConfig, SegmentedLine
from morphseg.enums.marker_kinds import MarkerKind

logger = logging.getLogger(__name__)


class DesegmentationService:
    """Resolves marker glyphs back into surface words.

    `##` and `@@` join a token with the following one, `$$` joins it with the
    preceding one. In lenient mode a marker with nothing to join with is
    stripped and reported as a warning instead of failing the line.
    """

    def __init__(self, markers: MarkerConfig = MarkerConfig(), lenient: bool = False):
        self.markers = markers
        self.lenient = lenient
        table = markers.glyph_table()
        self._glyphs: List[Tuple[str, MarkerKind]] = sorted(
            ((glyph, kind) for kind, glyph in table.items() if glyph),
            key=lambda item: len(item[0]),
            reverse=True
        )

    def classify(self, token: str) -> Tuple[str, MarkerKind]:
        for glyph, kind in self._glyphs:
            if token.endswith(glyph):
                return token[: -len(glyph)], kind
        return token, MarkerKind.PLAIN

    def desegment(self, line: SegmentedLine, line_number: Optional[int] = None) -> RawSentence:
        words: List[str] = []
        current: List[str] = []
        join_pending = False

        for index, token in enumerate(line.tokens):
            text, kind = self.classify(token)
            if kind.joins_backward and index == 0:
                self._structure_problem(index, "suffix marker on the first token has nothing to attach to", line_number)
                current.append(text)
            elif kind.joins_backward or join_pending:
                current.append(text)
            else:
                words.append("".join(current))
                current = [text]
            join_pending = kind.joins_forward

        if join_pending:
            self._structure_problem(
                len(line.tokens) - 1, "join-forward marker on the final token has nothing to attach to", line_number
            )
        words.append("".join(current))
        return RawSentence(tokens=tuple(word for word in words if word))

    def desegment_text(self, text: str, line_number: Optional[int] = None) -> str:
        return self.desegment(SegmentedLine.from_line(text), line_number).text

    def _structure_problem(self, token_index: int, detail: str, line_number: Optional[int]) -> None:
        if not self.lenient:
            raise DesegmentationStructureError(token_index, detail)
        where = f"line {line_number}, " if line_number is not None else ""
        logger.warning("%stoken %d: %s; marker stripped", where, token_index, detail)
