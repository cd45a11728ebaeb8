import logging
from typing import Iterable, Iterator, Tuple, Union
from morphseg.domain.morpho.dtos.morph_dto import AnalyzedSentence, RawSentence
from morphseg.domain.morpho.exceptions import MorphParseError
from morphseg.domain.morpho.mappers.analyzed_line_mapper import (
    DEFAULT_DELIMITER,
    map_analyzed_line_to_sentence,
    map_sentence_to_analyzed_line,
    validate_delimiter,
)

logger = logging.getLogger(__name__)

ParsedLine = Tuple[int, Union[AnalyzedSentence, MorphParseError]]


class MorphoService:
    """Analyzed-corpus codec bound to one delimiter"""

    def __init__(self, delimiter: str = DEFAULT_DELIMITER):
        self.delimiter = validate_delimiter(delimiter)

    def parse_analyzed_line(self, line: str, line_number: int = None) -> AnalyzedSentence:
        try:
            return map_analyzed_line_to_sentence(line, self.delimiter)
        except MorphParseError as e:
            if line_number is None:
                raise
            raise e.at_line(line_number) from e

    def serialize_analyzed(self, sentence: AnalyzedSentence) -> str:
        return map_sentence_to_analyzed_line(sentence, self.delimiter)

    @staticmethod
    def parse_raw_line(line: str) -> RawSentence:
        return RawSentence.from_line(line)

    def read_analyzed_corpus(self, lines: Iterable[str]) -> Iterator[ParsedLine]:
        """Yields (line_number, sentence) or (line_number, error); never stops on a bad line"""
        for line_number, line in enumerate(lines, start=1):
            try:
                yield line_number, self.parse_analyzed_line(line, line_number)
            except MorphParseError as e:
                yield line_number, e

    def iter_analyzed(self, lines: Iterable[str]) -> Iterator[AnalyzedSentence]:
        """Strict variant: the first malformed line raises"""
        for line_number, parsed in self.read_analyzed_corpus(lines):
            if isinstance(parsed, MorphParseError):
                raise parsed
            yield parsed
