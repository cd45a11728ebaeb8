import re
from typing import Iterator, List, Tuple
from morphseg.domain.morpho.dtos.morph_dto import AnalyzedSentence, MorphWord
from morphseg.domain.morpho.exceptions import InvalidDelimiterError, MorphParseError

ESCAPE = "\\"
DEFAULT_DELIMITER = "+"

_TOKEN_RE = re.compile(r"\S+")


def validate_delimiter(delimiter: str) -> str:
    if len(delimiter) != 1 or delimiter.isspace() or delimiter == ESCAPE:
        raise InvalidDelimiterError(delimiter)
    return delimiter


def _tokens_with_columns(line: str) -> Iterator[Tuple[int, str]]:
    for match in _TOKEN_RE.finditer(line):
        yield match.start() + 1, match.group()


def _split_token(token: str, column: int, delimiter: str) -> List[str]:
    """Split one token on unescaped delimiters; columns are 1-based"""
    if all(ch == delimiter for ch in token):
        raise MorphParseError(f"token {token!r} consists only of the delimiter", column)

    units: List[str] = []
    current: List[str] = []
    i = 0
    while i < len(token):
        ch = token[i]
        if ch == ESCAPE and i + 1 < len(token) and token[i + 1] in (delimiter, ESCAPE):
            current.append(token[i + 1])
            i += 2
            continue
        if ch == delimiter:
            if not current:
                raise MorphParseError(f"empty morpheme in token {token!r}", column + i)
            units.append("".join(current))
            current = []
        else:
            current.append(ch)
        i += 1

    if not current:
        # trailing delimiter
        raise MorphParseError(f"empty morpheme in token {token!r}", column + len(token) - 1)
    units.append("".join(current))
    return units


def map_analyzed_line_to_sentence(line: str, delimiter: str = DEFAULT_DELIMITER) -> AnalyzedSentence:
    """Parse one analyzed-corpus line: tokens split on whitespace, morphemes on the delimiter"""
    validate_delimiter(delimiter)
    words = []
    for column, token in _tokens_with_columns(line):
        units = _split_token(token, column, delimiter)
        words.append(MorphWord(stem=units[0], suffixes=tuple(units[1:])))
    return AnalyzedSentence(words=tuple(words))


def _escape(unit: str, delimiter: str) -> str:
    return unit.replace(ESCAPE, ESCAPE + ESCAPE).replace(delimiter, ESCAPE + delimiter)


def map_morph_word_to_token(word: MorphWord, delimiter: str = DEFAULT_DELIMITER) -> str:
    return delimiter.join(_escape(unit, delimiter) for unit in (word.stem, *word.suffixes))


def map_sentence_to_analyzed_line(sentence: AnalyzedSentence, delimiter: str = DEFAULT_DELIMITER) -> str:
    validate_delimiter(delimiter)
    return " ".join(map_morph_word_to_token(word, delimiter) for word in sentence.words)
