from typing import Iterable, List
from morphseg.domain.bpe.dtos.bpe_dto import BpeModel, MergeRule, Symbol
from morphseg.domain.bpe.exceptions import BpeModelFormatError, BpeModelWriteError

FORMAT_NAME = "#morphseg-bpe"
FORMAT_VERSION = 1
EOW_SUFFIX = "</w>"


def _encode_symbol(symbol: Symbol) -> str:
    if symbol.eow:
        return symbol.text + EOW_SUFFIX
    if symbol.text.endswith(EOW_SUFFIX):
        raise BpeModelWriteError(symbol.text)
    return symbol.text


def _decode_symbol(field: str, line_number: int) -> Symbol:
    if field.endswith(EOW_SUFFIX):
        text = field[: -len(EOW_SUFFIX)]
        if not text:
            raise BpeModelFormatError("end-of-word marker without symbol text", line_number)
        return Symbol(text, True)
    return Symbol(field, False)


def map_model_to_lines(model: BpeModel) -> List[str]:
    """Header line followed by one 'left right' line per merge"""
    lines = [f"{FORMAT_NAME} {model.version}"]
    for rule in model.merges:
        lines.append(f"{_encode_symbol(rule.left)} {_encode_symbol(rule.right)}")
    return lines


def map_lines_to_model(lines: Iterable[str]) -> BpeModel:
    iterator = iter(lines)
    header = next(iterator, None)
    if header is None:
        raise BpeModelFormatError("missing header", 1)

    parts = header.rstrip("\r\n").split(" ")
    if len(parts) != 2 or parts[0] != FORMAT_NAME:
        raise BpeModelFormatError(f"expected header '{FORMAT_NAME} <version>', got {header.rstrip()!r}", 1)
    if not parts[1].isdigit() or int(parts[1]) != FORMAT_VERSION:
        raise BpeModelFormatError(f"unsupported model version {parts[1]!r}", 1)

    merges = []
    seen = set()
    for line_number, line in enumerate(iterator, start=2):
        fields = line.rstrip("\r\n").split(" ")
        if len(fields) != 2 or not all(fields) or any(ch.isspace() for f in fields for ch in f):
            raise BpeModelFormatError(f"malformed merge line {line.rstrip()!r}", line_number)
        rule = MergeRule(_decode_symbol(fields[0], line_number), _decode_symbol(fields[1], line_number))
        if rule in seen:
            raise BpeModelFormatError(f"duplicate merge {line.rstrip()!r}", line_number)
        seen.add(rule)
        merges.append(rule)

    return BpeModel(merges=tuple(merges), version=int(parts[1]))
