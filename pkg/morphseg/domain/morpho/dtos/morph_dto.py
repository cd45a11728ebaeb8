from typing import Tuple
from pydantic import BaseModel, ConfigDict, Field, field_validator
from morphseg.domain.morpho.exceptions import InvalidMorphWordError


def _check_unit(unit: str) -> str:
    if not unit:
        raise InvalidMorphWordError(unit, "morpheme must be non-empty")
    if any(ch.isspace() for ch in unit):
        raise InvalidMorphWordError(unit, "contains whitespace")
    return unit


class MorphWord(BaseModel):
    """A surface word decomposed into one stem and zero or more suffixes"""
    model_config = ConfigDict(frozen=True)

    stem: str = Field(..., description="Leading morpheme carrying the lexical meaning")
    suffixes: Tuple[str, ...] = Field(default=(), description="Suffix morphemes in surface order")

    @field_validator("stem")
    @classmethod
    def validate_stem(cls, v: str) -> str:
        return _check_unit(v)

    @field_validator("suffixes")
    @classmethod
    def validate_suffixes(cls, v: Tuple[str, ...]) -> Tuple[str, ...]:
        for suffix in v:
            _check_unit(suffix)
        return v

    @property
    def has_suffixes(self) -> bool:
        return bool(self.suffixes)

    @property
    def combined_suffix(self) -> str:
        return "".join(self.suffixes)

    def canonical_surface(self) -> str:
        return self.stem + self.combined_suffix


class RawSentence(BaseModel):
    """A line of whitespace-free tokens"""
    model_config = ConfigDict(frozen=True)

    tokens: Tuple[str, ...] = Field(default=(), description="Tokens in line order")

    @field_validator("tokens")
    @classmethod
    def validate_tokens(cls, v: Tuple[str, ...]) -> Tuple[str, ...]:
        for token in v:
            if not token or any(ch.isspace() for ch in token):
                raise ValueError(f"token {token!r} must be non-empty and whitespace-free")
        return v

    @classmethod
    def from_line(cls, line: str) -> "RawSentence":
        return cls(tokens=tuple(line.split()))

    @property
    def text(self) -> str:
        return " ".join(self.tokens)


class AnalyzedSentence(BaseModel):
    """A line of morphologically analyzed words; may be empty"""
    model_config = ConfigDict(frozen=True)

    words: Tuple[MorphWord, ...] = Field(default=(), description="Analyzed words in line order")

    def surface_sentence(self) -> RawSentence:
        """Sentence of canonical surfaces, the target of every round trip"""
        return RawSentence(tokens=tuple(word.canonical_surface() for word in self.words))
