from collections import Counter
from typing import Dict, Iterable, NamedTuple, Tuple
from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator


class Symbol(NamedTuple):
    """A BPE symbol; `eow` marks the final symbol of a word"""
    text: str
    eow: bool = False


class MergeRule(NamedTuple):
    left: Symbol
    right: Symbol

    @property
    def merged(self) -> Symbol:
        return Symbol(self.left.text + self.right.text, self.right.eow)


def word_to_symbols(word: str) -> Tuple[Symbol, ...]:
    """Character sequence with the end-of-word flag on the last character"""
    last = len(word) - 1
    return tuple(Symbol(ch, i == last) for i, ch in enumerate(word))


class FrequencyDictionary(BaseModel):
    """Word (or stem) type -> occurrence count"""
    model_config = ConfigDict(frozen=True)

    entries: Dict[str, int] = Field(default_factory=dict, description="Type counts")

    @field_validator("entries")
    @classmethod
    def validate_entries(cls, v: Dict[str, int]) -> Dict[str, int]:
        for key, count in v.items():
            if not key or any(ch.isspace() for ch in key):
                raise ValueError(f"dictionary key {key!r} must be non-empty and whitespace-free")
            if count < 1:
                raise ValueError(f"count for {key!r} must be positive, got {count}")
        return v

    @classmethod
    def from_tokens(cls, tokens: Iterable[str]) -> "FrequencyDictionary":
        return cls(entries=dict(Counter(tokens)))

    def __len__(self) -> int:
        return len(self.entries)

    @property
    def total(self) -> int:
        return sum(self.entries.values())


class BpeModel(BaseModel):
    """Ordered merge table"""
    model_config = ConfigDict(frozen=True)

    merges: Tuple[MergeRule, ...] = Field(default=(), description="Merge rules in learning order")
    version: int = Field(1, ge=1, description="Model format version")

    @model_validator(mode="after")
    def validate_merges(self) -> "BpeModel":
        seen = set()
        for rule in self.merges:
            if not rule.left.text or not rule.right.text:
                raise ValueError(f"merge {rule} has an empty symbol")
            if rule in seen:
                raise ValueError(f"duplicate merge ({rule.left.text}, {rule.right.text})")
            seen.add(rule)
        return self

    def __len__(self) -> int:
        return len(self.merges)

    def truncate(self, k: int) -> "BpeModel":
        """Model made of the first k merges"""
        return BpeModel(merges=self.merges[:k], version=self.version)


class SymbolSequence(BaseModel):
    """Result of applying a model to one word"""
    model_config = ConfigDict(frozen=True)

    symbols: Tuple[Symbol, ...] = Field(default=(), description="Subword symbols; the last one carries eow")

    @property
    def texts(self) -> Tuple[str, ...]:
        return tuple(symbol.text for symbol in self.symbols)

    def surface(self) -> str:
        return "".join(self.texts)

    def __len__(self) -> int:
        return len(self.symbols)
