from enum import Enum

class StrategyType(str, Enum):
    """Segmentation strategies"""
    RAW = "raw"
    SCS = "scs"            # stem with combined suffix
    SSS = "sss"            # stem with singular suffix
    BPE = "bpe"
    BPE_SCS = "bpe-scs"    # BPE on stem, combined suffix
    BPE_SSS = "bpe-sss"    # BPE on stem, singular suffixes

    @classmethod
    def parse(cls, name: str) -> "StrategyType":
        """Accepts 'BPE_SSS', 'bpe-sss', 'Bpe-Sss'..."""
        normalized = name.strip().lower().replace("_", "-")
        for member in cls:
            if member.value == normalized:
                return member
        raise ValueError(f"Unknown segmentation strategy '{name}'")

    @property
    def requires_model(self) -> bool:
        return self in (StrategyType.BPE, StrategyType.BPE_SCS, StrategyType.BPE_SSS)

    @property
    def reads_analyzed(self) -> bool:
        """Whether the strategy consumes analyzed-corpus input"""
        return self not in (StrategyType.RAW, StrategyType.BPE)

    @property
    def learns_on_stems(self) -> bool:
        return self in (StrategyType.BPE_SCS, StrategyType.BPE_SSS)
