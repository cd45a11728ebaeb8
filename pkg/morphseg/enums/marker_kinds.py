from enum import Enum

class MarkerKind(str, Enum):
    """Boundary marker attached to an emitted subword unit"""
    STEM_JOIN = "stem_join"                # "##" stem followed by suffixes
    SUFFIX_UNIT = "suffix_unit"            # "$$" suffix, joins backward
    BPE_CONTINUATION = "bpe_continuation"  # "@@" non-final BPE subword
    PLAIN = "plain"                        # no marker

    @property
    def joins_forward(self) -> bool:
        return self in (MarkerKind.STEM_JOIN, MarkerKind.BPE_CONTINUATION)

    @property
    def joins_backward(self) -> bool:
        return self is MarkerKind.SUFFIX_UNIT
