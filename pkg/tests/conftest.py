from typing import List, Sequence, Tuple
import pytest
from morphseg.domain.bpe.dtos.bpe_dto import BpeModel, MergeRule, Symbol
from morphseg.domain.morpho.dtos.morph_dto import AnalyzedSentence, MorphWord
from morphseg.domain.segmentation.dtos.segmentation_dto import MarkerConfig
from morphseg.services.segmentation_service import SegmentationService

RAW_SENTENCE = "küçük fagernes kasabasındayım , oslo'dan yaklaşık üç saat uzakta ."
ANALYZED_SENTENCE = "küçük fagernes kasaba+sı+nda+yım , oslo+dan yaklaşık üç saat uzak+ta ."

EXPECTED_ROWS = {
    "raw": RAW_SENTENCE,
    "scs": "küçük fagernes kasaba## sındayım$$ , oslo## dan$$ yaklaşık üç saat uzak## ta$$ .",
    "sss": "küçük fagernes kasaba## sı$$ nda$$ yım$$ , oslo## dan$$ yaklaşık üç saat uzak## ta$$ .",
    "bpe": "küçük fa@@ ger@@ nes kasaba@@ sın@@ dayım , oslo@@ 'dan yaklaşık üç saat uzakta .",
    "bpe-scs": "küçük fa@@ ger@@ nes kasaba## sındayım$$ , oslo## dan$$ yaklaşık üç saat uzak## ta$$ .",
    "bpe-sss": "küçük fa@@ ger@@ nes kasaba## sı$$ nda$$ yım$$ , oslo## dan$$ yaklaşık üç saat uzak## ta$$ .",
}


ALPHABET = "abcçdefgğhıijklmnoöprsştuüvyzäπжк'-.,0"


def random_sentence(rng) -> AnalyzedSentence:
    words = []
    for _ in range(rng.randint(0, 8)):
        units = ["".join(rng.choice(ALPHABET) for _ in range(rng.randint(1, 6))) for _ in range(rng.randint(1, 7))]
        words.append(MorphWord(stem=units[0], suffixes=tuple(units[1:])))
    return AnalyzedSentence(words=tuple(words))


def chain(*segments: str) -> List[MergeRule]:
    """Merges building each segment left to right; the last segment ends the word"""
    rules = []
    for position, segment in enumerate(segments):
        final = position == len(segments) - 1
        current = Symbol(segment[0], final and len(segment) == 1)
        for i, ch in enumerate(segment[1:], start=1):
            eow = final and i == len(segment) - 1
            right = Symbol(ch, eow)
            rules.append(MergeRule(current, right))
            current = Symbol(current.text + ch, eow)
    return rules


def build_model(words: Sequence[Tuple[str, ...]]) -> BpeModel:
    rules: List[MergeRule] = []
    for segments in words:
        for rule in chain(*segments):
            if rule not in rules:
                rules.append(rule)
    return BpeModel(merges=tuple(rules))


# "oslo'dan" precedes "kasabasındayım": its (d, a) rule would otherwise split "'dan"
WORD_MODEL_SEGMENTS = [
    ("küçük",),
    ("fa", "ger", "nes"),
    ("oslo", "'dan"),
    ("kasaba", "sın", "dayım"),
    ("yaklaşık",),
    ("üç",),
    ("saat",),
    ("uzakta",),
]

STEM_MODEL_SEGMENTS = [
    ("küçük",),
    ("fa", "ger", "nes"),
    ("kasaba",),
    ("oslo",),
    ("yaklaşık",),
    ("üç",),
    ("saat",),
    ("uzak",),
]


@pytest.fixture
def word_model() -> BpeModel:
    return build_model(WORD_MODEL_SEGMENTS)


@pytest.fixture
def stem_model() -> BpeModel:
    return build_model(STEM_MODEL_SEGMENTS)


@pytest.fixture
def split_stem_model() -> BpeModel:
    """Splits the stem "kasaba" into "ka" + "saba" """
    return build_model([("ka", "saba")])


@pytest.fixture
def markers() -> MarkerConfig:
    return MarkerConfig()


@pytest.fixture
def segmentation_service(markers) -> SegmentationService:
    return SegmentationService(markers)
