import random
import pytest
from morphseg.domain.bpe.dtos.bpe_dto import FrequencyDictionary
from morphseg.domain.morpho.dtos.morph_dto import AnalyzedSentence, MorphWord
from morphseg.domain.segmentation.dtos.segmentation_dto import Strategy
from morphseg.domain.segmentation.mappers.marked_token_mapper import map_marked_token_to_text
from morphseg.domain.stats.exceptions import SweepConfigError
from morphseg.enums.strategy_types import StrategyType
from morphseg.services.bpe_service import BpeService
from morphseg.services.segmentation_service import SegmentationService
from morphseg.services.sweep_service import SweepService


def random_corpus(rng, n=300):
    stems = ["".join(rng.choice("abcdef") for _ in range(rng.randint(2, 7))) for _ in range(40)]
    suffixes = ["lar", "da", "dan", "ım", "sı", "nda"]
    return [
        AnalyzedSentence(words=tuple(
            MorphWord(stem=rng.choice(stems), suffixes=tuple(rng.sample(suffixes, rng.randint(0, 3))))
            for _ in range(rng.randint(1, 8))
        ))
        for _ in range(n)
    ]


def word_dictionary(corpus):
    return BpeService().build_dictionary(sentence.surface_sentence() for sentence in corpus)


@pytest.fixture
def sweep_service():
    return SweepService()


def test_zero_merges_gives_character_inventory(sweep_service):
    dictionary = FrequencyDictionary(entries={"a": 3, "b": 2, "c": 1})
    [row] = sweep_service.sweep_merges(dictionary, [0])
    assert row.vocabulary == 3
    assert row.symbol_bound == 3


def test_vocabulary_within_symbol_bound(sweep_service):
    rng = random.Random(8)
    for _ in range(10):
        dictionary = word_dictionary(random_corpus(rng))
        rows = sweep_service.sweep_merges(dictionary, [0, 10, 50, 100, 200])
        for row in rows:
            assert row.vocabulary <= row.symbol_types <= row.symbol_bound
            assert row.learned_merges <= row.merges


def test_truncation_equals_relearning(sweep_service):
    rng = random.Random(9)
    corpus = random_corpus(rng)
    dictionary = word_dictionary(corpus)
    bpe = BpeService()
    segmentation = SegmentationService()
    rows = sweep_service.sweep_merges(dictionary, [10, 20, 30])
    for row in rows:
        strategy = Strategy(kind=StrategyType.BPE, model=bpe.learn_bpe(dictionary, row.merges))
        types = {
            map_marked_token_to_text(token, segmentation.markers)
            for word in dictionary.entries
            for token in segmentation.segment_word(strategy, word)
        }
        assert row.vocabulary == len(types)


def test_stem_strategies_need_the_corpus(sweep_service):
    corpus = random_corpus(random.Random(10))
    stems = SegmentationService().build_stem_dictionary(corpus)
    with pytest.raises(SweepConfigError):
        sweep_service.sweep_merges(stems, [10], StrategyType.BPE_SSS)
    rows = sweep_service.sweep_merges(stems, [10, 40], StrategyType.BPE_SSS, corpus=corpus)
    assert [row.merges for row in rows] == [10, 40]
    assert all(row.vocabulary > 0 for row in rows)


def test_singular_suffixes_shrink_vocabulary(sweep_service):
    corpus = random_corpus(random.Random(13))
    stems = SegmentationService().build_stem_dictionary(corpus)
    [scs] = sweep_service.sweep_merges(stems, [20], StrategyType.BPE_SCS, corpus=corpus)
    [sss] = sweep_service.sweep_merges(stems, [20], StrategyType.BPE_SSS, corpus=corpus)
    assert sss.vocabulary <= scs.vocabulary


@pytest.mark.parametrize("counts", [[], [20, 10], [10, 10], [-1, 5]])
def test_invalid_counts(sweep_service, counts):
    with pytest.raises(SweepConfigError):
        sweep_service.sweep_merges(FrequencyDictionary(entries={"ab": 2}), counts)


def test_strategy_without_merges(sweep_service):
    with pytest.raises(SweepConfigError):
        sweep_service.sweep_merges(FrequencyDictionary(entries={"ab": 2}), [1], StrategyType.SSS)
