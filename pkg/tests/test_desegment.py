import logging
import random
import pytest
from morphseg.domain.bpe.dtos.bpe_dto import FrequencyDictionary
from morphseg.domain.desegmentation.exceptions import DesegmentationStructureError
from morphseg.domain.segmentation.dtos.segmentation_dto import MarkerConfig, SegmentedLine, Strategy
from morphseg.domain.segmentation.mappers.marked_token_mapper import map_marked_tokens_to_segmented_line
from morphseg.enums.strategy_types import StrategyType
from morphseg.services.bpe_service import BpeService
from morphseg.services.desegmentation_service import DesegmentationService
from tests.conftest import EXPECTED_ROWS, RAW_SENTENCE, random_sentence


@pytest.fixture
def service():
    return DesegmentationService()


@pytest.mark.parametrize("line, expected", [
    ("kasaba## sı$$ nda$$ yım$$ ,", "kasabasındayım ,"),
    ("fa@@ ger@@ nes", "fagernes"),
    ("a b c", "a b c"),
    ("ka@@ saba sındayım$$", "kasabasındayım"),
    ("a@@ b$$ c", "ab c"),
    ("", ""),
])
def test_examples(service, line, expected):
    assert service.desegment_text(line) == expected


@pytest.mark.parametrize("row", ["scs", "sss", "bpe-scs", "bpe-sss"])
def test_golden_rows_to_canonical_surface(service, row):
    assert service.desegment_text(EXPECTED_ROWS[row]) == (
        "küçük fagernes kasabasındayım , oslodan yaklaşık üç saat uzakta ."
    )


def test_bpe_row_to_raw(service):
    assert service.desegment_text(EXPECTED_ROWS["bpe"]) == RAW_SENTENCE


@pytest.mark.parametrize("line, index", [
    ("a b@@", 1),
    ("a##", 0),
    ("x$$ y", 0),
])
def test_structure_errors(service, line, index):
    with pytest.raises(DesegmentationStructureError) as exc:
        service.desegment_text(line)
    assert exc.value.token_index == index


def test_lenient_strips_dangling_markers(caplog):
    service = DesegmentationService(lenient=True)
    with caplog.at_level(logging.WARNING, logger="morphseg"):
        assert service.desegment_text("x$$ y z@@", line_number=4) == "x y z"
    assert "line 4" in caplog.text
    assert len(caplog.records) == 2


def test_custom_markers():
    service = DesegmentationService(MarkerConfig(stem_join="<s>", suffix_unit="<x>", bpe_continuation="<b>"))
    assert service.desegment_text("uzak<s> ta<x> fa<b> ger<b> nes") == "uzakta fagernes"


def test_idempotent_and_never_grows(service):
    line = "kasaba## sı$$ nda$$ yım$$ , fa@@ ger@@ nes ."
    once = service.desegment_text(line)
    assert service.desegment_text(once) == once
    assert len(once.split()) <= len(SegmentedLine.from_line(line).tokens)


def test_round_trip_every_strategy(segmentation_service, service):
    rng = random.Random(2024)
    corpus = [random_sentence(rng) for _ in range(10000)]

    bpe = BpeService()
    word_dictionary = bpe.build_dictionary(s.surface_sentence() for s in corpus)
    stem_dictionary = segmentation_service.build_stem_dictionary(corpus)
    word_model = bpe.learn_bpe(word_dictionary, 300)
    stem_model = bpe.learn_bpe(stem_dictionary, 300)
    assert isinstance(stem_dictionary, FrequencyDictionary)

    strategies = [
        Strategy(kind=StrategyType.RAW),
        Strategy(kind=StrategyType.SCS),
        Strategy(kind=StrategyType.SSS),
        Strategy(kind=StrategyType.BPE, model=word_model),
        Strategy(kind=StrategyType.BPE_SCS, model=stem_model),
        Strategy(kind=StrategyType.BPE_SSS, model=stem_model),
    ]
    for sentence in corpus:
        surface = sentence.surface_sentence()
        for strategy in strategies:
            source = sentence if strategy.kind.reads_analyzed else surface
            tokens = segmentation_service.segment_sentence(strategy, source)
            line = map_marked_tokens_to_segmented_line(tokens, segmentation_service.markers)
            assert service.desegment(line) == surface
