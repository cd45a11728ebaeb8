"""Checks against the full Turkish training corpus; skipped unless MORPHSEG_TR_CORPUS is set."""
import os
import pytest
from morphseg.infra.files.corpus_repository import CorpusRepository
from morphseg.services.morpho_service import MorphoService
from morphseg.services.stats_service import StatsService

CORPUS = os.getenv("MORPHSEG_TR_CORPUS")

pytestmark = [
    pytest.mark.integration,
    pytest.mark.skipif(not CORPUS, reason="MORPHSEG_TR_CORPUS not set"),
]


def within(value, expected, tolerance=0.01):
    return abs(value - expected) <= tolerance * expected


def test_turkish_corpus_statistics():
    sentences = list(MorphoService().iter_analyzed(CorpusRepository().iter_lines(CORPUS)))
    service = StatsService()
    corpus = service.compute_stats(s.surface_sentence().text for s in sentences)
    morph = service.compute_morph_stats(sentences)

    assert within(corpus.sentences, 359182)
    assert within(corpus.tokens, 6728346)
    assert within(corpus.vocabulary, 284252)
    assert within(morph.stem_types, 87770)
    assert within(morph.combined_suffix_types, 15722)
    assert within(morph.singular_suffix_types, 364)
