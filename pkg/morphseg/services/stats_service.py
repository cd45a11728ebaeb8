import logging
from typing import Iterable, Optional, Set
from morphseg.domain.morpho.dtos.morph_dto import AnalyzedSentence
from morphseg.domain.stats.dtos.stats_dto import CorpusStats, MorphStats

logger = logging.getLogger(__name__)


class CorpusStatsAccumulator:
    """Streaming counter over whitespace-split lines; mergeable across shards"""

    def __init__(self, label: Optional[str] = None):
        self.label = label
        self.sentences = 0
        self.tokens = 0
        self.types: Set[str] = set()

    def add_line(self, line: str) -> None:
        tokens = line.split()
        self.sentences += 1
        self.tokens += len(tokens)
        self.types.update(tokens)

    def merge(self, other: "CorpusStatsAccumulator") -> "CorpusStatsAccumulator":
        self.sentences += other.sentences
        self.tokens += other.tokens
        self.types |= other.types
        return self

    def result(self) -> CorpusStats:
        return CorpusStats(
            label=self.label,
            sentences=self.sentences,
            tokens=self.tokens,
            vocabulary=len(self.types)
        )


class MorphStatsAccumulator:

    def __init__(self, label: Optional[str] = None):
        self.label = label
        self.stems: Set[str] = set()
        self.combined: Set[str] = set()
        self.singular: Set[str] = set()

    def add_sentence(self, sentence: AnalyzedSentence) -> None:
        for word in sentence.words:
            self.stems.add(word.stem)
            if word.has_suffixes:
                self.combined.add(word.combined_suffix)
                self.singular.update(word.suffixes)

    def merge(self, other: "MorphStatsAccumulator") -> "MorphStatsAccumulator":
        self.stems |= other.stems
        self.combined |= other.combined
        self.singular |= other.singular
        return self

    def result(self) -> MorphStats:
        return MorphStats(
            label=self.label,
            stem_types=len(self.stems),
            combined_suffix_types=len(self.combined),
            singular_suffix_types=len(self.singular)
        )


class StatsService:
    """Corpus statistics for segmented or raw text"""

    def compute_stats(self, lines: Iterable[str], label: Optional[str] = None) -> CorpusStats:
        acc = CorpusStatsAccumulator(label)
        for line in lines:
            acc.add_line(line)
        stats = acc.result()
        logger.debug("stats for %s: %d sentences, %d tokens", label or "corpus", stats.sentences, stats.tokens)
        return stats

    def compute_morph_stats(self, sentences: Iterable[AnalyzedSentence], label: Optional[str] = None) -> MorphStats:
        acc = MorphStatsAccumulator(label)
        for sentence in sentences:
            acc.add_sentence(sentence)
        return acc.result()
