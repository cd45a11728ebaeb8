import logging
from typing import Iterable, List, Optional, Sequence, Set
from morphseg.domain.bpe.dtos.bpe_dto import FrequencyDictionary
from morphseg.domain.morpho.dtos.morph_dto import AnalyzedSentence, MorphWord
from morphseg.domain.segmentation.dtos.segmentation_dto import MarkerConfig, Strategy
from morphseg.domain.segmentation.mappers.marked_token_mapper import map_marked_token_to_text
from morphseg.domain.stats.dtos.stats_dto import SweepRow
from morphseg.domain.stats.exceptions import SweepConfigError
from morphseg.enums.strategy_types import StrategyType
from morphseg.services.bpe_service import DEFAULT_MIN_PAIR_FREQUENCY, BpeService
from morphseg.services.segmentation_service import SegmentationService

logger = logging.getLogger(__name__)


class SweepService:
    """Vocabulary size as a function of the number of merges.

    The model for the largest count is learned once; every smaller count uses
    its prefix, which is what the learner would have produced for that count.
    """

    def __init__(self, bpe_service: Optional[BpeService] = None, markers: MarkerConfig = MarkerConfig()):
        self.bpe_service = bpe_service or BpeService()
        self.segmentation_service = SegmentationService(markers)

    def sweep_merges(
        self,
        dictionary: FrequencyDictionary,
        merge_counts: Sequence[int],
        strategy: StrategyType = StrategyType.BPE,
        corpus: Optional[Iterable[AnalyzedSentence]] = None,
        min_pair_frequency: int = DEFAULT_MIN_PAIR_FREQUENCY
    ) -> List[SweepRow]:
        counts = list(merge_counts)
        if not counts:
            raise SweepConfigError("At least one merge count is required")
        if any(k < 0 for k in counts):
            raise SweepConfigError(f"Merge counts must be non-negative, got {counts}")
        if any(a >= b for a, b in zip(counts, counts[1:])):
            raise SweepConfigError(f"Merge counts must be strictly ascending, got {counts}")
        if not strategy.requires_model:
            raise SweepConfigError(f"Strategy '{strategy.value}' has no merge operations to sweep")

        units = self._units(dictionary, strategy, corpus)
        full = self.bpe_service.learn_bpe(dictionary, counts[-1], min_pair_frequency)
        if len(full) < counts[-1]:
            logger.warning("learner stopped at %d merges, below the requested %d", len(full), counts[-1])

        rows = []
        for k in counts:
            model = full.truncate(k)
            vocabulary = self._vocabulary(Strategy(kind=strategy, model=model), units)
            initial, final = self.bpe_service.symbol_inventory(model, dictionary)
            rows.append(SweepRow(
                merges=k,
                learned_merges=len(model),
                vocabulary=vocabulary,
                symbol_types=final,
                symbol_bound=initial + len(model)
            ))
            logger.info("sweep %s k=%d: vocabulary %d", strategy.value, k, vocabulary)
        return rows

    @staticmethod
    def _units(dictionary: FrequencyDictionary, strategy: StrategyType, corpus):
        if strategy is StrategyType.BPE:
            return list(dictionary.entries)
        if corpus is None:
            raise SweepConfigError(f"Strategy '{strategy.value}' needs the analyzed corpus")
        distinct: Set[MorphWord] = set()
        for sentence in corpus:
            distinct.update(sentence.words)
        return list(distinct)

    def _vocabulary(self, strategy: Strategy, units) -> int:
        markers = self.segmentation_service.markers
        types: Set[str] = set()
        for unit in units:
            for token in self.segmentation_service.segment_word(strategy, unit):
                types.add(map_marked_token_to_text(token, markers))
        return len(types)
