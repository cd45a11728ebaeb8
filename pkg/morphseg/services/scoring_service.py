import logging
from typing import Iterable, List, Sequence
from sacrebleu.metrics import BLEU
from sacrebleu.metrics.helpers import extract_all_char_ngrams
from morphseg.domain.scoring.dtos.score_dto import ScoredPair, ScoreResult
from morphseg.domain.scoring.exceptions import ScoreInputError
from morphseg.enums.metric_types import MetricType

logger = logging.getLogger(__name__)

CHRF_ORDER = 6
CHRF_BETA = 3


class ScoringService:
    """Corpus BLEU and chrF3 on pre-tokenized, single-reference data.

    BLEU splits on whitespace only and applies no smoothing, so a corpus
    without a single matching 4-gram scores 0. chrF3 uses character n-grams
    up to order 6 with whitespace removed and recall weighted by beta = 3.
    Every hypothesis n-gram counts towards precision, including those of
    lines whose reference is too short to have n-grams of that order.
    """

    def __init__(self, chrf_order: int = CHRF_ORDER, chrf_beta: float = CHRF_BETA):
        self._bleu = BLEU(tokenize="none", smooth_method="none", lowercase=False)
        self.chrf_order = chrf_order
        self.chrf_beta = chrf_beta

    @staticmethod
    def _check(hypotheses: Sequence[str], references: Sequence[str]) -> None:
        if len(hypotheses) != len(references):
            raise ScoreInputError(len(hypotheses), len(references))

    def bleu(self, hypotheses: Sequence[str], references: Sequence[str]) -> float:
        self._check(hypotheses, references)
        if not hypotheses:
            return 0.0
        return self._bleu.corpus_score(list(hypotheses), [list(references)]).score

    def chrf_statistics(self, hypothesis: str, reference: str) -> List[int]:
        """Per order: hypothesis n-grams, reference n-grams, clipped matches"""
        statistics = [0] * (self.chrf_order * 3)
        hyp_ngrams = extract_all_char_ngrams(hypothesis, self.chrf_order, include_whitespace=False)
        ref_ngrams = extract_all_char_ngrams(reference, self.chrf_order, include_whitespace=False)
        for i, (hyp_counts, ref_counts) in enumerate(zip(hyp_ngrams, ref_ngrams)):
            statistics[3 * i + 0] = sum(hyp_counts.values())
            statistics[3 * i + 1] = sum(ref_counts.values())
            statistics[3 * i + 2] = sum((hyp_counts & ref_counts).values())
        return statistics

    def chrf_from_statistics(self, statistics: Sequence[int]) -> float:
        # orders where either side has no n-grams are left out of the average
        precision = recall = 0.0
        effective_order = 0
        for i in range(self.chrf_order):
            n_hyp, n_ref, n_match = statistics[3 * i: 3 * i + 3]
            if n_hyp > 0 and n_ref > 0:
                precision += n_match / n_hyp
                recall += n_match / n_ref
                effective_order += 1
        if effective_order == 0:
            return 0.0
        precision /= effective_order
        recall /= effective_order
        if precision + recall == 0:
            return 0.0
        factor = self.chrf_beta ** 2
        return 100 * (1 + factor) * precision * recall / (factor * precision + recall)

    def chrf3(self, hypotheses: Sequence[str], references: Sequence[str]) -> float:
        self._check(hypotheses, references)
        totals = [0] * (self.chrf_order * 3)
        for hypothesis, reference in zip(hypotheses, references):
            for i, value in enumerate(self.chrf_statistics(hypothesis, reference)):
                totals[i] += value
        return self.chrf_from_statistics(totals)

    def score(self, metric: MetricType, hypotheses: Sequence[str], references: Sequence[str]) -> ScoreResult:
        if metric is MetricType.BLEU:
            value = self.bleu(hypotheses, references)
        else:
            value = self.chrf3(hypotheses, references)
        value = min(100.0, max(0.0, value))
        logger.info("%s over %d sentences: %.4f", metric.value, len(hypotheses), value)
        return ScoreResult(metric=metric, score=value, sentences=len(hypotheses))

    def score_pairs(self, metric: MetricType, pairs: Iterable[ScoredPair]) -> ScoreResult:
        pairs = list(pairs)
        return self.score(metric, [p.hypothesis for p in pairs], [p.reference for p in pairs])
