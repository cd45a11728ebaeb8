import heapq
import logging
from collections import defaultdict
from typing import Callable, Dict, Iterable, List, Optional, Set, Tuple
from morphseg.domain.bpe.dtos.bpe_dto import (
    BpeModel,
    FrequencyDictionary,
    MergeRule,
    Symbol,
    SymbolSequence,
    word_to_symbols,
)
from morphseg.domain.bpe.exceptions import BpeException, BpeInputError
from morphseg.domain.morpho.dtos.morph_dto import RawSentence

logger = logging.getLogger(__name__)

DEFAULT_MIN_PAIR_FREQUENCY = 2
DEFAULT_CACHE_SIZE = 1 << 20

Pair = Tuple[Symbol, Symbol]


def merge_pair(symbols: List[Symbol], rule: MergeRule) -> List[Symbol]:
    """One left-to-right pass merging every non-overlapping occurrence of the rule's pair"""
    merged = rule.merged
    out: List[Symbol] = []
    i = 0
    n = len(symbols)
    while i < n:
        if i < n - 1 and symbols[i] == rule.left and symbols[i + 1] == rule.right:
            out.append(merged)
            i += 2
        else:
            out.append(symbols[i])
            i += 1
    return out


def _heap_entry(pair: Pair, count: int):
    # highest count first, then code-point order; an end-of-word symbol sorts after the same plain text
    left, right = pair
    return (-count, left.text, left.eow, right.text, right.eow, pair)


class BpeEncoder:
    """Applies a model's merges in order to single words; results are memoized"""

    def __init__(self, model: BpeModel, cache_size: int = DEFAULT_CACHE_SIZE):
        self.model = model
        self._ranks: Dict[MergeRule, int] = {rule: rank for rank, rule in enumerate(model.merges)}
        self._cache: Dict[str, SymbolSequence] = {}
        self._cache_size = cache_size

    def apply(self, word: str) -> SymbolSequence:
        if not word or any(ch.isspace() for ch in word):
            raise BpeInputError(word)
        cached = self._cache.get(word)
        if cached is None:
            cached = SymbolSequence(symbols=tuple(self._segment(word)))
            if len(self._cache) >= self._cache_size:
                self._cache.clear()
            self._cache[word] = cached
        return cached

    def _segment(self, word: str) -> List[Symbol]:
        # Jumping to the lowest applicable rank at or after the last applied rule
        # is equivalent to one pass per rule in model order.
        symbols = list(word_to_symbols(word))
        position = 0
        while len(symbols) > 1:
            best = None
            for pair in zip(symbols, symbols[1:]):
                rank = self._ranks.get(pair)
                if rank is not None and rank >= position and (best is None or rank < best):
                    best = rank
            if best is None:
                break
            symbols = merge_pair(symbols, self.model.merges[best])
            position = best + 1
        return symbols


def apply_bpe(model: BpeModel, word: str) -> SymbolSequence:
    return BpeEncoder(model).apply(word)


class BpeService:
    """Dictionary extraction and greedy merge learning"""

    def build_dictionary(self, corpus: Iterable[RawSentence]) -> FrequencyDictionary:
        return FrequencyDictionary.from_tokens(token for sentence in corpus for token in sentence.tokens)

    def learn_bpe(
        self,
        dictionary: FrequencyDictionary,
        num_merges: int,
        min_pair_frequency: int = DEFAULT_MIN_PAIR_FREQUENCY,
        progress: Optional[Callable[[MergeRule, int], None]] = None
    ) -> BpeModel:
        """Greedy learner over frequency-weighted types.

        Ties on the maximal count go to the smallest (left, right) pair by code
        points, an end-of-word symbol sorting after the same unflagged text.
        """
        if num_merges < 0:
            raise BpeException(f"Number of merges must be non-negative, got {num_merges}", "INVALID_MERGE_COUNT")
        if min_pair_frequency < 1:
            raise BpeException(
                f"Minimum pair frequency must be positive, got {min_pair_frequency}",
                "INVALID_MIN_PAIR_FREQUENCY"
            )

        words: List[List[Symbol]] = []
        freqs: List[int] = []
        for word, count in dictionary.entries.items():
            words.append(list(word_to_symbols(word)))
            freqs.append(count)

        stats: Dict[Pair, int] = defaultdict(int)
        index: Dict[Pair, Set[int]] = defaultdict(set)
        for idx, symbols in enumerate(words):
            for pair in zip(symbols, symbols[1:]):
                stats[pair] += freqs[idx]
                index[pair].add(idx)

        heap = [_heap_entry(pair, count) for pair, count in stats.items()]
        heapq.heapify(heap)

        merges: List[MergeRule] = []
        while len(merges) < num_merges and heap:
            entry = heapq.heappop(heap)
            count, pair = -entry[0], entry[-1]
            if stats.get(pair) != count:
                continue  # stale
            if count < min_pair_frequency:
                logger.info("stopping after %d merges: best pair count %d < %d", len(merges), count, min_pair_frequency)
                break

            rule = MergeRule(*pair)
            merges.append(rule)
            if progress is not None:
                progress(rule, count)
            self._apply_merge(rule, words, freqs, stats, index, heap)

        logger.debug("learned %d merges from %d types", len(merges), len(words))
        return BpeModel(merges=tuple(merges))

    @staticmethod
    def _apply_merge(
        rule: MergeRule,
        words: List[List[Symbol]],
        freqs: List[int],
        stats: Dict[Pair, int],
        index: Dict[Pair, Set[int]],
        heap: list
    ) -> None:
        changed: Set[Pair] = set()
        for idx in sorted(index.pop(rule, ())):
            old = words[idx]
            new = merge_pair(old, rule)
            freq = freqs[idx]

            old_pairs = list(zip(old, old[1:]))
            new_pairs = list(zip(new, new[1:]))
            for pair in old_pairs:
                stats[pair] -= freq
                changed.add(pair)
            for pair in new_pairs:
                stats[pair] += freq
                changed.add(pair)

            for pair in set(old_pairs) - set(new_pairs):
                if pair in index:
                    index[pair].discard(idx)
            for pair in new_pairs:
                index[pair].add(idx)
            words[idx] = new

        for pair in changed:
            count = stats[pair]
            if count <= 0:
                del stats[pair]
                index.pop(pair, None)
            else:
                heapq.heappush(heap, _heap_entry(pair, count))

    def symbol_inventory(self, model: BpeModel, dictionary: FrequencyDictionary) -> Tuple[int, int]:
        """(symbol types before any merge, symbol types after applying the model) over the dictionary"""
        initial: Set[Symbol] = set()
        final: Set[Symbol] = set()
        encoder = BpeEncoder(model)
        for word in dictionary.entries:
            initial.update(word_to_symbols(word))
            final.update(encoder.apply(word).symbols)
        return len(initial), len(final)
