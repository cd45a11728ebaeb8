"""Slow from-scratch reference implementations used to cross-check the services."""
import math
from collections import Counter
from typing import Dict, List, Sequence, Tuple

Sym = Tuple[str, bool]


def _symbols(word: str) -> List[Sym]:
    return [(ch, i == len(word) - 1) for i, ch in enumerate(word)]


def _merge(symbols: List[Sym], left: Sym, right: Sym) -> List[Sym]:
    out: List[Sym] = []
    i = 0
    while i < len(symbols):
        if i + 1 < len(symbols) and symbols[i] == left and symbols[i + 1] == right:
            out.append((left[0] + right[0], right[1]))
            i += 2
        else:
            out.append(symbols[i])
            i += 1
    return out


def naive_learn(entries: Dict[str, int], num_merges: int, min_count: int = 2) -> List[Tuple[Sym, Sym]]:
    """Recounts every pair from scratch before each merge"""
    words = {word: _symbols(word) for word in entries}
    merges = []
    while len(merges) < num_merges:
        counts: Counter = Counter()
        for word, symbols in words.items():
            for pair in zip(symbols, symbols[1:]):
                counts[pair] += entries[word]
        if not counts:
            break
        best = min(counts, key=lambda p: (-counts[p], p[0][0], p[0][1], p[1][0], p[1][1]))
        if counts[best] < min_count:
            break
        merges.append(best)
        words = {word: _merge(symbols, *best) for word, symbols in words.items()}
    return merges


def naive_apply(merges: Sequence[Tuple[Sym, Sym]], word: str) -> List[str]:
    """One full pass per merge rule, in order"""
    symbols = _symbols(word)
    for left, right in merges:
        symbols = _merge(symbols, left, right)
    return [text for text, _ in symbols]


def _ngrams(items: Sequence, n: int) -> Counter:
    return Counter(tuple(items[i:i + n]) for i in range(len(items) - n + 1))


def naive_bleu(hypotheses: Sequence[str], references: Sequence[str]) -> float:
    matches = [0] * 4
    totals = [0] * 4
    hyp_len = ref_len = 0
    for hyp, ref in zip(hypotheses, references):
        h, r = hyp.split(), ref.split()
        hyp_len += len(h)
        ref_len += len(r)
        for n in range(1, 5):
            hc, rc = _ngrams(h, n), _ngrams(r, n)
            totals[n - 1] += sum(hc.values())
            matches[n - 1] += sum(min(c, rc[g]) for g, c in hc.items())
    if hyp_len == 0 or any(t == 0 for t in totals) or any(m == 0 for m in matches):
        return 0.0
    log_precision = sum(math.log(m / t) for m, t in zip(matches, totals)) / 4
    bp = 1.0 if hyp_len >= ref_len else math.exp(1 - ref_len / hyp_len)
    return 100 * bp * math.exp(log_precision)


def naive_chrf(hypotheses: Sequence[str], references: Sequence[str], order: int = 6, beta: float = 3.0) -> float:
    """Corpus chrF averaging precision and recall over orders both sides have n-grams for"""
    stats = [[0, 0, 0] for _ in range(order)]
    for hyp, ref in zip(hypotheses, references):
        h, r = "".join(hyp.split()), "".join(ref.split())
        for n in range(1, order + 1):
            hc, rc = _ngrams(h, n), _ngrams(r, n)
            stats[n - 1][0] += sum(hc.values())
            stats[n - 1][1] += sum(rc.values())
            stats[n - 1][2] += sum(min(c, rc[g]) for g, c in hc.items())
    precisions, recalls = [], []
    for n_hyp, n_ref, n_match in stats:
        if n_hyp > 0 and n_ref > 0:
            precisions.append(n_match / n_hyp)
            recalls.append(n_match / n_ref)
    if not precisions:
        return 0.0
    p = sum(precisions) / len(precisions)
    r = sum(recalls) / len(recalls)
    if p + r == 0:
        return 0.0
    factor = beta ** 2
    return 100 * (1 + factor) * p * r / (factor * p + r)


def recount_stats(lines: Sequence[str]) -> Tuple[int, int, int]:
    tokens = [token for line in lines for token in line.split()]
    return len(lines), len(tokens), len(set(tokens))
