from typing import Iterable, List, Sequence
from pydantic import BaseModel
from morphseg.domain.stats.dtos.stats_dto import CorpusStats, MorphStats, SweepRow


def _align(header: Sequence[str], rows: List[Sequence[str]]) -> str:
    widths = [len(h) for h in header]
    for row in rows:
        widths = [max(w, len(cell)) for w, cell in zip(widths, row)]
    lines = []
    for row in [header, *rows]:
        first, *rest = row
        cells = [first.ljust(widths[0])] + [cell.rjust(w) for cell, w in zip(rest, widths[1:])]
        lines.append("  ".join(cells).rstrip())
    return "\n".join(lines)


def format_merge_count(k: int) -> str:
    """10000 -> '10K'"""
    if k and k % 1000 == 0:
        return f"{k // 1000}K"
    return f"{k:,}"


def format_stats_table(rows: Iterable[CorpusStats]) -> str:
    """Tokens / vocabulary / average length, one row per corpus"""
    body = []
    for stats in rows:
        body.append([
            stats.label or "-",
            f"{stats.tokens:,}",
            f"{stats.vocabulary:,}",
            str(stats.average_length_rounded) if stats.average_length_defined else "n/a",
            f"{stats.average_length:.1f}" if stats.average_length_defined else "n/a",
        ])
    return _align(["Segmentation Strategy", "Tokens", "Vocabulary", "Average Length", "Mean"], body)


def format_morph_table(corpus: CorpusStats, morph: MorphStats) -> str:
    label = corpus.label or morph.label or "Data"
    body = [
        ["Sentences", f"{corpus.sentences:,}"],
        ["Tokens", f"{corpus.tokens:,}"],
        ["Vocabulary", f"{corpus.vocabulary:,}"],
        ["Stem", f"{morph.stem_types:,}"],
        ["Combined Suffix", f"{morph.combined_suffix_types:,}"],
        ["Singular Suffix", f"{morph.singular_suffix_types:,}"],
    ]
    return _align(["Data", label], body)


def format_sweep_table(rows: Iterable[SweepRow]) -> str:
    body = [[format_merge_count(row.merges), f"{row.vocabulary:,}"] for row in rows]
    return _align(["Merge Operation", "Vocabulary"], body)


def map_records_to_jsonl(records: Iterable[BaseModel]) -> str:
    """One JSON object per line, stable field names"""
    return "\n".join(record.model_dump_json() for record in records)
