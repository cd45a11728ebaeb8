import logging
from typing import Callable, Iterable, List, Optional
import click
from tqdm import tqdm
from morphseg.core.config import LOG_LEVEL, PRESETS, TARGET_SIDE, RunConfig, build_run_config
from morphseg.core.logging import configure_logging
from morphseg.domain.exceptions import MorphsegError
from morphseg.domain.morpho.dtos.morph_dto import RawSentence
from morphseg.domain.segmentation.dtos.segmentation_dto import Strategy
from morphseg.domain.segmentation.mappers.marked_token_mapper import render_tokens
from morphseg.domain.stats.mappers.report_mapper import (
    format_morph_table,
    format_stats_table,
    format_sweep_table,
    map_records_to_jsonl,
)
from morphseg.enums.metric_types import MetricType
from morphseg.enums.report_formats import ReportFormat
from morphseg.enums.strategy_types import StrategyType
from morphseg.infra.files.bpe_model_repository import BpeModelRepository
from morphseg.infra.files.corpus_repository import STREAM, CorpusRepository
from morphseg.services.bpe_service import BpeService
from morphseg.services.desegmentation_service import DesegmentationService
from morphseg.services.morpho_service import MorphoService
from morphseg.services.scoring_service import ScoringService
from morphseg.services.segmentation_service import SegmentationService
from morphseg.services.stats_service import StatsService
from morphseg.services.sweep_service import SweepService

logger = logging.getLogger(__name__)

LOG_LEVELS = ["DEBUG", "INFO", "WARNING", "ERROR"]


class MorphsegGroup(click.Group):
    """Turns domain and I/O errors into a one-line message and exit code 1"""

    def invoke(self, ctx: click.Context):
        try:
            return super().invoke(ctx)
        except MorphsegError as e:
            raise click.ClickException(e.message) from e
        except OSError as e:
            raise click.ClickException(str(e)) from e


def marker_options(f: Callable) -> Callable:
    f = click.option("--bpe-marker", "bpe_continuation", default=None, help="Glyph for non-final BPE subwords (@@)")(f)
    f = click.option("--suffix-marker", "suffix_unit", default=None, help="Glyph for suffix units ($$)")(f)
    f = click.option("--stem-marker", "stem_join", default=None, help="Glyph for stems followed by suffixes (##)")(f)
    return f


def _config(ctx: click.Context, **overrides) -> RunConfig:
    return build_run_config(overrides, ctx.obj.get("config_path"))


def _located(error: MorphsegError, line_number: int) -> str:
    if getattr(error, "line_number", None) is not None:
        return error.message
    return f"line {line_number}: {error.message}"


def _process_lines(
    lines: Iterable[str],
    transform: Callable[[str, int], Optional[str]],
    output: str,
    fail_fast: bool
) -> int:
    """Streams transform over lines; a failed line is logged and written empty. Returns the failure count"""
    failures = 0
    with CorpusRepository().writer(output) as handle:
        for line_number, line in enumerate(lines, start=1):
            try:
                result = transform(line, line_number)
            except MorphsegError as e:
                message = _located(e, line_number)
                if fail_fast:
                    raise MorphsegError(message, e.error_code) from e
                logger.error(message)
                failures += 1
                result = ""
            if result is not None:
                handle.write(result + "\n")
    return failures


def _finish(ctx: click.Context, failures: int) -> None:
    if failures:
        click.echo(f"{failures} line(s) failed", err=True)
        ctx.exit(1)


@click.group(cls=MorphsegGroup)
@click.option("--log-level", type=click.Choice(LOG_LEVELS, case_sensitive=False), default=LOG_LEVEL, show_default=True)
@click.option("--config", "config_path", type=click.Path(dir_okay=False), default=None,
              help="YAML config file (defaults to $MORPHSEG_CONFIG)")
@click.pass_context
def cli(ctx: click.Context, log_level: str, config_path: Optional[str]):
    """Morphological and BPE segmentation for agglutinative-language MT preprocessing."""
    configure_logging(log_level)
    ctx.ensure_object(dict)
    ctx.obj["config_path"] = config_path


@cli.command("learn-bpe")
@click.option("-i", "--input", "input_path", default=STREAM, show_default=True, help="Training corpus")
@click.option("-o", "--output", "output_path", required=True, help="Model file to write")
@click.option("--on-stems", is_flag=True, help="Learn on stems of an analyzed corpus")
@click.option("-m", "--merges", type=int, default=None, help="Number of merge operations")
@click.option("--min-frequency", "min_pair_frequency", type=int, default=None, help="Stop when the best pair is rarer")
@click.option("--preset", type=click.Choice(sorted(PRESETS)), default=None, help="Language-pair merge counts")
@click.option("--preset-entry", type=click.Choice(["bpe", "bpe-scs", "bpe-sss", TARGET_SIDE]), default=None,
              help="Preset entry to use (default: bpe-sss with --on-stems, else bpe)")
@click.option("--delimiter", default=None, help="Morpheme delimiter of analyzed input")
@click.option("--progress", is_flag=True, help="Show a progress bar")
@click.pass_context
def learn_bpe(ctx, input_path, output_path, on_stems, merges, min_pair_frequency, preset, preset_entry, delimiter,
              progress):
    """Learn a BPE merge table from words or stems."""
    config = _config(ctx, merges=merges, min_pair_frequency=min_pair_frequency, preset=preset, delimiter=delimiter)
    entry = preset_entry or (StrategyType.BPE_SSS.value if on_stems else StrategyType.BPE.value)
    num_merges = config.resolve_merges(entry)

    bpe_service = BpeService()
    lines = CorpusRepository().iter_lines(input_path)
    if on_stems:
        sentences = MorphoService(config.delimiter).iter_analyzed(lines)
        dictionary = SegmentationService(config.markers).build_stem_dictionary(sentences)
    else:
        dictionary = bpe_service.build_dictionary(RawSentence.from_line(line) for line in lines)
    logger.info("dictionary: %d types, %d tokens", len(dictionary), dictionary.total)

    with tqdm(total=num_merges, unit="merge", disable=not progress) as bar:
        model = bpe_service.learn_bpe(
            dictionary, num_merges, config.min_pair_frequency, progress=lambda rule, count: bar.update(1)
        )
    BpeModelRepository().save(model, output_path)

    _, symbol_types = bpe_service.symbol_inventory(model, dictionary)
    click.echo(f"merges learned: {len(model)}", err=True)
    click.echo(f"symbol types: {symbol_types}", err=True)


@cli.command()
@click.option("-s", "--strategy", default=None, help="raw | scs | sss | bpe | bpe-scs | bpe-sss")
@click.option("--model", "model_path", default=None, help="BPE model file for BPE-bearing strategies")
@click.option("-i", "--input", "input_path", default=STREAM, show_default=True)
@click.option("-o", "--output", "output_path", default=STREAM, show_default=True)
@click.option("--delimiter", default=None, help="Morpheme delimiter of analyzed input")
@click.option("--fail-fast/--keep-going", default=None, help="Stop at the first bad line (default: keep going)")
@click.option("--max-len", type=int, default=None, help="Drop output lines with more tokens")
@marker_options
@click.pass_context
def segment(ctx, strategy, model_path, input_path, output_path, delimiter, fail_fast, max_len, **markers):
    """Segment a corpus line by line."""
    config = _config(ctx, strategy=strategy, delimiter=delimiter, fail_fast=fail_fast, max_len=max_len, **markers)
    kind = config.strategy
    model = BpeModelRepository().load(model_path) if kind.requires_model and model_path else None
    plan = Strategy(kind=kind, model=model)

    service = SegmentationService(config.markers)
    morpho = MorphoService(config.delimiter)
    dropped = 0

    def transform(line: str, line_number: int) -> Optional[str]:
        nonlocal dropped
        if kind.reads_analyzed:
            sentence = morpho.parse_analyzed_line(line, line_number)
        else:
            sentence = RawSentence.from_line(line)
        tokens = service.segment_sentence(plan, sentence)
        if config.max_len is not None and len(tokens) > config.max_len:
            dropped += 1
            return None
        return render_tokens(tokens, config.markers)

    failures = _process_lines(CorpusRepository().iter_lines(input_path), transform, output_path, config.fail_fast)
    if dropped:
        logger.info("dropped %d line(s) longer than %d tokens", dropped, config.max_len)
    _finish(ctx, failures)


@cli.command()
@click.option("-i", "--input", "input_path", default=STREAM, show_default=True)
@click.option("-o", "--output", "output_path", default=STREAM, show_default=True)
@click.option("--lenient/--strict", default=None, help="Strip dangling markers with a warning (default: strict)")
@click.option("--fail-fast/--keep-going", default=None)
@marker_options
@click.pass_context
def desegment(ctx, input_path, output_path, lenient, fail_fast, **markers):
    """Rebuild surface words from segmented text."""
    config = _config(ctx, lenient=lenient, fail_fast=fail_fast, **markers)
    service = DesegmentationService(config.markers, lenient=config.lenient)
    failures = _process_lines(
        CorpusRepository().iter_lines(input_path), service.desegment_text, output_path, config.fail_fast
    )
    _finish(ctx, failures)


def _emit_report(table: str, records: List, report_format: ReportFormat) -> None:
    if report_format in (ReportFormat.TABLE, ReportFormat.BOTH):
        click.echo(table)
    if report_format in (ReportFormat.JSONL, ReportFormat.BOTH):
        click.echo(map_records_to_jsonl(records))


@cli.command()
@click.argument("paths", nargs=-1, required=True)
@click.option("--analyzed", is_flag=True, help="Inputs are analyzed corpora (adds stem and suffix inventories)")
@click.option("--delimiter", default=None)
@click.option("--format", "report_format", type=click.Choice([f.value for f in ReportFormat]),
              default=ReportFormat.TABLE.value, show_default=True)
@click.pass_context
def stats(ctx, paths, analyzed, delimiter, report_format):
    """Token, vocabulary and sentence-length statistics per file."""
    config = _config(ctx, delimiter=delimiter)
    report_format = ReportFormat(report_format)
    service = StatsService()
    files = CorpusRepository()

    if not analyzed:
        rows = [service.compute_stats(files.iter_lines(path), label=path) for path in paths]
        _emit_report(format_stats_table(rows), rows, report_format)
        return

    morpho = MorphoService(config.delimiter)
    for path in paths:
        sentences = list(morpho.iter_analyzed(files.iter_lines(path)))
        corpus = service.compute_stats((s.surface_sentence().text for s in sentences), label=path)
        morph = service.compute_morph_stats(sentences, label=path)
        _emit_report(format_morph_table(corpus, morph), [corpus, morph], report_format)


def _parse_counts(value: str) -> List[int]:
    try:
        return [int(part) for part in value.split(",") if part.strip()]
    except ValueError as e:
        raise click.BadParameter(f"expected comma-separated integers, got {value!r}") from e


@cli.command()
@click.option("-i", "--input", "input_path", default=STREAM, show_default=True,
              help="Raw corpus for bpe, analyzed corpus for bpe-scs / bpe-sss")
@click.option("-s", "--strategy", type=click.Choice(["bpe", "bpe-scs", "bpe-sss"]), default="bpe", show_default=True)
@click.option("--counts", required=True, help="Ascending merge counts, e.g. 10000,15000,20000")
@click.option("--min-frequency", "min_pair_frequency", type=int, default=None)
@click.option("--delimiter", default=None)
@click.option("--format", "report_format", type=click.Choice([f.value for f in ReportFormat]),
              default=ReportFormat.TABLE.value, show_default=True)
@marker_options
@click.pass_context
def sweep(ctx, input_path, strategy, counts, min_pair_frequency, delimiter, report_format, **markers):
    """Vocabulary size for a series of merge counts."""
    config = _config(ctx, strategy=strategy, min_pair_frequency=min_pair_frequency, delimiter=delimiter, **markers)
    kind = config.strategy
    lines = CorpusRepository().iter_lines(input_path)
    corpus = None
    if kind.learns_on_stems:
        corpus = list(MorphoService(config.delimiter).iter_analyzed(lines))
        dictionary = SegmentationService(config.markers).build_stem_dictionary(corpus)
    else:
        dictionary = BpeService().build_dictionary(RawSentence.from_line(line) for line in lines)

    rows = SweepService(markers=config.markers).sweep_merges(
        dictionary, _parse_counts(counts), kind, corpus, config.min_pair_frequency
    )
    _emit_report(format_sweep_table(rows), rows, ReportFormat(report_format))


@cli.command()
@click.option("--metric", type=click.Choice([m.value for m in MetricType]), default=MetricType.BLEU.value,
              show_default=True)
@click.option("--hyp", "hyp_path", required=True, help="System output, one sentence per line")
@click.option("--ref", "ref_path", required=True, help="Reference, one sentence per line")
@click.option("--json", "as_json", is_flag=True, help="Print a JSON record instead of the bare score")
def score(metric, hyp_path, ref_path, as_json):
    """Corpus BLEU or chrF3."""
    files = CorpusRepository()
    result = ScoringService().score(MetricType(metric), files.read_lines(hyp_path), files.read_lines(ref_path))
    click.echo(result.model_dump_json() if as_json else result.display())


@cli.command()
@click.option("--host", default="127.0.0.1", show_default=True)
@click.option("--port", type=int, default=8000, show_default=True)
def serve(host, port):
    """Run the HTTP API."""
    import uvicorn

    uvicorn.run("morphseg.main:app", host=host, port=port)
