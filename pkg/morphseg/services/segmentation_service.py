import logging
from typing import Iterable, List, Optional, Tuple, Union
from morphseg.domain.bpe.dtos.bpe_dto import BpeModel, FrequencyDictionary
from morphseg.domain.morpho.dtos.morph_dto import AnalyzedSentence, MorphWord, RawSentence
from morphseg.domain.segmentation.dtos.segmentation_dto import MarkedToken, MarkerConfig, Strategy
from morphseg.domain.segmentation.exceptions import MarkerCollisionError, StrategyInputError
from morphseg.enums.marker_kinds import MarkerKind
from morphseg.enums.strategy_types import StrategyType
from morphseg.services.bpe_service import BpeEncoder

logger = logging.getLogger(__name__)

Sentence = Union[AnalyzedSentence, RawSentence]


class SegmentationService:
    """The five segmentation strategies plus raw pass-through"""

    def __init__(self, markers: MarkerConfig = MarkerConfig()):
        self.markers = markers
        self._encoder: Optional[Tuple[BpeModel, BpeEncoder]] = None

    def encoder_for(self, model: BpeModel) -> BpeEncoder:
        # only the encoder of the last model seen is kept, with its memo
        if self._encoder is None or self._encoder[0] is not model:
            logger.debug("Building BPE encoder over %d merges", len(model))
            self._encoder = (model, BpeEncoder(model))
        return self._encoder[1]

    def _check(self, text: str) -> str:
        for glyph in self.markers.glyphs():
            if glyph in text:
                raise MarkerCollisionError(text, glyph)
        return text

    # Word level

    def segment_word_scs(self, word: MorphWord) -> List[MarkedToken]:
        stem = self._check(word.stem)
        if not word.has_suffixes:
            return [MarkedToken(text=stem, marker=MarkerKind.PLAIN)]
        return [
            MarkedToken(text=stem, marker=MarkerKind.STEM_JOIN),
            MarkedToken(text=self._check(word.combined_suffix), marker=MarkerKind.SUFFIX_UNIT),
        ]

    def segment_word_sss(self, word: MorphWord) -> List[MarkedToken]:
        stem = self._check(word.stem)
        if not word.has_suffixes:
            return [MarkedToken(text=stem, marker=MarkerKind.PLAIN)]
        tokens = [MarkedToken(text=stem, marker=MarkerKind.STEM_JOIN)]
        tokens.extend(self._suffix_units(word))
        return tokens

    def segment_word_bpe(self, model: BpeModel, surface: str) -> List[MarkedToken]:
        self._check(surface)
        pieces = self.encoder_for(model).apply(surface).texts
        return self._mark_pieces(pieces)

    def segment_word_bpe_scs(self, model: BpeModel, word: MorphWord) -> List[MarkedToken]:
        tokens = self._segment_stem(model, word)
        if word.has_suffixes:
            tokens.append(MarkedToken(text=self._check(word.combined_suffix), marker=MarkerKind.SUFFIX_UNIT))
        return tokens

    def segment_word_bpe_sss(self, model: BpeModel, word: MorphWord) -> List[MarkedToken]:
        tokens = self._segment_stem(model, word)
        tokens.extend(self._suffix_units(word))
        return tokens

    def _suffix_units(self, word: MorphWord) -> List[MarkedToken]:
        return [MarkedToken(text=self._check(suffix), marker=MarkerKind.SUFFIX_UNIT) for suffix in word.suffixes]

    def _segment_stem(self, model: BpeModel, word: MorphWord) -> List[MarkedToken]:
        # "##" only on an unsplit stem; a split stem ends Plain and the suffix re-attaches backward
        self._check(word.stem)
        pieces = self.encoder_for(model).apply(word.stem).texts
        if len(pieces) == 1:
            marker = MarkerKind.STEM_JOIN if word.has_suffixes else MarkerKind.PLAIN
            return [MarkedToken(text=pieces[0], marker=marker)]
        return self._mark_pieces(pieces)

    @staticmethod
    def _mark_pieces(pieces: Tuple[str, ...]) -> List[MarkedToken]:
        tokens = [MarkedToken(text=piece, marker=MarkerKind.BPE_CONTINUATION) for piece in pieces[:-1]]
        tokens.append(MarkedToken(text=pieces[-1], marker=MarkerKind.PLAIN))
        return tokens

    # Sentence level

    def segment_sentence(self, strategy: Strategy, sentence: Sentence) -> List[MarkedToken]:
        kind = strategy.kind
        if kind.reads_analyzed and not isinstance(sentence, AnalyzedSentence):
            raise StrategyInputError(kind.value, "analyzed")
        if not kind.reads_analyzed and not isinstance(sentence, RawSentence):
            raise StrategyInputError(kind.value, "raw")

        units = sentence.words if isinstance(sentence, AnalyzedSentence) else sentence.tokens
        tokens: List[MarkedToken] = []
        for index, unit in enumerate(units):
            try:
                tokens.extend(self.segment_word(strategy, unit))
            except MarkerCollisionError as e:
                raise e.at_token(index) from e
        return tokens

    def segment_word(self, strategy: Strategy, unit: Union[MorphWord, str]) -> List[MarkedToken]:
        """Segment one word (a MorphWord, or a surface string for raw and BPE)"""
        kind = strategy.kind
        if kind is StrategyType.RAW:
            return [MarkedToken(text=self._check(unit), marker=MarkerKind.PLAIN)]
        if kind is StrategyType.BPE:
            return self.segment_word_bpe(strategy.model, unit)
        if kind is StrategyType.SCS:
            return self.segment_word_scs(unit)
        if kind is StrategyType.SSS:
            return self.segment_word_sss(unit)
        if kind is StrategyType.BPE_SCS:
            return self.segment_word_bpe_scs(strategy.model, unit)
        return self.segment_word_bpe_sss(strategy.model, unit)

    def build_stem_dictionary(self, corpus: Iterable[AnalyzedSentence]) -> FrequencyDictionary:
        """Stem frequencies, one increment per word token; suffixes are ignored"""
        return FrequencyDictionary.from_tokens(word.stem for sentence in corpus for word in sentence.words)
