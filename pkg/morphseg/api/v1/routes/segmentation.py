import logging
from functools import lru_cache
from typing import Dict, Optional
from fastapi import APIRouter, Depends, HTTPException, status
from morphseg.core import config
from morphseg.domain.bpe.dtos.bpe_dto import BpeModel
from morphseg.domain.exceptions import MorphsegError
from morphseg.domain.morpho.dtos.morph_dto import RawSentence
from morphseg.domain.segmentation.dtos.segmentation_dto import MarkerConfig, Strategy
from morphseg.domain.segmentation.dtos.segmentation_request_dto import (
    DesegmentRequestDTO,
    LinesResponseDTO,
    SegmentRequestDTO,
)
from morphseg.domain.segmentation.mappers.marked_token_mapper import render_tokens
from morphseg.infra.files.bpe_model_repository import BpeModelRepository
from morphseg.services.desegmentation_service import DesegmentationService
from morphseg.services.morpho_service import MorphoService
from morphseg.services.segmentation_service import SegmentationService

logger = logging.getLogger(__name__)

router = APIRouter()


@lru_cache(maxsize=None)
def _load_model(path: str) -> BpeModel:
    return BpeModelRepository().load(path)


def get_bpe_models() -> Dict[str, Optional[BpeModel]]:
    """Word model for BPE, stem model for BPE-SCS / BPE-SSS; configured through the environment"""
    return {
        "word": _load_model(config.WORD_MODEL_PATH) if config.WORD_MODEL_PATH else None,
        "stem": _load_model(config.STEM_MODEL_PATH) if config.STEM_MODEL_PATH else None,
    }


def _bad_request(e: MorphsegError) -> HTTPException:
    return HTTPException(
        status_code=status.HTTP_400_BAD_REQUEST,
        detail={"message": e.message, "error_code": e.error_code}
    )


@router.post("/segment", response_model=LinesResponseDTO)
def segment(
    request: SegmentRequestDTO,
    models: Dict[str, Optional[BpeModel]] = Depends(get_bpe_models)
):
    """Segment lines with one strategy"""
    try:
        markers = MarkerConfig.from_overrides(request.markers)
        kind = request.strategy
        model = None
        if kind.requires_model:
            model = models["stem"] if kind.learns_on_stems else models["word"]
        strategy = Strategy(kind=kind, model=model)
        service = SegmentationService(markers)
        morpho = MorphoService(request.delimiter)

        lines = []
        for line_number, line in enumerate(request.lines, start=1):
            if kind.reads_analyzed:
                sentence = morpho.parse_analyzed_line(line, line_number)
            else:
                sentence = RawSentence.from_line(line)
            lines.append(render_tokens(service.segment_sentence(strategy, sentence), markers))
        return LinesResponseDTO(lines=lines)
    except MorphsegError as e:
        raise _bad_request(e)


@router.post("/desegment", response_model=LinesResponseDTO)
def desegment(request: DesegmentRequestDTO):
    """Rebuild surface words from segmented lines"""
    try:
        service = DesegmentationService(MarkerConfig.from_overrides(request.markers), lenient=request.lenient)
        return LinesResponseDTO(lines=[
            service.desegment_text(line, line_number) for line_number, line in enumerate(request.lines, start=1)
        ])
    except MorphsegError as e:
        raise _bad_request(e)
