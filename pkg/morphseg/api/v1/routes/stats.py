from fastapi import APIRouter
from morphseg.domain.stats.dtos.stats_dto import CorpusStats, StatsRequestDTO
from morphseg.services.stats_service import StatsService

router = APIRouter()


@router.post("", response_model=CorpusStats)
def compute_stats(request: StatsRequestDTO):
    """Token, vocabulary and average-length counts"""
    return StatsService().compute_stats(request.lines, label=request.label)
