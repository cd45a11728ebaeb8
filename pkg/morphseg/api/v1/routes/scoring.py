from fastapi import APIRouter, HTTPException, status
from morphseg.domain.scoring.dtos.score_dto import ScoreRequestDTO, ScoreResult
from morphseg.domain.scoring.exceptions import ScoringException
from morphseg.services.scoring_service import ScoringService

router = APIRouter()


@router.post("/score", response_model=ScoreResult)
def score(request: ScoreRequestDTO):
    """Corpus BLEU or chrF3"""
    try:
        return ScoringService().score(request.metric, request.hypotheses, request.references)
    except ScoringException as e:
        raise HTTPException(
            status_code=status.HTTP_400_BAD_REQUEST,
            detail={"message": e.message, "error_code": e.error_code}
        )
