from morphseg.domain.exceptions import MorphsegError

class ScoringException(MorphsegError):
    """Base exception for translation scoring"""
    pass

class ScoreInputError(ScoringException):
    """Raised when hypothesis and reference corpora differ in length"""
    def __init__(self, hypotheses: int, references: int):
        super().__init__(
            f"Hypothesis and reference corpora differ in length: {hypotheses} vs {references}",
            "SCORE_INPUT_ERROR"
        )
