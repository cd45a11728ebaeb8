from morphseg.domain.exceptions import MorphsegError

class DesegmentationException(MorphsegError):
    """Base exception for marker resolution"""
    pass

class DesegmentationStructureError(DesegmentationException):
    """Raised when a marker has nothing to join with"""
    def __init__(self, token_index: int, detail: str):
        self.token_index = token_index
        self.detail = detail
        super().__init__(f"token {token_index}: {detail}", "DESEGMENTATION_STRUCTURE_ERROR")
