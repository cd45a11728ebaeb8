from morphseg.domain.exceptions import MorphsegError

class StatsException(MorphsegError):
    """Base exception for corpus statistics and merge sweeps"""
    pass

class SweepConfigError(StatsException):
    """Raised when sweep merge counts are negative or not ascending"""
    def __init__(self, detail: str):
        super().__init__(detail, "SWEEP_CONFIG_ERROR")
