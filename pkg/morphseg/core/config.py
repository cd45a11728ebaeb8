import os
from typing import Any, Dict, Mapping, Optional
import yaml
from dotenv import load_dotenv
from pydantic import BaseModel, ConfigDict, Field, ValidationError, field_validator
from morphseg.domain.exceptions import MorphsegError
from morphseg.domain.morpho.mappers.analyzed_line_mapper import DEFAULT_DELIMITER, validate_delimiter
from morphseg.domain.segmentation.dtos.segmentation_dto import MarkerConfig
from morphseg.enums.strategy_types import StrategyType
from morphseg.services.bpe_service import DEFAULT_MIN_PAIR_FREQUENCY

# Load .env if not already loaded
load_dotenv()

CONFIG_ENV = "MORPHSEG_CONFIG"
LOG_LEVEL = os.getenv("MORPHSEG_LOG_LEVEL", "INFO")
WORD_MODEL_PATH = os.getenv("MORPHSEG_WORD_MODEL")
STEM_MODEL_PATH = os.getenv("MORPHSEG_STEM_MODEL")

DEFAULT_MERGES = 30000
TARGET_SIDE = "target"

# merge operations per language pair, keyed by strategy (or the target side)
PRESETS: Dict[str, Dict[str, int]] = {
    "tr-en": {
        StrategyType.BPE.value: 35000,
        StrategyType.BPE_SCS.value: 15000,
        StrategyType.BPE_SSS.value: 25000,
        TARGET_SIDE: 30000,
    },
    "uy-zh": {
        StrategyType.BPE.value: 38000,
        StrategyType.BPE_SCS.value: 10000,
        StrategyType.BPE_SSS.value: 35000,
        TARGET_SIDE: 35000,
    },
}


class ConfigError(MorphsegError):
    """Raised when a config file or flag combination is invalid"""
    def __init__(self, detail: str):
        super().__init__(detail, "CONFIG_ERROR")


class RunConfig(BaseModel):
    """Settings shared by every command"""
    model_config = ConfigDict(frozen=True, extra="forbid")

    strategy: StrategyType = Field(StrategyType.RAW, description="Segmentation strategy")
    delimiter: str = Field(DEFAULT_DELIMITER, description="Morpheme delimiter of analyzed input")
    markers: MarkerConfig = Field(default_factory=MarkerConfig, description="Marker glyphs")
    merges: Optional[int] = Field(None, ge=0, description="Merge operations; None falls back to preset or default")
    min_pair_frequency: int = Field(DEFAULT_MIN_PAIR_FREQUENCY, ge=1, description="Learner stops below this pair count")
    preset: Optional[str] = Field(None, description="Language-pair preset for merge counts")
    lenient: bool = Field(False, description="Downgrade desegmentation structure errors to warnings")
    fail_fast: bool = Field(False, description="Stop at the first bad input line")
    max_len: Optional[int] = Field(None, ge=1, description="Drop output lines longer than this many tokens")

    @field_validator("strategy", mode="before")
    @classmethod
    def parse_strategy(cls, v: Any) -> Any:
        if isinstance(v, str) and not isinstance(v, StrategyType):
            return StrategyType.parse(v)
        return v

    @field_validator("delimiter")
    @classmethod
    def check_delimiter(cls, v: str) -> str:
        return validate_delimiter(v)

    @field_validator("preset")
    @classmethod
    def check_preset(cls, v: Optional[str]) -> Optional[str]:
        if v is not None and v not in PRESETS:
            raise ValueError(f"unknown preset '{v}', expected one of {sorted(PRESETS)}")
        return v

    def resolve_merges(self, entry: str) -> int:
        """Explicit merges > preset entry > default"""
        if self.merges is not None:
            return self.merges
        if self.preset is not None:
            return PRESETS[self.preset][entry]
        return DEFAULT_MERGES


def load_config_file(path: Optional[str]) -> Dict[str, Any]:
    if not path:
        return {}
    try:
        with open(path, encoding="utf-8") as handle:
            data = yaml.safe_load(handle) or {}
    except OSError as e:
        raise ConfigError(f"Cannot read config file {path}: {e}") from e
    except yaml.YAMLError as e:
        raise ConfigError(f"Invalid YAML in {path}: {e}") from e
    if not isinstance(data, dict):
        raise ConfigError(f"Config file {path} must hold a mapping")
    return data


def build_run_config(overrides: Mapping[str, Any], config_path: Optional[str] = None) -> RunConfig:
    """Flags (non-None overrides) win over the config file, which wins over defaults"""
    values = load_config_file(config_path or os.getenv(CONFIG_ENV))
    markers = dict(values.pop("markers", None) or {})
    for key, value in overrides.items():
        if value is None:
            continue
        if key in MarkerConfig.model_fields:
            markers[key] = value
        else:
            values[key] = value
    try:
        return RunConfig(markers=MarkerConfig(**markers), **values)
    except (ValidationError, ValueError) as e:
        raise ConfigError(str(e)) from e
