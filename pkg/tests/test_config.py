import pytest
from morphseg.core.config import DEFAULT_MERGES, ConfigError, build_run_config
from morphseg.domain.segmentation.exceptions import InvalidMarkerConfigError
from morphseg.enums.strategy_types import StrategyType


@pytest.fixture(autouse=True)
def no_config_env(monkeypatch):
    monkeypatch.delenv("MORPHSEG_CONFIG", raising=False)


@pytest.fixture
def config_file(tmp_path):
    path = tmp_path / "morphseg.yaml"
    path.write_text(
        "strategy: BPE_SSS\n"
        "merges: 12000\n"
        "markers:\n"
        "  stem_join: '<s>'\n",
        encoding="utf-8"
    )
    return str(path)


def test_defaults():
    config = build_run_config({})
    assert config.strategy is StrategyType.RAW
    assert config.markers.glyphs() == ("##", "$$", "@@")
    assert config.min_pair_frequency == 2
    assert config.resolve_merges("bpe") == DEFAULT_MERGES


def test_file_overrides_defaults(config_file):
    config = build_run_config({}, config_file)
    assert config.strategy is StrategyType.BPE_SSS
    assert config.merges == 12000
    assert config.markers.stem_join == "<s>"
    assert config.markers.suffix_unit == "$$"


def test_flags_override_file(config_file):
    config = build_run_config({"strategy": "scs", "merges": 500, "stem_join": "<t>", "delimiter": None}, config_file)
    assert config.strategy is StrategyType.SCS
    assert config.merges == 500
    assert config.markers.stem_join == "<t>"


def test_config_file_from_environment(monkeypatch, config_file):
    monkeypatch.setenv("MORPHSEG_CONFIG", config_file)
    assert build_run_config({}).merges == 12000


@pytest.mark.parametrize("preset, entry, merges", [
    ("tr-en", "bpe", 35000),
    ("tr-en", "bpe-scs", 15000),
    ("tr-en", "bpe-sss", 25000),
    ("tr-en", "target", 30000),
    ("uy-zh", "bpe", 38000),
    ("uy-zh", "bpe-scs", 10000),
    ("uy-zh", "bpe-sss", 35000),
    ("uy-zh", "target", 35000),
])
def test_presets(preset, entry, merges):
    assert build_run_config({"preset": preset}).resolve_merges(entry) == merges


def test_explicit_merges_beat_preset():
    assert build_run_config({"preset": "tr-en", "merges": 7}).resolve_merges("bpe") == 7


@pytest.mark.parametrize("overrides", [
    {"strategy": "morfessor"},
    {"merges": -1},
    {"min_pair_frequency": 0},
    {"preset": "de-en"},
    {"unknown": 1},
])
def test_invalid_values(overrides):
    with pytest.raises(ConfigError):
        build_run_config(overrides)


def test_colliding_markers():
    with pytest.raises(InvalidMarkerConfigError):
        build_run_config({"stem_join": "$$"})


def test_unreadable_config(tmp_path):
    with pytest.raises(ConfigError):
        build_run_config({}, str(tmp_path / "missing.yaml"))


def test_config_must_be_mapping(tmp_path):
    path = tmp_path / "list.yaml"
    path.write_text("- a\n- b\n", encoding="utf-8")
    with pytest.raises(ConfigError):
        build_run_config({}, str(path))
