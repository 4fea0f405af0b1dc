from .config import PRESETS, ExperimentConfig, apply_overrides, parse_config, preset_config
from .emit import ResultTable, emit
from .run import available_presets, run_preset

__all__ = [
    "ExperimentConfig", "PRESETS", "ResultTable", "apply_overrides",
    "available_presets", "emit", "parse_config", "preset_config",
    "run_preset",
]
