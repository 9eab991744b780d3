from .config import ExperimentConfig, SweepSpec, load_config, parse_config
from .report import CSV_HEADER, emit, emit_csv, emit_structured, load_structured
from .sweep import SweepRecord, measure_point, run_sweep
from .verify import SUITES, CriterionResult, run_suite

__all__ = [
    "CSV_HEADER", "CriterionResult", "ExperimentConfig", "SUITES", "SweepRecord",
    "SweepSpec", "emit", "emit_csv", "emit_structured", "load_config",
    "load_structured", "measure_point", "parse_config", "run_sweep", "run_suite",
]
