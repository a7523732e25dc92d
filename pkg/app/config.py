import os
import threading
try:
    import tomllib
except ModuleNotFoundError:  # Python < 3.11
    import tomli as tomllib
from pathlib import Path
from typing import List, Optional

from pydantic import BaseModel, Field, ValidationError, field_validator

from app.exceptions import ConfigError


def get_project_root() -> Path:
    """Get the project root directory"""
    return Path(__file__).resolve().parent.parent


PROJECT_ROOT = get_project_root()
WORKERS_ENV_VAR = "CRITLAB_WORKERS"

PRUNE_CONNECTIVITY = "connectivity"
PRUNE_COMPLETE = "omega-lt-n"
PRUNE_MIN_DEGREE = "L-DEG-mindeg"
ADMISSIBLE_PRUNE_RULES = (PRUNE_CONNECTIVITY, PRUNE_COMPLETE, PRUNE_MIN_DEGREE)


class SearchSettings(BaseModel):
    l: int = Field(2, description="Clique order used by the counterexample search")
    n_max: int = Field(9, description="Largest vertex count enumerated internally")
    workers: int = Field(1, description="Worker processes for batch evaluation")
    batch_size: int = Field(256, description="Graphs per worker batch")
    prune_rules: List[str] = Field(
        default_factory=lambda: list(ADMISSIBLE_PRUNE_RULES),
        description="Necessary-condition filters applied before the full check",
    )
    prune_audit_modulus: int = Field(
        100, description="Audit a pruned graph when crc32(graph6) % modulus == 0"
    )
    complete_audit_modulus: int = Field(
        1000, description="Run the full check on a complete graph at this rate"
    )
    stop_on_counterexample: bool = Field(
        False, description="Cancel remaining batches after a verified counterexample"
    )
    progress: bool = Field(False, description="Show a progress bar over batches")

    @field_validator("workers", "batch_size", "prune_audit_modulus", "complete_audit_modulus")
    @classmethod
    def _positive(cls, value: int) -> int:
        if value < 1:
            raise ValueError("must be at least 1")
        return value

    @field_validator("prune_rules")
    @classmethod
    def _admissible(cls, rules: List[str]) -> List[str]:
        unknown = sorted(set(rules) - set(ADMISSIBLE_PRUNE_RULES))
        if unknown:
            raise ValueError(f"inadmissible prune rules: {unknown}")
        return rules


class ColoringSettings(BaseModel):
    enumeration_budget: int = Field(
        10**8, description="Maximum estimated nodes for enumerate_colorings"
    )


class LemmaSettings(BaseModel):
    coloring_budget: int = Field(
        10**5,
        description="Above this estimate L-DEG checks one solver coloring instead of all",
    )


class LogSettings(BaseModel):
    print_level: str = Field("INFO", description="stderr sink level")
    logfile_level: str = Field("DEBUG", description="File sink level")
    log_to_file: bool = Field(False, description="Write a dated log under logs/")


class AppConfig(BaseModel):
    search: SearchSettings = Field(default_factory=SearchSettings)
    coloring: ColoringSettings = Field(default_factory=ColoringSettings)
    lemmas: LemmaSettings = Field(default_factory=LemmaSettings)
    logging: LogSettings = Field(default_factory=LogSettings)


class Config:
    _instance = None
    _lock = threading.Lock()
    _initialized = False

    def __new__(cls):
        if cls._instance is None:
            with cls._lock:
                if cls._instance is None:
                    cls._instance = super().__new__(cls)
        return cls._instance

    def __init__(self):
        if not self._initialized:
            with self._lock:
                if not self._initialized:
                    self._config = None
                    self._load_initial_config()
                    self._initialized = True

    @staticmethod
    def _get_config_path() -> Optional[Path]:
        root = PROJECT_ROOT
        config_path = root / "config" / "config.toml"
        if config_path.exists():
            return config_path
        example_path = root / "config" / "config.example.toml"
        if example_path.exists():
            return example_path
        return None

    def _load_config(self) -> dict:
        config_path = self._get_config_path()
        if config_path is None:
            return {}
        with config_path.open("rb") as f:
            return tomllib.load(f)

    def _load_initial_config(self):
        self._config = self._build(self._load_config())

    @staticmethod
    def _build(raw_config: dict) -> AppConfig:
        try:
            app_config = AppConfig(
                search=SearchSettings(**raw_config.get("search", {})),
                coloring=ColoringSettings(**raw_config.get("coloring", {})),
                lemmas=LemmaSettings(**raw_config.get("lemmas", {})),
                logging=LogSettings(**raw_config.get("logging", {})),
            )
        except ValidationError as e:
            raise ConfigError(f"Invalid configuration: {e}") from e

        workers = os.environ.get(WORKERS_ENV_VAR)
        if workers:
            app_config.search.workers = parse_workers(workers)
        return app_config

    @classmethod
    def from_toml(cls, config_path: str) -> "Config":
        """Load configuration from a TOML file, replacing the active settings."""
        with open(config_path, "rb") as f:
            raw_config = tomllib.load(f)

        self = cls()
        self._config = self._build(raw_config)
        return self

    @property
    def search(self) -> SearchSettings:
        return self._config.search

    @property
    def coloring(self) -> ColoringSettings:
        return self._config.coloring

    @property
    def lemmas(self) -> LemmaSettings:
        return self._config.lemmas

    @property
    def logging(self) -> LogSettings:
        return self._config.logging


def parse_workers(value: str) -> int:
    """Parse a worker count coming from the environment."""
    try:
        workers = int(value)
    except ValueError:
        raise ConfigError(f"{WORKERS_ENV_VAR} must be an integer, got {value!r}")
    if workers < 1:
        raise ConfigError(f"{WORKERS_ENV_VAR} must be at least 1, got {workers}")
    return workers


config = Config()
