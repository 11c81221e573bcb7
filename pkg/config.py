
# Central configuration management

from dataclasses import dataclass, field
from pathlib import Path
from typing import Optional
import os
from dotenv import load_dotenv

load_dotenv()

OPERATOR_NAMES = ("prioritized", "dalal")


def _env_bool(name: str, default: str) -> bool:
    return os.getenv(name, default).strip().lower() in ("1", "true", "yes", "y", "t")


@dataclass
class EngineConfig:

    default_depth: int = 3
    default_operator: str = "prioritized"

    @classmethod
    def from_env(cls) -> "EngineConfig":

        # Load engine defaults from environment variables.

        operator = os.getenv("EPISTEMIC_OPERATOR", "prioritized")
        if operator not in OPERATOR_NAMES:
            raise ValueError(
                f"Unknown revision operator {operator!r} in EPISTEMIC_OPERATOR. "
                f"Expected one of: {', '.join(OPERATOR_NAMES)}."
            )

        depth = int(os.getenv("EPISTEMIC_DEPTH", "3"))
        if depth < 0:
            raise ValueError("EPISTEMIC_DEPTH must be a non-negative integer.")

        return cls(default_depth=depth, default_operator=operator)


@dataclass
class SearchConfig:
    """Explanation search defaults (pool bounds and preference order)."""

    pool_literals: int = 2
    modal_depth: int = 0
    order: str = "truthfulness,min_letters,plausibility"

    @classmethod
    def from_env(cls) -> "SearchConfig":
        return cls(
            pool_literals=int(os.getenv("EPISTEMIC_POOL_LITERALS", "2")),
            modal_depth=int(os.getenv("EPISTEMIC_MODAL_DEPTH", "0")),
            order=os.getenv("EPISTEMIC_ORDER", "truthfulness,min_letters,plausibility"),
        )


@dataclass
class OracleConfig:
    """Enumeration bounds for the theorem and postulate harnesses."""

    vocab_size: int = 3
    max_literals: int = 3
    max_seq_len: int = 2
    introspection_literals: int = 1
    show_progress: bool = False
    postulate_vocab: list[str] = field(default_factory=lambda: ["p", "q"])

    @classmethod
    def from_env(cls) -> "OracleConfig":
        return cls(
            vocab_size=int(os.getenv("ORACLE_VOCAB_SIZE", "3")),
            max_literals=int(os.getenv("ORACLE_MAX_LITERALS", "3")),
            max_seq_len=int(os.getenv("ORACLE_MAX_SEQ_LEN", "2")),
            introspection_literals=int(os.getenv("ORACLE_INTROSPECTION_LITERALS", "1")),
            show_progress=_env_bool("ORACLE_PROGRESS", "false"),
        )


@dataclass
class AppConfig:
    """Application-wide configuration."""

    engine: EngineConfig
    search: SearchConfig
    oracle: OracleConfig
    log_level: str = "WARNING"
    fixtures_dir: Path = Path("fixtures")

    @classmethod
    def load(cls) -> "AppConfig":
        """
        Load complete application configuration.

        Returns:
            AppConfig: Fully configured application settings.
        """
        return cls(
            engine=EngineConfig.from_env(),
            search=SearchConfig.from_env(),
            oracle=OracleConfig.from_env(),
            log_level=os.getenv("LOG_LEVEL", "WARNING"),
            fixtures_dir=Path(os.getenv("EPISTEMIC_FIXTURES", "fixtures")),
        )


# Global config instance (lazy-loaded)
_config: Optional[AppConfig] = None


def get_config(reload: bool = False) -> AppConfig:

    global _config

    if _config is None or reload:
        _config = AppConfig.load()

    return _config
