from __future__ import annotations

import logging
import os
from typing import Optional

from pydantic import BaseModel, Field

MATRIX_THRESHOLD = 20_000
BFS_CHUNK_ROWS = 512
TOURNAMENT_CAP = 7
STRONG_DIGRAPH_CAP = 5
CANONICAL_CAP = 8
DEFAULT_SAMPLES = 500
DEFAULT_SEED = 20240901

logger = logging.getLogger(__name__)


class Settings(BaseModel):
    """Runtime knobs shared by the metric engine, the searches and the CLI.

    Example:
        .. code-block:: python

            from ecci_digraph.config import Settings

            settings = Settings.from_env()
            settings = settings.model_copy(update={"threads": 8})
    """

    threads: int = Field(default=1, ge=1)
    """Worker processes used by exhaustive searches."""

    matrix_threshold: int = Field(default=MATRIX_THRESHOLD, ge=1)
    """Largest order for which a full n x n distance matrix is materialized."""

    bfs_chunk_rows: int = Field(default=BFS_CHUNK_ROWS, ge=1)
    """Number of BFS sources evaluated per block when streaming eccentricities."""

    tournament_cap: int = TOURNAMENT_CAP
    strong_digraph_cap: int = STRONG_DIGRAPH_CAP
    canonical_cap: int = CANONICAL_CAP

    samples: int = Field(default=DEFAULT_SAMPLES, ge=1)
    seed: int = DEFAULT_SEED
    max_retries: int = Field(default=1000, ge=1)

    show_progress: bool = False
    """Whether to show a tqdm progress bar on long searches."""

    class Config:
        """Configuration for this pydantic object."""

        frozen = True

    @classmethod
    def from_env(cls, threads: Optional[int] = None, **overrides) -> Settings:
        """Build settings from ``ECCI_*`` environment variables.

        Explicit arguments win over the environment, which wins over defaults.
        """
        values = {}
        env_threads = os.getenv("ECCI_THREADS")
        if env_threads:
            try:
                values["threads"] = int(env_threads)
            except ValueError:
                logger.warning("Ignoring non-integer ECCI_THREADS=%r", env_threads)
        env_threshold = os.getenv("ECCI_MATRIX_THRESHOLD")
        if env_threshold:
            try:
                values["matrix_threshold"] = int(env_threshold)
            except ValueError:
                logger.warning(
                    "Ignoring non-integer ECCI_MATRIX_THRESHOLD=%r", env_threshold
                )
        if threads is not None:
            values["threads"] = threads
        values.update({k: v for k, v in overrides.items() if v is not None})
        return cls(**values)


def get_settings() -> Settings:
    return Settings.from_env()
