"""Process-level runtime settings for cnspa.

These knobs control how a run executes (worker threads, safety caps,
progress display), never what it computes. They are read from environment
variables so CI and scripts can tune them without touching scenario files.
"""

from __future__ import annotations

from dataclasses import dataclass

from cnspa.config_helpers import env_flag, env_int

DEFAULT_MAX_DROP_ATTEMPTS = 1000
DEFAULT_BRUTE_FORCE_LIMIT = 12


@dataclass(frozen=True)
class RuntimeSettings:
    """Execution settings.

    Recognized environment variables:
    - CNSPA_WORKERS (Monte Carlo worker threads)
    - CNSPA_MAX_DROP_ATTEMPTS (redraw cap for one drop)
    - CNSPA_BRUTE_FORCE_LIMIT (largest cluster the subset oracle accepts)
    - CNSPA_PROGRESS (show progress bars; true/false)
    """

    workers: int = 1
    max_drop_attempts: int = DEFAULT_MAX_DROP_ATTEMPTS
    brute_force_limit: int = DEFAULT_BRUTE_FORCE_LIMIT
    show_progress: bool = True

    @classmethod
    def from_env(cls) -> RuntimeSettings:
        return cls(
            workers=env_int("CNSPA_WORKERS", cls.workers, high=64),
            max_drop_attempts=env_int(
                "CNSPA_MAX_DROP_ATTEMPTS",
                cls.max_drop_attempts,
                high=1_000_000,
            ),
            # 2^16 subsets is the most the oracle should ever be asked to scan
            brute_force_limit=env_int(
                "CNSPA_BRUTE_FORCE_LIMIT",
                cls.brute_force_limit,
                high=16,
            ),
            show_progress=env_flag("CNSPA_PROGRESS", cls.show_progress),
        )


SETTINGS = RuntimeSettings.from_env()
