"""Counter-based, splittable random streams.

Every (seed, trial, purpose) triple maps to its own Philox generator seeded
through ``numpy.random.SeedSequence``, so a trial draws the same numbers no
matter which worker runs it or in what order.
"""

from __future__ import annotations

from enum import IntEnum

import numpy as np


class StreamPurpose(IntEnum):
    PLACEMENT = 0
    FADING = 1
    INSTANCE = 2


class RandomStream:
    """A numpy Generator bound to one node of the seed tree."""

    def __init__(self, seed: int, key: tuple[int, ...] = ()):
        self.seed = int(seed)
        self.key = tuple(int(k) for k in key)
        seq = np.random.SeedSequence(entropy=self.seed, spawn_key=self.key)
        self.generator = np.random.Generator(np.random.Philox(seq))

    @classmethod
    def for_trial(cls, seed: int, trial_id: int) -> RandomStream:
        return cls(seed, (trial_id,))

    def substream(self, purpose: StreamPurpose | int) -> RandomStream:
        return RandomStream(self.seed, (*self.key, int(purpose)))

    def __repr__(self) -> str:  # pragma: no cover - debugging aid
        return f"RandomStream(seed={self.seed}, key={self.key})"
