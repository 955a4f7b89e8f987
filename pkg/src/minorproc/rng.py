"""Reproducible randomness: counter-based generators with key splitting.

Replicates and sweep cells get generators derived from the master seed and
their (cell, replicate) key, so results are identical no matter how work is
scheduled across processes.
"""

from __future__ import annotations

import numpy as np


def split_rng(master_seed: int, *key: int) -> np.random.Generator:
    """Philox generator for the given master seed and split key."""
    seq = np.random.SeedSequence(entropy=master_seed, spawn_key=tuple(key))
    return np.random.Generator(np.random.Philox(seq))


def split_seed(master_seed: int, *key: int) -> int:
    """A derived 63-bit integer seed for the given key (for config echoing)."""
    seq = np.random.SeedSequence(entropy=master_seed, spawn_key=tuple(key))
    return int(seq.generate_state(1, dtype=np.uint64)[0] >> 1)
