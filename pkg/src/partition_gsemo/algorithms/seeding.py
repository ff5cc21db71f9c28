"""
Seed derivation and generator construction.

Generator family: numpy PCG64 (numpy.random.Generator), pinned through the numpy
version in requirements.txt.

Stream splitting: the seed of any derived stream is

    SeedSequence(entropy=master_seed, spawn_key=(stable_key(*labels),)).generate_state(1, uint64)[0]

where stable_key hashes the labels (e.g. ("gsemo", instance_id, repeat)) with
SHA-256. Seeds depend only on (master seed, labels), never on execution order,
so runs are reproducible under any degree of parallelism.
"""

import hashlib
from typing import Union

import numpy as np

Label = Union[str, int, float]

MAX_SEED = (1 << 64) - 1


def stable_key(*labels: Label) -> int:
    """Platform-independent 63-bit key for a tuple of labels."""
    text = "\x1f".join(repr(label) for label in labels)
    digest = hashlib.sha256(text.encode("utf-8")).digest()
    return int.from_bytes(digest[:8], "big") >> 1


def derive_seed(master_seed: int, *labels: Label) -> int:
    """
    Derive a 64-bit seed for the stream identified by labels.

    Args:
        master_seed: Experiment-wide seed (0 <= master_seed < 2^64)
        labels: Stream identity, e.g. ("graph", n, density, index)

    Returns:
        Unsigned 64-bit seed
    """
    if not 0 <= master_seed <= MAX_SEED:
        raise ValueError(f"Master seed must be a 64-bit unsigned integer, got {master_seed}")
    sequence = np.random.SeedSequence(entropy=master_seed, spawn_key=(stable_key(*labels),))
    return int(sequence.generate_state(1, dtype=np.uint64)[0])


def make_rng(seed: int) -> np.random.Generator:
    """PCG64 generator for a 64-bit seed."""
    return np.random.Generator(np.random.PCG64(np.random.SeedSequence(seed)))
