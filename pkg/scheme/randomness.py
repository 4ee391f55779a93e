"""Seeded generator streams.

Each experiment seed fans out into independent streams, one per purpose,
so that sampling a database never shifts the randomness of the queries.
Production use needs a cryptographically strong source instead.
"""
import numpy as np

STREAMS = ('database', 'queries', 'attack')


def stream(seed, purpose):
    if purpose not in STREAMS:
        raise ValueError(f"unknown randomness stream {purpose!r}; expected one of {STREAMS}")
    sequence = np.random.SeedSequence(entropy=seed, spawn_key=(STREAMS.index(purpose),))
    return np.random.default_rng(sequence)
