"""Deterministic seed derivation.

All randomness in the toolkit flows from a single root seed.  Every consumer
(corpus synthesis, diffusion noise, indicator sampling, weight init, ...)
derives its own child seed from (root, purpose, index) so that runs are
reproducible and purposes stay statistically independent.
"""

import zlib

import numpy as np


def derive_seed(root_seed: int, purpose: str, index: int = 0) -> int:
    """Return a 32-bit seed deterministically derived from the root seed."""
    tag = zlib.crc32(purpose.encode("utf-8"))
    ss = np.random.SeedSequence(entropy=int(root_seed) & 0xFFFFFFFFFFFF,
                                spawn_key=(tag, int(index)))
    return int(ss.generate_state(1, dtype=np.uint32)[0])


def rng_for(root_seed: int, purpose: str, index: int = 0) -> np.random.Generator:
    """NumPy generator seeded via :func:`derive_seed`."""
    return np.random.default_rng(derive_seed(root_seed, purpose, index))
