"""
Random streams.

Every replicate r of a run draws from numpy's PCG64 seeded with
mix64(master_seed, r). mix64 is splitmix64 applied to the master seed XORed
with the splitmix64 image of the stream index, so neighbouring seeds and
neighbouring replicates land on unrelated streams.
"""
import numpy as np

_MASK = (1 << 64) - 1
_GOLDEN = 0x9E3779B97F4A7C15


def splitmix64(x: int) -> int:
    z = (x + _GOLDEN) & _MASK
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK
    return z ^ (z >> 31)


def mix64(master_seed: int, stream: int) -> int:
    return splitmix64((master_seed & _MASK) ^ splitmix64(stream & _MASK))


def make_rng(seed: int) -> np.random.Generator:
    return np.random.Generator(np.random.PCG64(seed))


def replicate_rng(master_seed: int, replicate: int) -> np.random.Generator:
    return make_rng(mix64(master_seed, replicate))
