"""
Seeded samplers for the permutation families and the two recursive
distributional laws (LIS-law and cycle-law of nonsimple butterflies).

All samplers take either an :class:`RngState` (a value; the same state
always reproduces the same draw) or a live ``numpy.random.Generator``
(whose state advances between calls). Bounded-integer draws come from
numpy's Generator, which uses rejection-based bounded sampling, so the
shuffles below are exactly uniform.

The recursion-law levels are normalized so that level n corresponds to
permutations of length 2^n: the base value at n = 0 is the constant 1,
which is what enumeration of the length-2 and length-4 groups pins down.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .butterfly import build_simple, words_from_shape_bits
from .perms import Word, assemble_wreath, kron


@dataclass(frozen=True)
class RngState:
    """A reproducible stream id: (seed, stream).

    Equal states yield identical sample sequences across runs and
    platforms; distinct stream ids derived from one seed are treated as
    independent streams (one per Monte Carlo trial or chunk).
    """

    seed: int
    stream: int = 0

    def generator(self) -> np.random.Generator:
        return np.random.default_rng(np.random.SeedSequence(self.seed, spawn_key=(self.stream,)))

    def substream(self, i: int) -> "RngState":
        """Stream i derived from the same base seed."""
        return RngState(self.seed, i)


def _gen(rng: RngState | np.random.Generator) -> np.random.Generator:
    if isinstance(rng, RngState):
        return rng.generator()
    return rng


def uniform_permutation(n: int, rng: RngState | np.random.Generator) -> Word:
    """Uniform word from S_n (Fisher-Yates shuffle)."""
    if n < 1:
        raise ValueError("n must be >= 1")
    g = _gen(rng)
    return tuple(int(x) + 1 for x in g.permutation(n))


def sample_wreath(n: int, m: int, rng: RngState | np.random.Generator) -> Word:
    """Uniform word from S_n wr S_m: outer word and m iid inner blocks.

    Independent uniform draws of the outer word and every block give a
    uniform element of the product group (subgroup-algorithm sampling).
    """
    g = _gen(rng)
    rho = uniform_permutation(m, g)
    blocks = [uniform_permutation(n, g) for _ in range(m)]
    return assemble_wreath(rho, blocks)


def sample_kron(m: int, n: int, rng: RngState | np.random.Generator) -> Word:
    """Uniform word from S_m (x) S_n: outer word and one shared inner block."""
    g = _gen(rng)
    rho = uniform_permutation(m, g)
    pi = uniform_permutation(n, g)
    return kron(rho, pi)


def sample_simple_butterfly(n: int, rng: RngState | np.random.Generator) -> Word:
    """Uniform simple butterfly word of length 2^n (n fair factor bits)."""
    if n < 1:
        raise ValueError("n must be >= 1")
    g = _gen(rng)
    return build_simple(tuple(int(b) for b in g.integers(0, 2, size=n)))


def sample_nonsimple_butterfly(n: int, rng: RngState | np.random.Generator) -> Word:
    """Uniform nonsimple butterfly word of length 2^n (2^n - 1 fair node bits)."""
    if n < 1:
        raise ValueError("n must be >= 1")
    g = _gen(rng)
    bits = g.integers(0, 2, size=(1, (1 << n) - 1))
    return tuple(int(x) for x in words_from_shape_bits(n, bits)[0])


def nonsimple_butterfly_words(n: int, count: int, rng: RngState | np.random.Generator) -> np.ndarray:
    """(count, 2^n) matrix of iid uniform nonsimple butterfly words."""
    g = _gen(rng)
    bits = g.integers(0, 2, size=(count, (1 << n) - 1))
    return words_from_shape_bits(n, bits)


def uniform_words(n: int, count: int, rng: RngState | np.random.Generator) -> np.ndarray:
    """(count, n) matrix of iid uniform S_n words (row-wise shuffles)."""
    g = _gen(rng)
    base = np.tile(np.arange(1, n + 1, dtype=np.int64), (count, 1))
    return g.permuted(base, axis=1)


def wreath_words(n: int, m: int, count: int, rng: RngState | np.random.Generator) -> np.ndarray:
    """(count, n*m) matrix of iid uniform S_n wr S_m words."""
    g = _gen(rng)
    rho = g.permuted(np.tile(np.arange(m, dtype=np.int64), (count, 1)), axis=1)
    blocks = np.stack([uniform_words(n, count, g) for _ in range(m)], axis=1)  # (count, m, n)
    picked = blocks[np.arange(count)[:, None], rho]  # block rho(i) at position-block i
    shifted = picked + (rho * n)[:, :, None]
    return shifted.reshape(count, n * m)


def _law_samples(n: int, count: int, g: np.random.Generator, combine) -> np.ndarray:
    if n < 0:
        raise ValueError("n must be >= 0")
    arr = np.ones((count, 1 << n), dtype=np.int64)
    for _ in range(n):
        a = arr[:, 0::2]
        b = arr[:, 1::2]
        eta = g.integers(0, 2, size=a.shape)
        arr = combine(a, b, eta)
    return arr[:, 0]


def lis_law_samples(n: int, count: int, rng: RngState | np.random.Generator) -> np.ndarray:
    """iid samples of the level-n LIS law: X' = (X1 + X2) eta + max(X1, X2)(1 - eta)."""
    return _law_samples(n, count, _gen(rng), lambda a, b, e: np.where(e == 1, a + b, np.maximum(a, b)))


def cycle_law_samples(n: int, count: int, rng: RngState | np.random.Generator) -> np.ndarray:
    """iid samples of the level-n cycle law: Y' = Y1 + eta Y2."""
    return _law_samples(n, count, _gen(rng), lambda a, b, e: a + e * b)


def sample_lis_law(n: int, rng: RngState | np.random.Generator) -> int:
    """One sample of the level-n LIS law (one fair bit per internal node)."""
    return int(lis_law_samples(n, 1, rng)[0])


def sample_cycle_law(n: int, rng: RngState | np.random.Generator) -> int:
    """One sample of the level-n cycle law."""
    return int(cycle_law_samples(n, 1, rng)[0])
