"""Deterministic, seedable sampling of random coin vectors.

Protocol: draw n integers uniformly from [k, m] with k >= n, sort, accept
when the configured coprimality condition holds, retry otherwise. Every
trial owns its own generator seeded by a documented mix of
(master_seed, trial_index), so the sequence of accepted vectors is a pure
function of the config: trials can run serially or across any number of
workers and produce identical records.

Generators are fixed algorithms with published reference implementations,
re-implemented here so streams are reproducible on any platform:

* splitmix64 (Steele, Lea, Flood; the Java SplittableRandom finalizer)
  provides seed derivation and state expansion.
* xoshiro256** 1.0 (Blackman, Vigna) provides the per-trial 64-bit stream.

Uniform integers over a span use 64-bit rejection, so there is no modulo
bias at any span size.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional, Tuple

from .vectors import CoinVector, ConditionKind, is_pairwise_coprime, make_coin_vector

_MASK64 = (1 << 64) - 1
_GOLDEN_GAMMA = 0x9E3779B97F4A7C15


class SamplingError(RuntimeError):
    """Raised when a trial exhausts its attempt budget without acceptance."""


def mix64(z: int) -> int:
    """splitmix64 output finalizer: avalanche mix of one 64-bit word."""
    z &= _MASK64
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK64
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK64
    return z ^ (z >> 31)


def splitmix64_next(state: int) -> Tuple[int, int]:
    """Advance splitmix64 by one step: returns (new_state, output)."""
    state = (state + _GOLDEN_GAMMA) & _MASK64
    return state, mix64(state)


def derive_trial_seed(master_seed: int, trial_index: int) -> int:
    """The documented (master, index) -> seed mix.

    mix64((master + (index + 1) * golden_gamma) mod 2^64): the splitmix64
    finalizer applied along the golden-gamma sequence starting one step
    past the master seed. Injective in the index until the gamma sequence
    wraps, far beyond any experiment size here.
    """
    if trial_index < 0:
        raise ValueError(f"trial_index must be >= 0, got {trial_index}")
    return mix64((master_seed + (trial_index + 1) * _GOLDEN_GAMMA) & _MASK64)


class Xoshiro256StarStar:
    """xoshiro256** 1.0; 64-bit outputs, state seeded via splitmix64."""

    __slots__ = ("_s0", "_s1", "_s2", "_s3")

    def __init__(self, seed: int):
        state = seed & _MASK64
        state, self._s0 = splitmix64_next(state)
        state, self._s1 = splitmix64_next(state)
        state, self._s2 = splitmix64_next(state)
        state, self._s3 = splitmix64_next(state)

    def next64(self) -> int:
        s0, s1, s2, s3 = self._s0, self._s1, self._s2, self._s3
        result = (s1 * 5) & _MASK64
        result = (((result << 7) | (result >> 57)) * 9) & _MASK64
        t = (s1 << 17) & _MASK64
        s2 ^= s0
        s3 ^= s1
        s1 ^= s2
        s0 ^= s3
        s2 ^= t
        s3 = ((s3 << 45) | (s3 >> 19)) & _MASK64
        self._s0, self._s1, self._s2, self._s3 = s0, s1, s2, s3
        return result

    def below(self, n: int) -> int:
        """Unbiased uniform integer in [0, n) by 64-bit rejection."""
        if n < 1:
            raise ValueError(f"span must be positive, got {n}")
        limit = (1 << 64) - ((1 << 64) % n)
        while True:
            r = self.next64()
            if r < limit:
                return r % n


@dataclass(frozen=True)
class SamplerConfig:
    """One dimension's sampling protocol; k defaults to n.

    Invariants: 2 <= n <= m and n <= k <= m. The entry interval [k, m]
    never contains values below n, matching the protocol's k >= n.
    """

    n: int
    m: int
    condition: ConditionKind
    master_seed: int
    k: Optional[int] = None
    max_attempts_per_trial: int = 10_000

    def __post_init__(self):
        if self.k is None:
            object.__setattr__(self, "k", self.n)
        if self.n < 2:
            raise ValueError(f"n must be >= 2, got {self.n}")
        if not (self.n <= self.k <= self.m):
            raise ValueError(
                f"need n <= k <= m, got n={self.n}, k={self.k}, m={self.m}"
            )
        if self.max_attempts_per_trial < 1:
            raise ValueError("max_attempts_per_trial must be >= 1")


def _accepts(entries, condition: ConditionKind) -> bool:
    if condition is ConditionKind.PAIRWISE_COPRIME:
        return is_pairwise_coprime(entries)
    return math.gcd(*entries) == 1


def sample_vector(cfg: SamplerConfig, trial_index: int) -> CoinVector:
    """Draw the accepted vector of one trial; pure in (cfg, trial_index)."""
    gen = Xoshiro256StarStar(derive_trial_seed(cfg.master_seed, trial_index))
    span = cfg.m - cfg.k + 1
    for _ in range(cfg.max_attempts_per_trial):
        draws = sorted(gen.below(span) + cfg.k for _ in range(cfg.n))
        if _accepts(draws, cfg.condition):
            return make_coin_vector(draws)
    raise SamplingError(
        f"no acceptable vector in {cfg.max_attempts_per_trial} attempts "
        f"(n={cfg.n}, k={cfg.k}, m={cfg.m}, condition={cfg.condition.value})"
    )
