"""Deterministic pseudo-randomness for every seeded operation in the engine.

All stochastic choices (train/test shuffling, per-round feature subsets,
complexity sampling) flow through the SplitMix64 generator below instead of
a platform RNG, so fit traces are reproducible bit-for-bit across machines
and can be re-derived by an independent implementation. The contract is:

* state update:  ``state = (state + 0x9E3779B97F4A7C15) mod 2^64``
* output mix:    ``z = state;  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EB;  z = z ^ (z >> 31)``
  (all arithmetic mod 2^64)
* bounded draw:  ``next_below(n) = next_u64() mod n``
* sampling k of n without replacement: partial Fisher-Yates over
  ``[0, n)`` -- for i in 0..k-1 swap position i with position
  ``i + next_below(n - i)``, then take the first k entries.
* shuffle: the same walk with k = n.

Seeds are taken mod 2^64; negative seeds are two's-complement wrapped.
"""

from __future__ import annotations

_MASK = (1 << 64) - 1
_GAMMA = 0x9E3779B97F4A7C15
_MIX1 = 0xBF58476D1CE4E5B9
_MIX2 = 0x94D049BB133111EB


class SplitMix64:
    """Tiny counter-based generator; cheap to fork per model."""

    def __init__(self, seed: int):
        self._state = seed & _MASK

    def next_u64(self) -> int:
        self._state = (self._state + _GAMMA) & _MASK
        z = self._state
        z = ((z ^ (z >> 30)) * _MIX1) & _MASK
        z = ((z ^ (z >> 27)) * _MIX2) & _MASK
        return z ^ (z >> 31)

    def next_below(self, bound: int) -> int:
        if bound <= 0:
            raise ValueError("bound must be positive")
        return self.next_u64() % bound

    def sample(self, n: int, k: int) -> list[int]:
        """k distinct integers from [0, n), in draw order."""
        if not 0 <= k <= n:
            raise ValueError(f"cannot sample {k} of {n}")
        pool = list(range(n))
        for i in range(k):
            j = i + self.next_below(n - i)
            pool[i], pool[j] = pool[j], pool[i]
        return pool[:k]

    def shuffle(self, items: list) -> list:
        """In-place Fisher-Yates shuffle; returns the list for chaining."""
        n = len(items)
        for i in range(n):
            j = i + self.next_below(n - i)
            items[i], items[j] = items[j], items[i]
        return items
