"""Portable seeded randomness.

Every random choice in the package (graph generation, labeling sampling,
annealing moves) draws from :class:`SplitMix64`, so results depend only on
the 64-bit seed and not on the Python version.  The derived operations are
fixed as follows:

* ``next_u64``: SplitMix64 (Steele, Lea & Flood), state += 0x9E3779B97F4A7C15,
  then the standard two-multiply finalizer.
* ``below(k)``: rejection sampling; draws ``x`` until
  ``x < 2**64 - (2**64 % k)`` and returns ``x % k``.
* ``random()``: ``(next_u64() >> 11) * 2**-53``.
* ``shuffle``: Fisher-Yates from the last index down, swapping ``i`` with
  ``below(i + 1)``.
"""

from __future__ import annotations

from typing import MutableSequence, TypeVar

T = TypeVar("T")

_MASK64 = (1 << 64) - 1
_GOLDEN = 0x9E3779B97F4A7C15


class SplitMix64:
    def __init__(self, seed: int) -> None:
        self.state = seed & _MASK64

    def next_u64(self) -> int:
        self.state = (self.state + _GOLDEN) & _MASK64
        z = self.state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK64
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK64
        return z ^ (z >> 31)

    def below(self, k: int) -> int:
        """Uniform integer in ``[0, k)``."""
        if k <= 0:
            raise ValueError(f"below() needs a positive bound, got {k}")
        limit = (1 << 64) - ((1 << 64) % k)
        while True:
            x = self.next_u64()
            if x < limit:
                return x % k

    def random(self) -> float:
        return (self.next_u64() >> 11) * (1.0 / (1 << 53))

    def shuffle(self, seq: MutableSequence[T]) -> None:
        for i in range(len(seq) - 1, 0, -1):
            j = self.below(i + 1)
            seq[i], seq[j] = seq[j], seq[i]

    def permutation(self, k: int) -> list[int]:
        """A uniformly random ordering of ``1..k``."""
        out = list(range(1, k + 1))
        self.shuffle(out)
        return out
