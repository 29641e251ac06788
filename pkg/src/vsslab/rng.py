"""Deterministic randomness for the whole package.

Every random draw flows from an explicit 64-bit seed through SplitMix64,
a tiny, well-studied generator: the state advances by the golden-ratio
increment 0x9E3779B97F4A7C15 and each output is scrambled by the
xor-shift/multiply finalizer below. Two runs with the same seed produce
the same byte-for-byte results on any platform.

Independent sub-streams (one per dealer, one for parameter generation)
are derived by folding an index into the parent seed with the same
finalizer, so draw order in one stream never perturbs another.
"""

from __future__ import annotations

MASK64 = (1 << 64) - 1
_GOLDEN = 0x9E3779B97F4A7C15


def _mix(z: int) -> int:
    """SplitMix64 output finalizer."""
    z &= MASK64
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & MASK64
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & MASK64
    return z ^ (z >> 31)


class SplitMix64:
    """64-bit PRNG with uniform integer helpers built on rejection sampling."""

    def __init__(self, seed: int):
        if seed < 0:
            raise ValueError("seed must be non-negative")
        self._state = seed & MASK64

    def next_u64(self) -> int:
        self._state = (self._state + _GOLDEN) & MASK64
        return _mix(self._state)

    def randbits(self, k: int) -> int:
        """Uniform integer in [0, 2**k)."""
        if k < 0:
            raise ValueError("bit count must be non-negative")
        out = 0
        filled = 0
        while filled < k:
            out |= self.next_u64() << filled
            filled += 64
        return out & ((1 << k) - 1)

    def randbelow(self, n: int) -> int:
        """Uniform integer in [0, n) by rejection on n.bit_length() bits."""
        if n < 1:
            raise ValueError("bound must be positive")
        k = n.bit_length()
        while True:
            candidate = self.randbits(k)
            if candidate < n:
                return candidate

    def randrange(self, lo: int, hi: int) -> int:
        """Uniform integer in [lo, hi)."""
        if hi <= lo:
            raise ValueError("empty range")
        return lo + self.randbelow(hi - lo)


def substream(seed: int, *path: int) -> SplitMix64:
    """Child generator for (seed, path).

    The child seed is mix(parent + (index + 1) * golden) applied once per
    path element, so substream(s, 1) and substream(s, 2) never collide
    with each other or with the parent stream.
    """
    s = seed & MASK64
    for index in path:
        if index < 0:
            raise ValueError("substream indices must be non-negative")
        s = _mix((s + (index + 1) * _GOLDEN) & MASK64)
    return SplitMix64(s)
