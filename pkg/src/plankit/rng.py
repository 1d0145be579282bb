"""Seedable pseudo-random generator with a pinned algorithm.

The state is seeded from a 64-bit integer with SplitMix64 and advanced
with xoshiro256** (Blackman & Vigna). Draw accounting, which samplers
rely on for reproducibility:

* ``next_u64``  - one draw
* ``random``    - one draw, the top 53 bits scaled to [0, 1)
* ``uniform``   - one draw
* ``normal``    - two draws (Box-Muller, cosine branch only, no caching)
"""

from __future__ import annotations

import math

_MASK = (1 << 64) - 1


def _rotl(x: int, k: int) -> int:
    return ((x << k) | (x >> (64 - k))) & _MASK


def splitmix64(state: int) -> tuple[int, int]:
    """One SplitMix64 step. Returns ``(new_state, output)``."""
    state = (state + 0x9E3779B97F4A7C15) & _MASK
    z = state
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK
    return state, z ^ (z >> 31)


class Rng:
    """xoshiro256** generator seeded through SplitMix64."""

    def __init__(self, seed: int = 0):
        if not 0 <= seed <= _MASK:
            raise ValueError(f"seed must be a 64-bit unsigned integer, got {seed}")
        self.seed = seed
        sm = seed
        s = []
        for _ in range(4):
            sm, out = splitmix64(sm)
            s.append(out)
        self._s = s
        self.draws = 0

    def next_u64(self) -> int:
        s0, s1, s2, s3 = self._s
        result = (_rotl((s1 * 5) & _MASK, 7) * 9) & _MASK
        t = (s1 << 17) & _MASK
        s2 ^= s0
        s3 ^= s1
        s1 ^= s2
        s0 ^= s3
        s2 ^= t
        s3 = _rotl(s3, 45)
        self._s = [s0, s1, s2, s3]
        self.draws += 1
        return result

    def random(self) -> float:
        return (self.next_u64() >> 11) * (1.0 / 9007199254740992.0)

    def uniform(self, lo: float, hi: float) -> float:
        """Uniform on ``[lo, hi)``; clamped so rounding never yields ``hi``."""
        x = lo + (hi - lo) * self.random()
        return x if x < hi else math.nextafter(hi, lo)

    def normal(self) -> float:
        u1 = self.random()
        u2 = self.random()
        # 1 - u1 lies in (0, 1], keeping the log finite
        return math.sqrt(-2.0 * math.log(1.0 - u1)) * math.cos(2.0 * math.pi * u2)
