"""Seedable, portable random stream for reproducible instance generation.

SplitMix64 is used instead of the stdlib Mersenne Twister so that the byte
streams behind generated instances are pinned by this module alone and do
not depend on interpreter internals.  Same seed, same draws, on any
platform.
"""

from __future__ import annotations

_MASK = (1 << 64) - 1
_GAMMA = 0x9E3779B97F4A7C15

_FNV_OFFSET = 0xCBF29CE484222325
_FNV_PRIME = 0x00000100000001B3


def _fnv1a64(data: bytes) -> int:
    h = _FNV_OFFSET
    for b in data:
        h = ((h ^ b) * _FNV_PRIME) & _MASK
    return h


def _mix(z: int) -> int:
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9 & _MASK
    z = (z ^ (z >> 27)) * 0x94D049BB133111EB & _MASK
    return z ^ (z >> 31)


class SplitMix64:
    """Deterministic 64-bit stream with label-derived substreams."""

    def __init__(self, seed: int):
        self._seed0 = seed & _MASK
        self._state = seed & _MASK

    @property
    def seed(self) -> int:
        return self._seed0

    def next_u64(self) -> int:
        self._state = (self._state + _GAMMA) & _MASK
        return _mix(self._state)

    def randint(self, lo: int, hi: int) -> int:
        """Uniform integer in [lo, hi], rejection-sampled (no modulo bias)."""
        if hi < lo:
            raise ValueError(f"empty range [{lo}, {hi}]")
        span = hi - lo + 1
        limit = (1 << 64) - ((1 << 64) % span)
        while True:
            u = self.next_u64()
            if u < limit:
                return lo + (u % span)

    def randint_nonzero(self, lo: int, hi: int) -> int:
        if lo == 0 == hi:
            raise ValueError("no nonzero value in [0, 0]")
        while True:
            v = self.randint(lo, hi)
            if v != 0:
                return v

    def choice(self, seq):
        return seq[self.randint(0, len(seq) - 1)]

    def fork(self, *labels) -> "SplitMix64":
        """Substream derived from the base seed and labels, independent of
        how many draws this stream has made."""
        tag = "/".join(str(x) for x in labels).encode("utf-8")
        return SplitMix64(_mix(self._seed0 ^ _fnv1a64(tag)))
