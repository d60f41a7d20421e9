"""Deterministic random streams.

Two generators cover the package's needs:

* ``Substream`` -- a splitmix64 stream keyed by an arbitrary tuple of
  64-bit integers.  Noise drawn for one key never depends on how many
  other keys were processed first, so randomized releases are independent
  of iteration order and thread count.
* ``trial_uniforms`` -- counter-based Philox draws where trial ``i``
  always consumes counter block ``i``.  Splitting a simulation into
  chunks (for any worker count) reproduces the exact same per-trial
  values.
"""

from __future__ import annotations

import numpy as np

_MASK = (1 << 64) - 1
_GAMMA = 0x9E3779B97F4A7C15


def _mix(z: int) -> int:
    """splitmix64 output function."""
    z = (z + _GAMMA) & _MASK
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK
    return z ^ (z >> 31)


def derive_key(*keys: int) -> int:
    """Fold integer keys into a single 64-bit stream key."""
    state = 0
    for k in keys:
        state = _mix(state ^ (int(k) & _MASK))
    return state


class Substream:
    """splitmix64 stream seeded from a key tuple."""

    def __init__(self, *keys: int):
        self._state = derive_key(*keys)

    def next_raw(self) -> int:
        self._state = (self._state + _GAMMA) & _MASK
        return _mix(self._state)

    def uniform(self) -> float:
        """Uniform draw in (0, 1], safe for log transforms."""
        return ((self.next_raw() >> 11) + 1) * (2.0 ** -53)


def trial_uniforms(seed: int, start: int, count: int) -> np.ndarray:
    """Uniforms for trials ``start .. start+count-1``, shape (count, 4).

    Row ``i`` is a pure function of (seed, start + i): each trial owns one
    Philox counter block (4 words, one word per float64), so the matrix is
    identical no matter how the trial range is chunked.
    """
    bitgen = np.random.Philox(key=int(seed) & _MASK, counter=int(start))
    return np.random.Generator(bitgen).random((count, 4))
