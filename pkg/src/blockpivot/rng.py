"""Deterministic, portable random number generation.

The generator is xoshiro256++ with its state seeded from a 64-bit
integer via four successive splitmix64 outputs.  Both the algorithm and
the draw discipline are normative so that fixtures are reproducible
across implementations:

* raw draws are the 64-bit xoshiro256++ outputs in sequence;
* a uniform double in [lo, hi) is formed from a raw draw ``r`` as
  ``u = (r >> 11) * 2**-53`` followed by ``lo + (u * (hi - lo))``;
* integer draws take a raw draw modulo the bound;
* matrices are filled row-major, and each complex entry consumes two
  consecutive draws: real part first, then imaginary part.

Bulk filling of uniform arrays is the package's hot loop.  It is
compiled with numba when available; setting the environment variable
``BLOCKPIVOT_NO_NUMBA=1`` selects the pure-Python path, which produces
bit-identical output (see benchmarks/bench_rng.py for a comparison).
"""

from __future__ import annotations

import os

import numpy as np

from .errors import InvalidInputError

try:
    from numba import njit

    HAS_NUMBA = True
except ImportError:  # pragma: no cover - exercised only without numba
    HAS_NUMBA = False

__all__ = [
    "HAS_NUMBA",
    "using_numba",
    "splitmix64_stream",
    "derive_seed",
    "Xoshiro256pp",
]

_MASK64 = (1 << 64) - 1
_SCALE53 = 2.0**-53


def _splitmix64_step(state: int) -> tuple[int, int]:
    """One splitmix64 output and the advanced state."""
    state = (state + 0x9E3779B97F4A7C15) & _MASK64
    z = state
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK64
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK64
    z = z ^ (z >> 31)
    return z, state


def splitmix64_stream(seed: int, count: int) -> list[int]:
    """The first ``count`` splitmix64 outputs for the given seed."""
    _check_seed(seed)
    if count < 0:
        raise InvalidInputError(f"count must be nonnegative, got {count}")
    out = []
    state = seed
    for _ in range(count):
        z, state = _splitmix64_step(state)
        out.append(z)
    return out


def derive_seed(master: int, index: int) -> int:
    """Per-trial seed: element ``index`` of the splitmix64 stream of ``master``."""
    if index < 0:
        raise InvalidInputError(f"index must be nonnegative, got {index}")
    return splitmix64_stream(master, index + 1)[index]


def _check_seed(seed: int) -> None:
    if not isinstance(seed, (int, np.integer)) or isinstance(seed, bool):
        raise InvalidInputError(f"seed must be an integer, got {type(seed).__name__}")
    if not 0 <= int(seed) <= _MASK64:
        raise InvalidInputError("seed must fit in an unsigned 64-bit integer")


def _fill_uniform_py(state: np.ndarray, out: np.ndarray, lo: float, hi: float) -> None:
    s0 = int(state[0])
    s1 = int(state[1])
    s2 = int(state[2])
    s3 = int(state[3])
    span = hi - lo
    for i in range(out.shape[0]):
        tmp = (s0 + s3) & _MASK64
        r = ((((tmp << 23) & _MASK64) | (tmp >> 41)) + s0) & _MASK64
        t = (s1 << 17) & _MASK64
        s2 ^= s0
        s3 ^= s1
        s1 ^= s2
        s0 ^= s3
        s2 ^= t
        s3 = ((s3 << 45) & _MASK64) | (s3 >> 19)
        out[i] = lo + (float(r >> 11) * _SCALE53) * span
    state[0] = s0
    state[1] = s1
    state[2] = s2
    state[3] = s3


if HAS_NUMBA:

    @njit("void(uint64[:], float64[:], float64, float64)", cache=True)
    def _fill_uniform_nb(state, out, lo, hi):  # pragma: no cover - compiled
        s0 = state[0]
        s1 = state[1]
        s2 = state[2]
        s3 = state[3]
        span = hi - lo
        k23 = np.uint64(23)
        k41 = np.uint64(41)
        k17 = np.uint64(17)
        k45 = np.uint64(45)
        k19 = np.uint64(19)
        k11 = np.uint64(11)
        scale = 2.0**-53
        for i in range(out.shape[0]):
            tmp = s0 + s3
            r = ((tmp << k23) | (tmp >> k41)) + s0
            t = s1 << k17
            s2 ^= s0
            s3 ^= s1
            s1 ^= s2
            s0 ^= s3
            s2 ^= t
            s3 = (s3 << k45) | (s3 >> k19)
            out[i] = lo + (np.float64(r >> k11) * scale) * span
        state[0] = s0
        state[1] = s1
        state[2] = s2
        state[3] = s3

else:  # pragma: no cover - exercised only without numba
    _fill_uniform_nb = None


def using_numba() -> bool:
    """Whether bulk fills run through the compiled kernel."""
    if not HAS_NUMBA:
        return False
    return os.environ.get("BLOCKPIVOT_NO_NUMBA", "") in ("", "0")


class Xoshiro256pp:
    """xoshiro256++ stream seeded via splitmix64 state expansion."""

    def __init__(self, seed: int):
        _check_seed(seed)
        words = splitmix64_stream(int(seed), 4)
        if all(w == 0 for w in words):
            words[0] = 1  # the all-zero state is the one fixed point
        self._state = np.array(words, dtype=np.uint64)

    @property
    def state(self) -> tuple[int, int, int, int]:
        return tuple(int(w) for w in self._state)

    def next_uint64(self) -> int:
        s = self._state
        s0, s1, s2, s3 = (int(w) for w in s)
        tmp = (s0 + s3) & _MASK64
        r = ((((tmp << 23) & _MASK64) | (tmp >> 41)) + s0) & _MASK64
        t = (s1 << 17) & _MASK64
        s2 ^= s0
        s3 ^= s1
        s1 ^= s2
        s0 ^= s3
        s2 ^= t
        s3 = ((s3 << 45) & _MASK64) | (s3 >> 19)
        s[0] = s0
        s[1] = s1
        s[2] = s2
        s[3] = s3
        return r

    def randint(self, bound: int) -> int:
        """A draw in {0, ..., bound-1}: raw draw modulo the bound."""
        if bound < 1:
            raise InvalidInputError(f"bound must be positive, got {bound}")
        return self.next_uint64() % bound

    def uniform(self, count: int, lo: float = 0.0, hi: float = 1.0) -> np.ndarray:
        """``count`` uniform doubles in [lo, hi)."""
        if count < 0:
            raise InvalidInputError(f"count must be nonnegative, got {count}")
        out = np.empty(count, dtype=np.float64)
        if count == 0:
            return out
        if using_numba():
            _fill_uniform_nb(self._state, out, float(lo), float(hi))
        else:
            _fill_uniform_py(self._state, out, float(lo), float(hi))
        return out

    def uniform_sym(self, count: int, magnitude: float) -> np.ndarray:
        """Uniform doubles in [-magnitude, magnitude)."""
        return self.uniform(count, -float(magnitude), float(magnitude))
