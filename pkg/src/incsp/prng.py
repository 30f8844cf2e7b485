"""Portable 64-bit PRNG for the repair dynamics.

Move selection uses xorshift64 (Marsaglia, shift triple 13/7/17).  The
update is xor/shift only, so the exact same arithmetic runs as Python
ints, as numpy uint64 array ops, and under numba JIT, giving bit-identical
move sequences on every execution path.  Statistical quality is more than
enough for picking constraints and tie-breaking.

Seed derivation is splitmix64: `derive_seed(*parts)` folds any number of
64-bit integers into one nonzero state word.  Fixed salts keep the
purpose-specific streams of one run apart:

    SALT_INIT      initial assignment draw (derived from the stream seed)
    SALT_DYNAMICS  move selection inside run_incremental
    SALT_REPAIR    move selection of a standalone repair() call

Bounded draws take the high 31 bits modulo n (n < 2**31); the modulo bias
is below 2**-16 for every n used here.  Draw discipline shared by the
reference engine and the kernels: every selection point consumes exactly
one draw, even when only one candidate exists.
"""

from __future__ import annotations

MASK64 = (1 << 64) - 1
_GOLDEN = 0x9E3779B97F4A7C15

SALT_INIT = 1
SALT_DYNAMICS = 2
SALT_REPAIR = 3


def _splitmix_step(x: int) -> int:
    x = (x + _GOLDEN) & MASK64
    z = x
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & MASK64
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & MASK64
    return z ^ (z >> 31)


def derive_seed(*parts: int) -> int:
    """Fold integer parts into one nonzero 64-bit xorshift state."""
    x = _GOLDEN
    for p in parts:
        x = _splitmix_step(x ^ (p & MASK64))
    return x if x != 0 else _GOLDEN


class Xorshift64:
    """Reference-engine generator over plain Python ints."""

    __slots__ = ("x",)

    def __init__(self, state: int):
        state &= MASK64
        self.x = state if state != 0 else _GOLDEN

    def next64(self) -> int:
        x = self.x
        x ^= (x << 13) & MASK64
        x ^= x >> 7
        x ^= (x << 17) & MASK64
        self.x = x
        return x

    def below(self, n: int) -> int:
        """Uniform draw in [0, n); always consumes one draw."""
        return (self.next64() >> 33) % n

    def unit(self) -> float:
        """Uniform float in [0, 1)."""
        return (self.next64() >> 11) * 2.0**-53
