"""
SplitMix64 pseudorandom generator

Sampled runs must reproduce byte for byte in any language, so the generator
is fixed here instead of borrowed from the random module:

    state  <- state + 0x9E3779B97F4A7C15            (mod 2**64)
    z      <- state
    z      <- (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9  (mod 2**64)
    z      <- (z ^ (z >> 27)) * 0x94D049BB133111EB  (mod 2**64)
    output <- z ^ (z >> 31)

Derived draws: below(n) = next_u64() mod n; rational(lo, hi, q) picks
lo + below((hi - lo) * q + 1) / q.
"""

from fractions import Fraction

MASK64 = (1 << 64) - 1
GOLDEN_GAMMA = 0x9E3779B97F4A7C15
MIX_1 = 0xBF58476D1CE4E5B9
MIX_2 = 0x94D049BB133111EB


class SplitMix64:
    """Seeded 64-bit generator with the documented SplitMix constants."""

    def __init__(self, seed: int = 0):
        self.state = seed & MASK64

    def next_u64(self) -> int:
        self.state = (self.state + GOLDEN_GAMMA) & MASK64
        z = self.state
        z = ((z ^ (z >> 30)) * MIX_1) & MASK64
        z = ((z ^ (z >> 27)) * MIX_2) & MASK64
        return z ^ (z >> 31)

    def below(self, n: int) -> int:
        if n <= 0:
            raise ValueError("below() needs a positive bound")
        return self.next_u64() % n

    def subset_mask(self, n: int, size: int) -> int:
        """Bitmask of a pseudorandom `size`-subset of n elements.

        Partial Fisher-Yates shuffle of range(n).
        """
        pool = list(range(n))
        mask = 0
        for i in range(size):
            j = i + self.below(n - i)
            pool[i], pool[j] = pool[j], pool[i]
            mask |= 1 << pool[i]
        return mask

    def rational(self, lo: int, hi: int, denominator: int) -> Fraction:
        steps = (hi - lo) * denominator
        return Fraction(lo) + Fraction(self.below(steps + 1), denominator)
