"""Tiny reproducible PRNG.

64-bit linear congruential generator with Knuth's MMIX constants::

    state <- (6364136223846793005 * state + 1442695040888963407) mod 2**64

Each draw returns the high 32 bits of the new state.  ``below(k)`` maps a
draw onto ``0..k-1`` by ``(draw * k) >> 32``.  ``shuffle`` is Fisher-Yates,
walking ``i`` from the last index down to 1 and swapping with ``below(i+1)``.
The same seed yields the same stream in any language that follows this.
"""

MULTIPLIER = 6364136223846793005
INCREMENT = 1442695040888963407
MASK = (1 << 64) - 1


class Lcg64:
    def __init__(self, seed: int):
        self.state = seed & MASK

    def next32(self) -> int:
        self.state = (MULTIPLIER * self.state + INCREMENT) & MASK
        return self.state >> 32

    def below(self, k: int) -> int:
        if k < 1:
            raise ValueError("bound must be positive")
        return (self.next32() * k) >> 32

    def shuffle(self, items: list) -> list:
        for i in range(len(items) - 1, 0, -1):
            j = self.below(i + 1)
            items[i], items[j] = items[j], items[i]
        return items

    def permutation(self, size: int) -> list[int]:
        return self.shuffle(list(range(size)))
