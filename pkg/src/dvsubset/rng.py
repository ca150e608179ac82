"""Deterministic 64-bit pseudo-random generator for reproducible runs.

Everything seeded in this package goes through SplitMix64, fully specified
here so identical seeds give identical results on every platform and Python
version: the state advances by the odd constant 0x9E3779B97F4A7C15 modulo
2**64 and each output is a finalizer hash of the new state (xor-shift and
multiply by 0xBF58476D1CE4E5B9 / 0x94D049BB133111EB).  Bounded draws use
rejection sampling, so every residue is equally likely.
"""

MASK64 = (1 << 64) - 1
_GAMMA = 0x9E3779B97F4A7C15


class SplitMix64:
    __slots__ = ("state",)

    def __init__(self, seed):
        self.state = seed & MASK64

    def next_u64(self):
        self.state = (self.state + _GAMMA) & MASK64
        z = self.state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & MASK64
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & MASK64
        return z ^ (z >> 31)

    def below(self, bound):
        """Uniform integer in [0, bound), rejection-sampled to avoid modulo bias."""
        if bound <= 0:
            raise ValueError("bound must be positive")
        limit = (1 << 64) - ((1 << 64) % bound)
        while True:
            r = self.next_u64()
            if r < limit:
                return r % bound

    def sample(self, n, k):
        """k distinct indices from range(n), returned sorted (partial Fisher-Yates)."""
        if not 0 <= k <= n:
            raise ValueError(f"cannot sample {k} of {n}")
        pool = list(range(n))
        for i in range(k):
            j = i + self.below(n - i)
            pool[i], pool[j] = pool[j], pool[i]
        return sorted(pool[:k])


def derive_seed(seed, index):
    """Decorrelated child seed for retry attempt `index` under a fixed user seed."""
    return SplitMix64((seed ^ (index * _GAMMA)) & MASK64).next_u64()
