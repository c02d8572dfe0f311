"""Partitions, permutations and their statistics.

Partitions and permutations are plain tuple subclasses, so they hash, compare
and serialize like the integer sequences they are.
"""
from __future__ import annotations

from functools import lru_cache
from itertools import permutations as _permutations
from math import factorial, prod
from typing import Iterable, Iterator


class Partition(tuple):
    """A weakly decreasing tuple of positive integers."""

    def __new__(cls, parts: Iterable[int] = ()):
        parts = tuple(int(p) for p in parts)
        # trailing zeros are accepted and dropped
        while parts and parts[-1] == 0:
            parts = parts[:-1]
        if any(p <= 0 for p in parts):
            raise ValueError(f"partition parts must be positive: {parts}")
        if any(parts[i] < parts[i + 1] for i in range(len(parts) - 1)):
            raise ValueError(f"partition parts must be weakly decreasing: {parts}")
        return super().__new__(cls, parts)

    @property
    def size(self) -> int:
        return sum(self)

    @property
    def length(self) -> int:
        return len(self)

    def conjugate(self) -> "Partition":
        if not self:
            return self
        return Partition(sum(1 for p in self if p > j) for j in range(self[0]))

    def multiplicities(self) -> dict[int, int]:
        out: dict[int, int] = {}
        for p in self:
            out[p] = out.get(p, 0) + 1
        return out

    def padded(self, n: int) -> tuple[int, ...]:
        """Parts followed by zeros up to length ``n``."""
        if len(self) > n:
            raise ValueError(f"{self} has more than {n} parts")
        return tuple(self) + (0,) * (n - len(self))

    def n_statistic(self) -> int:
        """sum_k (k-1) * part_k."""
        return sum(k * p for k, p in enumerate(self))

    def __repr__(self) -> str:
        return f"Partition({tuple(self)})"

    def label(self) -> str:
        """Compact label such as ``'211'`` (comma separated once a part exceeds 9)."""
        if any(p > 9 for p in self):
            return ",".join(map(str, self))
        return "".join(map(str, self))


class Permutation(tuple):
    """One-line word sigma(1)...sigma(n) of a bijection of {1..n}."""

    def __new__(cls, word: Iterable[int] = ()):
        word = tuple(int(w) for w in word)
        if sorted(word) != list(range(1, len(word) + 1)):
            raise ValueError(f"not a permutation of 1..{len(word)}: {word}")
        return super().__new__(cls, word)

    @classmethod
    def identity(cls, n: int) -> "Permutation":
        return cls(range(1, n + 1))

    def __call__(self, i: int) -> int:
        return self[i - 1]

    def inverse(self) -> "Permutation":
        inv = [0] * len(self)
        for i, s in enumerate(self, start=1):
            inv[s - 1] = i
        return Permutation(inv)

    def compose(self, other: "Permutation") -> "Permutation":
        """``self o other``, i.e. i -> self(other(i))."""
        return Permutation(self[o - 1] for o in other)

    def descents(self) -> tuple[int, ...]:
        return tuple(i for i in range(1, len(self)) if self[i - 1] > self[i])

    def sign(self) -> int:
        seen = [False] * len(self)
        s = 1
        for i in range(len(self)):
            if seen[i]:
                continue
            j, length = i, 0
            while not seen[j]:
                seen[j] = True
                j = self[j] - 1
                length += 1
            if length % 2 == 0:
                s = -s
        return s

    def cycle_type(self) -> Partition:
        seen = [False] * len(self)
        lengths = []
        for i in range(len(self)):
            if seen[i]:
                continue
            j, length = i, 0
            while not seen[j]:
                seen[j] = True
                j = self[j] - 1
                length += 1
            lengths.append(length)
        return Partition(sorted(lengths, reverse=True))

    def __repr__(self) -> str:
        return f"Permutation({tuple(self)})"

    def label(self) -> str:
        if len(self) > 9:
            return ",".join(map(str, self))
        return "".join(map(str, self))


def partitions_of(n: int, max_part: int | None = None) -> list[Partition]:
    """All partitions of ``n`` in reverse lexicographic order.

    >>> partitions_of(3)
    [Partition((3,)), Partition((2, 1)), Partition((1, 1, 1))]
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    return [Partition(p) for p in _partitions(n, n if max_part is None else max_part)]


@lru_cache(maxsize=None)
def _partitions(n: int, max_part: int) -> tuple[tuple[int, ...], ...]:
    if n == 0:
        return ((),)
    out = []
    for first in range(min(n, max_part), 0, -1):
        for rest in _partitions(n - first, first):
            out.append((first,) + rest)
    return tuple(out)


def partitions_with_at_most(n: int, k: int) -> list[Partition]:
    """Partitions of ``n`` with at most ``k`` parts."""
    return [p for p in partitions_of(n) if len(p) <= k]


def permutations_of(n: int) -> Iterator[Permutation]:
    """All of S_n in lexicographic order of the one-line word."""
    for w in _permutations(range(1, n + 1)):
        yield Permutation(w)


def maj(sigma: Permutation) -> int:
    """Major index: sum of the descent positions."""
    return sum(sigma.descents())


def descent_prefix_counts(sigma: Permutation) -> tuple[int, ...]:
    """(d_1, ..., d_n) with d_i the number of descents at positions k < i."""
    out = []
    count = 0
    for i in range(1, len(sigma) + 1):
        out.append(count)
        if i < len(sigma) and sigma[i - 1] > sigma[i]:
            count += 1
    return tuple(out)


def z_of(mu: Partition) -> int:
    """Centralizer order 1^k1 k1! 2^k2 k2! ... of a permutation of cycle type mu."""
    return prod(part**k * factorial(k) for part, k in Partition(mu).multiplicities().items())


def sign_of_cycle_type(mu: Partition) -> int:
    return -1 if (sum(mu) - len(mu)) % 2 else 1


def character(lam: Partition, mu: Partition) -> int:
    """Irreducible character value chi^lam at cycle type mu (Murnaghan-Nakayama)."""
    lam, mu = Partition(lam), Partition(mu)
    if lam.size != mu.size:
        raise ValueError(f"size mismatch: |{tuple(lam)}| != |{tuple(mu)}|")
    return _mn(tuple(lam), tuple(mu))


@lru_cache(maxsize=None)
def _mn(lam: tuple[int, ...], mu: tuple[int, ...]) -> int:
    if not mu:
        return 1
    k, rest = mu[0], mu[1:]
    # beta-set of lam; removing a k-rim hook is moving one bead from b to b - k
    length = len(lam)
    beta = [lam[i] + length - 1 - i for i in range(length)]
    beads = set(beta)
    total = 0
    for b in beta:
        target = b - k
        if target < 0 or target in beads:
            continue
        height = sum(1 for c in beta if target < c < b)
        new_beta = sorted((beads - {b}) | {target}, reverse=True)
        new_lam = tuple(nb - (length - 1 - i) for i, nb in enumerate(new_beta))
        new_lam = tuple(p for p in new_lam if p > 0)
        total += (-1) ** height * _mn(new_lam, rest)
    return total


def hooks(lam: Partition) -> list[int]:
    conj = Partition(lam).conjugate()
    return [lam[i] - j - 1 + conj[j] - i for i in range(len(lam)) for j in range(lam[i])]


def hook_multiplicity(lam: Partition) -> int:
    """Number of standard Young tableaux of shape lam, n!/prod(hooks)."""
    lam = Partition(lam)
    return factorial(lam.size) // prod(hooks(lam))


def random_partition(max_parts: int, max_part: int, rng) -> Partition:
    """Uniform weakly decreasing sequence with entries in 0..max_part, zeros dropped."""
    return Partition(sorted((rng.randint(0, max_part) for _ in range(max_parts)), reverse=True))
