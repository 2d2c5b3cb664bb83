"""Necklace words and necklace counting.

A word is a necklace when it is weakly lexicographically minimal among
its rotations, so periodic words such as ``1,2,1,2`` count.
"""

from __future__ import annotations

from collections import Counter
from functools import lru_cache, reduce
from math import comb, factorial, gcd
from typing import Iterator, Sequence

from .errors import DomainError

Word = tuple


def _check(w: Sequence[int]) -> tuple:
    w = tuple(w)
    if not w:
        raise DomainError("word must be nonempty")
    return w


def cyclic_shifts(w: Sequence[int]) -> list[tuple]:
    """Rotations w^(1), ..., w^(len w); the last one is ``w`` itself."""
    w = _check(w)
    return [w[i:] + w[:i] for i in range(1, len(w) + 1)]


def least_rotation_index(w: Sequence[int]) -> int:
    """Booth's algorithm: start index of the least rotation, O(len w)."""
    s = tuple(w) * 2
    f = [-1] * len(s)
    k = 0
    for j in range(1, len(s)):
        sj = s[j]
        i = f[j - k - 1]
        while i != -1 and sj != s[k + i + 1]:
            if sj < s[k + i + 1]:
                k = j - i - 1
            i = f[i]
        if sj != s[k + i + 1]:
            if sj < s[k]:
                k = j
            f[j - k] = -1
        else:
            f[j - k] = i + 1
    return k


def least_rotation(w: Sequence[int]) -> tuple:
    w = _check(w)
    k = least_rotation_index(w) % len(w)
    return w[k:] + w[:k]


def least_rotation_naive(w: Sequence[int]) -> tuple:
    """Quadratic reference: min over all rotations."""
    return min(cyclic_shifts(w))


def is_necklace(w: Sequence[int]) -> bool:
    w = _check(w)
    return least_rotation(w) == w


def _totient(n: int) -> int:
    result, m, p = n, n, 2
    while p * p <= m:
        if m % p == 0:
            while m % p == 0:
                m //= p
            result -= result // p
        p += 1
    if m > 1:
        result -= result // m
    return result


def _divisors(n: int) -> list[int]:
    return [d for d in range(1, n + 1) if n % d == 0]


def _multinomial(parts: Sequence[int]) -> int:
    out = factorial(sum(parts))
    for p in parts:
        out //= factorial(p)
    return out


@lru_cache(maxsize=None)
def _necklace_count(mults: tuple) -> int:
    size = sum(mults)
    if size == 0:
        return 1
    g = reduce(gcd, mults)
    total = sum(
        _multinomial([m // d for m in mults]) * _totient(d) for d in _divisors(g)
    )
    assert total % size == 0
    return total // size


def necklace_count_multiset(multiplicities: Sequence[int]) -> int:
    """Number of necklace words using letters with the given multiplicities.

    Uses the totient-weighted multinomial sum over common divisors of the
    multiplicities.
    """
    mults = tuple(int(m) for m in multiplicities)
    if any(m < 1 for m in mults):
        raise DomainError(f"multiplicities must be positive: {mults}")
    return _necklace_count(mults)


def multiplicities(letters: Sequence[int]) -> tuple:
    """Multiplicity vector of a multiset of letters, in increasing letter order."""
    c = Counter(letters)
    return tuple(c[a] for a in sorted(c))


def binary_necklace_T(n: int, k: int) -> int:
    """Binary necklaces of length ``n`` with ``k`` black beads."""
    if n < 1 or not 0 <= k <= n:
        raise DomainError(f"need n >= 1 and 0 <= k <= n, got n={n}, k={k}")
    g = gcd(n, k)  # gcd(n, 0) = n
    total = sum(_totient(d) * comb(n // d, k // d) for d in _divisors(g))
    return total // n


def necklace_arrangements(letters: Sequence[int]) -> Iterator[tuple]:
    """Distinct necklace words on the multiset ``letters``, in lexicographic order."""
    counts = Counter(letters)
    if not counts:
        return
    alphabet = sorted(counts)
    size = sum(counts.values())
    first = alphabet[0]
    counts[first] -= 1
    prefix = [first]

    # every necklace starts with its least letter
    def rec():
        if len(prefix) == size:
            w = tuple(prefix)
            if is_necklace(w):
                yield w
            return
        for a in alphabet:
            if counts[a]:
                counts[a] -= 1
                prefix.append(a)
                yield from rec()
                prefix.pop()
                counts[a] += 1

    yield from rec()
