"""Integer compositions, their orders, and the canonical index order.

All matrices in the package are indexed by ``compositions_of(n)``, which
lists the compositions of ``n`` in decreasing lexicographic order::

    >>> [str(a) for a in compositions_of(4)]
    ['4', '3.1', '2.2', '2.1.1', '1.3', '1.2.1', '1.1.2', '1.1.1.1']
"""

from __future__ import annotations

import re
from functools import lru_cache
from itertools import combinations
from typing import Iterable

from .errors import DomainError, check_degree


class Composition(tuple):
    """An immutable tuple of positive integers.

    Zero parts are dropped on construction, so ``Composition((3, 0))`` is
    ``Composition((3,))``.  Negative parts are rejected.
    """

    __slots__ = ()

    def __new__(cls, parts: Iterable[int] = ()):
        parts = tuple(int(p) for p in parts)
        if any(p < 0 for p in parts):
            raise DomainError(f"composition parts must be nonnegative: {parts}")
        return super().__new__(cls, (p for p in parts if p > 0))

    @property
    def n(self) -> int:
        return sum(self)

    @property
    def length(self) -> int:
        return len(self)

    def __add__(self, other):
        # concatenation stays a Composition
        return Composition(tuple(self) + tuple(other))

    def reverse(self) -> "Composition":
        return Composition(self[::-1])

    def partial_sums(self) -> frozenset:
        """Internal descent set {a1, a1+a2, ...} without the total."""
        out, s = [], 0
        for p in self[:-1]:
            s += p
            out.append(s)
        return frozenset(out)

    def __str__(self) -> str:
        return ".".join(map(str, self)) if self else "-"

    def __repr__(self) -> str:
        return f"Composition({tuple(self)!r})"


class Partition(Composition):
    """A weakly decreasing composition."""

    __slots__ = ()

    def __new__(cls, parts: Iterable[int] = ()):
        self = super().__new__(cls, parts)
        if any(self[i] < self[i + 1] for i in range(len(self) - 1)):
            raise DomainError(f"partition parts must be weakly decreasing: {tuple(self)}")
        return self

    def __repr__(self) -> str:
        return f"Partition({tuple(self)!r})"


def parse_composition(text: str) -> Composition:
    """Parse ``"2.1.1"``, ``"2,1,1"`` or ``"-"`` (the empty composition)."""
    text = text.strip()
    if text in ("-", "()"):
        return Composition()
    text = text.strip("()[] ")
    if not re.fullmatch(r"\d+([.,]\d+)*", text):
        raise DomainError(f"malformed composition: {text!r}")
    parts = [int(p) for p in re.split(r"[.,]", text)]
    if any(p == 0 for p in parts):
        raise DomainError(f"composition parts must be positive: {text!r}")
    return Composition(parts)


def from_descents(n: int, descents: Iterable[int]) -> Composition:
    cuts = [0, *sorted(descents), n]
    return Composition(b - a for a, b in zip(cuts, cuts[1:]))


def compositions_of(n: int, k: int | None = None) -> list[Composition]:
    """All compositions of ``n`` (of length ``k`` if given), decreasing lex order."""
    if n < 0:
        raise DomainError(f"n must be nonnegative, got {n}")
    check_degree(n)
    comps = _compositions(n)
    if k is not None:
        return [a for a in comps if a.length == k]
    return list(comps)


@lru_cache(maxsize=None)
def _compositions(n: int) -> tuple[Composition, ...]:
    if n == 0:
        return (Composition(),)
    out = []
    for r in range(n):
        for cut in combinations(range(1, n), r):
            out.append(from_descents(n, cut))
    # fixed n: prefix-incomparable, so tuple order is the lexicographic order
    out.sort(key=tuple, reverse=True)
    return tuple(out)


@lru_cache(maxsize=None)
def index_of(n: int) -> dict[Composition, int]:
    return {a: i for i, a in enumerate(_compositions(n))}


def lex_compare(alpha: Composition, beta: Composition) -> int:
    """Return -1, 0 or 1 as ``alpha`` is lexicographically below, equal to, or above ``beta``."""
    if sum(alpha) != sum(beta):
        raise DomainError(f"cannot compare compositions of different sizes: {alpha} vs {beta}")
    for x, y in zip(alpha, beta):
        if x != y:
            return 1 if x > y else -1
    return 0


def is_coarsening(alpha: Composition, beta: Composition) -> bool:
    """True iff ``alpha`` is obtained by merging consecutive parts of ``beta`` (alpha ⪰ beta)."""
    if sum(alpha) != sum(beta):
        return False
    return Composition(alpha).partial_sums() <= Composition(beta).partial_sums()


def coarsenings(beta: Composition) -> set[Composition]:
    """All alpha with alpha ⪰ beta, beta included."""
    beta = Composition(beta)
    d = sorted(beta.partial_sums())
    return {
        from_descents(beta.n, sub)
        for r in range(len(d) + 1)
        for sub in combinations(d, r)
    }


def refinements(alpha: Composition) -> set[Composition]:
    """All beta with alpha ⪰ beta."""
    alpha = Composition(alpha)
    n = alpha.n
    if n == 0:
        return {alpha}
    fixed = alpha.partial_sums()
    free = [i for i in range(1, n) if i not in fixed]
    return {
        from_descents(n, fixed | set(sub))
        for r in range(len(free) + 1)
        for sub in combinations(free, r)
    }


def sort_to_partition(alpha: Composition) -> Partition:
    return Partition(sorted(alpha, reverse=True))
