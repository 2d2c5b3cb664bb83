"""Immaculate and lexical tableaux.

Rows are stored bottom row first (French convention): ``rows[0]`` is row 1.
A tableau is *immaculate* when its first column strictly increases upward
and each row weakly increases, and *lexical* when its first column
strictly increases and each row word is a necklace.

Contents are strong compositions: ``content[i]`` counts the entries equal
to ``i + 1``.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import lru_cache
from itertools import product
from math import factorial, prod
from typing import Iterator, Sequence

from .compositions import Composition, coarsenings, compositions_of
from .errors import DomainError
from .words import is_necklace, multiplicities, necklace_arrangements, necklace_count_multiset

KINDS = ("immaculate", "lexical")

# Tie-breaking among equal entries during standardization.  Cells are
# (row, column), both 1-based, row 1 at the bottom.
READING_ORDERS = {
    "column": lambda r, c: (c, r),
    "column_desc": lambda r, c: (c, -r),
    "row_desc": lambda r, c: (-r, c),
}
reading_order = "column"


@dataclass(frozen=True)
class Tableau:
    shape: Composition
    rows: tuple

    def __init__(self, rows: Sequence[Sequence[int]], shape: Sequence[int] | None = None):
        rows = tuple(tuple(int(x) for x in r) for r in rows)
        if any(len(r) == 0 for r in rows):
            raise DomainError("tableau rows must be nonempty")
        actual = Composition(len(r) for r in rows)
        if shape is not None and Composition(shape) != actual:
            raise DomainError(f"rows {rows} do not match shape {tuple(shape)}")
        if any(x < 1 for r in rows for x in r):
            raise DomainError("tableau entries must be positive")
        object.__setattr__(self, "rows", rows)
        object.__setattr__(self, "shape", actual)

    @property
    def n(self) -> int:
        return self.shape.n

    def cells(self) -> Iterator[tuple[int, int, int]]:
        """Yield (row, column, entry), 1-based."""
        for i, r in enumerate(self.rows, 1):
            for j, x in enumerate(r, 1):
                yield i, j, x

    def entries(self) -> list[int]:
        return [x for r in self.rows for x in r]

    def content(self) -> tuple:
        """Multiplicity of 1, 2, ..., max entry (zeros kept for unpacked tableaux)."""
        xs = self.entries()
        if not xs:
            return ()
        return tuple(xs.count(v) for v in range(1, max(xs) + 1))

    def first_column_increasing(self) -> bool:
        firsts = [r[0] for r in self.rows]
        return all(a < b for a, b in zip(firsts, firsts[1:]))

    def is_standard(self) -> bool:
        return sorted(self.entries()) == list(range(1, self.n + 1))

    def to_dict(self) -> dict:
        return {"shape": list(self.shape), "rows": [list(r) for r in self.rows]}

    @classmethod
    def from_dict(cls, d: dict) -> "Tableau":
        return cls(d["rows"], d.get("shape"))

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    def render(self) -> str:
        """Text drawing, top row first."""
        width = max((len(str(x)) for x in self.entries()), default=1)
        return "\n".join(" ".join(str(x).rjust(width) for x in r) for r in reversed(self.rows))

    def sort_key(self):
        return tuple(reversed(self.rows))


def is_immaculate(t: Tableau) -> bool:
    return t.first_column_increasing() and all(
        all(a <= b for a, b in zip(r, r[1:])) for r in t.rows
    )


def is_lexical(t: Tableau) -> bool:
    return t.first_column_increasing() and all(is_necklace(r) for r in t.rows)


def _check_content(shape, content) -> tuple[Composition, tuple]:
    shape = Composition(shape)
    content = tuple(int(c) for c in content)
    if any(c < 1 for c in content):
        raise DomainError(f"content must be a strong composition: {content}")
    if sum(content) != shape.n:
        raise DomainError(f"shape {shape} and content {content} have different sizes")
    return shape, content


def _row_multisets(shape: tuple, content: tuple) -> Iterator[tuple]:
    """Row multisets (sorted tuples) of the immaculate tableaux of this shape and content.

    Values are placed in increasing order; a row's first value is its
    minimum, so each value may open at most one new row, and rows open
    bottom to top.
    """
    k = len(shape)
    rows: list[list[int]] = [[] for _ in range(k)]
    space = list(shape)

    def spread(v: int, count: int, upto: int, start: int) -> Iterator[None]:
        # put `count` copies of v into rows start..upto-1
        if count == 0:
            yield
            return
        if start >= upto:
            return
        for t in range(min(count, space[start]), -1, -1):
            space[start] -= t
            rows[start].extend([v] * t)
            yield from spread(v, count - t, upto, start + 1)
            del rows[start][len(rows[start]) - t:]
            space[start] += t

    def place(v: int, opened: int) -> Iterator[tuple]:
        if v > len(content):
            if opened == k:
                yield tuple(tuple(r) for r in rows)
            return
        c = content[v - 1]
        if opened < k:
            row = opened
            for t in range(min(c, space[row]), 0, -1):
                space[row] -= t
                rows[row].extend([v] * t)
                for _ in spread(v, c - t, opened, 0):
                    yield from place(v + 1, opened + 1)
                del rows[row][len(rows[row]) - t:]
                space[row] += t
        if opened > 0:
            for _ in spread(v, c, opened, 0):
                yield from place(v + 1, opened)

    yield from place(1, 0)


def enumerate_tableaux(kind: str, shape: Sequence[int], content: Sequence[int]) -> list[Tableau]:
    """All tableaux of ``kind`` with the given shape and content, in a fixed order."""
    if kind not in KINDS:
        raise DomainError(f"unknown tableau kind {kind!r}")
    shape, content = _check_content(shape, content)
    return list(_enumerate(kind, tuple(shape), content))


@lru_cache(maxsize=4096)
def _enumerate(kind: str, shape: tuple, content: tuple) -> tuple:
    out = []
    for rows in _row_multisets(shape, content):
        if kind == "immaculate":
            out.append(Tableau(rows))
        else:
            for words in product(*(list(necklace_arrangements(r)) for r in rows)):
                out.append(Tableau(words))
    out.sort(key=Tableau.sort_key)
    return tuple(out)


def count_K(kind: str, shape: Sequence[int], content: Sequence[int], method: str = "formula") -> int:
    """Number of tableaux of ``kind`` with the given shape and content.

    For lexical tableaux, ``method="formula"`` sums products of necklace
    counts of the row multisets over immaculate tableaux, while
    ``method="enumerate"`` lists the tableaux.
    """
    shape, content = _check_content(shape, content)
    if kind not in KINDS:
        raise DomainError(f"unknown tableau kind {kind!r}")
    if method == "enumerate":
        return len(_enumerate(kind, tuple(shape), content))
    if method != "formula":
        raise DomainError(f"unknown counting method {method!r}")
    return _count_formula(kind, tuple(shape), content)


@lru_cache(maxsize=None)
def _count_formula(kind: str, shape: tuple, content: tuple) -> int:
    if kind == "immaculate":
        return sum(1 for _ in _row_multisets(shape, content))
    return sum(
        prod(necklace_count_multiset(multiplicities(r)) for r in rows)
        for rows in _row_multisets(shape, content)
    )


def hook(shape: Sequence[int], cell: tuple[int, int]) -> int:
    shape = Composition(shape)
    i, j = cell
    if not (1 <= i <= shape.length and 1 <= j <= shape[i - 1]):
        raise DomainError(f"cell {cell} is outside the diagram of {shape}")
    if j == 1:
        return sum(shape[i - 1:])
    return shape[i - 1] - j + 1


def standard_count(kind: str, shape: Sequence[int]) -> int:
    """Hook-length count of standard tableaux of ``kind``."""
    shape = Composition(shape)
    if shape.n < 1:
        raise DomainError("shape must be nonempty")
    hooks = prod(hook(shape, (i, j)) for i, a in enumerate(shape, 1) for j in range(1, a + 1))
    num = factorial(shape.n)
    if kind == "lexical":
        num *= prod(factorial(a - 1) for a in shape)
    elif kind != "immaculate":
        raise DomainError(f"unknown tableau kind {kind!r}")
    assert num % hooks == 0
    return num // hooks


def standard_tableaux(kind: str, shape: Sequence[int]) -> list[Tableau]:
    shape = Composition(shape)
    return enumerate_tableaux(kind, shape, (1,) * shape.n)


def _standardize(t: Tableau, order: str) -> Tableau:
    key = READING_ORDERS[order]
    cells = sorted(t.cells(), key=lambda c: (c[2], *key(c[0], c[1])))
    label = {(r, c): s for s, (r, c, _) in enumerate(cells, 1)}
    return Tableau([[label[i, j] for j in range(1, a + 1)] for i, a in enumerate(t.shape, 1)])


def standardize(t: Tableau, order: str | None = None) -> Tableau:
    """Relabel entries by 1..n in value order, ties broken by the reading order."""
    if not is_lexical(t):
        raise DomainError("standardize expects a lexical tableau")
    order = order or reading_order
    if order not in READING_ORDERS:
        raise DomainError(f"unknown reading order {order!r}")
    return _standardize(t, order)


def pack(t: Tableau) -> Tableau:
    values = {v: i for i, v in enumerate(sorted(set(t.entries())), 1)}
    return Tableau([[values[x] for x in r] for r in t.rows])


def _require_standard_lexical(s: Tableau) -> None:
    if not (s.is_standard() and is_lexical(s)):
        raise DomainError("expected a standard lexical tableau")


def compatible_types(s: Tableau, order: str | None = None) -> set[Composition]:
    """Contents of lexical tableaux that standardize to ``s``.

    A tableau with content gamma standardizing to ``s`` must carry value
    ``m`` on the labels of ``s`` lying in the m-th block of gamma, so each
    gamma is tried directly.
    """
    _require_standard_lexical(s)
    order = order or reading_order
    n = s.n
    out = set()
    for gamma in compositions_of(n):
        value, v = {}, 1
        label = 1
        for part in gamma:
            for _ in range(part):
                value[label] = v
                label += 1
            v += 1
        r = Tableau([[value[x] for x in row] for row in s.rows])
        if is_lexical(r) and _standardize(r, order) == s:
            out.add(gamma)
    return out


@lru_cache(maxsize=None)
def _types_by_standardization(shape: tuple, order: str) -> dict:
    groups: dict[Tableau, set] = {}
    for gamma in compositions_of(sum(shape)):
        for t in _enumerate("lexical", shape, tuple(gamma)):
            groups.setdefault(_standardize(t, order), set()).add(gamma)
    return groups


def _maximal(types) -> set[Composition]:
    desc = {g: g.partial_sums() for g in types}
    # h strictly coarser than g iff its descent set is a proper subset
    return {g for g, dg in desc.items() if not any(dh < dg for dh in desc.values())}


def max_types(s: Tableau, order: str | None = None, method: str = "enumerate") -> set[Composition]:
    """⪰-maximal contents among lexical tableaux standardizing to ``s``."""
    _require_standard_lexical(s)
    order = order or reading_order
    if method == "enumerate":
        types = _types_by_standardization(tuple(s.shape), order).get(s, set())
    elif method == "cuts":
        types = compatible_types(s, order)
    else:
        raise DomainError(f"unknown method {method!r}")
    return _maximal(types)


def count_J(shape: Sequence[int], beta: Sequence[int], order: str | None = None) -> int:
    """Standard lexical tableaux S of ``shape`` with ``beta`` in max_types(S)."""
    shape, beta = Composition(shape), Composition(beta)
    if shape.n != beta.n:
        raise DomainError(f"shape {shape} and {beta} have different sizes")
    return _J_row(tuple(shape), order or reading_order).get(beta, 0)


@lru_cache(maxsize=None)
def _J_row(shape: tuple, order: str) -> dict:
    counts: dict = {}
    for types in _types_by_standardization(shape, order).values():
        for beta in _maximal(types):
            counts[beta] = counts.get(beta, 0) + 1
    return counts


def fundamental_coefficient(shape: Sequence[int], beta: Sequence[int], order: str | None = None) -> int:
    """Coefficient of F_beta in the dual lexical function of ``shape``.

    Each standard S contributes the Möbius inversion of the indicator of its
    (refinement-closed) set of compatible types; this is 1 at beta exactly
    when that set is the principal ideal below beta, and it is where
    standard tableaux with several maximal types are handled correctly.
    """
    shape, beta = Composition(shape), Composition(beta)
    if shape.n != beta.n:
        raise DomainError(f"shape {shape} and {beta} have different sizes")
    total = 0
    for types in _types_by_standardization(tuple(shape), order or reading_order).values():
        for b in coarsenings(beta):
            if b in types:
                total += -1 if (beta.length - b.length) % 2 else 1
    return total


# -- bijections with set partitions and permutations -------------------------


@dataclass(frozen=True)
class SetPartition:
    """Blocks as sorted tuples, listed by increasing minimum."""

    blocks: tuple

    def __init__(self, blocks):
        blocks = [tuple(sorted(b)) for b in blocks]
        if any(not b for b in blocks):
            raise DomainError("blocks must be nonempty")
        flat = sorted(x for b in blocks for x in b)
        if flat != list(range(1, len(flat) + 1)):
            raise DomainError(f"blocks do not partition {{1..{len(flat)}}}: {blocks}")
        object.__setattr__(self, "blocks", tuple(sorted(blocks)))

    def __str__(self) -> str:
        return "/".join("{" + ",".join(map(str, b)) + "}" for b in self.blocks)


@dataclass(frozen=True)
class CycleDecomposition:
    """Cycles listed by increasing minimum; each cycle written from its minimum."""

    cycles: tuple

    def __init__(self, cycles):
        cycles = [tuple(c) for c in cycles]
        if any(not c for c in cycles):
            raise DomainError("cycles must be nonempty")
        flat = sorted(x for c in cycles for x in c)
        if flat != list(range(1, len(flat) + 1)):
            raise DomainError(f"cycles do not cover {{1..{len(flat)}}} exactly once")
        cycles = [c[c.index(min(c)):] + c[:c.index(min(c))] for c in cycles]
        object.__setattr__(self, "cycles", tuple(sorted(cycles)))

    @classmethod
    def from_one_line(cls, images: Sequence[int]) -> "CycleDecomposition":
        """Cycles of the permutation i -> images[i-1]."""
        seen, cycles = set(), []
        for start in range(1, len(images) + 1):
            if start in seen:
                continue
            cyc, i = [], start
            while i not in seen:
                seen.add(i)
                cyc.append(i)
                i = images[i - 1]
            cycles.append(cyc)
        return cls(cycles)

    def one_line(self) -> tuple:
        img = {}
        for c in self.cycles:
            for a, b in zip(c, c[1:] + c[:1]):
                img[a] = b
        return tuple(img[i] for i in range(1, len(img) + 1))

    def __str__(self) -> str:
        return "".join("(" + " ".join(map(str, c)) + ")" for c in self.cycles)


def to_set_partition(t: Tableau) -> SetPartition:
    if not (t.is_standard() and is_immaculate(t)):
        raise DomainError("expected a standard immaculate tableau")
    return SetPartition(t.rows)


def from_set_partition(p: SetPartition) -> Tableau:
    # blocks are already ordered by minimum, which gives the row order
    return Tableau(p.blocks)


def to_permutation(t: Tableau) -> CycleDecomposition:
    _require_standard_lexical(t)
    return CycleDecomposition(t.rows)


def from_permutation(sigma: CycleDecomposition) -> Tableau:
    return Tableau(sigma.cycles)


def row_class_count(shape: Sequence[int]) -> int:
    """Row-equivalence classes among the standard lexical tableaux of ``shape``."""
    return len({
        tuple(frozenset(r) for r in t.rows)
        for t in standard_tableaux("lexical", shape)
    })
