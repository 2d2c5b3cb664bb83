"""Formal series in NSym and QSym, basis changes, products, pairing, antipode.

Bases of NSym: ``H`` (complete), ``E`` (elementary), ``R`` (ribbon), ``L``
(lexical).  Bases of QSym: ``M`` (monomial), ``F`` (fundamental), ``Lstar``
(dual lexical).  Every element is stored as a sparse map from compositions
to exact ``Fraction`` coefficients; conversions go through ``H`` or ``M``.

Transition matrices follow the row convention: for kind ``X_to_Y`` the row
indexed by alpha holds the coefficients of ``X_alpha`` in the ``Y`` basis,
rows and columns in canonical (decreasing lexicographic) order.  Thus
``transition_matrix("LexDual_to_M", n)`` is the matrix of lexical Kostka
numbers and ``H_to_Lex`` is its transpose.
"""

from __future__ import annotations

import json
import threading
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Mapping

from .compositions import (
    Composition,
    coarsenings,
    compositions_of,
    index_of,
    lex_compare,
    parse_composition,
    refinements,
)
from .errors import DomainError, check_degree
from .tableaux import count_K
from .words import binary_necklace_T

NSYM = ("H", "E", "R", "L")
QSYM = ("M", "F", "Lstar")

_ALIASES = {
    "H": "H", "E": "E", "R": "R", "L": "L", "Lex": "L",
    "M": "M", "F": "F", "Lstar": "Lstar", "LexDual": "Lstar", "L*": "Lstar",
}
_KIND_NAMES = {"L": "Lex", "Lstar": "LexDual"}


def basis_tag(name: str) -> str:
    try:
        return _ALIASES[name]
    except KeyError:
        raise DomainError(f"unknown basis {name!r}") from None


def algebra_of(basis: str) -> str:
    return "NSym" if basis_tag(basis) in NSYM else "QSym"


def _sign(k: int) -> int:
    return -1 if k % 2 else 1


def _parse_coeff(c) -> Fraction:
    if isinstance(c, str):
        return Fraction(c.strip())
    return Fraction(c)


@dataclass(frozen=True)
class FormalSeries:
    """A finite linear combination of basis elements indexed by compositions."""

    basis: str
    terms: Mapping[Composition, Fraction] = field(default_factory=dict)

    def __post_init__(self):
        object.__setattr__(self, "basis", basis_tag(self.basis))
        clean = {}
        for a, c in dict(self.terms).items():
            c = _parse_coeff(c)
            if c:
                a = Composition(a)
                clean[a] = clean.get(a, Fraction(0)) + c
        object.__setattr__(self, "terms", {a: c for a, c in clean.items() if c})

    @classmethod
    def monomial(cls, basis: str, alpha: Iterable[int], coeff=1) -> "FormalSeries":
        return cls(basis, {Composition(alpha): Fraction(coeff)})

    @property
    def algebra(self) -> str:
        return algebra_of(self.basis)

    def degrees(self) -> set[int]:
        return {a.n for a in self.terms}

    def homogeneous_part(self, n: int) -> "FormalSeries":
        return FormalSeries(self.basis, {a: c for a, c in self.terms.items() if a.n == n})

    def coefficient(self, alpha) -> Fraction:
        return self.terms.get(Composition(alpha), Fraction(0))

    def _same(self, other: "FormalSeries") -> None:
        if not isinstance(other, FormalSeries) or other.basis != self.basis:
            raise DomainError("series must share a basis; convert first")

    def __add__(self, other):
        self._same(other)
        out = dict(self.terms)
        for a, c in other.terms.items():
            out[a] = out.get(a, Fraction(0)) + c
        return FormalSeries(self.basis, out)

    def __neg__(self):
        return FormalSeries(self.basis, {a: -c for a, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, k) -> "FormalSeries":
        k = Fraction(k)
        return FormalSeries(self.basis, {a: k * c for a, c in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, FormalSeries):
            return multiply_nsym(self, other)
        return self.scale(other)

    def __rmul__(self, k):
        return self.scale(k)

    def __eq__(self, other):
        return (
            isinstance(other, FormalSeries)
            and self.basis == other.basis
            and self.terms == other.terms
        )

    def __hash__(self):
        return hash((self.basis, frozenset(self.terms.items())))

    def sorted_terms(self) -> list[tuple[Composition, Fraction]]:
        # degree ascending, then canonical order within a degree
        return sorted(
            self.terms.items(),
            key=lambda t: (t[0].n, index_of(t[0].n)[t[0]]),
        )

    def to_dict(self) -> dict:
        return {
            "basis": self.basis,
            "terms": [{"alpha": list(a), "coeff": str(c)} for a, c in self.sorted_terms()],
        }

    @classmethod
    def from_dict(cls, d: dict) -> "FormalSeries":
        return cls(d["basis"], {Composition(t["alpha"]): _parse_coeff(t["coeff"]) for t in d["terms"]})

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    @classmethod
    def from_json(cls, text: str) -> "FormalSeries":
        return cls.from_dict(json.loads(text))

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        out = []
        for i, (a, c) in enumerate(self.sorted_terms()):
            sign = "-" if c < 0 else "+"
            mag = abs(c)
            coeff = "" if mag == 1 else f"{mag}*"
            term = f"{coeff}{self.basis}[{','.join(map(str, a))}]"
            if i == 0:
                out.append(("-" if c < 0 else "") + term)
            else:
                out.append(f" {sign} {term}")
        return "".join(out)

    def __repr__(self) -> str:
        return f"FormalSeries({self.basis!r}, {str(self)!r})"


def H(*alpha) -> FormalSeries:
    return FormalSeries.monomial("H", alpha)


def E(*alpha) -> FormalSeries:
    return FormalSeries.monomial("E", alpha)


def R(*alpha) -> FormalSeries:
    return FormalSeries.monomial("R", alpha)


def L(*alpha) -> FormalSeries:
    return FormalSeries.monomial("L", alpha)


def M(*alpha) -> FormalSeries:
    return FormalSeries.monomial("M", alpha)


def F(*alpha) -> FormalSeries:
    return FormalSeries.monomial("F", alpha)


def Lstar(*alpha) -> FormalSeries:
    return FormalSeries.monomial("Lstar", alpha)


# -- single-element expansions ------------------------------------------------
#
# _to_ref(X, alpha): X_alpha in H (NSym) or M (QSym).
# _from_ref(Y, gamma): H_gamma or M_gamma in the Y basis.
# Both return dicts of nonzero integer coefficients.


def kostka_lex(alpha, beta) -> int:
    return count_K("lexical", alpha, beta)


@lru_cache(maxsize=None)
def _lex_in_H(beta: Composition) -> dict:
    # H_beta = sum_{alpha >=_lex beta} K_{alpha,beta} L_alpha, solved for L_beta
    out = {beta: 1}
    for alpha in compositions_of(beta.n):
        if lex_compare(alpha, beta) <= 0:
            break
        k = kostka_lex(alpha, beta)
        if k:
            for g, c in _lex_in_H(alpha).items():
                out[g] = out.get(g, 0) - k * c
    return {g: c for g, c in out.items() if c}


@lru_cache(maxsize=None)
def _M_in_Lstar(gamma: Composition) -> dict:
    # Lstar_gamma = sum_{beta <=_lex gamma} K_{gamma,beta} M_beta, solved for M_gamma
    out = {gamma: 1}
    for beta in reversed(compositions_of(gamma.n)):
        if lex_compare(beta, gamma) >= 0:
            break
        k = kostka_lex(gamma, beta)
        if k:
            for g, c in _M_in_Lstar(beta).items():
                out[g] = out.get(g, 0) - k * c
    return {g: c for g, c in out.items() if c}


@lru_cache(maxsize=None)
def _to_ref(basis: str, alpha: Composition) -> dict:
    n, ell = alpha.n, alpha.length
    if basis in ("H", "M"):
        return {alpha: 1}
    if basis == "R":
        return {b: _sign(ell - b.length) for b in coarsenings(alpha)}
    if basis == "E":
        return {b: _sign(n - b.length) for b in refinements(alpha)}
    if basis == "F":
        return {b: 1 for b in refinements(alpha)}
    if basis == "L":
        return _lex_in_H(alpha)
    if basis == "Lstar":
        out = {}
        for beta in reversed(compositions_of(n)):
            if lex_compare(beta, alpha) > 0:
                break
            k = kostka_lex(alpha, beta)
            if k:
                out[beta] = k
        return out
    raise DomainError(f"unknown basis {basis!r}")


@lru_cache(maxsize=None)
def _from_ref(basis: str, gamma: Composition) -> dict:
    n, ell = gamma.n, gamma.length
    if basis in ("H", "M"):
        return {gamma: 1}
    if basis == "R":
        return {b: 1 for b in coarsenings(gamma)}
    if basis == "E":
        return {b: _sign(n - b.length) for b in refinements(gamma)}
    if basis == "F":
        return {b: _sign(b.length - ell) for b in refinements(gamma)}
    if basis == "L":
        out = {}
        for alpha in compositions_of(n):
            if lex_compare(alpha, gamma) < 0:
                break
            k = kostka_lex(alpha, gamma)
            if k:
                out[alpha] = k
        return out
    if basis == "Lstar":
        return _M_in_Lstar(gamma)
    raise DomainError(f"unknown basis {basis!r}")


def _expand(terms: Mapping, table) -> dict:
    out: dict = {}
    for a, c in terms.items():
        for b, k in table(a).items():
            out[b] = out.get(b, 0) + c * k
    return out


def convert(s: FormalSeries, target: str) -> FormalSeries:
    """Re-express ``s`` in the ``target`` basis of the same algebra."""
    target = basis_tag(target)
    if algebra_of(target) != s.algebra:
        raise DomainError(f"cannot convert {s.algebra} element to {algebra_of(target)} basis {target}")
    if target == s.basis:
        return s
    for d in s.degrees():
        check_degree(d)
    ref = _expand(s.terms, lambda a: _to_ref(s.basis, a))
    return FormalSeries(target, _expand(ref, lambda g: _from_ref(target, g)))


# -- transition matrices --------------------------------------------------------


@dataclass(frozen=True)
class TransitionMatrix:
    kind: str
    n: int
    entries: tuple

    @property
    def index(self) -> list[Composition]:
        return compositions_of(self.n)

    def __getitem__(self, key):
        a, b = key
        idx = index_of(self.n)
        return self.entries[idx[Composition(a)]][idx[Composition(b)]]

    def is_upper_unitriangular(self) -> bool:
        e = self.entries
        return all(e[i][i] == 1 for i in range(len(e))) and not any(
            e[i][j] for i in range(len(e)) for j in range(i)
        )

    def is_lower_unitriangular(self) -> bool:
        return TransitionMatrix(self.kind, self.n, _transpose(self.entries)).is_upper_unitriangular()

    def to_csv(self) -> str:
        labels = [str(a) for a in self.index]
        lines = [",".join([self.kind, *labels])]
        for lab, row in zip(labels, self.entries):
            lines.append(",".join([lab, *map(str, row)]))
        return "\n".join(lines) + "\n"

    def to_dict(self) -> dict:
        return {
            "kind": self.kind,
            "n": self.n,
            "index": [list(a) for a in self.index],
            "entries": [[str(x) for x in row] for row in self.entries],
        }

    def render(self) -> str:
        labels = [str(a) for a in self.index]
        cells = [[str(x) for x in row] for row in self.entries]
        w = max([len(x) for x in labels] + [len(x) for row in cells for x in row])
        head = " " * (w + 1) + " ".join(l.rjust(w) for l in labels)
        body = [lab.rjust(w) + " " + " ".join(x.rjust(w) for x in row) for lab, row in zip(labels, cells)]
        return "\n".join([f"{self.kind} (n={self.n}, row = source element)", head, *body])


def _transpose(m):
    return tuple(tuple(col) for col in zip(*m)) if m else ()


def _matmul(a, b):
    size = len(b[0]) if b else 0
    out = []
    for row in a:
        acc = [0] * size
        for k, x in enumerate(row):
            if x:
                brow = b[k]
                for j, y in enumerate(brow):
                    if y:
                        acc[j] += x * y
        out.append(tuple(acc))
    return tuple(out)


def invert_triangular(m) -> tuple:
    """Exact inverse of a triangular integer matrix with diagonal entries ±1."""
    size = len(m)
    if any(m[i][j] for i in range(size) for j in range(i)):
        if any(m[i][j] for i in range(size) for j in range(i + 1, size)):
            raise DomainError("matrix is not triangular")
        return _transpose(invert_triangular(_transpose(m)))
    if any(m[i][i] not in (1, -1) for i in range(size)):
        raise DomainError("diagonal entries must be ±1 for an integer inverse")
    inv = [[0] * size for _ in range(size)]
    # upper triangular: back substitution row by row from the bottom
    for i in range(size - 1, -1, -1):
        d = m[i][i]
        row = [0] * size
        row[i] = 1
        for j in range(i + 1, size):
            mij = m[i][j]
            if mij:
                for k, x in enumerate(inv[j]):
                    if x:
                        row[k] -= mij * x
        inv[i] = [x * d for x in row]  # d = ±1 is its own inverse
    return tuple(tuple(r) for r in inv)


def _defining(basis: str, n: int) -> tuple:
    """Matrix of ``basis`` elements in the reference basis, or H in L for the lexical basis."""
    comps = compositions_of(n)
    if basis == "L":
        # defined by H_beta = sum_alpha K_{alpha,beta} L_alpha
        return tuple(tuple(kostka_lex(a, b) for a in comps) for b in comps)
    if basis == "Lstar":
        return tuple(tuple(kostka_lex(a, b) for b in comps) for a in comps)
    return tuple(
        tuple(_to_ref(basis, a).get(b, 0) for b in comps) for a in comps
    )


def _to_ref_matrix(basis: str, n: int) -> tuple:
    m = _defining(basis, n)
    return invert_triangular(m) if basis == "L" else m


def _from_ref_matrix(basis: str, n: int) -> tuple:
    m = _defining(basis, n)
    return m if basis == "L" else invert_triangular(m)


def parse_kind(kind: str) -> tuple[str, str]:
    try:
        src, dst = kind.split("_to_")
    except ValueError:
        raise DomainError(f"malformed matrix kind {kind!r}; expected X_to_Y") from None
    src, dst = basis_tag(src), basis_tag(dst)
    if algebra_of(src) != algebra_of(dst):
        raise DomainError(f"kind {kind!r} crosses algebras")
    return src, dst


_matrix_cache: dict = {}
_matrix_lock = threading.Lock()


def transition_matrix(kind: str, n: int) -> TransitionMatrix:
    """Dense transition matrix of degree ``n``, built by exact triangular inversion."""
    src, dst = parse_kind(kind)
    check_degree(n)
    name = f"{_KIND_NAMES.get(src, src)}_to_{_KIND_NAMES.get(dst, dst)}"
    key = (src, dst, n)
    with _matrix_lock:
        cached = _matrix_cache.get(key)
    if cached is not None:
        return cached
    if src == dst:
        size = len(compositions_of(n))
        entries = tuple(tuple(int(i == j) for j in range(size)) for i in range(size))
    else:
        a = _to_ref_matrix(src, n) if src not in ("H", "M") else None
        b = _from_ref_matrix(dst, n) if dst not in ("H", "M") else None
        if a is None:
            entries = b
        elif b is None:
            entries = a
        else:
            entries = _matmul(a, b)
    result = TransitionMatrix(name, n, entries)
    with _matrix_lock:
        # first writer wins; a concurrent duplicate computes identical entries
        return _matrix_cache.setdefault(key, result)


def convert_by_matrix(s: FormalSeries, target: str) -> FormalSeries:
    """Same as ``convert`` but through dense transition matrices."""
    target = basis_tag(target)
    if algebra_of(target) != s.algebra:
        raise DomainError("cross-algebra conversion")
    out: dict = {}
    for d in sorted(s.degrees()):
        m = transition_matrix(f"{s.basis}_to_{target}", d)
        comps = compositions_of(d)
        idx = index_of(d)
        for a, c in s.homogeneous_part(d).terms.items():
            for j, x in enumerate(m.entries[idx[a]]):
                if x:
                    out[comps[j]] = out.get(comps[j], 0) + c * x
    return FormalSeries(target, out)


# -- algebra operations -----------------------------------------------------------


def _require(s: FormalSeries, algebra: str, what: str) -> None:
    if s.algebra != algebra:
        raise DomainError(f"{what} expects an {algebra} element, got basis {s.basis}")


def multiply_nsym(s: FormalSeries, t: FormalSeries) -> FormalSeries:
    """Product in NSym (H_alpha H_beta = H_{alpha.beta}); result in the basis of ``s``."""
    _require(s, "NSym", "multiply_nsym")
    _require(t, "NSym", "multiply_nsym")
    sh, th = convert(s, "H"), convert(t, "H")
    out: dict = {}
    for a, c in sh.terms.items():
        for b, d in th.terms.items():
            ab = a + b
            out[ab] = out.get(ab, 0) + c * d
    return convert(FormalSeries("H", out), s.basis)


def pairing(f: FormalSeries, g: FormalSeries) -> Fraction:
    """The pairing NSym x QSym -> Q with <H_alpha, M_beta> = delta."""
    _require(f, "NSym", "pairing (left)")
    _require(g, "QSym", "pairing (right)")
    fh, gm = convert(f, "H"), convert(g, "M")
    return sum((c * gm.terms.get(a, 0) for a, c in fh.terms.items()), Fraction(0))


def antipode_nsym(s: FormalSeries, basis: str = "E") -> FormalSeries:
    """Antipode S(H_alpha) = (-1)^|alpha| E_{reverse(alpha)}, extended linearly."""
    _require(s, "NSym", "antipode_nsym")
    sh = convert(s, "H")
    out = {a.reverse(): _sign(a.n) * c for a, c in sh.terms.items()}
    return convert(FormalSeries("E", out), basis)


def _check_two_row(a: int, b: int) -> None:
    if a < 1 or b < 1:
        raise DomainError(f"a and b must be positive, got a={a}, b={b}")
    check_degree(a + b)


def two_row_coefficients(a: int, b: int) -> list[int]:
    """[c_1, ..., c_b] with L_(a,b) = H_(a,b) + sum_i c_i H_(a+i, b-i)."""
    _check_two_row(a, b)
    shape = lambda i: Composition((a + i, b - i))
    c: list[int] = []
    for i in range(1, b + 1):
        acc = kostka_lex(shape(i), (a, b))
        acc += sum(c[j - 1] * kostka_lex(shape(i), shape(j)) for j in range(1, i))
        c.append(-acc)
    return c


def lexical_two_row_in_H(a: int, b: int) -> FormalSeries:
    coeffs = two_row_coefficients(a, b)
    terms = {Composition((a, b)): 1}
    for i, ci in enumerate(coeffs, 1):
        terms[Composition((a + i, b - i))] = ci
    return FormalSeries("H", terms)


def antipode_coefficients(a: int, b: int) -> list[int]:
    """[C_1, ..., C_b] from the binary-necklace recursion."""
    _check_two_row(a, b)
    C = [-1]
    for i in range(2, b + 1):
        acc = binary_necklace_T(a + i, i)
        acc += sum(C[j - 1] * binary_necklace_T(a + i, i - j) for j in range(1, i))
        C.append(-acc)
    return C


def antipode_lexical_two_row(a: int, b: int) -> FormalSeries:
    """S(L_(a,b)) in the E basis from the closed necklace-count formula."""
    C = antipode_coefficients(a, b)
    sgn = _sign(a + b)
    terms = {Composition((b, a)): sgn}
    for i, ci in enumerate(C, 1):
        terms[Composition((b - i, a + i))] = sgn * ci
    return FormalSeries("E", terms)


def antipode_lexical_two_row_generic(a: int, b: int) -> FormalSeries:
    """S(L_(a,b)) through the general machinery: Lex -> H, antipode, collect in E."""
    _check_two_row(a, b)
    return antipode_nsym(L(a, b), "E")


def parse_term(text: str) -> FormalSeries:
    """Parse ``"BASIS:ALPHA"`` such as ``"L:2.1"`` or ``"H:2"``."""
    try:
        basis, alpha = text.split(":", 1)
    except ValueError:
        raise DomainError(f"expected BASIS:COMPOSITION, got {text!r}") from None
    return FormalSeries.monomial(basis_tag(basis), parse_composition(alpha))
