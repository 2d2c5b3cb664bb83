"""Batch checks of counting identities.

Each check compares two independently computed integers per parameter and
collects them into an :class:`IdentityReport`.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from functools import lru_cache
from math import comb

from .compositions import coarsenings, compositions_of
from .errors import DomainError, SizeLimitError
from .tableaux import count_J, count_K, standard_count, standard_tableaux
from .words import binary_necklace_T


@lru_cache(maxsize=None)
def stirling2(n: int, k: int) -> int:
    if not 0 <= k <= n:
        raise DomainError(f"need 0 <= k <= n, got n={n}, k={k}")
    if n == 0:
        return 1
    if k == 0:
        return 0
    return (k * stirling2(n - 1, k) if k <= n - 1 else 0) + stirling2(n - 1, k - 1)


@lru_cache(maxsize=None)
def stirling1_unsigned(n: int, k: int) -> int:
    if not 0 <= k <= n:
        raise DomainError(f"need 0 <= k <= n, got n={n}, k={k}")
    if n == 0:
        return 1
    if k == 0:
        return 0
    return ((n - 1) * stirling1_unsigned(n - 1, k) if k <= n - 1 else 0) + stirling1_unsigned(n - 1, k - 1)


def bell(n: int) -> int:
    if n < 0:
        raise DomainError(f"n must be nonnegative, got {n}")
    return sum(stirling2(n, k) for k in range(n + 1))


@dataclass
class IdentityReport:
    identity: str
    range: str
    cases: list = field(default_factory=list)

    def add(self, params: dict, lhs: int, rhs: int) -> None:
        self.cases.append({"params": params, "lhs": lhs, "rhs": rhs, "ok": lhs == rhs})

    @property
    def passed(self) -> bool:
        return all(c["ok"] for c in self.cases)

    def failures(self) -> list:
        return [c for c in self.cases if not c["ok"]]

    def to_dict(self) -> dict:
        return {"identity": self.identity, "range": self.range, "cases": self.cases, "pass": self.passed}

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    def summary(self) -> str:
        bad = len(self.failures())
        status = "PASS" if self.passed else f"FAIL ({bad} of {len(self.cases)} cases)"
        return f"{self.identity}: {status} over {self.range}"


def _cap(max_n: int, limit: int, name: str) -> None:
    if max_n > limit:
        raise SizeLimitError(f"{name} is limited to max_n <= {limit}, got {max_n}")


def verify_stirling_sums(max_n: int, enumerate_upto: int = 8,
                         lexical_max: int | None = None) -> list[IdentityReport]:
    """Row-length sums of standard counts against both kinds of Stirling numbers.

    Counts come from the hook formulas; for n <= ``enumerate_upto`` the
    enumerated counts are checked against the same right-hand side too.
    """
    _cap(max_n, 10, "verify_stirling_sums")
    lexical_max = min(max_n, 9) if lexical_max is None else lexical_max
    _cap(lexical_max, 9, "verify_stirling_sums (lexical)")
    reports = []
    for kind, top, rhs in (
        ("immaculate", max_n, stirling2),
        ("lexical", lexical_max, stirling1_unsigned),
    ):
        rep = IdentityReport(f"stirling_{kind}", f"1 <= k <= n <= {top}")
        for n in range(1, top + 1):
            for k in range(1, n + 1):
                shapes = compositions_of(n, k)
                rep.add({"n": n, "k": k, "count": "hook"},
                        sum(standard_count(kind, a) for a in shapes), rhs(n, k))
                if n <= enumerate_upto:
                    rep.add({"n": n, "k": k, "count": "enumeration"},
                            sum(len(standard_tableaux(kind, a)) for a in shapes), rhs(n, k))
        reports.append(rep)
    return reports


def _g(alpha) -> int:
    return standard_count("immaculate", alpha)


def verify_conclusion_sums(max_n: int) -> list[IdentityReport]:
    """The three Bell-number sums over standard immaculate counts."""
    if max_n < 2:
        raise DomainError("max_n must be at least 2")
    _cap(max_n, 9, "verify_conclusion_sums")
    no_singletons = IdentityReport("conclusion_i", f"2 <= n <= {max_n}")
    circular = IdentityReport("conclusion_ii", f"2 <= n <= {max_n}")
    rooted = IdentityReport("conclusion_iii", f"2 <= n <= {max_n}")
    for n in range(2, max_n + 1):
        comps = compositions_of(n)
        lhs1 = sum(_g(a) * sum((-1) ** p for p in a) for a in comps)
        rhs1 = sum((-1) ** (n - k) * comb(n, k) * bell(k) for k in range(n + 1))
        no_singletons.add({"n": n}, lhs1, rhs1)

        lhs2 = sum(_g(a) * sum(p * (-1) ** (p + 1) for p in a) for a in comps)
        rhs2 = n * ((-1) ** (n - 1) + sum((-1) ** (j - 1) * bell(n - j - 1) for j in range(1, n)))
        circular.add({"n": n}, lhs2, rhs2)

        lhs3 = sum(_g(a) * len(a) * sum(p * (-1) ** (p + 1) for p in a) for a in comps)
        rooted.add({"n": n}, lhs3, n * bell(n - 1))
    return [no_singletons, circular, rooted]


def verify_k_equals_sum_j(max_n: int) -> list[IdentityReport]:
    """K_{alpha,gamma} against the sum of J_{alpha,beta} over coarsenings beta of gamma."""
    _cap(max_n, 7, "verify_k_equals_sum_j")
    rep = IdentityReport("k_equals_sum_j", f"alpha, gamma |= n <= {max_n}")
    for n in range(1, max_n + 1):
        comps = compositions_of(n)
        for a in comps:
            for g in comps:
                rep.add({"alpha": list(a), "gamma": list(g)},
                        count_K("lexical", a, g),
                        sum(count_J(a, b) for b in coarsenings(g)))
    return [rep]


def verify_relation_T(max_n: int) -> list[IdentityReport]:
    """Two-row lexical Kostka numbers against binary necklace counts."""
    _cap(max_n, 12, "verify_relation_T")
    rep = IdentityReport("relation_T", f"0 <= j < i <= b, a + b <= {max_n}")
    for total in range(2, max_n + 1):
        for a in range(1, total):
            b = total - a
            for i in range(1, b + 1):
                for j in range(i):
                    rep.add({"a": a, "b": b, "i": i, "j": j},
                            count_K("lexical", (a + i, b - i), (a + j, b - j)),
                            binary_necklace_T(a + i, i - j))
    return [rep]


IDENTITIES = {
    "stirling": verify_stirling_sums,
    "conclusion": verify_conclusion_sums,
    "kj": verify_k_equals_sum_j,
    "relationT": verify_relation_T,
}


def verify(identity: str, max_n: int) -> list[IdentityReport]:
    if identity == "all":
        out = []
        for name, fn in IDENTITIES.items():
            out.extend(fn(clamp_max_n(name, max_n)))
        return out
    try:
        fn = IDENTITIES[identity]
    except KeyError:
        raise DomainError(f"unknown identity {identity!r}") from None
    return fn(max_n)


_DEFAULT_CAPS = {"stirling": 10, "conclusion": 9, "kj": 7, "relationT": 12}


def clamp_max_n(name: str, max_n: int) -> int:
    return max(2, min(max_n, _DEFAULT_CAPS[name]))
