import pytest

from lextab.errors import DomainError, SizeLimitError
from lextab.identities import (
    IdentityReport,
    bell,
    clamp_max_n,
    stirling1_unsigned,
    stirling2,
    verify,
    verify_conclusion_sums,
    verify_k_equals_sum_j,
    verify_relation_T,
    verify_stirling_sums,
)
from oracles import brute_bell, brute_stirling1, brute_stirling2


@pytest.mark.parametrize("n", range(0, 7))
def test_stirling_numbers_against_brute_force(n):
    for k in range(n + 1):
        assert stirling2(n, k) == brute_stirling2(n, k)
        assert stirling1_unsigned(n, k) == brute_stirling1(n, k)
    assert bell(n) == brute_bell(n)


def test_stirling_known_values():
    assert stirling2(4, 2) == 7
    assert stirling1_unsigned(4, 2) == 11
    assert bell(10) == 115975
    with pytest.raises(DomainError):
        stirling2(2, 3)
    with pytest.raises(DomainError):
        bell(-1)


def test_stirling_sums_pass():
    reports = verify_stirling_sums(6, enumerate_upto=6)
    assert [r.identity for r in reports] == ["stirling_immaculate", "stirling_lexical"]
    assert all(r.passed for r in reports)
    cells = {(c["params"]["n"], c["params"]["k"]): c["lhs"] for c in reports[1].cases}
    assert cells[4, 2] == 11


def test_conclusion_circular_and_rooted_pass():
    _, circular, rooted = verify_conclusion_sums(8)
    assert circular.passed and rooted.passed


def test_conclusion_no_singletons_values():
    # the left side is minus the singleton-free partition count of n + 1
    first, _, _ = verify_conclusion_sums(8)
    lhs = [c["lhs"] for c in first.cases]
    assert lhs == [-1, -4, -11, -41, -162, -715, -3425]
    assert not first.passed


def test_relation_T_passes():
    assert verify_relation_T(8)[0].passed


def test_k_equals_sum_j_first_failure():
    (rep,) = verify_k_equals_sum_j(4)
    bad = rep.failures()
    assert {"params": {"alpha": [4], "gamma": [1, 1, 1, 1]}, "lhs": 6, "rhs": 7, "ok": False} in bad
    (small,) = verify_k_equals_sum_j(3)
    assert small.passed


def test_report_serialization():
    rep = IdentityReport("x", "n <= 1")
    rep.add({"n": 1}, 2, 2)
    assert rep.passed
    assert rep.to_dict()["pass"] is True
    assert rep.summary() == "x: PASS over n <= 1"
    rep.add({"n": 2}, 1, 3)
    assert rep.summary() == "x: FAIL (1 of 2 cases) over n <= 1"


def test_dispatch_and_caps():
    assert [r.identity for r in verify("relationT", 4)] == ["relation_T"]
    with pytest.raises(DomainError):
        verify("nope", 3)
    with pytest.raises(SizeLimitError):
        verify_k_equals_sum_j(8)
    with pytest.raises(DomainError):
        verify_conclusion_sums(1)
    assert clamp_max_n("kj", 20) == 7
    assert clamp_max_n("stirling", 1) == 2


def test_verify_all_collects_every_report():
    names = [r.identity for r in verify("all", 4)]
    assert names == ["stirling_immaculate", "stirling_lexical", "conclusion_i", "conclusion_ii",
                     "conclusion_iii", "k_equals_sum_j", "relation_T"]
