from itertools import permutations

import pytest
from hypothesis import given, strategies as st

from lextab.compositions import Composition, coarsenings, compositions_of, refinements
from lextab.errors import DomainError
from lextab.tableaux import (
    READING_ORDERS,
    CycleDecomposition,
    SetPartition,
    Tableau,
    compatible_types,
    count_J,
    count_K,
    enumerate_tableaux,
    from_permutation,
    from_set_partition,
    fundamental_coefficient,
    hook,
    is_immaculate,
    is_lexical,
    max_types,
    pack,
    row_class_count,
    standard_count,
    standard_tableaux,
    standardize,
    to_permutation,
    to_set_partition,
    _types_by_standardization,
)
from oracles import brute_immaculate, brute_lexical

SMALL = [(a, b) for n in range(1, 6) for a in compositions_of(n) for b in compositions_of(n)]


class TestTableau:
    def test_shape_and_content(self):
        t = Tableau([[1, 1, 2], [2, 3]])
        assert t.shape == (3, 2)
        assert t.content() == (2, 2, 1)
        assert t.n == 5

    def test_rejects_bad_input(self):
        with pytest.raises(DomainError):
            Tableau([[1], []])
        with pytest.raises(DomainError):
            Tableau([[0, 1]])
        with pytest.raises(DomainError):
            Tableau([[1, 2]], shape=(1, 1))

    def test_json_round_trip(self):
        t = Tableau([[1, 2, 2], [3]])
        assert Tableau.from_dict(t.to_dict()) == t
        assert t.to_json() == '{"shape": [3, 1], "rows": [[1, 2, 2], [3]]}'

    def test_render_puts_bottom_row_last(self):
        assert Tableau([[1, 2], [3]]).render() == "3\n1 2"

    def test_predicates(self):
        assert is_immaculate(Tableau([[1, 1, 2], [2, 3]]))
        assert not is_immaculate(Tableau([[1, 3, 2]]))
        assert is_lexical(Tableau([[1, 3, 2]]))
        assert not is_lexical(Tableau([[2, 1]]))
        assert not is_lexical(Tableau([[2], [1]]))


@pytest.mark.parametrize("shape,content", SMALL)
def test_enumeration_matches_brute_force(shape, content):
    for kind, oracle in (("lexical", brute_lexical), ("immaculate", brute_immaculate)):
        got = {t.rows for t in enumerate_tableaux(kind, shape, content)}
        expected = {tuple(tuple(r) for r in rows) for rows in oracle(shape, content)}
        assert got == expected


def test_enumerate_order_is_stable():
    a = enumerate_tableaux("lexical", (3, 2), (2, 1, 1, 1))
    assert a == sorted(a, key=Tableau.sort_key)
    assert a == enumerate_tableaux("lexical", (3, 2), (2, 1, 1, 1))


@pytest.mark.parametrize("n", range(1, 7))
def test_formula_count_equals_enumeration(n):
    for a in compositions_of(n):
        for b in compositions_of(n):
            for kind in ("lexical", "immaculate"):
                assert count_K(kind, a, b) == count_K(kind, a, b, method="enumerate")


def test_immaculate_equals_lexical_when_parts_at_most_two():
    for n in range(1, 7):
        for a in compositions_of(n):
            if max(a) <= 2:
                for b in compositions_of(n):
                    assert count_K("lexical", a, b) == count_K("immaculate", a, b)


def test_count_errors():
    with pytest.raises(DomainError):
        count_K("lexical", (2, 1), (1, 1))
    with pytest.raises(DomainError):
        count_K("lexical", (2,), (2, 0))
    with pytest.raises(DomainError):
        count_K("young", (2,), (2,))
    with pytest.raises(DomainError):
        count_K("lexical", (2,), (2,), method="guess")


def test_hooks():
    assert hook((3, 2), (1, 1)) == 5
    assert hook((3, 2), (1, 2)) == 2
    assert hook((3, 2), (2, 1)) == 2
    with pytest.raises(DomainError):
        hook((3, 2), (2, 3))


@pytest.mark.parametrize("n", range(1, 8))
def test_hook_counts_match_enumeration(n):
    for a in compositions_of(n):
        for kind in ("lexical", "immaculate"):
            assert standard_count(kind, a) == len(standard_tableaux(kind, a))


def test_standard_count_examples():
    assert standard_count("immaculate", (2, 2)) == 3
    assert standard_count("lexical", (3,)) == 2
    assert standard_count("lexical", (2, 2)) == 3


class TestStandardization:
    def test_single_row(self):
        assert standardize(Tableau([[1, 2, 3, 2]])) == Tableau([[1, 2, 4, 3]])
        assert standardize(Tableau([[1, 1, 3, 2]])) == Tableau([[1, 2, 4, 3]])

    def test_ties_read_by_column_then_row(self):
        t = Tableau([[1, 2], [2, 2]])
        assert standardize(t) == Tableau([[1, 3], [2, 4]])

    def test_alternative_order(self):
        t = Tableau([[1, 2], [2, 2]])
        assert standardize(t, "row_desc") == Tableau([[1, 4], [2, 3]])
        with pytest.raises(DomainError):
            standardize(t, "diagonal")

    def test_requires_lexical(self):
        with pytest.raises(DomainError):
            standardize(Tableau([[2, 1]]))

    def test_result_is_standard_lexical(self):
        for b in compositions_of(5):
            for t in enumerate_tableaux("lexical", (3, 2), b):
                s = standardize(t)
                assert s.is_standard() and is_lexical(s)

    def test_injective_per_type(self):
        for n in range(1, 6):
            for a in compositions_of(n):
                for b in compositions_of(n):
                    ts = enumerate_tableaux("lexical", a, b)
                    assert len({standardize(t) for t in ts}) == len(ts)


def test_pack():
    assert pack(Tableau([[2, 5, 5], [7]])) == Tableau([[1, 2, 2], [3]])


def test_max_types_example():
    s = Tableau([[1, 2, 4, 3]])
    assert max_types(s) == {(1, 2, 1), (2, 1, 1)}
    assert max_types(s, method="cuts") == {(1, 2, 1), (2, 1, 1)}


def test_max_types_column_shape():
    assert max_types(Tableau([[1], [2]])) == {(1, 1)}


def test_max_types_rejects_non_standard():
    with pytest.raises(DomainError):
        max_types(Tableau([[1, 1]]))


@pytest.mark.parametrize("order", sorted(READING_ORDERS))
def test_cut_and_enumeration_routes_agree(order):
    for n in range(1, 6):
        for a in compositions_of(n):
            groups = _types_by_standardization(tuple(a), order)
            for s in standard_tableaux("lexical", a):
                assert compatible_types(s, order) == groups.get(s, set())
                assert max_types(s, order) == max_types(s, order, "cuts")


@pytest.mark.parametrize("order", sorted(READING_ORDERS))
def test_types_closed_under_refinement(order):
    # a type that standardizes to S lets every refinement of it do so as well
    for n in range(1, 7):
        for a in compositions_of(n):
            for types in _types_by_standardization(tuple(a), order).values():
                for g in types:
                    assert refinements(g) <= types


def test_count_J_examples():
    assert count_J((4,), (1, 2, 1)) == 2
    assert count_J((4,), (4,)) == 1
    assert count_J((4,), (3, 1)) == 0
    assert count_J((3,), (2, 1)) == 0
    with pytest.raises(DomainError):
        count_J((2,), (1, 2))


def test_count_J_known_overcount():
    # 1243 has two maximal types, so J counts it twice while K counts it once
    assert count_K("lexical", (4,), (1, 1, 1, 1)) == 6
    assert sum(count_J((4,), b) for b in coarsenings(Composition((1, 1, 1, 1)))) == 7


@pytest.mark.parametrize("n", range(1, 7))
def test_fundamental_coefficients_resum_to_K(n):
    for a in compositions_of(n):
        for g in compositions_of(n):
            assert count_K("lexical", a, g) == sum(fundamental_coefficient(a, b) for b in coarsenings(g))


def test_fundamental_coefficients_nonnegative():
    for n in range(1, 7):
        for a in compositions_of(n):
            for b in compositions_of(n):
                assert fundamental_coefficient(a, b) >= 0


def test_single_maximal_type_gives_J_equal_to_F_coefficient():
    for n in range(1, 4):
        for a in compositions_of(n):
            for b in compositions_of(n):
                assert count_J(a, b) == fundamental_coefficient(a, b)


class TestBijections:
    @pytest.mark.parametrize("n", range(1, 7))
    def test_set_partitions(self, n):
        seen = set()
        for a in compositions_of(n):
            for t in standard_tableaux("immaculate", a):
                p = to_set_partition(t)
                assert from_set_partition(p) == t
                seen.add(p)
        assert len(seen) == sum(1 for a in compositions_of(n) for _ in standard_tableaux("immaculate", a))

    @pytest.mark.parametrize("n", range(1, 7))
    def test_permutations(self, n):
        images = set()
        for a in compositions_of(n):
            for t in standard_tableaux("lexical", a):
                sigma = to_permutation(t)
                assert from_permutation(sigma) == t
                images.add(sigma.one_line())
        assert images == set(permutations(range(1, n + 1)))

    def test_inverse_shape_uses_min_order(self):
        assert from_set_partition(SetPartition([[2, 3], [1]])) == Tableau([[1], [2, 3]])

    def test_cycle_normalization(self):
        c = CycleDecomposition([[3, 1, 2]])
        assert c.cycles == ((1, 2, 3),)
        assert str(CycleDecomposition.from_one_line((2, 1, 3))) == "(1 2)(3)"
        assert c.one_line() == (2, 3, 1)

    def test_invalid(self):
        with pytest.raises(DomainError):
            SetPartition([[1], [1, 2]])
        with pytest.raises(DomainError):
            to_set_partition(Tableau([[1, 1]]))
        with pytest.raises(DomainError):
            to_permutation(Tableau([[2, 1]]))


@pytest.mark.parametrize("n", range(1, 7))
def test_row_classes_count_immaculate(n):
    for a in compositions_of(n):
        assert row_class_count(a) == standard_count("immaculate", a)


@given(st.permutations(list(range(1, 7))))
def test_cycle_round_trip_property(perm):
    c = CycleDecomposition.from_one_line(perm)
    assert c.one_line() == tuple(perm)
    t = from_permutation(c)
    assert is_lexical(t) and to_permutation(t) == c
