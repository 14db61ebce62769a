from math import comb

import pytest
from hypothesis import given, strategies as st

from schubert_real.errors import ValidationError
from schubert_real.schubert import (
    CycleClassSum,
    Partition,
    catalan,
    count_syt,
    enumerate_syt,
    partitions_up_to,
    pieri_multiply,
    power_degree_lines,
    rnc_problem_degree,
    schubert_class,
    top_class,
)


def horizontal_strips(shape, m, n):
    """Oracle: every two-row shape in the box containing ``shape`` with m extra
    boxes, no two in a column, found by scanning the whole box."""
    a, b = shape
    out = set()
    for mu1 in range(n):
        for mu2 in range(mu1 + 1):
            if mu1 + mu2 != a + b + m:
                continue
            # interlacing mu1 >= a >= mu2 >= b is the horizontal strip condition
            if mu1 >= a >= mu2 >= b:
                out.add((mu1, mu2))
    return out


def test_partition_canonical():
    assert Partition((2, 1, 0, 0)) == Partition((2, 1))
    assert Partition((2, 1, 0)).parts == (2, 1)
    with pytest.raises(ValidationError):
        Partition((1, 2))
    with pytest.raises(ValidationError):
        Partition((1, -1))


def test_parse():
    assert Partition.parse("2,2") == Partition((2, 2))
    assert Partition.parse("") == Partition(())
    assert Partition.parse("(3,1)") == Partition((3, 1))


@pytest.mark.parametrize("shape, expected", [((2, 2), 2), ((1,), 1), ((3, 3), 5)])
def test_count_syt_examples(shape, expected):
    assert count_syt(Partition(shape)) == expected


@pytest.mark.parametrize("shape, expected", [((1, 1), 1), ((2, 1), 2), ((2, 2), 2)])
def test_enumerate_syt_examples(shape, expected):
    tabs = enumerate_syt(Partition(shape))
    assert len(tabs) == expected
    assert len(set(tabs)) == len(tabs)


def test_enumerated_tableaux_are_standard():
    for t in enumerate_syt(Partition((3, 2, 1))):
        for row in t:
            assert list(row) == sorted(row)
        for i in range(1, len(t)):
            for j, x in enumerate(t[i]):
                assert t[i - 1][j] < x
        assert sorted(x for row in t for x in row) == list(range(1, 7))


def test_three_three_by_enumeration():
    assert len(enumerate_syt(Partition((3, 3)))) == 5


def test_enumeration_size_limit():
    with pytest.raises(ValidationError):
        enumerate_syt(Partition((7, 6)))


def test_count_syt_large_no_overflow():
    # 60 boxes: exact big integer
    assert count_syt(Partition((30, 30))) == catalan(30)
    with pytest.raises(ValidationError):
        count_syt(Partition((31, 30)))


@pytest.mark.parametrize("shape", list(partitions_up_to(12)), ids=str)
def test_count_matches_enumeration(shape):
    assert count_syt(shape) == len(enumerate_syt(shape))


def test_pieri_examples():
    assert pieri_multiply(1, schubert_class((), 3)) == CycleClassSum.of(schubert_class((1,), 3))
    assert pieri_multiply(1, schubert_class((1,), 3)).terms == {
        schubert_class((2,), 3): 1, schubert_class((1, 1), 3): 1}
    assert pieri_multiply(1, schubert_class((2, 1), 3)) == CycleClassSum.of(schubert_class((2, 2), 3))


def test_pieri_range():
    with pytest.raises(ValidationError):
        pieri_multiply(3, schubert_class((), 3))
    with pytest.raises(ValidationError):
        pieri_multiply(0, schubert_class((), 3))
    with pytest.raises(ValidationError):
        schubert_class((3,), 3)


@pytest.mark.parametrize("n", range(2, 9))
def test_pieri_against_box_scan(n):
    for a in range(n):
        for b in range(a + 1):
            for m in range(1, n):
                got = pieri_multiply(m, schubert_class((a, b), n))
                assert got.is_multiplicity_free()
                assert {(c.partition[0], c.partition[1]) for c in got.terms} == \
                    horizontal_strips((a, b), m, n)


@pytest.mark.parametrize("n", range(2, 9))
def test_pieri_associativity(n):
    one = CycleClassSum.of(schubert_class((), n))
    s1 = one.multiply_special(1)
    s11 = s1.multiply_special(1)
    left = s11.multiply_special(1)
    # sigma_1 * (sigma_1 * sigma_1) expanded term by term
    right = CycleClassSum(n, {})
    for c, k in s11.terms.items():
        for _ in range(k):
            right = right + pieri_multiply(1, c)
    assert left == right


@pytest.mark.parametrize("n, expected", [(2, 1), (3, 2), (4, 5)])
def test_power_degree_examples(n, expected):
    assert power_degree_lines(n) == expected


@pytest.mark.parametrize("n", range(2, 11))
def test_power_degree_is_catalan(n):
    assert power_degree_lines(n) == count_syt(Partition((n - 1, n - 1))) == catalan(n - 1)
    assert power_degree_lines(n) * n == comb(2 * n - 2, n - 1)


@pytest.mark.parametrize("n, expected", [(3, 162), (2, 4), (4, 20480)])
def test_rnc_degree_examples(n, expected):
    assert rnc_problem_degree(n) == expected


@pytest.mark.parametrize("n", range(2, 11))
def test_rnc_degree_factorization(n):
    assert rnc_problem_degree(n) == power_degree_lines(n) * n ** (2 * n - 2)


def test_degree_range():
    with pytest.raises(ValidationError):
        power_degree_lines(1)
    with pytest.raises(ValidationError):
        rnc_problem_degree(21)


def test_top_class():
    assert top_class(4).partition == Partition((3, 3))


@given(st.integers(2, 7), st.data())
def test_pieri_degree_additive(n, data):
    a = data.draw(st.integers(0, n - 1))
    b = data.draw(st.integers(0, a))
    m = data.draw(st.integers(1, n - 1))
    for c in pieri_multiply(m, schubert_class((a, b), n)).terms:
        assert c.codim == a + b + m
