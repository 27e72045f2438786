import pytest

from hallvertex.exact import TPoly, one_minus_t_power
from hallvertex.partitions import (
    c_poly,
    canonical,
    conjugate,
    enumerate_partitions,
    epsilon,
    partwise_sum,
    prepend,
    raising,
    same_composition,
    strict_partitions,
    z_lambda,
)


def partition_counts(n):
    # Euler's pentagonal recurrence
    p = [1] + [0] * n
    for m in range(1, n + 1):
        k, total = 1, 0
        while True:
            for g in (k * (3 * k - 1) // 2, k * (3 * k + 1) // 2):
                if g > m:
                    break
                total += (-1) ** (k + 1) * p[m - g]
            if k * (3 * k - 1) // 2 > m:
                break
            k += 1
        p[m] = total
    return p


@pytest.mark.parametrize("lam, want", [((3,), (1, 1, 1)), ((2, 1), (2, 1)), ((3, 1), (2, 1, 1)), ((), ())])
def test_conjugate(lam, want):
    assert conjugate(lam) == want


def test_conjugate_is_involution():
    for n in range(13):
        for lam in enumerate_partitions(n):
            assert conjugate(conjugate(lam)) == lam


@pytest.mark.parametrize("lam, want", [((1,), 0), ((1, 1), 1), ((2, 1, 1), 3)])
def test_epsilon(lam, want):
    assert epsilon(lam) == want


def test_epsilon_after_prepending():
    for m in range(1, 6):
        assert epsilon((m, 1)) == 1
    for n in range(9):
        for lam in enumerate_partitions(n):
            lam1 = lam[0] if lam else 0
            for m in range(max(lam1, 1), lam1 + 4):
                assert epsilon(prepend(m, lam)) == n + epsilon(lam)


def test_c_poly():
    one_minus = one_minus_t_power
    assert c_poly((1,)) == one_minus(1)
    assert c_poly((1, 1)) == one_minus(1) * one_minus(2)
    assert c_poly((2, 1)) == one_minus(1) ** 2
    assert c_poly(()) == TPoly([1])
    for n in range(8):
        for lam in enumerate_partitions(n):
            lam1 = lam[0] if lam else 0
            assert c_poly(prepend(lam1 + 1, lam)) == one_minus(1) * c_poly(lam)


def test_prepend_and_canonical():
    assert prepend(3, (1,)) == (3, 1)
    assert canonical(prepend(0, ())) == ()
    assert prepend(-1, (2,)) == (-1, 2)
    assert same_composition((2, 1, 0, 0), (2, 1))


def test_raising():
    assert raising((1, 1), 1, 2) == (2, 0)
    assert raising((2, 0), 1, 2) == (3, -1)
    assert raising((2, 2, 2), 1, 3) == (3, 2, 1)
    with pytest.raises(IndexError):
        raising((1, 1), 2, 1)


def test_enumeration():
    assert enumerate_partitions(0) == ((),)
    assert enumerate_partitions(3) == ((3,), (2, 1), (1, 1, 1))
    assert len(enumerate_partitions(6)) == 11
    counts = partition_counts(20)
    assert [len(enumerate_partitions(n)) for n in range(21)] == counts
    with pytest.raises(ValueError):
        enumerate_partitions(-1)


def test_enumeration_is_reverse_lex():
    for n in range(10):
        parts = enumerate_partitions(n)
        assert list(parts) == sorted(parts, reverse=True)


def test_misc():
    assert strict_partitions(5) == [(5,), (4, 1), (3, 2)]
    assert z_lambda((2, 1, 1)) == 2 * 2
    assert partwise_sum((1, 1), (2, 1)) == (3, 2)
