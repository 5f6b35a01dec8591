from fractions import Fraction
from itertools import product
from math import comb

import pytest
from hypothesis import given, settings, strategies as st

from schurkit.partitions import (Partition, SkewShape, conjugate, contains, lr_coefficient,
                                 lr_product, partitions_of, semistandard_tableaux,
                                 skew_decomposition, ssyt_count, subpartitions)


# independent oracles

def brute_ssyt(shape, r):
    """Try every filling of the cells with 1..r."""
    cells = shape.cells()
    count = 0
    for values in product(range(1, r + 1), repeat=len(cells)):
        t = dict(zip(cells, values))
        if all(t[(i, j)] >= t[(i, j - 1)] for (i, j) in cells if (i, j - 1) in t) and \
                all(t[(i, j)] > t[(i - 1, j)] for (i, j) in cells if (i - 1, j) in t):
            count += 1
    return count


def hook_content(lam, r):
    lt = conjugate(lam)
    val = Fraction(1)
    for i, row in enumerate(lam):
        for j in range(row):
            hook = row - j + lt[j] - i - 1
            val *= Fraction(r + j - i, hook)
    return int(val)


def schur_poly(lam, n):
    """Schur polynomial in n variables as {exponent: coeff}, by tableaux."""
    out = {}
    for t in semistandard_tableaux(SkewShape(lam), n):
        e = [0] * n
        for v in t.values():
            e[v - 1] += 1
        e = tuple(e)
        out[e] = out.get(e, 0) + 1
    return out


def poly_mul(f, g):
    out = {}
    for a, x in f.items():
        for b, y in g.items():
            e = tuple(i + j for i, j in zip(a, b))
            out[e] = out.get(e, 0) + x * y
    return out


def schur_expand(f, n):
    """Peel off leading dominant monomials to expand a symmetric polynomial
    in Schur polynomials."""
    f = {e: c for e, c in f.items() if c}
    out = {}
    while f:
        lead = max(f)
        c = f[lead]
        lam = Partition(lead)
        out[lam] = c
        for e, x in schur_poly(lam, n).items():
            f[e] = f.get(e, 0) - c * x
            if not f[e]:
                del f[e]
    return out


partition_st = st.lists(st.integers(0, 5), max_size=5).map(
    lambda xs: Partition(sorted(xs, reverse=True)))


# examples

@pytest.mark.parametrize("lam, expected", [
    ((2, 2, 1), (3, 2)), ((), ()), ((4, 2, 1), (3, 2, 1, 1))])
def test_conjugate_examples(lam, expected):
    assert conjugate(lam) == Partition(expected)


def test_contains_examples():
    assert contains((2, 2, 1), (1, 1))
    assert contains((3, 1), (3, 1))
    with pytest.raises(ValueError):
        contains((2, 1), (1, 2))


def test_partition_normal_form():
    assert Partition((2, 1, 0, 0)) == Partition((2, 1))
    for bad in [(1, 2), (2, -1)]:
        with pytest.raises(ValueError):
            Partition(bad)
    with pytest.raises(ValueError):
        SkewShape((2,), (1, 1))


def test_ssyt_examples():
    assert ssyt_count(SkewShape((2, 1)), 2) == 2
    for r in range(6):
        for k in range(5):
            assert ssyt_count(SkewShape((1,) * k), r) == comb(r, k)
            if r:
                assert ssyt_count(SkewShape((k,)), r) == comb(k + r - 1, k)
    assert ssyt_count(SkewShape((2, 1)), 0) == 0


def test_lr_examples():
    assert lr_coefficient((1, 1), (1, 1), (2, 2)) == 1
    assert lr_coefficient((), (3, 1), (3, 1)) == 1
    assert lr_coefficient((2, 1), (2, 1), (3, 2, 1)) == 2
    assert lr_coefficient((1,), (1,), (3,)) == 0
    assert lr_coefficient((2,), (1,), (1, 1, 1)) == 0


def test_skew_decomposition_examples():
    assert skew_decomposition(SkewShape((3, 2, 1), (1,))) == \
        [(2, 2, 1), (3, 1, 1), (3, 2)]
    assert skew_decomposition(SkewShape((2, 2, 1, 1), (1, 1))) == \
        [(1, 1, 1, 1), (2, 1, 1), (2, 2)]
    assert skew_decomposition(SkewShape((4, 2))) == [(4, 2)]


# oracles

def test_ssyt_against_brute_force():
    for N in range(6):
        for lam in partitions_of(N):
            for mu in subpartitions(lam):
                shape = SkewShape(lam, mu)
                for r in range(4):
                    assert ssyt_count(shape, r) == brute_ssyt(shape, r), (shape, r)


def test_ssyt_against_hook_content():
    for N in range(9):
        for lam in partitions_of(N):
            for r in range(6):
                assert ssyt_count(SkewShape(lam), r) == hook_content(lam, r)


def test_lr_against_polynomial_products():
    for a in range(4):
        for b in range(4):
            n = a + b
            for mu in partitions_of(a):
                for tau in partitions_of(b):
                    f = poly_mul(schur_poly(mu, n), schur_poly(tau, n))
                    assert schur_expand(f, n) == lr_product(mu, tau), (mu, tau)


# properties

@given(partition_st)
def test_conjugate_involution(lam):
    assert conjugate(conjugate(lam)) == lam
    assert conjugate(lam).size == lam.size


@given(partition_st, partition_st)
@settings(max_examples=60, deadline=None)
def test_lr_symmetries(mu, tau):
    for lam in lr_product(mu, tau):
        c = lr_coefficient(mu, tau, lam)
        assert lr_coefficient(tau, mu, lam) == c
        assert lr_coefficient(conjugate(mu), conjugate(tau), conjugate(lam)) == c


@given(partition_st, st.integers(0, 4))
@settings(max_examples=60, deadline=None)
def test_skew_decomposition_rank(lam, r):
    for mu in subpartitions(lam):
        shape = SkewShape(lam, mu)
        taus = skew_decomposition(shape)
        assert taus == sorted(taus)
        assert sum(ssyt_count(SkewShape(t), r) for t in taus) == ssyt_count(shape, r)


def test_partitions_of_counts():
    assert [len(partitions_of(n)) for n in range(10)] == [1, 1, 2, 3, 5, 7, 11, 15, 22, 30]
    assert partitions_of(4) == sorted(partitions_of(4))


def test_json_roundtrip():
    s = SkewShape((3, 2, 1), (1,))
    assert SkewShape.from_json(s.to_json()) == s
    assert SkewShape.parse(str(s)) == s
