from math import comb, factorial

import pytest
import sympy

from schurkit.exact_linalg import ExactMatrix, determinant
from schurkit.multilinear import (DIVIDED, EXTERIOR, KINDS, SYMMETRIC, PowerSpace, alpha_beta,
                                  comultiplication, divided_pairing, gram_matrix,
                                  identity_map, is_antidiagonal, multiplication, tensor_maps)


def pairing_oracle(d):
    """B(e^(a) (x) e^(b)) is the coefficient of s^a t^b in (s1 t2 - s2 t1)^d:
    evaluate on the generating series v^(d), w^(d) with v = s1 e1 + s2 e2."""
    s1, s2, t1, t2 = sympy.symbols("s1 s2 t1 t2")
    poly = sympy.Poly(sympy.expand((s1 * t2 - s2 * t1) ** d), s1, s2, t1, t2)
    basis = [(d - i, i) for i in range(d + 1)]
    basis.sort()
    G = [[int(poly.coeff_monomial(s1 ** a[0] * s2 ** a[1] * t1 ** b[0] * t2 ** b[1]))
          for b in basis] for a in basis]
    return ExactMatrix(G, d + 1, d + 1)


# examples

def test_comultiplication_examples():
    D = comultiplication(EXTERIOR, 2, 1, 1)
    assert D.image((1, 2)) == {((1,), (2,)): 1, ((2,), (1,)): -1}
    # divided, r=1: e^(2) -> e^(2) (x) 1 + e (x) e + 1 (x) e^(2)
    assert comultiplication(DIVIDED, 1, 2, 0).image((2,)) == {((2,), (0,)): 1}
    assert comultiplication(DIVIDED, 1, 1, 1).image((2,)) == {((1,), (1,)): 1}
    assert comultiplication(DIVIDED, 1, 0, 2).image((2,)) == {((0,), (2,)): 1}
    assert comultiplication(SYMMETRIC, 1, 1, 1).image((2,)) == {((1,), (1,)): 2}
    assert comultiplication(SYMMETRIC, 1, 2, 0).image((2,)) == {((2,), (0,)): 1}


def test_multiplication_examples():
    assert multiplication(EXTERIOR, 1, 1, 1).image(((1,), (1,))) == {}
    assert multiplication(DIVIDED, 1, 1, 1).image(((1,), (1,))) == {(2,): 2}
    assert multiplication(SYMMETRIC, 1, 1, 1).image(((1,), (1,))) == {(2,): 1}


def test_alpha_beta_examples():
    a, b = alpha_beta(1, 3)
    assert a.matrix == ExactMatrix.identity(3) == b.matrix
    a, b = alpha_beta(2, 1)
    assert (b @ a).image((2,)) == {(2,): 2}
    a, b = alpha_beta(3, 2)
    assert (b.matrix @ a.matrix) == ExactMatrix.identity(4) * 6


def test_pairing_examples():
    B1 = divided_pairing(1)
    # basis of Gamma^1(Z^2) is (0,1) = e2, (1,0) = e1
    assert B1.image(((1, 0), (0, 1))) == {(1,): 1}
    assert B1.image(((1, 0), (1, 0))) == {}
    assert gram_matrix(0) == ExactMatrix([[1]])


def test_pairing_d2_unimodular():
    # expected unimodular; the middle entry comes out as C(2,1) = 2
    G = gram_matrix(2)
    assert is_antidiagonal(G)
    assert abs(determinant(G)) == 1


# identities

@pytest.mark.parametrize("kind", KINDS)
def test_mult_after_comult_is_binomial(kind):
    for r in range(4):
        for p in range(4):
            for q in range(4):
                m = multiplication(kind, r, p, q)
                D = comultiplication(kind, r, p, q)
                n = PowerSpace(kind, r, p + q).dim
                assert m.matrix @ D.matrix == ExactMatrix.identity(n) * comb(p + q, p)


@pytest.mark.parametrize("kind", KINDS)
def test_coassociativity(kind):
    for r in range(1, 4):
        for p, q, s in [(1, 1, 1), (2, 1, 1), (1, 2, 1), (0, 2, 1), (2, 2, 1)]:
            left = tensor_maps(comultiplication(kind, r, p, q),
                               identity_map(PowerSpace(kind, r, s))) @ \
                comultiplication(kind, r, p + q, s)
            right = tensor_maps(identity_map(PowerSpace(kind, r, p)),
                                comultiplication(kind, r, q, s)) @ \
                comultiplication(kind, r, p, q + s)
            assert left.matrix == right.matrix


@pytest.mark.parametrize("kind", KINDS)
def test_associativity(kind):
    for r in range(1, 4):
        for p, q, s in [(1, 1, 1), (2, 1, 1), (1, 0, 2)]:
            left = multiplication(kind, r, p + q, s) @ \
                tensor_maps(multiplication(kind, r, p, q), identity_map(PowerSpace(kind, r, s)))
            right = multiplication(kind, r, p, q + s) @ \
                tensor_maps(identity_map(PowerSpace(kind, r, p)), multiplication(kind, r, q, s))
            assert left.matrix == right.matrix


def test_ranks():
    for r in range(5):
        for n in range(5):
            assert PowerSpace(EXTERIOR, r, n).dim == comb(r, n)
            if r:
                assert PowerSpace(SYMMETRIC, r, n).dim == comb(r + n - 1, n)
                assert PowerSpace(DIVIDED, r, n).dim == comb(r + n - 1, n)


def test_alpha_beta_factorial():
    for d in range(6):
        for r in range(4):
            a, b = alpha_beta(d, r)
            n = a.source.dim
            I = ExactMatrix.identity(n) * factorial(d)
            assert b.matrix @ a.matrix == I
            assert a.matrix @ b.matrix == I


def test_gram_against_generating_series():
    for d in range(8):
        assert gram_matrix(d) == pairing_oracle(d)


def test_gram_antidiagonal_and_rationally_perfect():
    for d in range(7):
        G = gram_matrix(d)
        assert is_antidiagonal(G)
        assert abs(determinant(G)) == \
            sympy.prod([comb(d, h) for h in range(d + 1)])
        assert determinant(G) != 0
