from itertools import permutations

from lrcommute.schur import (lr_coefficient, poly_add_scaled, poly_mul,
                             schur_polynomial, schur_product)
from lrcommute.tableaux import partitions_of

import pytest


def test_lr_coefficient_examples():
    assert lr_coefficient((3, 2, 1), (2, 1), (2, 1)) == 2
    for lam in partitions_of(4):
        for mu in partitions_of(4):
            assert lr_coefficient(lam, mu, ()) == (1 if lam == mu else 0)
    assert lr_coefficient((2,), (1,), (2,)) == 0  # size mismatch
    assert lr_coefficient((1, 1), (2,), (1,)) == 0  # not contained


def test_lr_coefficient_symmetric_small():
    for total in range(7):
        for a in range(total + 1):
            for mu in partitions_of(a):
                for nu in partitions_of(total - a):
                    for lam in partitions_of(total):
                        assert lr_coefficient(lam, mu, nu) == \
                            lr_coefficient(lam, nu, mu)


def test_schur_product_examples():
    assert schur_product((1,), (1,), 2) == {(2,): 1, (1, 1): 1}
    assert schur_product((), (2, 1), 3) == {(2, 1): 1}
    expansion = schur_product((2, 1), (2, 1), 4)
    assert expansion[(3, 2, 1)] == 2
    assert expansion[(2, 2, 1, 1)] == 1
    assert (4, 2) in expansion
    with pytest.raises(ValueError):
        schur_product((2, 1), (1,), 1)


def test_schur_polynomial_examples():
    assert schur_polynomial((1,), 2) == {(1, 0): 1, (0, 1): 1}
    assert schur_polynomial((1, 1), 2) == {(1, 1): 1}
    s21 = schur_polynomial((2, 1), 3)
    assert sum(s21.values()) == 8
    assert schur_polynomial((1, 1, 1), 2) == {}


def test_schur_polynomial_homogeneous_and_symmetric():
    for lam in ((2,), (2, 1), (3, 1), (2, 2)):
        poly = schur_polynomial(lam, 3)
        n = sum(lam)
        assert all(sum(e) == n for e in poly)
        for e, c in poly.items():
            for perm in permutations(e):
                assert poly.get(tuple(perm)) == c


def test_product_matches_polynomial_oracle_small():
    for a in range(5):
        for b in range(5 - a):
            n = max(1, a + b)
            for mu in partitions_of(a):
                for nu in partitions_of(b):
                    lhs = poly_mul(schur_polynomial(mu, n),
                                   schur_polynomial(nu, n))
                    rhs = {}
                    for lam, c in schur_product(mu, nu, n).items():
                        poly_add_scaled(rhs, schur_polynomial(lam, n), c)
                    assert lhs == rhs, (mu, nu)


def test_poly_mul_exact():
    p = {(1, 0): 2, (0, 1): -1}
    q = {(1, 0): 1, (0, 1): 1}
    assert poly_mul(p, q) == {(2, 0): 2, (1, 1): 1, (0, 2): -1}
    assert poly_mul(p, {}) == {}
