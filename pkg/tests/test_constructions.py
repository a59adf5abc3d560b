# -*- coding: utf-8 -*-
"""Tests for the builders of orders and Artinian rings."""

from __future__ import unicode_literals

import pytest

from ringrank.constructions import (
    build_axs,
    build_cor43,
    build_cor43_semigroup,
    build_cyclic,
    build_matson,
    build_monomial_algebra,
    build_poly_quotient,
    build_pullback,
    build_semigroup_trunc,
    build_trunc_poly,
    build_trunc_poly_over,
    witness_mn1,
    witness_mn1_over,
)
from ringrank.errors import (
    BadDegree,
    DegreeOne,
    InputError,
    InvalidTable,
    NotMonic,
    NotPrime,
    RamifiedPrime,
    SplitPrime,
    TruncationTooShort,
    UnitOrZeroX,
)
from ringrank.finring import (
    length,
    maximal_ideals,
    mu_exhaustive,
    mu_fin,
    rank_fin_exhaustive,
)
from ringrank.orders import order_from_poly


@pytest.fixture
def gaussian():
    return order_from_poly([1, 0, 1])


def test_axs(gaussian):
    """Test the index of Z + xS and the rejected values of x."""
    assert build_axs(gaussian, 3).index == 3
    assert build_axs(gaussian, -4).index == 4
    assert build_axs(order_from_poly([-2, 0, 0, 1]), 6).index == 36
    for x in (0, 1, -1):
        with pytest.raises(UnitOrZeroX):
            build_axs(gaussian, x)


def test_matson():
    """Test Z + 2Z[2^(1/n)] and its degree check."""
    embedded = build_matson(3)
    assert embedded.order.degree == 3
    assert embedded.index == 4
    with pytest.raises(BadDegree):
        build_matson(1)


def test_pullback(gaussian):
    """Test pullbacks of prime fields along inert primes."""
    assert build_pullback(gaussian, [3]).lattice == (
        build_axs(gaussian, 3).lattice
    )
    assert build_pullback(gaussian, [3, 7]).index == 21


def test_pullback_errors(gaussian):
    """Test that split, degree-one and ramified primes are refused."""
    with pytest.raises(SplitPrime):
        build_pullback(gaussian, [5])
    with pytest.raises(DegreeOne):
        build_pullback(gaussian, [2])
    with pytest.raises(NotPrime):
        build_pullback(gaussian, [9])
    with pytest.raises(InputError):
        build_pullback(gaussian, [])
    with pytest.raises(InputError):
        build_pullback(gaussian, [3, 3])
    # x^4 + 2x^2 + 4 is (x^2 + 1)^2 modulo 3.
    squared = order_from_poly([4, 0, 2, 0, 1])
    with pytest.raises(RamifiedPrime):
        build_pullback(squared, [3])


@pytest.mark.parametrize("n", [2, 3])
def test_cor43(n):
    """Test that R/P^2 for the rank-n order has rank n and length n + 1."""
    ring = build_cor43(n)
    assert ring.size == 2 ** (n + 1)
    assert length(ring) == n + 1
    assert rank_fin_exhaustive(ring) == n
    (maximal,) = maximal_ideals(ring)
    assert mu_fin(ring, maximal.ideal) == n


def test_trunc_poly():
    """Test (Z/4)[t]/(t^2) built directly and over a base ring."""
    ring = build_trunc_poly(2, 2, 2)
    assert ring.size == 16
    assert ring.mul(ring.basis_vector(1), ring.basis_vector(1)) == (0, 0)
    assert rank_fin_exhaustive(ring) == 2
    over = build_trunc_poly_over(build_cyclic(4), 2)
    assert over.size == 16
    assert length(over) == length(ring) == 4
    assert rank_fin_exhaustive(over) == 2
    with pytest.raises(NotPrime):
        build_trunc_poly(4, 1, 2)


@pytest.mark.parametrize("p, n", [(2, 1), (2, 2), (2, 3), (3, 2)])
def test_witness_stable_in_truncation(p, n):
    """Test that m^(n-1) needs n generators for every long truncation."""
    for degree in range(n + 1, n + 4):
        witness, mu = witness_mn1(p, n, degree)
        assert mu == n
        assert not witness.is_zero()


def test_witness_errors():
    """Test that short truncations and composite moduli are refused."""
    with pytest.raises(TruncationTooShort):
        witness_mn1(2, 3, 3)
    with pytest.raises(NotPrime):
        witness_mn1(4, 1, 2)
    with pytest.raises(TruncationTooShort):
        witness_mn1_over(build_cyclic(4), (2,), 2)


def test_witness_over_base():
    """Test the witness over Z/4 and over the principal ring F_2[s]/(s^3)."""
    _, mu = witness_mn1_over(build_cyclic(4), (2,), 3)
    assert mu == 2
    base = build_trunc_poly(2, 1, 3)
    _, mu = witness_mn1_over(base, base.basis_vector(1), 4)
    assert mu == 3


@pytest.mark.parametrize("n", [2, 3])
def test_semigroup_trunc(n):
    """Test that the maximal ideal of F_2 + t^n F_2[t] needs n generators."""
    ring = build_semigroup_trunc(2, n, 2 * n + 1)
    (maximal,) = maximal_ideals(ring)
    assert mu_fin(ring, maximal.ideal) == n
    assert mu_exhaustive(ring, maximal.ideal) == n
    quotient = build_cor43_semigroup(2, n)
    assert quotient.size == 2 ** (n + 1)
    assert length(quotient) == n + 1
    assert rank_fin_exhaustive(quotient) == n


def test_semigroup_errors():
    """Test the degree checks of the semigroup ring."""
    with pytest.raises(TruncationTooShort):
        build_semigroup_trunc(2, 3, 5)
    with pytest.raises(BadDegree):
        build_semigroup_trunc(2, 1, 5)


def test_monomial_algebra():
    """Test monomial algebras and their closure check."""
    ring = build_monomial_algebra(3, [(0, 0), (1, 0), (0, 1)])
    assert ring.size == 27
    assert rank_fin_exhaustive(ring) == 2
    with pytest.raises(InvalidTable):
        build_monomial_algebra(2, [(0, 0), (2, 0)])
    with pytest.raises(InvalidTable):
        build_monomial_algebra(2, [])


def test_poly_quotient():
    """Test fields and Galois rings as polynomial quotients."""
    assert build_poly_quotient(2, [1, 1, 1]).is_field()
    galois = build_poly_quotient(4, [1, 1, 1])
    assert not galois.is_field()
    assert length(galois) == 2
    assert rank_fin_exhaustive(galois) == 1
    assert build_poly_quotient(1, [1, 1]).is_zero_ring()
    with pytest.raises(NotMonic):
        build_poly_quotient(2, [1, 2])


def test_cyclic():
    """Test Z/m, with Z/1 the zero ring."""
    assert build_cyclic(9).divisors == (9,)
    assert build_cyclic(1).is_zero_ring()
    with pytest.raises(ValueError):
        build_cyclic(0)
