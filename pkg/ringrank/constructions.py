# -*- coding: utf-8 -*-
"""A module containing builders for the rings whose ranks are studied.

Orders are returned as EmbeddedOrder values inside their normalization, and
Artinian rings as FinRing values. Power series rings only appear through
truncations, and every truncated builder checks that the truncation degree
leaves the degrees it is used for untouched.

Functions:
    build_axs: Return the order Z + xS inside S.
    build_matson: Return Z + 2Z[2^(1/n)].
    build_pullback: Return the preimage in S of the prime subfields of S/P.
    build_cor43: Return R/P^2 for the order of build_matson.
    build_trunc_poly: Return (Z/p^n)[t]/(t^D).
    build_trunc_poly_over: Return base[t]/(t^D) for a finite base ring.
    witness_mn1: Return m^(n-1) in (Z/p^n)[t]/(t^D) and its generator count.
    witness_mn1_over: Return m^(n-1) for a principal local base ring.
    build_semigroup_trunc: Return F_p + t^n F_p[t] truncated at degree D.
    build_cor43_semigroup: Return the semigroup ring modulo m^2.
    build_cyclic: Return Z/m.
    build_monomial_algebra: Return F_p[x_1, ..., x_v] modulo monomials.
    build_poly_quotient: Return (Z/m)[x]/(f) for a monic f.
"""

from __future__ import absolute_import
from __future__ import unicode_literals

from typing import (  # noqa: F401 pylint: disable=unused-import
    List,
    Sequence,
    Tuple,
)
import logging

from .errors import (
    DegreeOne,
    InputError,
    InvalidTable,
    RamifiedPrime,
    SplitPrime,
    TruncationTooShort,
)
from .finring import (
    FinIdeal,
    FinRing,
    finring_quotient,
    ideal_power,
    length,
    maximal_ideals,
    mu_fin,
    present_finring,
    quotient_ring,
)
from .invariants import primes_above
from .latcore import Lattice, lat_intersect
from .orders import (
    EmbeddedOrder,
    Order,
    ideal_from_gens,
    ideal_pow,
    order_from_poly,
    suborder_from_lattice,
)
from .validation import Degree, NonUnitInteger, Positive, Prime


__all__ = (
    "build_axs",
    "build_matson",
    "build_pullback",
    "build_cor43",
    "build_trunc_poly",
    "build_trunc_poly_over",
    "witness_mn1",
    "witness_mn1_over",
    "build_semigroup_trunc",
    "build_cor43_semigroup",
    "build_cyclic",
    "build_monomial_algebra",
    "build_poly_quotient",
)

logger = logging.getLogger(__name__)


def build_axs(ambient, x):
    # type: (Order, int) -> EmbeddedOrder
    """Return the order R(S, x) = Z + xS.

    Its lattice in S is spanned by 1 and x*S, so it has the basis
    1, x*a_2, ..., x*a_N and index |x|^(N-1) in S.

    Args:
        ambient: The order S.
        x: An integer other than 0, 1 and -1.

    Raises:
        UnitOrZeroX: Raised when x is 0 or a unit.
    """
    x = NonUnitInteger(x)
    n = ambient.degree
    vectors = [ambient.one] + [
        tuple(x * c for c in ambient.basis_vector(i)) for i in range(n)
    ]
    return suborder_from_lattice(ambient, Lattice.span(vectors, n))


def build_matson(n):
    # type: (int) -> EmbeddedOrder
    """Return Z + 2Z[a] for a root a of x^n - 2, an order of rank n.

    Raises:
        BadDegree: Raised when n < 2.
    """
    n = Degree(n)
    return build_axs(order_from_poly([-2] + [0] * (n - 1) + [1]), 2)


def build_pullback(ambient, primes):
    # type: (Order, Sequence[int]) -> EmbeddedOrder
    """Return the preimage in S of the prime fields F_p inside S/P_p.

    Each p must be inert in S: pS is the only prime above p and its residue
    degree is at least 2. By the Chinese remainder theorem the preimage is
    Z + (P_1 n ... n P_r).

    Raises:
        NotPrime: Raised when some p is not prime.
        SplitPrime: Raised when several primes lie above some p.
        DegreeOne: Raised when the prime above p has residue degree 1.
        RamifiedPrime: Raised when the prime above p differs from pS.
    """
    primes = [Prime(p) for p in primes]
    if not primes:
        raise InputError("A pullback needs at least one prime.")
    if len(set(primes)) != len(primes):
        raise InputError("The primes {} are not distinct.".format(primes))
    n = ambient.degree
    common = ambient.full_lattice()
    for p in primes:
        spots = primes_above(ambient, p)
        if len(spots) > 1:
            raise SplitPrime(
                "{} primes lie above {}.".format(len(spots), p)
            )
        (spot,) = spots
        if spot.f == 1:
            raise DegreeOne(
                "The prime above {} has residue degree 1.".format(p)
            )
        if spot.ideal != ideal_from_gens(
            ambient, [tuple(p * c for c in ambient.one)]
        ):
            raise RamifiedPrime(
                "The prime above {} is not {}S.".format(p, p)
            )
        common = lat_intersect(common, spot.ideal.lat)
    return suborder_from_lattice(
        ambient, Lattice.span([ambient.one] + list(common.columns), n)
    )


def build_cor43(n):
    # type: (int) -> FinRing
    """Return R/P^2 for R = build_matson(n) and P the prime above 2.

    The ring has 2^(n+1) elements, length n + 1 and rank n.

    Raises:
        BadDegree: Raised when n < 2.
    """
    order = build_matson(n).order
    (spot,) = primes_above(order, 2)
    ring, _ = quotient_ring(order, ideal_pow(spot.ideal, 2))
    return ring


def build_trunc_poly(p, n, degree):
    # type: (int, int, int) -> FinRing
    """Return (Z/p^n)[t]/(t^D) with basis 1, t, ..., t^(D-1).

    >>> build_trunc_poly(2, 2, 3).size
    64

    Raises:
        NotPrime: Raised when p is not prime.
    """
    p = Prime(p)
    n = Positive(n)
    degree = Positive(degree)
    modulus = p ** n
    return FinRing(
        (modulus,) * degree,
        [
            [
                tuple(int(k == i + j) for k in range(degree))
                for j in range(degree)
            ]
            for i in range(degree)
        ],
        tuple(int(k == 0) for k in range(degree)),
    )


def _trunc_poly_over(base, degree):
    # type: (FinRing, int) -> Tuple[FinRing, object]
    """Return base[t]/(t^D) with the map from raw coordinates onto it.

    The raw coordinate of g_a * t^i has index i * k + a.
    """
    degree = Positive(degree)
    k = base.k
    size = k * degree
    table = [[(0,) * size for _ in range(size)] for _ in range(size)]
    for i in range(degree):
        for j in range(degree - i):
            for a in range(k):
                for b in range(k):
                    entry = [0] * size
                    offset = (i + j) * k
                    entry[offset:offset + k] = base.table[a][b]
                    table[i * k + a][j * k + b] = tuple(entry)
    one = tuple(base.one) + (0,) * (size - k)
    return present_finring(base.divisors * degree, table, one)


def build_trunc_poly_over(base, degree):
    # type: (FinRing, int) -> FinRing
    """Return base[t]/(t^D) for a finite ring base."""
    ring, _ = _trunc_poly_over(base, degree)
    return ring


def witness_mn1(p, n, degree):
    # type: (int, int, int) -> Tuple[FinIdeal, int]
    """Return m^(n-1) for m = (p, t) in (Z/p^n)[t]/(t^D) and its mu.

    The ideal m^(n-1) = (p^(n-1), p^(n-2) t, ..., t^(n-1)) needs n
    generators.

    Raises:
        TruncationTooShort: Raised when D <= n.
    """
    if degree <= n:
        raise TruncationTooShort(
            "The truncation degree {} must exceed n = {}.".format(degree, n)
        )
    ring = build_trunc_poly(p, n, degree)
    maximal = ring.ideal([ring.scale(p, ring.one), ring.basis_vector(1)])
    witness = ideal_power(maximal, n - 1)
    return witness, mu_fin(ring, witness)


def witness_mn1_over(base, uniformizer, degree):
    # type: (FinRing, Sequence[int], int) -> Tuple[FinIdeal, int]
    """Return m^(n-1) for m = (pi, t) in base[t]/(t^D) and its mu.

    The base must be a local principal ring of length n whose maximal
    ideal is generated by pi; then m^(n-1) needs n generators.

    Raises:
        TruncationTooShort: Raised when D <= n.
    """
    n = length(base)
    if degree <= n:
        raise TruncationTooShort(
            "The truncation degree {} must exceed the base length {}.".format(
                degree, n
            )
        )
    ring, projection = _trunc_poly_over(base, degree)
    k = base.k
    pi = tuple(uniformizer) + (0,) * (k * (degree - 1))
    t = (0,) * k + tuple(base.one) + (0,) * (k * (degree - 2))
    maximal = ring.ideal([projection(pi), projection(t)])
    witness = ideal_power(maximal, n - 1)
    return witness, mu_fin(ring, witness)


def build_semigroup_trunc(p, n, degree):
    # type: (int, int, int) -> FinRing
    """Return F_p + t^n F_p[t]/(t^D) with basis 1, t^n, ..., t^(D-1).

    Its maximal ideal m = (t^n, ..., t^(2n-1)) needs n generators.

    Raises:
        NotPrime: Raised when p is not prime.
        BadDegree: Raised when n < 2.
        TruncationTooShort: Raised when D < 2n + 1.
    """
    p = Prime(p)
    n = Degree(n)
    if degree < 2 * n + 1:
        raise TruncationTooShort(
            "The truncation degree {} must be at least 2n + 1 = {}.".format(
                degree, 2 * n + 1
            )
        )
    exponents = [0] + list(range(n, degree))
    index = {e: i for i, e in enumerate(exponents)}
    k = len(exponents)

    def monomial(exponent):
        # Exponents at or past D vanish in the truncation.
        return tuple(int(index.get(exponent) == i) for i in range(k))

    table = [[monomial(a + b) for b in exponents] for a in exponents]
    return FinRing((p,) * k, table, monomial(0))


def build_cor43_semigroup(p, n):
    # type: (int, int) -> FinRing
    """Return (F_p + t^n F_p[t]) / m^2, of rank n and length n + 1."""
    ring = build_semigroup_trunc(p, n, 2 * Degree(n) + 1)
    (maximal,) = maximal_ideals(ring)
    quotient, _ = finring_quotient(ring, ideal_power(maximal.ideal, 2))
    return quotient


def build_cyclic(modulus):
    # type: (int) -> FinRing
    """Return Z/m; Z/1 is the zero ring."""
    modulus = Positive(modulus)
    if modulus == 1:
        return FinRing((), (), ())
    return FinRing((modulus,), [[(1,)]], (1,))


def build_monomial_algebra(p, monomials):
    # type: (int, Sequence[Sequence[int]]) -> FinRing
    """Return F_p[x_1, ..., x_v] modulo a monomial ideal.

    Args:
        p: The characteristic.
        monomials: The exponent vectors of the standard monomials, which
            must be closed under division.

    >>> build_monomial_algebra(2, [(0, 0), (1, 0), (0, 1)]).size
    8

    Raises:
        InvalidTable: Raised when the monomials are not closed under
            division.
    """
    p = Prime(p)
    basis = sorted({tuple(int(e) for e in m) for m in monomials})
    index = {m: i for i, m in enumerate(basis)}
    for m in basis:
        for v in range(len(m)):
            if m[v] and m[:v] + (m[v] - 1,) + m[v + 1:] not in index:
                raise InvalidTable(
                    "The standard monomials are not closed under division "
                    "at {}.".format(m)
                )
    k = len(basis)
    zero = (0,) * len(basis[0]) if basis else ()
    if zero not in index:
        raise InvalidTable("The standard monomials must contain 1.")

    def monomial(exponents):
        return tuple(int(index.get(exponents) == i) for i in range(k))

    table = [
        [monomial(tuple(x + y for x, y in zip(a, b))) for b in basis]
        for a in basis
    ]
    return FinRing((p,) * k, table, monomial(zero))


def build_poly_quotient(modulus, coeffs):
    # type: (int, Sequence[int]) -> FinRing
    """Return (Z/m)[x]/(f) for a monic f given lowest coefficient first.

    >>> build_poly_quotient(2, [1, 1, 1]).is_field()
    True

    Raises:
        NotMonic: Raised when f is not monic.
    """
    modulus = Positive(modulus)
    order = order_from_poly(coeffs)
    if modulus == 1:
        return FinRing((), (), ())
    return FinRing((modulus,) * order.degree, order.table, order.one)
