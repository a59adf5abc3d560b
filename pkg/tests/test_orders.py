# -*- coding: utf-8 -*-
"""Tests for orders, suborders, ideals and conductors."""

from __future__ import unicode_literals

import itertools
import math

from hypothesis import assume, given, settings, strategies
import pytest

from ringrank.constructions import build_axs, build_matson
from ringrank.errors import (
    BadDegree,
    DimensionMismatch,
    InvalidTable,
    InvariantViolation,
    MissingIdentity,
    NotClosed,
    NotMonic,
    OwnerMismatch,
    ZeroIdeal,
)
from ringrank.latcore import Lattice, lat_intersect
from ringrank.orders import (
    OrderIdeal,
    PrimeSpot,
    conductor,
    elt_mul,
    ideal_from_gens,
    ideal_mul,
    ideal_norm,
    ideal_pow,
    ideal_sum,
    order_from_poly,
    order_from_table,
    prime_spot,
    suborder_from_lattice,
    unit_ideal,
)


@pytest.fixture
def sqrt2():
    return order_from_poly([-2, 0, 1])


@pytest.fixture
def gaussian():
    return order_from_poly([1, 0, 1])


SAMPLE_ORDERS = (
    order_from_poly([1, 0, 1]),
    order_from_poly([3, 0, 1]),
    build_matson(2).order,
)


@strategies.composite
def ideals(draw, order):
    n = order.degree
    gens = draw(
        strategies.lists(
            strategies.lists(
                strategies.integers(-6, 6), min_size=n, max_size=n
            ).filter(any),
            min_size=1,
            max_size=2,
        )
    )
    return ideal_from_gens(order, gens)


@strategies.composite
def ideal_triples(draw):
    order = draw(strategies.sampled_from(SAMPLE_ORDERS))
    return tuple(draw(ideals(order)) for _ in range(3))


def _assert_conductor_maximal(embedded, cond, radius=2):
    """Check that adding any nearby element to c leaves the suborder."""
    ambient = embedded.ambient
    assert cond.in_ambient.lat <= embedded.lattice
    box = range(-radius, radius + 1)
    for vector in itertools.product(box, repeat=ambient.degree):
        if vector in cond.in_ambient:
            continue
        larger = ideal_sum(cond.in_ambient, ideal_from_gens(ambient, [vector]))
        assert not larger.lat <= embedded.lattice


def test_order_from_poly(sqrt2):
    """Test the power basis table of Z[x]/(f)."""
    assert sqrt2.degree == 2
    assert sqrt2.one == (1, 0)
    assert elt_mul(sqrt2, (0, 1), (0, 1)) == (2, 0)
    cube = order_from_poly([-2, 0, 0, 1])
    assert cube.mul((0, 0, 1), (0, 0, 1)) == (0, 2, 0)
    assert cube.power((0, 1, 0), 3) == (2, 0, 0)
    with pytest.raises(NotMonic):
        order_from_poly([1, 2])
    with pytest.raises(BadDegree):
        order_from_poly([1])
    with pytest.raises(DimensionMismatch):
        sqrt2.mul((1, 0, 0), (1, 0))


def test_order_from_table(sqrt2):
    """Test that explicit tables are validated."""
    assert order_from_table(sqrt2.table) == sqrt2
    with pytest.raises(InvalidTable):
        order_from_table([[(0, 1), (0, 1)], [(0, 1), (2, 0)]])
    with pytest.raises(InvalidTable):
        order_from_table([[(1, 0), (0, 1)], [(0, 1)]])


def test_suborder_from_lattice(sqrt2):
    """Test the suborder Z + 2Z[sqrt 2]."""
    embedded = suborder_from_lattice(
        sqrt2, Lattice.span([(1, 0), (0, 2)], 2)
    )
    assert embedded.index == 2
    assert embedded.order.mul((0, 1), (0, 1)) == (8, 0)
    assert embedded.to_ambient((0, 1)) == (0, 2)
    assert embedded.from_ambient((3, 4)) == (3, 2)
    with pytest.raises(MissingIdentity):
        suborder_from_lattice(sqrt2, Lattice.scaled_standard(2, 2))


def test_suborder_not_closed():
    """Test that a lattice not closed under products is rejected."""
    cube = order_from_poly([-2, 0, 0, 1])
    with pytest.raises(NotClosed):
        suborder_from_lattice(
            cube, Lattice.span([(1, 0, 0), (0, 1, 0), (0, 0, 2)], 3)
        )


def test_ideal_arithmetic(gaussian):
    """Test sums, products and powers of ideals of Z[i]."""
    three = ideal_from_gens(gaussian, [(3, 0)])
    assert three.norm == 9
    assert ideal_norm(three) == 9
    assert (3, 3) in three
    assert (1, 0) not in three
    one_plus_i = ideal_from_gens(gaussian, [(1, 1)])
    assert one_plus_i.norm == 2
    assert ideal_pow(one_plus_i, 2) == ideal_from_gens(gaussian, [(2, 0)])
    assert ideal_pow(three, 0) == unit_ideal(gaussian)
    assert ideal_mul(three, one_plus_i).norm == 18
    assert ideal_sum(three, one_plus_i).is_unit()
    assert three <= unit_ideal(gaussian)
    with pytest.raises(ZeroIdeal):
        ideal_from_gens(gaussian, [(0, 0)])
    with pytest.raises(ValueError):
        ideal_pow(three, -1)


def test_ideal_owner_checks(gaussian, sqrt2):
    """Test that ideals of different orders do not combine."""
    with pytest.raises(OwnerMismatch):
        ideal_sum(unit_ideal(gaussian), unit_ideal(sqrt2))
    with pytest.raises(OwnerMismatch):
        ideal_mul(
            ideal_from_gens(gaussian, [(2, 0)]),
            ideal_from_gens(sqrt2, [(2, 0)]),
        )
    with pytest.raises(NotClosed):
        OrderIdeal(gaussian, Lattice.span([(1, 0), (0, 2)], 2))


def test_prime_spot(gaussian):
    """Test the residue data of maximal ideals."""
    spot = prime_spot(ideal_from_gens(gaussian, [(3, 0)]))
    assert (spot.p, spot.f, spot.residue_size) == (3, 2, 9)
    with pytest.raises(InvariantViolation):
        prime_spot(ideal_from_gens(gaussian, [(5, 0)]))
    with pytest.raises(InvariantViolation):
        prime_spot(ideal_from_gens(gaussian, [(6, 0)]))
    with pytest.raises(InvariantViolation):
        PrimeSpot(ideal=ideal_from_gens(gaussian, [(3, 0)]), p=3, f=1)


def test_conductor_matson():
    """Test the conductor 2S of Z + 2Z[sqrt 2]."""
    embedded = build_matson(2)
    cond = conductor(embedded)
    assert cond.index == 2
    assert not cond.is_unit()
    assert cond.in_ambient == ideal_from_gens(embedded.ambient, [(2, 0)])
    assert cond.in_order.norm == 2


def test_conductor_of_gaussian_suborder(gaussian):
    """Test the conductor of Z + 3Z[i] and of Z[i] in itself."""
    cond = conductor(build_axs(gaussian, 3))
    assert cond.in_ambient == ideal_from_gens(gaussian, [(3, 0)])
    assert cond.index == 3
    whole = suborder_from_lattice(gaussian, gaussian.full_lattice())
    assert conductor(whole).is_unit()
    with pytest.raises(OwnerMismatch):
        conductor(whole, order_from_poly([-2, 0, 1]))


def test_conductor_of_eisenstein_suborder():
    """Test that Z[sqrt -3] has conductor 2S in Z[(1 + sqrt -3)/2]."""
    eisenstein = order_from_poly([1, -1, 1])
    embedded = suborder_from_lattice(
        eisenstein, Lattice.span([(1, 0), (-1, 2)], 2)
    )
    assert embedded.index == 2
    assert embedded.lattice == build_axs(eisenstein, 2).lattice
    assert embedded.order.mul((0, 1), (0, 1)) == (-4, 2)
    cond = conductor(embedded)
    assert cond.in_ambient == ideal_from_gens(eisenstein, [(2, 0)])
    assert cond.index == 2
    assert cond.in_order.norm == 2
    _assert_conductor_maximal(embedded, cond)


def test_conductor_maximal_for_known_orders(gaussian):
    """Test that no larger S-ideal fits inside the suborder."""
    for embedded in (build_matson(2), build_matson(3), build_axs(gaussian, 3)):
        _assert_conductor_maximal(embedded, conductor(embedded))


@settings(max_examples=60, deadline=None)
@given(
    strategies.sampled_from([-6, -4, -3, -2, 2, 3, 4, 5, 6]),
    strategies.lists(strategies.integers(-4, 4), min_size=2, max_size=2),
)
def test_conductor_of_axs_is_maximal(x, vector):
    """Test that xS is the largest S-ideal inside Z + xS."""
    gaussian = order_from_poly([1, 0, 1])
    embedded = build_axs(gaussian, x)
    cond = conductor(embedded)
    assert cond.in_ambient == ideal_from_gens(gaussian, [(abs(x), 0)])
    assert cond.in_ambient.lat <= embedded.lattice
    vector = tuple(vector)
    assume(vector not in cond.in_ambient)
    larger = ideal_sum(cond.in_ambient, ideal_from_gens(gaussian, [vector]))
    assert not larger.lat <= embedded.lattice


@settings(max_examples=100, deadline=None)
@given(ideal_triples())
def test_ideal_mul_commutative_and_associative(triple):
    """Test IJ = JI and (IJ)K = I(JK)."""
    first, second, third = triple
    assert ideal_mul(first, second) == ideal_mul(second, first)
    assert ideal_mul(ideal_mul(first, second), third) == ideal_mul(
        first, ideal_mul(second, third)
    )


@settings(max_examples=100, deadline=None)
@given(ideal_triples())
def test_product_inside_intersection(triple):
    """Test that IJ lies in the intersection of I and J."""
    first, second, _ = triple
    product = ideal_mul(first, second)
    assert product.lat <= lat_intersect(first.lat, second.lat)
    assert product <= first and product <= second


@settings(max_examples=100, deadline=None)
@given(ideal_triples())
def test_norm_multiplicative_for_coprime_ideals(triple):
    """Test N(IJ) = N(I)N(J) when the norms are coprime."""
    first, second, _ = triple
    assume(math.gcd(first.norm, second.norm) == 1)
    product = ideal_mul(first, second)
    assert product.norm == first.norm * second.norm
    assert ideal_sum(first, second).is_unit()
    assert product.lat == lat_intersect(first.lat, second.lat)


@settings(max_examples=100, deadline=None)
@given(ideal_triples())
def test_adding_members_keeps_the_ideal(triple):
    """Test that generators already in an ideal do not enlarge it."""
    first, second, _ = triple
    order = first.owner
    member = order.mul(first.generators[0], second.generators[-1])
    assert ideal_from_gens(order, first.generators) == first
    assert ideal_from_gens(order, first.generators + (member,)) == first
    assert ideal_from_gens(order, [member] + list(first.generators)) == first
