# -*- coding: utf-8 -*-
"""Tests that cross-check the structural algorithms against brute force."""

from __future__ import unicode_literals

import itertools

from hypothesis import given, settings, strategies
import pytest
from sympy import primefactors

from ringrank.constructions import build_cyclic, build_monomial_algebra
from ringrank.corpus import finite_corpus, order_corpus
from ringrank.demo import (
    DERIVED,
    Check,
    CheckOutcome,
    catalog,
    format_outcome,
    run_check,
    run_checks,
    select_checks,
)
from ringrank.errors import ZeroRing
from ringrank.finring import (
    ELEMENTWISE,
    IDEALWISE,
    enumerate_ideals,
    finring_product,
    finring_quotient,
    length,
    maximal_ideals,
    mu_exhaustive,
    mu_fin,
    nilpotency_index,
    rank_fin_exhaustive,
)
from ringrank.invariants import rank_order, tangent_dimension


SMALL = finite_corpus(64)


def _names(entries):
    return [entry.name for entry in entries]


@strategies.composite
def monomial_algebras(draw):
    """Draw F_p modulo a monomial ideal in two variables, at most 64 long."""
    p = draw(strategies.sampled_from([2, 3]))
    corners = draw(
        strategies.lists(
            strategies.tuples(
                strategies.integers(0, 2), strategies.integers(0, 1)
            ),
            min_size=1,
            max_size=3,
        )
    )
    monomials = {
        (a, b)
        for x, y in corners
        for a, b in itertools.product(range(x + 1), range(y + 1))
    }
    if p == 3:
        monomials = {m for m in monomials if m[0] + m[1] <= 1}
    return build_monomial_algebra(p, sorted(monomials))


def test_corpus_shape():
    """Test that the corpus is large, named uniquely and capped."""
    entries = finite_corpus()
    assert len(entries) >= 20
    assert len(set(_names(entries))) == len(entries)
    assert all(entry.ring.size <= 512 for entry in entries)
    assert len(finite_corpus(8)) < len(entries)
    assert len(order_corpus()) >= 6


@pytest.mark.parametrize("entry", SMALL, ids=_names(SMALL))
def test_nakayama_matches_search(entry):
    """Test mu_fin against the exhaustive search on every ideal."""
    ring = entry.ring
    for ideal in enumerate_ideals(ring):
        assert mu_fin(ring, ideal) == mu_exhaustive(ring, ideal)


@pytest.mark.parametrize("entry", SMALL, ids=_names(SMALL))
def test_rank_below_length(entry):
    """Test rk(R) <= length(R) - 1 for rings other than fields."""
    ring = entry.ring
    if ring.is_field():
        assert rank_fin_exhaustive(ring) == 1
    else:
        assert rank_fin_exhaustive(ring) <= length(ring) - 1


@pytest.mark.parametrize("entry", SMALL, ids=_names(SMALL))
def test_quotients_do_not_raise_rank(entry):
    """Test rk(R/I) <= rk(R) for every ideal I."""
    ring = entry.ring
    rank = rank_fin_exhaustive(ring)
    for ideal in enumerate_ideals(ring):
        quotient, _ = finring_quotient(ring, ideal)
        assert rank_fin_exhaustive(quotient) <= rank


@pytest.mark.parametrize("entry", SMALL, ids=_names(SMALL))
def test_nilpotency_chain(entry):
    """Test elementwise <= idealwise <= length for the nilradical."""
    ring = entry.ring
    elementwise = nilpotency_index(ring, ELEMENTWISE)
    idealwise = nilpotency_index(ring, IDEALWISE)
    assert elementwise <= idealwise <= length(ring)


@pytest.mark.parametrize(
    "first, second",
    [
        (a, b)
        for a, b in itertools.combinations_with_replacement(SMALL, 2)
        if a.ring.size * b.ring.size <= 64
    ],
)
def test_product_law(first, second):
    """Test rk(R1 x R2) = max(rk R1, rk R2)."""
    product = finring_product(first.ring, second.ring)
    assert rank_fin_exhaustive(product) == max(
        rank_fin_exhaustive(first.ring), rank_fin_exhaustive(second.ring)
    )
    assert length(product) == length(first.ring) + length(second.ring)


@settings(max_examples=40, deadline=None)
@given(monomial_algebras())
def test_random_monomial_algebras(ring):
    """Test Nakayama counts and maximal ideals of random local algebras."""
    (maximal,) = maximal_ideals(ring)
    assert maximal.f == 1
    for ideal in enumerate_ideals(ring):
        assert mu_fin(ring, ideal) == mu_exhaustive(ring, ideal)
    assert length(ring) == ring.k


@settings(max_examples=40, deadline=None)
@given(strategies.integers(2, 60))
def test_random_cyclic_rings(modulus):
    """Test that Z/m is principal and has as many maximal ideals as primes."""
    ring = build_cyclic(modulus)
    found = maximal_ideals(ring)
    assert sorted(m.p for m in found) == primefactors(modulus)
    assert rank_fin_exhaustive(ring) == 1


def test_order_corpus_locals():
    """Test z <= e and the tangent cross-check on every corpus order."""
    for entry in order_corpus():
        report = rank_order(entry.embedded, ring_id=entry.name)
        assert report.is_exact()
        for local in report.singular_primes:
            assert local.z <= local.e
            assert (
                tangent_dimension(entry.embedded.order, local.prime)
                == local.z
            )


def test_catalog_names():
    """Test that check names are unique and carry a provenance."""
    names = [check.name for check in catalog()]
    assert len(names) == len(set(names))
    assert {"matson-2", "oracle-product-law"} <= set(names)
    assert all(check.citation for check in catalog())


def test_select_checks():
    """Test glob and substring filters."""
    assert [c.name for c in select_checks("matson-2")] == ["matson-2"]
    assert len(select_checks("matson-*")) == 4
    assert len(select_checks("oracle")) == 6
    assert select_checks("nonexistent-filter") == []
    assert len(select_checks()) == len(catalog())


@pytest.mark.parametrize(
    "name",
    [
        "matson-2",
        "matson-3",
        "artinian-cor43-2",
        "witness-mn1-2-2",
        "trunc-z4-rank",
        "base-zero-and-cyclic",
        "unique-zero-divisor",
    ],
)
def test_catalog_checks_pass(name):
    """Test that the cheaper catalog checks reproduce their values."""
    (outcome,) = run_checks(name)
    assert outcome.passed, format_outcome(outcome)


def test_run_check_reports_errors():
    """Test that library errors become failed outcomes."""

    def explode():
        raise ZeroRing("no maximal ideals")

    check = Check(
        name="explodes",
        citation="a check that raises",
        provenance=DERIVED,
        expected=1,
        compute=explode,
    )
    outcome = run_check(check)
    assert not outcome.passed
    assert outcome.error == "ZeroRing: no maximal ideals"
    assert "got ZeroRing: no maximal ideals" in format_outcome(outcome)


def test_format_outcome():
    """Test the pass and fail lines."""
    passed = CheckOutcome(
        name="x",
        citation="c",
        provenance=DERIVED,
        expected=3,
        actual=3,
        passed=True,
    )
    assert format_outcome(passed) == "PASS x [derived: c]"
