# -*- coding: utf-8 -*-
"""A module containing the rank calculus of nonmaximal orders.

The rank of a one-dimensional order is the largest multiplicity e_p over its
singular primes, and the singular primes are the primes containing the
conductor in the normalization. Local generator counts come from Nakayama:
the number of generators of I at P is the dimension of I/PI over R/P.

The normalization S is always supplied by the caller; normality is decided
relative to it.

Classes:
    RankInterval: A rank known only to lie in a closed integer interval.
    PrimeInvariants: The local invariants of an order at one prime.
    RankReport: The rank of an order with its provenance.

Functions:
    primes_above: Return the primes of an order lying over a rational prime.
    mu_p: Return the number of generators of an ideal at a prime.
    z_p: Return the embedding dimension of an order at a prime.
    hilbert_sequence: Return the Hilbert values dim P^i/P^(i+1).
    e_p: Return the multiplicity of an order at a prime.
    tangent_dimension: Return dim P/P^2 computed in the finite ring R/P^2.
    singular_primes: Return the primes containing the conductor.
    mu_ideal: Return the minimal number of generators of an ideal.
    rank_order: Return the rank report of an order.
"""

from __future__ import absolute_import
from __future__ import unicode_literals

from typing import (  # noqa: F401 pylint: disable=unused-import
    Any,
    Iterator,
    List,
    Optional,
    Tuple,
    Union,
)
import itertools
import logging

from . import config
from .errors import InvariantViolation, NoStabilization, OwnerMismatch
from .finring import exact_log, maximal_ideals, mu_fin, quotient_ring
from .latcore import lat_index
from .orders import (
    EmbeddedOrder,
    Order,
    OrderIdeal,
    PrimeSpot,
    conductor,
    ideal_from_gens,
    ideal_mul,
    ideal_pow,
)
from .records import Record
from .validation import Prime


__all__ = (
    "RankInterval",
    "PrimeInvariants",
    "RankReport",
    "primes_above",
    "mu_p",
    "z_p",
    "hilbert_sequence",
    "e_p",
    "tangent_dimension",
    "singular_primes",
    "mu_ideal",
    "rank_order",
)

logger = logging.getLogger(__name__)


class RankInterval(Record):
    """An integer known only to lie in [low, high].

    >>> 2 in RankInterval(1, 2)
    True
    """

    low: int
    high: int

    def __contains__(self, value):
        return self.low <= value <= self.high

    def __str__(self):
        return "{{{}..{}}}".format(self.low, self.high)


LOCALLY_PRINCIPAL = RankInterval(1, 2)


class PrimeInvariants(Record):
    """The invariants of an order at a singular prime.

    z is the embedding dimension dim P/P^2, e the multiplicity and hilbert
    the Hilbert values computed until e stabilized.
    """

    prime: PrimeSpot
    z: int
    e: int
    hilbert: Tuple[int, ...]


class RankReport(Record):
    """The computed rank of an order and how each number was obtained.

    An exact rank of at least 2 comes with a witness ideal whose local
    generator count at witness_prime equals the rank.
    """

    ring_id: str
    degree: int
    normal: bool
    conductor_index: int
    singular_primes: Tuple[PrimeInvariants, ...]
    rank: Union[int, RankInterval]
    witness: OrderIdeal = None
    witness_prime: PrimeSpot = None
    witness_mu: int = None
    notes: Tuple[str, ...] = ()

    def __init__(self, *args, **kwargs):
        """Create the report and check its internal consistency.

        Raises:
            InvariantViolation: Raised when z_p > e_p, when a singular prime
                has e_p < 2, when an exact rank of at least 2 has no witness
                or when the rank exceeds the degree.
        """
        super(RankReport, self).__init__(*args, **kwargs)
        for local in self.singular_primes:
            if local.z > local.e:
                raise InvariantViolation(
                    "z_p = {} exceeds e_p = {} at p = {}.".format(
                        local.z, local.e, local.prime.p
                    )
                )
            if local.e < 2:
                raise InvariantViolation(
                    "The singular prime over {} has multiplicity {}.".format(
                        local.prime.p, local.e
                    )
                )
        if isinstance(self.rank, int):
            if self.rank >= 2 and (
                self.witness is None or self.witness_mu != self.rank
            ):
                raise InvariantViolation(
                    "An exact rank of {} needs a witness with {} local "
                    "generators.".format(self.rank, self.rank)
                )
            if self.rank > self.degree:
                raise InvariantViolation(
                    "The rank {} exceeds the free-rank ceiling {}.".format(
                        self.rank, self.degree
                    )
                )

    def is_exact(self):
        # type: () -> bool
        return isinstance(self.rank, int)


def _check_owner(ideal, prime):
    # type: (OrderIdeal, PrimeSpot) -> None
    if ideal.owner != prime.ideal.owner:
        raise OwnerMismatch("The ideal and the prime lie in different orders.")


def primes_above(order, p):
    # type: (Order, int) -> List[PrimeSpot]
    """Return the maximal ideals of an order that contain p.

    >>> from ringrank.orders import order_from_poly
    >>> [spot.f for spot in primes_above(order_from_poly([1, 0, 1]), 3)]
    [2]

    Raises:
        NotPrime: Raised when p is not prime.
    """
    p = Prime(p)
    residue, projection = quotient_ring(
        order, ideal_from_gens(order, [tuple(p * c for c in order.one)])
    )
    return [
        PrimeSpot(
            ideal=OrderIdeal(
                order, projection.preimage(maximal.ideal), check=False
            ),
            p=maximal.p,
            f=maximal.f,
        )
        for maximal in maximal_ideals(residue)
    ]


def mu_p(ideal, prime):
    # type: (OrderIdeal, PrimeSpot) -> int
    """Return dim I/PI over R/P, the number of generators of I at P.

    Raises:
        OwnerMismatch: Raised when the ideal and the prime differ in owner.
        NonIntegralLog: Raised when [I : PI] is not a power of |R/P|, which
            means P is not prime.
    """
    _check_owner(ideal, prime)
    product = ideal_mul(prime.ideal, ideal)
    return exact_log(lat_index(ideal.lat, product.lat), prime.residue_size)


def z_p(order, prime):
    # type: (Order, PrimeSpot) -> int
    """Return the embedding dimension dim P/P^2 of an order at P."""
    if prime.ideal.owner != order:
        raise OwnerMismatch("The prime does not belong to the order.")
    return mu_p(prime.ideal, prime)


def _hilbert_values(order, prime):
    # type: (Order, PrimeSpot) -> Iterator[int]
    """Yield dim P^i/P^(i+1) over R/P for i = 1, 2, ..."""
    if prime.ideal.owner != order:
        raise OwnerMismatch("The prime does not belong to the order.")
    current = prime.ideal
    while True:
        following = ideal_mul(current, prime.ideal)
        yield exact_log(
            lat_index(current.lat, following.lat), prime.residue_size
        )
        current = following


def hilbert_sequence(order, prime, count):
    # type: (Order, PrimeSpot, int) -> List[int]
    """Return d_1, ..., d_count with d_i = dim P^i/P^(i+1) over R/P."""
    return list(itertools.islice(_hilbert_values(order, prime), count))


def _stable_hilbert(order, prime, cap):
    # type: (Order, PrimeSpot, int) -> Tuple[int, Tuple[int, ...]]
    """Return the multiplicity and the Hilbert values that fixed it."""
    run = config.HILBERT_STABLE_RUN
    values = []  # type: List[int]
    for value in itertools.islice(_hilbert_values(order, prime), cap):
        values.append(value)
        if len(values) >= run and len(set(values[-run:])) == 1:
            logger.debug(
                "Hilbert values over %d stabilized: %s", prime.p, values
            )
            return values[-1], tuple(values)
    raise NoStabilization(
        "The Hilbert values {} over {} did not stabilize within {} "
        "steps.".format(values, prime.p, cap)
    )


def e_p(order, prime, cap=config.DEFAULT_HILBERT_CAP):
    # type: (Order, PrimeSpot, int) -> int
    """Return the multiplicity of an order at a prime.

    The multiplicity is the eventual value of dim P^i/P^(i+1). It is
    declared once HILBERT_STABLE_RUN consecutive values agree.

    Raises:
        NoStabilization: Raised when no run of equal values appears within
            cap values.
    """
    return _stable_hilbert(order, prime, cap)[0]


def tangent_dimension(order, prime):
    # type: (Order, PrimeSpot) -> int
    """Return mu_fin of the image of P in the finite ring R/P^2.

    This agrees with z_p and cross-checks it through the finite-ring
    machinery.
    """
    square = ideal_pow(prime.ideal, 2)
    residue, projection = quotient_ring(order, square)
    return mu_fin(residue, projection.image(prime.ideal.generators))


def _spots_over(embedded, cond):
    # type: (EmbeddedOrder, OrderIdeal) -> List[PrimeSpot]
    order = embedded.order
    residue, projection = quotient_ring(order, cond)
    return [
        PrimeSpot(
            ideal=OrderIdeal(
                order, projection.preimage(maximal.ideal), check=False
            ),
            p=maximal.p,
            f=maximal.f,
        )
        for maximal in maximal_ideals(residue)
    ]


def _ambient(embedded, ambient):
    # type: (EmbeddedOrder, Optional[Order]) -> Order
    if ambient is not None and ambient != embedded.ambient:
        raise OwnerMismatch(
            "The suborder is not embedded in the given normalization."
        )
    return embedded.ambient


def singular_primes(embedded, ambient=None):
    # type: (EmbeddedOrder, Optional[Order]) -> List[PrimeSpot]
    """Return the primes of R containing the conductor of R in S.

    Args:
        embedded: The order R embedded in its normalization S.
        ambient: S, which defaults to the ambient of embedded.

    Returns:
        The maximal ideals of R above the conductor, empty when R = S.
    """
    _ambient(embedded, ambient)
    cond = conductor(embedded)
    if cond.is_unit():
        return []
    return _spots_over(embedded, cond.in_order)


def mu_ideal(embedded, ambient, ideal):
    # type: (EmbeddedOrder, Optional[Order], OrderIdeal) -> Union[int, Any]
    """Return the minimal number of generators of an ideal of R.

    The local count at a regular prime is 1, so the largest local count L is
    taken over the singular primes. It is a lower bound, and for a
    one-dimensional domain the Forster-Swan bound gives at most max(L, 2)
    generators. Hence L is exact when L >= 2. When L = 1 the ideal is
    locally principal and the result is the interval {1..2} unless one of the
    stored basis vectors generates it.

    Raises:
        OwnerMismatch: Raised when the ideal is not an ideal of R.
    """
    _ambient(embedded, ambient)
    order = embedded.order
    if ideal.owner != order:
        raise OwnerMismatch("The ideal does not belong to the suborder.")
    local = max(
        [1] + [mu_p(ideal, spot) for spot in singular_primes(embedded)]
    )
    if local >= 2:
        return local
    for generator in ideal.generators:
        if ideal_from_gens(order, [generator]) == ideal:
            return 1
    return LOCALLY_PRINCIPAL


def rank_order(
    embedded,
    ambient=None,
    ring_id="order",
    cap=config.DEFAULT_HILBERT_CAP,
):
    # type: (EmbeddedOrder, Optional[Order], str, int) -> RankReport
    """Return the rank report of an order in its normalization.

    A normal order has rank in {1..2}: it is Dedekind, and principal versus
    nonprincipal is not decided here. Otherwise the rank is the largest
    multiplicity over the singular primes. The witness is P^i at the first
    prime attaining it, with i the first index whose Hilbert value equals
    the multiplicity, so the witness needs exactly rank generators at P.

    Raises:
        NoStabilization: Raised when a Hilbert sequence does not stabilize.
        InvariantViolation: Raised when the computed numbers contradict
            z_p <= e_p, e_p >= 2 at singular primes, or rank <= degree.
    """
    _ambient(embedded, ambient)
    order = embedded.order
    cond = conductor(embedded)
    notes = [
        "normalization supplied by the caller (ambient order)",
        "free-rank ceiling: degree {}".format(order.degree),
    ]
    if cond.is_unit():
        notes.append("conductor is the unit ideal: Dedekind, rank in {1..2}")
        return RankReport(
            ring_id=ring_id,
            degree=order.degree,
            normal=True,
            conductor_index=1,
            singular_primes=(),
            rank=LOCALLY_PRINCIPAL,
            notes=tuple(notes),
        )
    locals_ = []
    for spot in _spots_over(embedded, cond.in_order):
        e, values = _stable_hilbert(order, spot, cap)
        locals_.append(
            PrimeInvariants(
                prime=spot, z=values[0], e=e, hilbert=values
            )
        )
    rank = max(local.e for local in locals_)
    best = next(local for local in locals_ if local.e == rank)
    exponent = best.hilbert.index(rank) + 1
    witness = ideal_pow(best.prime.ideal, exponent)
    notes.append("rank = max e_p over {} singular primes".format(len(locals_)))
    notes.append(
        "witness: P^{} over {} with {} local generators".format(
            exponent, best.prime.p, rank
        )
    )
    logger.debug("rank %d for %s", rank, ring_id)
    return RankReport(
        ring_id=ring_id,
        degree=order.degree,
        normal=False,
        conductor_index=cond.index,
        singular_primes=tuple(locals_),
        rank=rank,
        witness=witness,
        witness_prime=best.prime,
        witness_mu=mu_p(witness, best.prime),
        notes=tuple(notes),
    )
