# -*- coding: utf-8 -*-
"""A module containing the catalog of published and derived rank checks.

Every check recomputes one published number or one property over the
corpus and compares it with the expected value. The expected value carries a
citation, a short statement of the result it comes from, and a provenance
tag, so a failure reads "expected (published: ...) 3, got 2".

Provenance tags:
    published: The value is stated in the literature on ranks of rings.
    derived: The value was computed by hand from the definitions.
    property: The check counts violations of a proven inequality over the
        corpus; the expected count is zero.

Classes:
    Check: A named computation with its expected value and citation.
    CheckOutcome: The result of running one check.

Functions:
    catalog: Return every check in catalog order.
    select_checks: Return the checks whose names match a pattern.
    run_check: Run one check and return its outcome.
    run_checks: Run the selected checks in catalog order.
    format_outcome: Return the one-line summary of an outcome.
"""

from __future__ import absolute_import
from __future__ import unicode_literals

from typing import (  # noqa: F401 pylint: disable=unused-import
    Any,
    Callable,
    Iterable,
    List,
    Optional,
    Tuple,
)
import fnmatch
import functools
import itertools
import logging

from .constructions import (
    build_axs,
    build_cor43,
    build_cor43_semigroup,
    build_cyclic,
    build_matson,
    build_pullback,
    build_semigroup_trunc,
    build_trunc_poly,
    build_trunc_poly_over,
    witness_mn1,
    witness_mn1_over,
)
from .corpus import finite_corpus, order_corpus
from .errors import RingRankError
from .finring import (
    ELEMENTWISE,
    IDEALWISE,
    enumerate_ideals,
    finring_product,
    finring_quotient,
    ideal_power,
    length,
    maximal_ideals,
    mu_exhaustive,
    mu_fin,
    nilpotency_index,
    rank_fin_exhaustive,
    zero_divisors,
)
from .invariants import (
    primes_above,
    rank_order,
    singular_primes,
    tangent_dimension,
    z_p,
)
from .orders import order_from_poly
from .records import Record


__all__ = (
    "PUBLISHED",
    "DERIVED",
    "PROPERTY",
    "Check",
    "CheckOutcome",
    "catalog",
    "select_checks",
    "run_check",
    "run_checks",
    "format_outcome",
)

logger = logging.getLogger(__name__)

PUBLISHED = "published"
DERIVED = "derived"
PROPERTY = "property"

_GLOB_CHARS = frozenset("*?[")

# Rings larger than this are skipped by the quadratic property checks.
_PAIR_MAX_SIZE = 64


class Check(Record):
    """A named computation whose result must equal an expected value."""

    name: str
    citation: str
    provenance: str
    expected: Any
    compute: Callable


class CheckOutcome(Record):
    """The result of running a Check; error is set when it raised."""

    name: str
    citation: str
    provenance: str
    expected: Any
    actual: Any
    passed: bool
    error: str = None


def _matson(n):
    # type: (int) -> Tuple[int, int, int, int]
    """Return rank, z, e and the number of singular primes of matson(n)."""
    report = rank_order(build_matson(n), ring_id="matson({})".format(n))
    (local,) = report.singular_primes
    return report.rank, local.z, local.e, len(report.singular_primes)


def _axs_cube_root():
    # type: () -> Tuple[int, int, int, Tuple[int, ...], int]
    """Return the index, prime counts over 2 and 3, z values and rank."""
    embedded = build_axs(order_from_poly([-2, 0, 0, 1]), 6)
    order = embedded.order
    over_2 = primes_above(order, 2)
    over_3 = primes_above(order, 3)
    zs = tuple(z_p(order, spot) for spot in over_2 + over_3)
    report = rank_order(embedded, ring_id="Z + 6Z[2^(1/3)]")
    return embedded.index, len(over_2), len(over_3), zs, report.rank


def _pullback_gaussian():
    # type: () -> Tuple[int, Tuple[int, ...], int]
    report = rank_order(
        build_pullback(order_from_poly([1, 0, 1]), [3, 7]),
        ring_id="pullback(Z[i]; 3, 7)",
    )
    return (
        len(report.singular_primes),
        tuple(local.e for local in report.singular_primes),
        report.rank,
    )


def _pullback_equals_axs():
    # type: () -> bool
    gaussian = order_from_poly([1, 0, 1])
    return (
        build_pullback(gaussian, [3]).lattice
        == build_axs(gaussian, 3).lattice
    )


def _cor43_exhaustive(n):
    # type: (int) -> Tuple[int, int]
    ring = build_cor43(n)
    return rank_fin_exhaustive(ring), length(ring)


def _cor43_nakayama(n):
    # type: (int) -> Tuple[int, int, int]
    """Return the Nakayama rank, the length and the brute-force rank."""
    ring = build_cor43(n)
    nakayama = max(mu_fin(ring, ideal) for ideal in enumerate_ideals(ring))
    return nakayama, length(ring), rank_fin_exhaustive(ring)


def _semigroup_artinian(p, n):
    # type: (int, int) -> Tuple[int, int, int]
    ring = build_cor43_semigroup(p, n)
    return ring.size, rank_fin_exhaustive(ring), length(ring)


def _witness_stability(p, n):
    # type: (int, int) -> Tuple[int, ...]
    """Return the generator count of m^(n-1) for D = n+1, n+2 and n+3."""
    return tuple(witness_mn1(p, n, d)[1] for d in range(n + 1, n + 4))


def _trunc_rank():
    # type: () -> int
    return rank_fin_exhaustive(build_trunc_poly(2, 2, 3))


def _semigroup_window(n):
    # type: (int) -> Tuple[int, ...]
    """Return mu(m^i) for every i with (i+1)n <= D - n, where D = 3n."""
    degree = 3 * n
    ring = build_semigroup_trunc(2, n, degree)
    (maximal,) = maximal_ideals(ring)
    counts = []
    i = 1
    while (i + 1) * n <= degree - n:
        counts.append(mu_fin(ring, ideal_power(maximal.ideal, i)))
        i += 1
    return tuple(counts)


def _principal_base_witness():
    # type: () -> int
    """Return mu(m^2) for m = (s, t) over the base F_2[s]/(s^3)."""
    base = build_trunc_poly(2, 1, 3)
    return witness_mn1_over(base, base.basis_vector(1), 4)[1]


def _product_base():
    # type: () -> Tuple[int, int]
    """Return the largest factor witness count and the brute-force rank.

    The factors are Z/4, with uniformizer 2, and the field F_2, whose
    polynomial ring is principal.
    """
    four = build_cyclic(4)
    counts = (witness_mn1_over(four, (2,), length(four) + 1)[1], 1)
    ring = build_trunc_poly_over(finring_product(four, build_cyclic(2)), 2)
    return max(counts), rank_fin_exhaustive(ring)


def _zero_and_cyclic():
    # type: () -> Tuple[int, Tuple[int, ...]]
    return (
        rank_fin_exhaustive(build_cyclic(1)),
        tuple(rank_fin_exhaustive(build_cyclic(m)) for m in range(2, 13)),
    )


def _unique_zero_divisor():
    # type: () -> Tuple[int, int]
    return (
        len(zero_divisors(build_cyclic(4))),
        len(zero_divisors(build_trunc_poly(2, 1, 2))),
    )


def _oracle_discrepancies():
    # type: () -> int
    """Count ideals where the Nakayama count differs from the search."""
    bad = 0
    for entry in finite_corpus():
        ring = entry.ring
        for ideal in enumerate_ideals(ring):
            if mu_fin(ring, ideal) != mu_exhaustive(ring, ideal):
                logger.warning("generator counts disagree on %s", entry.name)
                bad += 1
    return bad


def _rank_length_violations():
    # type: () -> int
    """Count non-fields whose rank exceeds length - 1."""
    bad = 0
    for entry in finite_corpus():
        ring = entry.ring
        if ring.is_field():
            continue
        if rank_fin_exhaustive(ring) > length(ring) - 1:
            logger.warning("rank exceeds length - 1 on %s", entry.name)
            bad += 1
    return bad


def _product_law_violations():
    # type: () -> int
    """Count pairs where rk(R1 x R2) != max(rk R1, rk R2)."""
    small = [
        entry
        for entry in finite_corpus()
        if entry.ring.size * 2 <= _PAIR_MAX_SIZE
    ]
    bad = 0
    for first, second in itertools.combinations_with_replacement(small, 2):
        if first.ring.size * second.ring.size > _PAIR_MAX_SIZE:
            continue
        product = finring_product(first.ring, second.ring)
        expected = max(
            rank_fin_exhaustive(first.ring), rank_fin_exhaustive(second.ring)
        )
        if rank_fin_exhaustive(product) != expected:
            logger.warning(
                "product law fails on %s x %s", first.name, second.name
            )
            bad += 1
    return bad


def _quotient_violations():
    # type: () -> int
    """Count ideals I with rk(R/I) > rk(R)."""
    bad = 0
    for entry in finite_corpus(_PAIR_MAX_SIZE):
        ring = entry.ring
        rank = rank_fin_exhaustive(ring)
        for ideal in enumerate_ideals(ring):
            quotient, _ = finring_quotient(ring, ideal)
            if rank_fin_exhaustive(quotient) > rank:
                logger.warning("a quotient of %s has larger rank", entry.name)
                bad += 1
    return bad


def _nilpotency_violations():
    # type: () -> int
    """Count rings breaking elementwise <= idealwise <= length."""
    bad = 0
    for entry in finite_corpus():
        ring = entry.ring
        elementwise = nilpotency_index(ring, ELEMENTWISE)
        idealwise = nilpotency_index(ring, IDEALWISE)
        if not elementwise <= idealwise <= length(ring):
            logger.warning("nilpotency chain fails on %s", entry.name)
            bad += 1
    return bad


def _order_violations():
    # type: () -> int
    """Count order primes with z > e or with a tangent count other than z."""
    bad = 0
    for entry in order_corpus():
        report = rank_order(entry.embedded, ring_id=entry.name)
        for local in report.singular_primes:
            tangent = tangent_dimension(entry.embedded.order, local.prime)
            if local.z > local.e or tangent != local.z:
                logger.warning(
                    "local invariants fail over %d on %s",
                    local.prime.p,
                    entry.name,
                )
                bad += 1
        if len(singular_primes(entry.embedded)) != len(report.singular_primes):
            bad += 1
    return bad


@functools.lru_cache(maxsize=None)
def catalog():
    # type: () -> Tuple[Check, ...]
    """Return every check, in the order they are run."""
    checks = [
        Check(
            name="matson-{}".format(n),
            citation="Z + 2Z[2^(1/n)] has rank n with z = e = n at its "
            "unique singular prime",
            provenance=PUBLISHED,
            expected=(n, n, n, 1),
            compute=functools.partial(_matson, n),
        )
        for n in range(2, 6)
    ]
    checks.extend(
        [
            Check(
                name="axs-cube-root-6",
                citation="Z + xS has index |x|^(N-1), one prime over each "
                "p | x with z = N, and rank N",
                provenance=PUBLISHED,
                expected=(36, 1, 1, (3, 3), 3),
                compute=_axs_cube_root,
            ),
            Check(
                name="pullback-gaussian-3-7",
                citation="the pullback of the prime fields has e_p equal "
                "to the residue degree at each chosen prime",
                provenance=PUBLISHED,
                expected=(2, (2, 2), 2),
                compute=_pullback_gaussian,
            ),
            Check(
                name="pullback-gaussian-3-equals-axs",
                citation="over an inert prime of degree 2 the pullback is "
                "Z + pS",
                provenance=DERIVED,
                expected=True,
                compute=_pullback_equals_axs,
            ),
            Check(
                name="artinian-cor43-2",
                citation="R/P^2 is Artinian of rank n and length n + 1",
                provenance=PUBLISHED,
                expected=(2, 3),
                compute=functools.partial(_cor43_exhaustive, 2),
            ),
            Check(
                name="artinian-cor43-3",
                citation="R/P^2 is Artinian of rank n and length n + 1",
                provenance=PUBLISHED,
                expected=(3, 4, 3),
                compute=functools.partial(_cor43_nakayama, 3),
            ),
        ]
    )
    checks.extend(
        Check(
            name="artinian-semigroup-2-{}".format(n),
            citation="(F_p + t^n F_p[t]) / m^2 has rank n and length n + 1",
            provenance=PUBLISHED,
            expected=(2 ** (n + 1), n, n + 1),
            compute=functools.partial(_semigroup_artinian, 2, n),
        )
        for n in (2, 3)
    )
    checks.extend(
        Check(
            name="witness-mn1-{}-{}".format(p, n),
            citation="m^(n-1) needs n generators in (Z/p^n)[t], stable "
            "under truncation",
            provenance=PUBLISHED,
            expected=(n, n, n),
            compute=functools.partial(_witness_stability, p, n),
        )
        for p, n in itertools.product((2, 3), range(1, 6))
    )
    checks.extend(
        [
            Check(
                name="trunc-z4-rank",
                citation="Z/4[t] has rank 2",
                provenance=PUBLISHED,
                expected=2,
                compute=_trunc_rank,
            ),
            Check(
                name="semigroup-window-2",
                citation="the Hilbert values of k + t^n k[[t]] are n",
                provenance=PUBLISHED,
                expected=(2,),
                compute=functools.partial(_semigroup_window, 2),
            ),
            Check(
                name="semigroup-window-3",
                citation="the Hilbert values of k + t^n k[[t]] are n",
                provenance=PUBLISHED,
                expected=(3,),
                compute=functools.partial(_semigroup_window, 3),
            ),
            Check(
                name="principal-base-witness",
                citation="over a principal Artinian base of length n, "
                "m^(n-1) needs n generators",
                provenance=PUBLISHED,
                expected=3,
                compute=_principal_base_witness,
            ),
            Check(
                name="principal-product-base",
                citation="the rank of r[t] for a product of principal "
                "Artinian rings is the largest factor length",
                provenance=PUBLISHED,
                expected=(2, 2),
                compute=_product_base,
            ),
            Check(
                name="base-zero-and-cyclic",
                citation="rank 0 exactly for the zero ring, rank 1 for "
                "nonzero principal rings",
                provenance=PUBLISHED,
                expected=(0, (1,) * 11),
                compute=_zero_and_cyclic,
            ),
            Check(
                name="unique-zero-divisor",
                citation="Z/4 and F_2[t]/(t^2) have one nonzero zero divisor",
                provenance=DERIVED,
                expected=(1, 1),
                compute=_unique_zero_divisor,
            ),
            Check(
                name="oracle-nakayama-vs-search",
                citation="mu(I) = max_m dim I/mI for every ideal of a "
                "finite ring",
                provenance=PROPERTY,
                expected=0,
                compute=_oracle_discrepancies,
            ),
            Check(
                name="oracle-rank-below-length",
                citation="a finite non-field has rank at most length - 1",
                provenance=PROPERTY,
                expected=0,
                compute=_rank_length_violations,
            ),
            Check(
                name="oracle-product-law",
                citation="rk(R1 x R2) = max(rk R1, rk R2)",
                provenance=PROPERTY,
                expected=0,
                compute=_product_law_violations,
            ),
            Check(
                name="oracle-quotient-monotone",
                citation="rk(R/I) <= rk(R)",
                provenance=PROPERTY,
                expected=0,
                compute=_quotient_violations,
            ),
            Check(
                name="oracle-nilpotency-chain",
                citation="elementwise <= idealwise nilpotency <= length",
                provenance=PROPERTY,
                expected=0,
                compute=_nilpotency_violations,
            ),
            Check(
                name="oracle-order-locals",
                citation="z_p <= e_p, and dim P/P^2 agrees in R/P^2",
                provenance=PROPERTY,
                expected=0,
                compute=_order_violations,
            ),
        ]
    )
    return tuple(checks)


def _matches(name, pattern):
    # type: (str, str) -> bool
    if _GLOB_CHARS & set(pattern):
        return fnmatch.fnmatchcase(name, pattern)
    return pattern in name


def select_checks(pattern=None, checks=None):
    # type: (Optional[str], Optional[Iterable[Check]]) -> List[Check]
    """Return the checks whose names match a pattern, in catalog order.

    A pattern containing *, ? or [ is a shell glob over the whole name;
    any other pattern matches as a substring. No pattern selects everything.

    >>> [c.name for c in select_checks("matson-2")]
    ['matson-2']
    """
    checks = catalog() if checks is None else tuple(checks)
    if not pattern:
        return list(checks)
    selected = [check for check in checks if _matches(check.name, pattern)]
    if not selected:
        logger.warning("No checks match the filter %r.", pattern)
    return selected


def run_check(check):
    # type: (Check) -> CheckOutcome
    """Run one check; errors from the library become failed outcomes."""
    logger.info("running %s", check.name)
    try:
        actual = check.compute()
    except RingRankError as exc:
        logger.error("%s raised %s", check.name, exc)
        return CheckOutcome(
            name=check.name,
            citation=check.citation,
            provenance=check.provenance,
            expected=check.expected,
            actual=None,
            passed=False,
            error="{}: {}".format(type(exc).__name__, exc),
        )
    return CheckOutcome(
        name=check.name,
        citation=check.citation,
        provenance=check.provenance,
        expected=check.expected,
        actual=actual,
        passed=actual == check.expected,
    )


def run_checks(pattern=None, checks=None):
    # type: (Optional[str], Optional[Iterable[Check]]) -> List[CheckOutcome]
    """Run every selected check in catalog order."""
    return [run_check(check) for check in select_checks(pattern, checks)]


def format_outcome(outcome):
    # type: (CheckOutcome) -> str
    """Return a one-line summary of an outcome.

    >>> outcome = CheckOutcome(name="x", citation="c", provenance="derived",
    ...                        expected=3, actual=2, passed=False)
    >>> format_outcome(outcome)
    'FAIL x: expected (derived: c) 3, got 2'
    """
    if outcome.passed:
        return "PASS {} [{}: {}]".format(
            outcome.name, outcome.provenance, outcome.citation
        )
    got = outcome.error if outcome.error is not None else outcome.actual
    return "FAIL {}: expected ({}: {}) {}, got {}".format(
        outcome.name,
        outcome.provenance,
        outcome.citation,
        outcome.expected,
        got,
    )
