# -*- coding: utf-8 -*-
"""A module containing the rings that the oracle checks run over.

The finite corpus holds small rings of every flavor the library builds:
cyclic rings, monomial algebras, the Artinian sharpness rings, truncated
polynomial rings and products of these. The order corpus holds the certified
nonmaximal orders. Both are built once and shared by the demo catalog and
the tests.

Classes:
    CorpusEntry: A named finite ring.
    OrderEntry: A named order inside its normalization.

Functions:
    finite_corpus: Return the finite rings of the corpus.
    order_corpus: Return the orders of the corpus.
"""

from __future__ import absolute_import
from __future__ import unicode_literals

from typing import (  # noqa: F401 pylint: disable=unused-import
    Callable,
    List,
    Tuple,
)
import functools
import logging

from .constructions import (
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
)
from .errors import InvariantViolation
from .finring import FinRing, finring_product
from .orders import EmbeddedOrder, order_from_poly
from .records import Record


__all__ = ("CorpusEntry", "OrderEntry", "finite_corpus", "order_corpus")

logger = logging.getLogger(__name__)

CORPUS_MAX_SIZE = 512


class CorpusEntry(Record):
    """A finite ring with a short descriptive name."""

    name: str
    ring: FinRing


class OrderEntry(Record):
    """An order with a short descriptive name."""

    name: str
    embedded: EmbeddedOrder


def _square_zero(p, variables):
    # type: (int, int) -> FinRing
    """Return F_p[x_1, ..., x_v]/(x_1, ..., x_v)^2."""
    monomials = [(0,) * variables] + [
        tuple(int(i == j) for j in range(variables)) for i in range(variables)
    ]
    return build_monomial_algebra(p, monomials)


def _finite_builders():
    # type: () -> List[Tuple[str, Callable[[], FinRing]]]
    return [
        ("Z/2", lambda: build_cyclic(2)),
        ("Z/4", lambda: build_cyclic(4)),
        ("Z/8", lambda: build_cyclic(8)),
        ("Z/9", lambda: build_cyclic(9)),
        ("Z/27", lambda: build_cyclic(27)),
        ("Z/12", lambda: build_cyclic(12)),
        ("Z/36", lambda: build_cyclic(36)),
        ("F_4", lambda: build_poly_quotient(2, [1, 1, 1])),
        ("GR(4,2)", lambda: build_poly_quotient(4, [1, 1, 1])),
        ("F_2[x,y]/(x,y)^2", lambda: _square_zero(2, 2)),
        ("F_3[x,y]/(x,y)^2", lambda: _square_zero(3, 2)),
        ("F_2[x,y,z]/(x,y,z)^2", lambda: _square_zero(2, 3)),
        (
            "F_2[x,y]/(x^2,y^2)",
            lambda: build_monomial_algebra(
                2, [(0, 0), (1, 0), (0, 1), (1, 1)]
            ),
        ),
        (
            "F_2[x,y]/(x,y)^3",
            lambda: build_monomial_algebra(
                2, [(0, 0), (1, 0), (0, 1), (2, 0), (1, 1), (0, 2)]
            ),
        ),
        ("cor43(2)", lambda: build_cor43(2)),
        ("cor43(3)", lambda: build_cor43(3)),
        ("cor43-semigroup(2,2)", lambda: build_cor43_semigroup(2, 2)),
        ("cor43-semigroup(2,3)", lambda: build_cor43_semigroup(2, 3)),
        ("semigroup-trunc(2,2,5)", lambda: build_semigroup_trunc(2, 2, 5)),
        ("F_2[t]/(t^3)", lambda: build_trunc_poly(2, 1, 3)),
        ("F_3[t]/(t^2)", lambda: build_trunc_poly(3, 1, 2)),
        ("Z/4[t]/(t^2)", lambda: build_trunc_poly(2, 2, 2)),
        ("Z/4[t]/(t^3)", lambda: build_trunc_poly(2, 2, 3)),
        ("Z/9[t]/(t^2)", lambda: build_trunc_poly(3, 2, 2)),
        (
            "F_2 x F_2",
            lambda: finring_product(build_cyclic(2), build_cyclic(2)),
        ),
        (
            "Z/4 x F_2",
            lambda: finring_product(build_cyclic(4), build_cyclic(2)),
        ),
        (
            "F_4 x Z/3",
            lambda: finring_product(
                build_poly_quotient(2, [1, 1, 1]), build_cyclic(3)
            ),
        ),
        (
            "Z/4 x F_2[x,y]/(x,y)^2",
            lambda: finring_product(build_cyclic(4), _square_zero(2, 2)),
        ),
        (
            "(Z/4 x F_2)[t]/(t^2)",
            lambda: build_trunc_poly_over(
                finring_product(build_cyclic(4), build_cyclic(2)), 2
            ),
        ),
    ]


@functools.lru_cache(maxsize=None)
def _finite_corpus():
    # type: () -> Tuple[CorpusEntry, ...]
    entries = []
    for name, build in _finite_builders():
        ring = build()
        if ring.size > CORPUS_MAX_SIZE:
            raise InvariantViolation(
                "Corpus ring {} has {} elements, above {}.".format(
                    name, ring.size, CORPUS_MAX_SIZE
                )
            )
        entries.append(CorpusEntry(name=name, ring=ring))
    logger.debug("built %d corpus rings", len(entries))
    return tuple(entries)


def finite_corpus(max_size=CORPUS_MAX_SIZE):
    # type: (int) -> List[CorpusEntry]
    """Return the corpus rings with at most max_size elements.

    >>> len(finite_corpus()) >= 20
    True
    """
    return [entry for entry in _finite_corpus() if entry.ring.size <= max_size]


@functools.lru_cache(maxsize=None)
def order_corpus():
    # type: () -> Tuple[OrderEntry, ...]
    """Return the certified nonmaximal orders, each in its normalization."""
    gaussian = order_from_poly([1, 0, 1])
    cube_root = order_from_poly([-2, 0, 0, 1])
    entries = [
        OrderEntry(name="matson({})".format(n), embedded=build_matson(n))
        for n in range(2, 6)
    ]
    entries.extend(
        [
            OrderEntry(name="Z + 3Z[i]", embedded=build_axs(gaussian, 3)),
            OrderEntry(
                name="Z + 6Z[2^(1/3)]", embedded=build_axs(cube_root, 6)
            ),
            OrderEntry(
                name="pullback(Z[i]; 3, 7)",
                embedded=build_pullback(gaussian, [3, 7]),
            ),
        ]
    )
    return tuple(entries)
