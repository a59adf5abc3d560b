# -*- coding: utf-8 -*-
"""A module containing finite commutative rings with explicit tables.

A finite ring is stored as its additive group Z/d_1 + ... + Z/d_k together
with the products of the additive generators. Ideals are stored as lattices
in Z^k that contain the relation lattice diag(d_1, ..., d_k), so equality of
ideals is equality of canonical Hermite bases.

Classes:
    FinRing: A finite commutative ring with identity.
    FinIdeal: An ideal of a FinRing.
    MaximalIdeal: A maximal ideal tagged with its residue field size.
    Projection: The quotient map onto a FinRing with a section for lifting.

Functions:
    present_finring: Return a normalized ring and the map onto it.
    finring_from_table: Return a validated ring with a divisor chain.
    quotient_ring: Return the finite quotient of an order by an ideal.
    finring_quotient: Return the quotient of a FinRing by an ideal.
    finring_product: Return the product of two finite rings.
    maximal_ideals: Return all maximal ideals of a finite ring.
    jacobson_radical: Return the intersection of the maximal ideals.
    local_idempotents: Return the idempotents of the local factors.
    local_factors: Return the local factors of a finite ring.
    length: Return the length of a finite ring as a module over itself.
    nilpotency_index: Return the nilpotency index of a finite ring.
    ideal_product: Return the product of two ideals.
    ideal_power: Return a power of an ideal.
    mu_fin: Return the minimal number of generators of an ideal.
    enumerate_ideals: Return every ideal of a finite ring.
    mu_exhaustive: Return the minimal number of generators by search.
    rank_fin_exhaustive: Return the rank of a finite ring by search.
    zero_divisors: Return the nonzero zero divisors of a finite ring.
    exact_log: Return the exact logarithm of a power of an integer.
"""

from __future__ import absolute_import
from __future__ import unicode_literals

from typing import (  # noqa: F401 pylint: disable=unused-import
    Any,
    Callable,
    Dict,
    Iterable,
    Iterator,
    List,
    Optional,
    Sequence,
    Tuple,
)
import functools
import itertools
import logging
import operator

from sympy import Poly, Symbol, primefactors

from . import config
from .errors import (
    InvalidTable,
    InvariantViolation,
    NonIntegralLog,
    NotClosed,
    NotContained,
    OwnerMismatch,
    SizeCapExceeded,
    ZeroRing,
)
from .latcore import (
    IntMat,
    Lattice,
    lat_contains,
    lat_intersect,
    lat_sum,
    smith_decomposition,
    solve_in_span,
)
from .records import Record
from .validation import Positive, Prime


__all__ = (
    "ELEMENTWISE",
    "IDEALWISE",
    "FinRing",
    "FinIdeal",
    "MaximalIdeal",
    "Projection",
    "present_finring",
    "finring_from_table",
    "quotient_ring",
    "finring_quotient",
    "finring_product",
    "maximal_ideals",
    "jacobson_radical",
    "local_idempotents",
    "local_factors",
    "length",
    "nilpotency_index",
    "ideal_product",
    "ideal_power",
    "mu_fin",
    "enumerate_ideals",
    "mu_exhaustive",
    "rank_fin_exhaustive",
    "zero_divisors",
    "exact_log",
)

logger = logging.getLogger(__name__)

ELEMENTWISE = "elementwise"
IDEALWISE = "idealwise"

Vector = Tuple[int, ...]


def exact_log(value, base):
    # type: (int, int) -> int
    """Return n with base^n = value.

    Raises:
        NonIntegralLog: Raised when value is not a power of base.
    """
    if base < 2 or value < 1:
        raise NonIntegralLog(
            "Cannot take log base {} of {}.".format(base, value)
        )
    exponent = 0
    rest = value
    while rest % base == 0:
        rest //= base
        exponent += 1
    if rest != 1:
        raise NonIntegralLog(
            "{} is not a power of {}.".format(value, base)
        )
    return exponent


def _unit_vector(n, i):
    # type: (int, int) -> Vector
    return tuple(int(k == i) for k in range(n))


class FinRing(object):
    """A finite commutative ring given by generators and a product table.

    The additive group is Z/d_1 + ... + Z/d_k. The product of generators g_i
    and g_j is table[i][j], a vector reduced componentwise mod the divisors.
    The zero ring has k = 0.

    >>> ring = finring_from_table([8], [[[1]]], [1])
    >>> length(ring)
    3
    """

    def __init__(self, divisors, table, one, validate=True):
        # type: (Sequence[int], Sequence, Sequence[int], bool) -> None
        """Create a finite ring from its additive type and structure.

        Args:
            divisors: The orders d_i of the additive generators, each at
                least 2.
            table: A k by k by k nested sequence of structure constants.
            one: The coordinates of the identity.
            validate: If True, check the ring axioms on every generator
                triple.

        Raises:
            InvalidTable: Raised when the data does not define a commutative
                ring with identity.
        """
        self._divisors = tuple(int(d) for d in divisors)
        k = len(self._divisors)
        if any(d < 2 for d in self._divisors):
            raise InvalidTable(
                "Additive generator orders must be at least 2, got {}.".format(
                    self._divisors
                )
            )
        try:
            if len(table) != k or any(
                len(row) != k or any(len(entry) != k for entry in row)
                for row in table
            ):
                raise InvalidTable(
                    "The table of a ring with {} generators must be {}x{}x{}."
                    "".format(k, k, k, k)
                )
            self._table = tuple(
                tuple(self.reduce(entry) for entry in row) for row in table
            )
            if len(one) != k:
                raise InvalidTable(
                    "The identity needs {} coordinates, got {}.".format(
                        k, len(one)
                    )
                )
            self._one = self.reduce(one)
        except TypeError as exc:
            raise InvalidTable("Malformed ring data: {}".format(exc))
        if validate:
            self._validate()

    def _validate(self):
        # type: () -> None
        """Raise InvalidTable unless the ring axioms hold."""
        k = self.k
        for i in range(k):
            for j in range(k):
                entry = self._table[i][j]
                if any(self.scale(self._divisors[i], entry)):
                    raise InvalidTable(
                        "{0} * (g_{1} * g_{2}) must vanish since d_{1} = {0}."
                        "".format(self._divisors[i], i + 1, j + 1)
                    )
                if entry != self._table[j][i]:
                    raise InvalidTable(
                        "g_{0} * g_{1} != g_{1} * g_{0}.".format(i + 1, j + 1)
                    )
        for i in range(k):
            gen = _unit_vector(k, i)
            if self.mul(self._one, gen) != gen:
                raise InvalidTable(
                    "{} does not act as the identity on g_{}.".format(
                        self._one, i + 1
                    )
                )
        for i, j, l in itertools.product(range(k), repeat=3):
            left = self.mul(self._table[i][j], _unit_vector(k, l))
            right = self.mul(_unit_vector(k, i), self._table[j][l])
            if left != right:
                raise InvalidTable(
                    "(g_{0} * g_{1}) * g_{2} != g_{0} * (g_{1} * g_{2})."
                    "".format(i + 1, j + 1, l + 1)
                )

    @property
    def divisors(self):
        # type: () -> Tuple[int, ...]
        """Return the orders of the additive generators."""
        return self._divisors

    @property
    def table(self):
        # type: () -> Tuple[Tuple[Vector, ...], ...]
        """Return the structure constants."""
        return self._table

    @property
    def one(self):
        # type: () -> Vector
        """Return the coordinates of the identity."""
        return self._one

    @property
    def k(self):
        # type: () -> int
        """Return the number of additive generators."""
        return len(self._divisors)

    @property
    def zero(self):
        # type: () -> Vector
        return (0,) * self.k

    @property
    def size(self):
        # type: () -> int
        """Return |R|."""
        return functools.reduce(operator.mul, self._divisors, 1)

    def is_zero_ring(self):
        # type: () -> bool
        return not self._divisors

    def has_divisor_chain(self):
        # type: () -> bool
        """Return True if d_1 | d_2 | ... | d_k."""
        return all(
            b % a == 0 for a, b in zip(self._divisors, self._divisors[1:])
        )

    def basis_vector(self, i):
        # type: (int) -> Vector
        """Return the coordinates of the generator g_{i+1}."""
        return _unit_vector(self.k, i)

    def reduce(self, vector):
        # type: (Sequence[int]) -> Vector
        """Return the canonical coordinates of an integer vector."""
        return tuple(int(x) % d for x, d in zip(vector, self._divisors))

    def add(self, x, y):
        # type: (Sequence[int], Sequence[int]) -> Vector
        return self.reduce([a + b for a, b in zip(x, y)])

    def sub(self, x, y):
        # type: (Sequence[int], Sequence[int]) -> Vector
        return self.reduce([a - b for a, b in zip(x, y)])

    def scale(self, factor, x):
        # type: (int, Sequence[int]) -> Vector
        return self.reduce([factor * a for a in x])

    def mul(self, x, y):
        # type: (Sequence[int], Sequence[int]) -> Vector
        """Return the product of two elements."""
        out = [0] * self.k
        for i, xi in enumerate(x):
            if not xi:
                continue
            row = self._table[i]
            for j, yj in enumerate(y):
                if not yj:
                    continue
                c = xi * yj
                for l, g in enumerate(row[j]):
                    if g:
                        out[l] += c * g
        return self.reduce(out)

    def power(self, x, exponent):
        # type: (Sequence[int], int) -> Vector
        """Return x raised to a nonnegative integer power."""
        result = self._one
        base = self.reduce(x)
        while exponent:
            if exponent & 1:
                result = self.mul(result, base)
            exponent >>= 1
            if exponent:
                base = self.mul(base, base)
        return result

    def elements(self):
        # type: () -> Iterator[Vector]
        """Iterate over all elements in lexicographic order."""
        return itertools.product(*(range(d) for d in self._divisors))

    @property
    def relations(self):
        # type: () -> Lattice
        """Return the lattice diag(d_1, ..., d_k) of additive relations."""
        if not self._divisors:
            return Lattice.span([], 0)
        return Lattice(IntMat.diagonal(self._divisors))

    def _span_ideal(self, vectors):
        # type: (Iterable[Sequence[int]]) -> FinIdeal
        """Return the ideal additively spanned by closed vectors."""
        columns = [tuple(v) for v in vectors] + list(self.relations.columns)
        return FinIdeal(self, Lattice.span(columns, self.k), check=False)

    def ideal(self, generators):
        # type: (Iterable[Sequence[int]]) -> FinIdeal
        """Return the ideal generated by some elements."""
        k = self.k
        return self._span_ideal(
            self.mul(g, _unit_vector(k, j))
            for g in generators
            for j in range(k)
        )

    def zero_ideal(self):
        # type: () -> FinIdeal
        return FinIdeal(self, self.relations, check=False)

    def whole_ideal(self):
        # type: () -> FinIdeal
        return FinIdeal(self, Lattice.standard(self.k), check=False)

    def is_field(self):
        # type: () -> bool
        """Return True if the ring is nonzero with no proper nonzero ideal."""
        if self.is_zero_ring():
            return False
        found = maximal_ideals(self)
        return len(found) == 1 and found[0].ideal.is_zero()

    @functools.cached_property
    def _maximal(self):
        # type: () -> Tuple[MaximalIdeal, ...]
        return _compute_maximal_ideals(self)

    @functools.cached_property
    def _principal(self):
        # type: () -> Tuple[FinIdeal, ...]
        found = {}  # type: Dict[FinIdeal, None]
        for x in self.elements():
            found.setdefault(self.ideal([x]), None)
        return tuple(sorted(found, key=_ideal_sort_key))

    @functools.cached_property
    def _generator_counts(self):
        # type: () -> Dict[FinIdeal, int]
        return _count_generators(self)

    def __eq__(self, other):
        if not isinstance(other, FinRing):
            return NotImplemented
        return (self._divisors, self._table, self._one) == (
            other.divisors,
            other.table,
            other.one,
        )

    def __ne__(self, other):
        if not isinstance(other, FinRing):
            return NotImplemented
        return not self == other

    def __hash__(self):
        return hash((self._divisors, self._table, self._one))

    def __repr__(self):
        return "FinRing(divisors={!r}, size={})".format(
            self._divisors, self.size
        )


class FinIdeal(object):
    """An ideal of a finite ring stored as a lattice containing the relations.
    """

    __slots__ = ("_owner", "_lat")

    def __init__(self, owner, lat, check=True):
        # type: (FinRing, Lattice, bool) -> None
        """Create an ideal from a lattice in the owner's coordinates.

        Raises:
            NotContained: Raised when the lattice misses the relations.
            NotClosed: Raised when the lattice is not closed under
                multiplication by the generators.
        """
        if check:
            if not owner.relations <= lat:
                raise NotContained(
                    "An ideal lattice must contain the relations {!r}.".format(
                        owner.divisors
                    )
                )
            for column in lat.columns:
                for j in range(owner.k):
                    product = owner.mul(column, owner.basis_vector(j))
                    if not lat_contains(lat, product):
                        raise NotClosed(
                            "{} * g_{} is not in the ideal.".format(
                                column, j + 1
                            )
                        )
        self._owner = owner
        self._lat = lat

    @property
    def owner(self):
        # type: () -> FinRing
        return self._owner

    @property
    def lat(self):
        # type: () -> Lattice
        return self._lat

    @property
    def size(self):
        # type: () -> int
        """Return the number of elements of the ideal."""
        return self._owner.size // self._lat.det

    @property
    def generators(self):
        # type: () -> Tuple[Vector, ...]
        """Return the nonzero reduced basis vectors; they generate I."""
        reduced = (self._owner.reduce(col) for col in self._lat.columns)
        return tuple(v for v in reduced if any(v))

    def elements(self):
        # type: () -> Iterator[Vector]
        """Iterate over the elements of the ideal without repetition."""
        owner = self._owner
        rows = self._lat.basis.rows
        columns = self._lat.columns
        ranges = [
            range(owner.divisors[i] // rows[i][i]) for i in range(owner.k)
        ]
        for coeffs in itertools.product(*ranges):
            yield owner.reduce(
                [
                    sum(c * col[r] for c, col in zip(coeffs, columns))
                    for r in range(owner.k)
                ]
            )

    def is_zero(self):
        # type: () -> bool
        return self._lat.det == self._owner.size

    def is_whole(self):
        # type: () -> bool
        return self._lat.det == 1

    def __contains__(self, element):
        return lat_contains(self._lat, element)

    def __add__(self, other):
        """Return the sum of two ideals."""
        _check_owner(self, other)
        return FinIdeal(
            self._owner, lat_sum(self._lat, other.lat), check=False
        )

    def __and__(self, other):
        """Return the intersection of two ideals."""
        _check_owner(self, other)
        return FinIdeal(
            self._owner, lat_intersect(self._lat, other.lat), check=False
        )

    def __le__(self, other):
        if not isinstance(other, FinIdeal):
            return NotImplemented
        return self._owner == other.owner and all(
            lat_contains(other.lat, col) for col in self._lat.columns
        )

    def __lt__(self, other):
        if not isinstance(other, FinIdeal):
            return NotImplemented
        return self <= other and self != other

    def __eq__(self, other):
        if not isinstance(other, FinIdeal):
            return NotImplemented
        return self._owner == other.owner and self._lat == other.lat

    def __ne__(self, other):
        if not isinstance(other, FinIdeal):
            return NotImplemented
        return not self == other

    def __hash__(self):
        return hash(self._lat)

    def __repr__(self):
        return "FinIdeal(size={}, generators={!r})".format(
            self.size, [list(g) for g in self.generators]
        )


def _ideal_sort_key(ideal):
    # type: (FinIdeal) -> Tuple
    return ideal.size, ideal.lat.basis.rows


def _check_owner(first, second):
    # type: (FinIdeal, FinIdeal) -> None
    if first.owner != second.owner:
        raise OwnerMismatch("The ideals belong to different rings.")


class MaximalIdeal(Record):
    """A maximal ideal m with residue field of size p^f."""

    ideal: FinIdeal
    p: Prime
    f: Positive

    @property
    def residue_size(self):
        # type: () -> int
        """Return |R/m|."""
        return self.p ** self.f


class Projection(object):
    """A surjective ring map onto a FinRing with a linear section.

    The map sends source coordinates x to U * x reduced mod the target
    divisors, where U comes from the Smith decomposition of the kernel.
    """

    __slots__ = ("_rows", "_target", "_lifts", "_kernel")

    def __init__(self, rows, target, lifts, kernel):
        # type: (Sequence[Vector], FinRing, Sequence[Vector], Lattice) -> None
        self._rows = tuple(rows)
        self._target = target
        self._lifts = tuple(lifts)
        self._kernel = kernel

    @property
    def target(self):
        # type: () -> FinRing
        return self._target

    @property
    def kernel(self):
        # type: () -> Lattice
        """Return the kernel lattice in source coordinates."""
        return self._kernel

    def __call__(self, vector):
        # type: (Sequence[int]) -> Vector
        """Return the image of a source element."""
        return self._target.reduce(
            [sum(a * b for a, b in zip(row, vector)) for row in self._rows]
        )

    def lift(self, vector):
        # type: (Sequence[int]) -> Vector
        """Return a source element mapping to the given target element."""
        out = [0] * self._kernel.dim
        for c, lift in zip(vector, self._lifts):
            if c:
                for r, a in enumerate(lift):
                    out[r] += c * a
        return tuple(out)

    def image(self, vectors):
        # type: (Iterable[Sequence[int]]) -> FinIdeal
        """Return the ideal of the target generated by images of vectors."""
        return self._target.ideal(self(v) for v in vectors)

    def preimage(self, ideal):
        # type: (FinIdeal) -> Lattice
        """Return the lattice of source elements mapping into an ideal."""
        columns = [self.lift(col) for col in ideal.lat.columns]
        return Lattice.span(
            columns + list(self._kernel.columns), self._kernel.dim
        )


def _present(dim, kernel, mul, one):
    # type: (int, Lattice, Callable, Sequence[int]) -> Tuple[FinRing, Any]
    """Return the ring Z^dim / kernel with the given product and identity.

    The Smith decomposition U * B * V = D of the kernel basis B gives the
    additive type: x maps to U * x mod D, and the columns of U^-1 lift the
    generators. Factors with d_i = 1 are dropped.
    """
    smith = smith_decomposition(kernel.basis)
    keep = [i for i, d in enumerate(smith.diagonal) if d > 1]
    divisors = tuple(smith.diagonal[i] for i in keep)
    rows = [smith.U.rows[i] for i in keep]
    lifts = [smith.U_inverse.column(i) for i in keep]

    def project(vector):
        return tuple(
            sum(a * b for a, b in zip(row, vector)) % d
            for row, d in zip(rows, divisors)
        )

    table = [[project(mul(a, b)) for b in lifts] for a in lifts]
    ring = FinRing(divisors, table, project(one))
    return ring, Projection(rows, ring, lifts, kernel)


def present_finring(divisors, table, one):
    # type: (Sequence[int], Sequence, Sequence[int]) -> Tuple[FinRing, Any]
    """Return a ring with a divisor chain isomorphic to raw ring data.

    Returns:
        The normalized ring and the Projection from raw coordinates onto it.

    Raises:
        InvalidTable: Raised when the data does not define a ring.
    """
    raw = FinRing(divisors, table, one)
    return _present(raw.k, raw.relations, raw.mul, raw.one)


def finring_from_table(divisors, table, one):
    # type: (Sequence[int], Sequence, Sequence[int]) -> FinRing
    """Return a validated finite ring whose divisors form a chain.

    Raw data whose divisors do not divide each other in order is normalized
    through a Smith presentation; the result is isomorphic to the input.

    Raises:
        InvalidTable: Raised when the data does not define a ring.
    """
    raw = FinRing(divisors, table, one)
    if raw.has_divisor_chain():
        return raw
    ring, _ = _present(raw.k, raw.relations, raw.mul, raw.one)
    return ring


def quotient_ring(order, ideal):
    # type: (Order, OrderIdeal) -> Tuple[FinRing, Projection]
    """Return R/I for a nonzero ideal I of an order, and the projection.

    >>> from ringrank.orders import ideal_from_gens, order_from_poly
    >>> gaussian = order_from_poly([1, 0, 1])
    >>> quotient_ring(gaussian, ideal_from_gens(gaussian, [(3, 0)]))[0]
    FinRing(divisors=(3, 3), size=9)

    Raises:
        OwnerMismatch: Raised when the ideal belongs to another order.
    """
    if ideal.owner != order:
        raise OwnerMismatch("The ideal does not belong to the order.")
    return _present(order.degree, ideal.lat, order.mul, order.one)


def finring_quotient(ring, ideal):
    # type: (FinRing, FinIdeal) -> Tuple[FinRing, Projection]
    """Return R/J for an ideal J of a finite ring, and the projection."""
    if ideal.owner != ring:
        raise OwnerMismatch("The ideal does not belong to the ring.")
    return _present(ring.k, ideal.lat, ring.mul, ring.one)


def finring_product(first, second):
    # type: (FinRing, FinRing) -> FinRing
    """Return the product ring R1 x R2 with a divisor chain."""
    k1 = first.k
    divisors = first.divisors + second.divisors
    relations = (
        Lattice(IntMat.diagonal(divisors))
        if divisors
        else Lattice.span([], 0)
    )

    def mul(x, y):
        return first.mul(x[:k1], y[:k1]) + second.mul(x[k1:], y[k1:])

    ring, _ = _present(
        len(divisors), relations, mul, first.one + second.one
    )
    return ring


def _nullspace_mod_p(rows, ncols, p):
    # type: (Sequence[Sequence[int]], int, int) -> List[Vector]
    """Return a basis of {x in F_p^ncols : M * x = 0} by row reduction."""
    m = [[x % p for x in row] for row in rows]
    pivots = []  # type: List[int]
    r = 0
    for col in range(ncols):
        if r == len(m):
            break
        pivot = next((i for i in range(r, len(m)) if m[i][col]), None)
        if pivot is None:
            continue
        m[r], m[pivot] = m[pivot], m[r]
        inv = pow(m[r][col], -1, p)
        m[r] = [(x * inv) % p for x in m[r]]
        for i in range(len(m)):
            if i != r and m[i][col]:
                factor = m[i][col]
                m[i] = [(a - factor * b) % p for a, b in zip(m[i], m[r])]
        pivots.append(col)
        r += 1
    basis = []
    for free in range(ncols):
        if free in pivots:
            continue
        v = [0] * ncols
        v[free] = 1
        for i, col in enumerate(pivots):
            v[col] = (-m[i][free]) % p
        basis.append(tuple(v))
    return basis


def _matmul_mod_p(a, b, p):
    # type: (List[List[int]], List[List[int]], int) -> List[List[int]]
    columns = list(zip(*b))
    return [
        [sum(x * y for x, y in zip(row, col)) % p for col in columns]
        for row in a
    ]


def _matpow_mod_p(matrix, exponent, p):
    # type: (List[List[int]], int, int) -> List[List[int]]
    n = len(matrix)
    result = [[int(i == j) for j in range(n)] for i in range(n)]
    base = matrix
    while exponent:
        if exponent & 1:
            result = _matmul_mod_p(result, base, p)
        exponent >>= 1
        if exponent:
            base = _matmul_mod_p(base, base, p)
    return result


def _nilradical_mod_p(algebra, p):
    # type: (FinRing, int) -> FinIdeal
    """Return the nilradical of an F_p-algebra as the kernel of Frobenius.

    x -> x^p is F_p-linear, and x is nilpotent iff some iterate kills it;
    the a-th iterate suffices in dimension a.
    """
    a = algebra.k
    images = [algebra.power(algebra.basis_vector(i), p) for i in range(a)]
    frobenius = [[images[j][i] for j in range(a)] for i in range(a)]
    iterate = _matpow_mod_p(frobenius, a, p)
    return algebra.ideal(_nullspace_mod_p(iterate, a, p))


def _minimal_polynomial(algebra, element, p):
    # type: (FinRing, Vector, int) -> List[int]
    """Return the monic minimal polynomial of an element, lowest first."""
    powers = [algebra.one]
    while True:
        powers.append(algebra.mul(powers[-1], element))
        rows = [[pw[i] for pw in powers] for i in range(algebra.k)]
        kernel = _nullspace_mod_p(rows, len(powers), p)
        if kernel:
            return list(kernel[0])


def _evaluate(algebra, coeffs, element):
    # type: (FinRing, Sequence[int], Vector) -> Vector
    """Return h(element) for coefficients given highest degree first."""
    value = algebra.zero
    for c in coeffs:
        value = algebra.add(
            algebra.mul(value, element), algebra.scale(int(c), algebra.one)
        )
    return value


def _sweep(algebra):
    # type: (FinRing) -> Iterator[Vector]
    """Yield the basis vectors, then sums of pairs, then every element."""
    k = algebra.k
    basis = [algebra.basis_vector(i) for i in range(k)]
    for v in basis:
        yield v
    for v, w in itertools.combinations(basis, 2):
        yield algebra.add(v, w)
    for v in algebra.elements():
        yield v


def _split_reduced(algebra, p):
    # type: (FinRing, int) -> List[Tuple[FinIdeal, int]]
    """Return the maximal ideals of a reduced F_p-algebra with degrees.

    An element whose minimal polynomial has several irreducible factors
    h_1, ..., h_s splits the algebra into the quotients by h_i(b); an element
    whose minimal polynomial is irreducible of full degree proves that the
    quotient is a field.
    """
    t = Symbol("t")
    found = []  # type: List[Tuple[FinIdeal, int]]
    pending = [algebra.zero_ideal()]
    while pending:
        current = pending.pop()
        residue, projection = finring_quotient(algebra, current)
        dim = residue.k
        if dim == 1:
            found.append((current, 1))
            continue
        for element in _sweep(residue):
            coeffs = _minimal_polynomial(residue, element, p)
            poly = Poly(list(reversed(coeffs)), t, modulus=p)
            _, factors = poly.factor_list()
            if len(factors) > 1:
                for factor, _ in factors:
                    value = _evaluate(residue, factor.all_coeffs(), element)
                    pending.append(
                        current + algebra.ideal([projection.lift(value)])
                    )
                logger.debug(
                    "split an F_%d-algebra of dimension %d into %d parts",
                    p,
                    dim,
                    len(factors),
                )
                break
            if poly.degree() == dim:
                found.append((current, dim))
                break
        else:
            raise InvariantViolation(
                "Could not split a reduced algebra of dimension {} over "
                "F_{}.".format(dim, p)
            )
    return found


def _compute_maximal_ideals(ring):
    # type: (FinRing) -> Tuple[MaximalIdeal, ...]
    """Return the maximal ideals, grouped by residue characteristic."""
    if ring.is_zero_ring():
        raise ZeroRing("The zero ring has no maximal ideals.")
    found = []
    for p in primefactors(ring.size):
        p = int(p)
        algebra, to_algebra = finring_quotient(
            ring, ring.ideal([ring.scale(p, ring.one)])
        )
        nilradical = _nilradical_mod_p(algebra, p)
        reduced, to_reduced = finring_quotient(algebra, nilradical)
        for ideal, degree in _split_reduced(reduced, p):
            in_algebra = FinIdeal(
                algebra, to_reduced.preimage(ideal), check=False
            )
            found.append(
                MaximalIdeal(
                    ideal=FinIdeal(
                        ring, to_algebra.preimage(in_algebra), check=False
                    ),
                    p=p,
                    f=degree,
                )
            )
    found.sort(key=lambda m: (m.p, _ideal_sort_key(m.ideal)))
    logger.debug("found %d maximal ideals in %r", len(found), ring)
    return tuple(found)


def maximal_ideals(ring):
    # type: (FinRing) -> List[MaximalIdeal]
    """Return every maximal ideal of a finite ring.

    For each prime p dividing |R| the algebra R/pR is formed, its nilradical
    is computed as the kernel of an iterate of Frobenius, and the reduced
    quotient is split into fields by factoring minimal polynomials of a
    deterministic sweep of elements. Each maximal ideal is pulled back to R.

    Raises:
        ZeroRing: Raised for the zero ring.
    """
    return list(ring._maximal)  # pylint: disable=protected-access


def jacobson_radical(ring):
    # type: (FinRing) -> FinIdeal
    """Return the intersection of all maximal ideals, the nilradical."""
    result = ring.whole_ideal()
    for maximal in maximal_ideals(ring):
        result = result & maximal.ideal
    return result


def local_idempotents(ring):
    # type: (FinRing) -> List[Tuple[MaximalIdeal, Vector]]
    """Return for each maximal ideal m the idempotent e with eR = R_m.

    Each idempotent is found modulo the radical by solving x + y = 1 with x
    in every other maximal ideal and y in m, then lifted by the iteration
    e <- 3e^2 - 2e^3 until it is fixed.
    """
    found = maximal_ideals(ring)
    if len(found) == 1:
        return [(found[0], ring.one)]
    result = []
    for i, maximal in enumerate(found):
        others = ring.whole_ideal()
        for j, other in enumerate(found):
            if j != i:
                others = others & other.ideal
        stacked = others.lat.basis.hstack(maximal.ideal.lat.basis)
        z = solve_in_span(stacked, ring.one)
        e = ring.reduce(others.lat.basis.mul_vec(z[: ring.k]))
        for _ in range(ring.size.bit_length() + 1):
            square = ring.mul(e, e)
            lifted = ring.sub(
                ring.scale(3, square), ring.scale(2, ring.mul(square, e))
            )
            if lifted == e:
                break
            e = lifted
        else:
            raise InvariantViolation(
                "Idempotent lifting did not converge at {!r}.".format(
                    maximal.ideal
                )
            )
        result.append((maximal, e))
    return result


def local_factors(ring):
    # type: (FinRing) -> List[Tuple[MaximalIdeal, FinRing]]
    """Return the local factors eR = R/(1 - e)R, one per maximal ideal."""
    factors = []
    for maximal, e in local_idempotents(ring):
        local, _ = finring_quotient(
            ring, ring.ideal([ring.sub(ring.one, e)])
        )
        factors.append((maximal, local))
    return factors


def length(ring):
    # type: (FinRing) -> int
    """Return the length of R as a module over itself.

    The length is the sum over maximal ideals m of log_{|R/m|} |eR| where e
    is the idempotent of the local factor at m.
    """
    if ring.is_zero_ring():
        return 0
    total = 0
    for maximal, e in local_idempotents(ring):
        total += exact_log(ring.ideal([e]).size, maximal.residue_size)
    return total


def ideal_product(first, second):
    # type: (FinIdeal, FinIdeal) -> FinIdeal
    """Return the product of two ideals of the same ring."""
    _check_owner(first, second)
    ring = first.owner
    return ring._span_ideal(  # pylint: disable=protected-access
        ring.mul(a, b) for a in first.generators for b in second.generators
    )


def ideal_power(ideal, exponent):
    # type: (FinIdeal, int) -> FinIdeal
    """Return I^n; I^0 is the whole ring."""
    result = ideal.owner.whole_ideal()
    for _ in range(exponent):
        result = ideal_product(result, ideal)
    return result


def _require_size(ring, cap, operation):
    # type: (FinRing, int, str) -> None
    if ring.size > cap:
        raise SizeCapExceeded(
            "{} refuses a ring of size {} above the cap {}.".format(
                operation, ring.size, cap
            )
        )


def nilpotency_index(ring, mode=ELEMENTWISE, cap=None):
    # type: (FinRing, str, Optional[int]) -> int
    """Return the nilpotency index of a nonzero finite ring.

    Args:
        ring: A nonzero finite ring.
        mode: ELEMENTWISE for the least n with x^n = 0 for every nilpotent
            x, found by brute force over the nilradical; IDEALWISE for the
            least n with N^n = 0 for the nilradical N.
        cap: The largest ring handled in elementwise mode; defaults to
            DEFAULT_NILPOTENCY_CAP.

    Raises:
        ZeroRing: Raised for the zero ring.
        SizeCapExceeded: Raised in elementwise mode above the cap.
    """
    if ring.is_zero_ring():
        raise ZeroRing("The zero ring has no nilpotency index.")
    radical = jacobson_radical(ring)
    if mode == IDEALWISE:
        index = 1
        power = radical
        while not power.is_zero():
            power = ideal_product(power, radical)
            index += 1
        return index
    if mode != ELEMENTWISE:
        raise ValueError(
            "Unknown nilpotency mode {!r}; use {!r} or {!r}.".format(
                mode, ELEMENTWISE, IDEALWISE
            )
        )
    _require_size(
        ring,
        config.DEFAULT_NILPOTENCY_CAP if cap is None else cap,
        "Elementwise nilpotency",
    )
    index = 1
    for x in radical.elements():
        n = 1
        power = x
        while any(power):
            power = ring.mul(power, x)
            n += 1
        index = max(index, n)
    return index


def mu_fin(ring, ideal):
    # type: (FinRing, FinIdeal) -> int
    """Return the minimal number of generators of an ideal by Nakayama.

    The count is the largest dim_{R/m} I/mI over the maximal ideals m.

    >>> ring = finring_from_table([8], [[[1]]], [1])
    >>> mu_fin(ring, ring.ideal([(2,)]))
    1
    """
    if ideal.owner != ring:
        raise OwnerMismatch("The ideal does not belong to the ring.")
    if ideal.is_zero():
        return 0
    best = 0
    for maximal in maximal_ideals(ring):
        smaller = ideal_product(maximal.ideal, ideal)
        best = max(
            best,
            exact_log(ideal.size // smaller.size, maximal.residue_size),
        )
    return best


def _count_generators(ring):
    # type: (FinRing) -> Dict[FinIdeal, int]
    """Map every ideal to its minimal number of generators.

    Level g holds the ideals that are sums of g principal ideals and of no
    fewer; each level is the previous level plus one principal ideal. Every
    ideal is a finite sum of principal ideals, so all ideals are reached.
    """
    principal = ring._principal  # pylint: disable=protected-access
    zero = ring.zero_ideal()
    counts = {zero: 0}
    frontier = [zero]
    level = 0
    while frontier:
        level += 1
        found = {}  # type: Dict[FinIdeal, None]
        for ideal in frontier:
            for extra in principal:
                if extra <= ideal:
                    continue
                total = ideal + extra
                if total not in counts:
                    found.setdefault(total, None)
        for ideal in found:
            counts[ideal] = level
        frontier = sorted(found, key=_ideal_sort_key)
        logger.debug("level %d adds %d ideals", level, len(frontier))
    return counts


def enumerate_ideals(ring, cap=None):
    # type: (FinRing, Optional[int]) -> List[FinIdeal]
    """Return every ideal of a finite ring, smallest first.

    The ideals are found by a breadth-first search from the zero ideal that
    adds one principal ideal at a time, deduplicated by canonical lattice.

    Raises:
        SizeCapExceeded: Raised when |R| exceeds the cap.
    """
    _require_size(ring, config.max_ring_size(cap), "Ideal enumeration")
    ideals = sorted(
        ring._generator_counts,  # pylint: disable=protected-access
        key=_ideal_sort_key,
    )
    logger.debug("%r has %d ideals", ring, len(ideals))
    return ideals


def mu_exhaustive(ring, ideal, cap=None):
    # type: (FinRing, FinIdeal, Optional[int]) -> int
    """Return the least g such that g elements of I generate I.

    The search tries g = 1, 2, ... and stops at the first g for which I is a
    sum of g principal ideals generated by elements of I.

    Raises:
        SizeCapExceeded: Raised when |R| exceeds the cap.
    """
    if ideal.owner != ring:
        raise OwnerMismatch("The ideal does not belong to the ring.")
    _require_size(ring, config.max_ring_size(cap), "Exhaustive search")
    if ideal.is_zero():
        return 0
    inside = [
        p
        for p in ring._principal  # pylint: disable=protected-access
        if p <= ideal and not p.is_zero()
    ]
    level = set(inside)
    count = 1
    while ideal not in level:
        level = {
            total + extra
            for total in level
            for extra in inside
            if not extra <= total
        }
        count += 1
        if not level:
            raise InvariantViolation(
                "{!r} is not a sum of principal ideals.".format(ideal)
            )
    return count


def rank_fin_exhaustive(ring, cap=None):
    # type: (FinRing, Optional[int]) -> int
    """Return the largest minimal generator count over all ideals.

    The zero ring has rank 0.

    Raises:
        SizeCapExceeded: Raised when |R| exceeds the cap.
    """
    _require_size(ring, config.max_ring_size(cap), "Exhaustive rank")
    return max(
        ring._generator_counts.values()  # pylint: disable=protected-access
    )


def zero_divisors(ring, cap=None):
    # type: (FinRing, Optional[int]) -> List[Vector]
    """Return the nonzero zero divisors of a finite ring.

    In a finite ring an element is a zero divisor iff it is not a unit, i.e.
    iff it lies in some maximal ideal.

    Raises:
        SizeCapExceeded: Raised when |R| exceeds the cap.
    """
    _require_size(ring, config.max_ring_size(cap), "Zero divisor listing")
    if ring.is_zero_ring():
        return []
    found = maximal_ideals(ring)
    return [
        x
        for x in ring.elements()
        if any(x) and any(x in m.ideal for m in found)
    ]
