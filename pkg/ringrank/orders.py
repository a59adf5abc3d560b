# -*- coding: utf-8 -*-
"""A module containing Z-orders given by multiplication tables.

An order of degree N is a commutative ring that is free of rank N over Z. It
is stored by its structure constants: e_i * e_j = sum_k table[i][j][k] e_k,
and the first basis vector e_1 is always the identity. Suborders of an order
are presented twice: intrinsically by their own table and extrinsically by
their lattice inside the ambient order.

Classes:
    Order: A commutative order with a validated multiplication table.
    EmbeddedOrder: A suborder together with its ambient order and lattice.
    OrderIdeal: A nonzero ideal of an order stored as a lattice.
    PrimeSpot: A maximal ideal of an order with its residue characteristic
        and residue degree.
    Conductor: The conductor of a suborder in both coordinate systems.

Functions:
    order_from_poly: Return the power-basis order Z[x]/(f) of a monic f.
    order_from_table: Return the order with an explicit table.
    elt_mul: Multiply two elements of an order.
    suborder_from_lattice: Return the suborder spanned by a lattice.
    unit_ideal: Return the unit ideal of an order.
    ideal_from_gens: Return the smallest ideal containing some elements.
    ideal_sum: Return the sum of two ideals.
    ideal_mul: Return the product of two ideals.
    ideal_pow: Return a power of an ideal.
    ideal_norm: Return the index of an ideal in its order.
    prime_spot: Return the PrimeSpot of a maximal ideal.
    conductor: Return the conductor of a suborder in its ambient order.
"""

from __future__ import absolute_import
from __future__ import unicode_literals

from typing import (  # noqa: F401 pylint: disable=unused-import
    Iterable,
    List,
    Optional,
    Sequence,
    Tuple,
)
import logging

from sympy import Poly, Symbol, factorint
from sympy.polys.domains import ZZ

from .errors import (
    BadDegree,
    DimensionMismatch,
    InvalidTable,
    InvariantViolation,
    MissingIdentity,
    NotClosed,
    NotContained,
    NotMonic,
    OwnerMismatch,
    ZeroIdeal,
)
from .latcore import (
    IntMat,
    Lattice,
    lat_contains,
    lat_index,
    lat_intersect,
    lat_preimage,
    lat_sum,
)
from .records import Record
from .validation import Positive, Prime


__all__ = (
    "Order",
    "EmbeddedOrder",
    "OrderIdeal",
    "PrimeSpot",
    "Conductor",
    "order_from_poly",
    "order_from_table",
    "elt_mul",
    "suborder_from_lattice",
    "unit_ideal",
    "ideal_from_gens",
    "ideal_sum",
    "ideal_mul",
    "ideal_pow",
    "ideal_norm",
    "prime_spot",
    "conductor",
)

logger = logging.getLogger(__name__)

Vector = Tuple[int, ...]
Table = Tuple[Tuple[Vector, ...], ...]


def _unit_vector(n, i):
    # type: (int, int) -> Vector
    return tuple(int(k == i) for k in range(n))


def _mul(table, x, y):
    # type: (Table, Sequence[int], Sequence[int]) -> Vector
    """Multiply two coordinate vectors through a table."""
    out = [0] * len(table)
    for i, xi in enumerate(x):
        if not xi:
            continue
        row = table[i]
        for j, yj in enumerate(y):
            if not yj:
                continue
            c = xi * yj
            for k, g in enumerate(row[j]):
                if g:
                    out[k] += c * g
    return tuple(out)


def _validate_table(table):
    # type: (Table) -> None
    """Raise InvalidTable unless the table defines a commutative ring.

    Checks the shape, that e_1 is the identity, commutativity of the basis
    products and associativity on every basis triple.
    """
    n = len(table)
    if n == 0:
        raise InvalidTable("An order has degree at least 1.")
    for i, row in enumerate(table):
        if len(row) != n or any(len(entry) != n for entry in row):
            raise InvalidTable(
                "Row {} of the table is not {} by {}.".format(i, n, n)
            )
    for i in range(n):
        if table[0][i] != _unit_vector(n, i):
            raise InvalidTable(
                "e_1 * e_{} = {} but e_1 must be the identity.".format(
                    i + 1, table[0][i]
                )
            )
        for j in range(i + 1, n):
            if table[i][j] != table[j][i]:
                raise InvalidTable(
                    "e_{0} * e_{1} != e_{1} * e_{0}.".format(i + 1, j + 1)
                )
    for i in range(1, n):
        for j in range(i, n):
            for k in range(1, n):
                left = _mul(table, table[i][j], _unit_vector(n, k))
                right = _mul(table, _unit_vector(n, i), table[j][k])
                if left != right:
                    raise InvalidTable(
                        "(e_{0} * e_{1}) * e_{2} != e_{0} * (e_{1} * e_{2})."
                        "".format(i + 1, j + 1, k + 1)
                    )


class Order(object):
    """A commutative ring free of finite rank over Z with a basis table.

    >>> gaussian = order_from_poly([1, 0, 1])
    >>> gaussian.mul((0, 1), (0, 1))
    (-1, 0)
    """

    __slots__ = ("_table", "_hash")

    def __init__(self, table, validate=True):
        # type: (Iterable[Iterable[Iterable[int]]], bool) -> None
        """Create an order from its structure constants.

        Args:
            table: A nested N by N by N sequence of integers with
                e_i * e_j = sum_k table[i][j][k] * e_k.
            validate: If True, check the ring axioms.

        Raises:
            InvalidTable: Raised when the table is malformed or violates a
                ring axiom.
        """
        try:
            self._table = tuple(
                tuple(tuple(int(g) for g in entry) for entry in row)
                for row in table
            )  # type: Table
        except (TypeError, ValueError) as exc:
            raise InvalidTable("Malformed table: {}".format(exc))
        if validate:
            _validate_table(self._table)
        self._hash = hash(self._table)

    @property
    def table(self):
        # type: () -> Table
        """Return the structure constants."""
        return self._table

    @property
    def degree(self):
        # type: () -> int
        """Return the rank N of the order over Z."""
        return len(self._table)

    @property
    def one(self):
        # type: () -> Vector
        """Return the coordinates of the identity."""
        return _unit_vector(self.degree, 0)

    @property
    def zero(self):
        # type: () -> Vector
        return (0,) * self.degree

    def basis_vector(self, i):
        # type: (int) -> Vector
        """Return the coordinates of e_{i+1}."""
        return _unit_vector(self.degree, i)

    def full_lattice(self):
        # type: () -> Lattice
        """Return the lattice of the whole order, Z^N."""
        return Lattice.standard(self.degree)

    def mul(self, x, y):
        # type: (Sequence[int], Sequence[int]) -> Vector
        """Return the product of two elements.

        Raises:
            DimensionMismatch: Raised when a vector does not have length N.
        """
        n = self.degree
        if len(x) != n or len(y) != n:
            raise DimensionMismatch(
                "Elements of a degree {} order need {} coordinates, got {} "
                "and {}.".format(n, n, len(x), len(y))
            )
        return _mul(self._table, x, y)

    def power(self, x, exponent):
        # type: (Sequence[int], int) -> Vector
        """Return x raised to a nonnegative integer power."""
        result = self.one
        base = tuple(x)
        while exponent:
            if exponent & 1:
                result = self.mul(result, base)
            exponent >>= 1
            if exponent:
                base = self.mul(base, base)
        return result

    def mult_matrix(self, element):
        # type: (Sequence[int]) -> IntMat
        """Return the matrix of multiplication by element in the basis."""
        return IntMat.from_columns(
            [
                self.mul(element, self.basis_vector(j))
                for j in range(self.degree)
            ],
            self.degree,
        )

    def __eq__(self, other):
        if not isinstance(other, Order):
            return NotImplemented
        return self._table == other.table

    def __ne__(self, other):
        if not isinstance(other, Order):
            return NotImplemented
        return not self == other

    def __hash__(self):
        return self._hash

    def __repr__(self):
        return "Order(degree={}, table={!r})".format(
            self.degree, [[list(e) for e in row] for row in self._table]
        )


def order_from_table(table):
    # type: (Iterable[Iterable[Iterable[int]]]) -> Order
    """Return the order with the given structure constants.

    Raises:
        InvalidTable: Raised when the table violates a ring axiom.
    """
    return Order(table)


def order_from_poly(coeffs):
    # type: (Sequence[int]) -> Order
    """Return the power-basis order Z[x]/(f).

    Args:
        coeffs: The coefficients c_0, ..., c_N of f, lowest degree first.
            The last coefficient must be 1.

    Returns:
        The order with basis 1, x, ..., x^(N-1), whose table entries are the
        coordinates of x^(i+j) reduced mod f.

    Raises:
        NotMonic: Raised when f is not monic.
        BadDegree: Raised when f is constant.
    """
    coeffs = [int(c) for c in coeffs]
    if len(coeffs) < 2:
        raise BadDegree(
            "A defining polynomial needs degree at least 1, got {}.".format(
                coeffs
            )
        )
    if coeffs[-1] != 1:
        raise NotMonic(
            "The polynomial with coefficients {} is not monic.".format(coeffs)
        )
    x = Symbol("x")
    f = Poly(list(reversed(coeffs)), x, domain=ZZ)
    n = f.degree()
    powers = []
    for exponent in range(2 * n - 1):
        rem = Poly(x ** exponent, x, domain=ZZ).rem(f)
        low = [int(c) for c in reversed(rem.all_coeffs())]
        powers.append(tuple(low + [0] * (n - len(low))))
    return Order(
        [[powers[i + j] for j in range(n)] for i in range(n)], validate=False
    )


def elt_mul(order, x, y):
    # type: (Order, Sequence[int], Sequence[int]) -> Vector
    """Return the product x * y in the order.

    Raises:
        DimensionMismatch: Raised when a vector does not have length N.
    """
    return order.mul(x, y)


class EmbeddedOrder(Record):
    """A suborder R together with its ambient order S.

    The lattice is the set of S-coordinates of R. Its Hermite basis is the
    embedding matrix and its first column is the identity.
    """

    order: Order
    ambient: Order
    lattice: Lattice

    @property
    def index(self):
        # type: () -> int
        """Return [S : R]."""
        return self.lattice.det

    def to_ambient(self, vector):
        # type: (Sequence[int]) -> Vector
        """Return the S-coordinates of an element given in R-coordinates."""
        return self.lattice.basis.mul_vec(vector)

    def from_ambient(self, vector):
        # type: (Sequence[int]) -> Vector
        """Return the R-coordinates of an element of S lying in R.

        Raises:
            NotContained: Raised when the element is not in R.
        """
        return self.lattice.coordinates(vector)


def suborder_from_lattice(ambient, lattice):
    # type: (Order, Lattice) -> EmbeddedOrder
    """Return the suborder of an order whose elements form a lattice.

    Args:
        ambient: The order S.
        lattice: A lattice in S-coordinates that contains 1 and is closed
            under multiplication.

    Returns:
        An EmbeddedOrder whose order has the table of S written in the
        Hermite basis of the lattice.

    Raises:
        MissingIdentity: Raised when 1 is not in the lattice.
        NotClosed: Raised when a product of basis vectors leaves the lattice.
    """
    n = ambient.degree
    if lattice.dim != n:
        raise DimensionMismatch(
            "A lattice of dimension {} cannot be a suborder of a degree {} "
            "order.".format(lattice.dim, n)
        )
    if not lat_contains(lattice, ambient.one):
        raise MissingIdentity(
            "The identity is not in {!r}.".format(lattice)
        )
    columns = lattice.columns
    table = []
    for i in range(n):
        row = []
        for j in range(n):
            product = ambient.mul(columns[i], columns[j])
            try:
                row.append(lattice.coordinates(product))
            except NotContained:
                raise NotClosed(
                    "The product of basis vectors {} and {} is {}, which is "
                    "not in the lattice.".format(
                        columns[i], columns[j], product
                    )
                )
        table.append(row)
    logger.debug("suborder of index %d in degree %d", lattice.det, n)
    return EmbeddedOrder(order=Order(table), ambient=ambient, lattice=lattice)


class OrderIdeal(object):
    """A nonzero ideal of an order stored as a full-rank lattice."""

    __slots__ = ("_owner", "_lat")

    def __init__(self, owner, lat, check=True):
        # type: (Order, Lattice, bool) -> None
        """Create an ideal from a lattice in the owner's coordinates.

        Args:
            owner: The order containing the ideal.
            lat: A full-rank lattice of dimension N.
            check: If True, verify closure under multiplication by the basis
                of the owner.

        Raises:
            DimensionMismatch: Raised when the lattice has the wrong
                dimension.
            NotClosed: Raised when the lattice is not an ideal.
        """
        if lat.dim != owner.degree:
            raise DimensionMismatch(
                "An ideal of a degree {} order needs a lattice of dimension "
                "{}, got {}.".format(owner.degree, owner.degree, lat.dim)
            )
        if check:
            for column in lat.columns:
                for j in range(1, owner.degree):
                    product = owner.mul(owner.basis_vector(j), column)
                    if not lat_contains(lat, product):
                        raise NotClosed(
                            "e_{} * {} = {} is not in the ideal.".format(
                                j + 1, column, product
                            )
                        )
        self._owner = owner
        self._lat = lat

    @property
    def owner(self):
        # type: () -> Order
        return self._owner

    @property
    def lat(self):
        # type: () -> Lattice
        return self._lat

    @property
    def norm(self):
        # type: () -> int
        """Return [R : I]."""
        return self._lat.det

    @property
    def generators(self):
        # type: () -> Tuple[Vector, ...]
        """Return the Hermite basis vectors, which generate the ideal."""
        return self._lat.columns

    def is_unit(self):
        # type: () -> bool
        """Return True if the ideal is the whole order."""
        return self.norm == 1

    def __contains__(self, element):
        return lat_contains(self._lat, element)

    def __le__(self, other):
        if not isinstance(other, OrderIdeal):
            return NotImplemented
        return self._owner == other.owner and self._lat <= other.lat

    def __eq__(self, other):
        if not isinstance(other, OrderIdeal):
            return NotImplemented
        return self._owner == other.owner and self._lat == other.lat

    def __ne__(self, other):
        if not isinstance(other, OrderIdeal):
            return NotImplemented
        return not self == other

    def __hash__(self):
        return hash((self._owner, self._lat))

    def __repr__(self):
        return "OrderIdeal(norm={}, basis={!r})".format(
            self.norm, [list(col) for col in self._lat.columns]
        )


def _check_owner(first, second):
    # type: (OrderIdeal, OrderIdeal) -> None
    if first.owner != second.owner:
        raise OwnerMismatch("The ideals belong to different orders.")


def unit_ideal(order):
    # type: (Order) -> OrderIdeal
    """Return the ideal (1) of an order."""
    return OrderIdeal(order, order.full_lattice(), check=False)


def ideal_from_gens(order, gens):
    # type: (Order, Iterable[Sequence[int]]) -> OrderIdeal
    """Return the smallest ideal of an order containing the generators.

    >>> gaussian = order_from_poly([1, 0, 1])
    >>> ideal_from_gens(gaussian, [(3, 0)]).norm
    9

    Raises:
        ZeroIdeal: Raised when every generator is zero.
        RankDeficient: Raised when the order has zero divisors that make the
            span degenerate.
    """
    gens = [tuple(g) for g in gens]
    if not any(any(g) for g in gens):
        raise ZeroIdeal("An ideal needs at least one nonzero generator.")
    n = order.degree
    vectors = [
        order.mul(g, order.basis_vector(j)) for g in gens for j in range(n)
    ]
    return OrderIdeal(order, Lattice.span(vectors, n), check=False)


def ideal_sum(first, second):
    # type: (OrderIdeal, OrderIdeal) -> OrderIdeal
    """Return I + J.

    Raises:
        OwnerMismatch: Raised when the ideals belong to different orders.
    """
    _check_owner(first, second)
    return OrderIdeal(
        first.owner, lat_sum(first.lat, second.lat), check=False
    )


def ideal_mul(first, second):
    # type: (OrderIdeal, OrderIdeal) -> OrderIdeal
    """Return I * J, spanned by pairwise products of basis vectors.

    Raises:
        OwnerMismatch: Raised when the ideals belong to different orders.
    """
    _check_owner(first, second)
    order = first.owner
    if first.is_unit():
        return second
    if second.is_unit():
        return first
    vectors = [
        order.mul(a, b) for a in first.generators for b in second.generators
    ]
    return OrderIdeal(order, Lattice.span(vectors, order.degree), check=False)


def ideal_pow(ideal, exponent):
    # type: (OrderIdeal, int) -> OrderIdeal
    """Return I^k by repeated squaring; I^0 is the unit ideal."""
    if exponent < 0:
        raise ValueError(
            "Ideal powers need a nonnegative exponent, got {}.".format(
                exponent
            )
        )
    result = unit_ideal(ideal.owner)
    base = ideal
    while exponent:
        if exponent & 1:
            result = ideal_mul(result, base)
        exponent >>= 1
        if exponent:
            base = ideal_mul(base, base)
    return result


def ideal_norm(ideal):
    # type: (OrderIdeal) -> int
    """Return the index [R : I] of an ideal in its order."""
    return lat_index(ideal.owner.full_lattice(), ideal.lat)


class PrimeSpot(Record):
    """A maximal ideal P of an order with |R/P| = p^f."""

    ideal: OrderIdeal
    p: Prime
    f: Positive

    def __init__(self, *args, **kwargs):
        """Create the record and check that [R : P] = p^f.

        Raises:
            InvariantViolation: Raised when the norm is not p^f.
        """
        super(PrimeSpot, self).__init__(*args, **kwargs)
        if self.ideal.norm != self.p ** self.f:
            raise InvariantViolation(
                "The prime {!r} has norm {}, not {}^{}.".format(
                    self.ideal, self.ideal.norm, self.p, self.f
                )
            )

    @property
    def residue_size(self):
        # type: () -> int
        """Return |R/P|."""
        return self.p ** self.f


def prime_spot(ideal, verify=True):
    # type: (OrderIdeal, bool) -> PrimeSpot
    """Return the PrimeSpot of a maximal ideal.

    Args:
        ideal: A maximal ideal of an order.
        verify: If True, check that the quotient is a field.

    Raises:
        InvariantViolation: Raised when the ideal is not maximal.
    """
    factors = factorint(ideal.norm)
    if len(factors) != 1:
        raise InvariantViolation(
            "{!r} has norm {}, which is not a prime power.".format(
                ideal, ideal.norm
            )
        )
    ((p, f),) = factors.items()
    if verify:
        from .finring import quotient_ring  # pylint: disable=cyclic-import

        residue, _ = quotient_ring(ideal.owner, ideal)
        if not residue.is_field():
            raise InvariantViolation(
                "The quotient by {!r} is not a field.".format(ideal)
            )
    return PrimeSpot(ideal=ideal, p=int(p), f=int(f))


class Conductor(Record):
    """The conductor c of R in S, as an ideal of S and as an ideal of R."""

    in_ambient: OrderIdeal
    in_order: OrderIdeal
    index: int

    def is_unit(self):
        # type: () -> bool
        """Return True if c = R, i.e. R = S."""
        return self.index == 1


def conductor(embedded, ambient=None):
    # type: (EmbeddedOrder, Optional[Order]) -> Conductor
    """Return the conductor {x in S : x * S is contained in R}.

    The conductor is the intersection over the basis vectors s_j of S of the
    preimages of R under multiplication by s_j. Both returned ideals are
    verified to be closed under multiplication.

    Args:
        embedded: The suborder R with its embedding in S.
        ambient: The order S; defaults to the ambient of embedded.

    Returns:
        A Conductor holding c in S-coordinates, c in R-coordinates and the
        index [R : c].

    Raises:
        OwnerMismatch: Raised when ambient is not the ambient of embedded.
    """
    big = embedded.ambient if ambient is None else ambient
    if big != embedded.ambient:
        raise OwnerMismatch(
            "The suborder is not embedded in the given ambient order."
        )
    sub_lattice = embedded.lattice
    result = sub_lattice
    for j in range(1, big.degree):
        result = lat_intersect(
            result,
            lat_preimage(big.mult_matrix(big.basis_vector(j)), sub_lattice),
        )
    in_order = Lattice.span(
        (sub_lattice.coordinates(col) for col in result.columns), big.degree
    )
    index = lat_index(sub_lattice, result)
    logger.debug("conductor of index %d in the suborder", index)
    return Conductor(
        in_ambient=OrderIdeal(big, result),
        in_order=OrderIdeal(embedded.order, in_order),
        index=index,
    )
