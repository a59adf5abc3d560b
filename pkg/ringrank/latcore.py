# -*- coding: utf-8 -*-
"""A module containing exact integer matrix and lattice algebra.

All arithmetic is done with Python integers; nothing in ringrank uses
floating point. Lattices are full-rank sublattices of Z^N stored by their
canonical column Hermite form: upper triangular, positive diagonal, and each
entry right of a pivot reduced into [0, pivot). Two lattices are equal iff
their stored bases are equal entrywise.

Classes:
    IntMat: An immutable integer matrix.
    Lattice: A full-rank sublattice of Z^N in canonical column Hermite form.
    SmithForm: The invariant factors of a square matrix and the unimodular
        transforms that produce them.

Functions:
    hnf: Return the canonical column Hermite form of a matrix's column span.
    snf_diag: Return the Smith invariant factors of a nonsingular matrix.
    smith_decomposition: Return U, D, V with U * M * V = D, and U's inverse.
    lat_index: Return the index of an inner lattice in an outer lattice.
    lat_sum: Return the smallest lattice containing two lattices.
    lat_intersect: Return the largest lattice contained in two lattices.
    lat_preimage: Return the lattice of vectors mapped into a lattice.
    lat_contains: Determine if a vector lies in a lattice.
    kernel_basis: Return a basis of the integer kernel of a matrix.
    solve_in_span: Return an integer solution of M * z = v.
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
import functools
import logging
import operator

from sympy.core.intfunc import igcdex
from sympy.polys.domains import ZZ
from sympy.polys.matrices import DomainMatrix
from sympy.polys.matrices.normalforms import hermite_normal_form

from .errors import (
    DimensionMismatch,
    NotContained,
    NotInSpan,
    RankDeficient,
    Singular,
)
from .records import Record


__all__ = (
    "IntMat",
    "Lattice",
    "SmithForm",
    "hnf",
    "snf_diag",
    "smith_decomposition",
    "lat_index",
    "lat_sum",
    "lat_intersect",
    "lat_preimage",
    "lat_contains",
    "kernel_basis",
    "solve_in_span",
)

logger = logging.getLogger(__name__)

Vector = Tuple[int, ...]


def _check_int(value):
    # type: (object) -> int
    """Return value if it is an exact integer, else raise TypeError."""
    if isinstance(value, bool) or not isinstance(value, int):
        raise TypeError(
            "Matrix entries must be integers, not {!r}.".format(value)
        )
    return value


class IntMat(object):
    """An immutable matrix of arbitrary-precision integers.

    Entries are stored row-major. A matrix with no columns is allowed and
    stands for the span of no vectors.
    """

    __slots__ = ("_rows", "_ncols")

    def __init__(self, rows, ncols=None):
        # type: (Iterable[Iterable[int]], Optional[int]) -> None
        """Create a matrix from an iterable of rows.

        Args:
            rows: The rows of the matrix.
            ncols: The number of columns, required only when every row is
                empty or there are no rows.

        Raises:
            DimensionMismatch: Raised when the rows have different lengths.
            TypeError: Raised when an entry is not an integer.
        """
        self._rows = tuple(
            tuple(_check_int(x) for x in row) for row in rows
        )  # type: Tuple[Vector, ...]
        widths = {len(row) for row in self._rows}
        if len(widths) > 1:
            raise DimensionMismatch(
                "Rows of an IntMat must have equal length, got {}.".format(
                    sorted(widths)
                )
            )
        if self._rows:
            self._ncols = widths.pop()
        else:
            self._ncols = ncols or 0
        if ncols is not None and ncols != self._ncols:
            raise DimensionMismatch(
                "Expected {} columns, got {}.".format(ncols, self._ncols)
            )

    @classmethod
    def from_columns(cls, columns, nrows):
        # type: (Sequence[Sequence[int]], int) -> IntMat
        """Create a matrix whose columns are the given vectors."""
        for col in columns:
            if len(col) != nrows:
                raise DimensionMismatch(
                    "Column {} does not have {} entries.".format(
                        tuple(col), nrows
                    )
                )
        return cls(
            (tuple(col[i] for col in columns) for i in range(nrows)),
            ncols=len(columns),
        )

    @classmethod
    def identity(cls, n):
        # type: (int) -> IntMat
        """Return the n by n identity matrix."""
        return cls.diagonal([1] * n)

    @classmethod
    def diagonal(cls, values):
        # type: (Sequence[int]) -> IntMat
        """Return the square diagonal matrix with the given diagonal."""
        n = len(values)
        return cls(
            ([values[i] if i == j else 0 for j in range(n)] for i in range(n)),
            ncols=n,
        )

    @property
    def rows(self):
        # type: () -> Tuple[Vector, ...]
        """Return the rows of the matrix."""
        return self._rows

    @property
    def nrows(self):
        # type: () -> int
        """Return the number of rows."""
        return len(self._rows)

    @property
    def ncols(self):
        # type: () -> int
        """Return the number of columns."""
        return self._ncols

    @property
    def shape(self):
        # type: () -> Tuple[int, int]
        """Return the pair (rows, columns)."""
        return self.nrows, self.ncols

    def column(self, j):
        # type: (int) -> Vector
        """Return column j as a tuple."""
        return tuple(row[j] for row in self._rows)

    def columns(self):
        # type: () -> Tuple[Vector, ...]
        """Return all columns as tuples."""
        return tuple(self.column(j) for j in range(self._ncols))

    def transpose(self):
        # type: () -> IntMat
        """Return the transposed matrix."""
        return IntMat(self.columns(), ncols=self.nrows)

    def mul_vec(self, vector):
        # type: (Sequence[int]) -> Vector
        """Return the product of the matrix and a column vector."""
        if len(vector) != self._ncols:
            raise DimensionMismatch(
                "Cannot multiply a {}x{} matrix by a vector of length "
                "{}.".format(self.nrows, self._ncols, len(vector))
            )
        return tuple(
            sum(a * b for a, b in zip(row, vector)) for row in self._rows
        )

    def __matmul__(self, other):
        # type: (IntMat) -> IntMat
        """Return the matrix product self @ other."""
        if self._ncols != other.nrows:
            raise DimensionMismatch(
                "Cannot multiply {}x{} by {}x{}.".format(
                    self.nrows, self._ncols, other.nrows, other.ncols
                )
            )
        cols = other.columns()
        return IntMat(
            (
                [sum(a * b for a, b in zip(row, col)) for col in cols]
                for row in self._rows
            ),
            ncols=other.ncols,
        )

    def hstack(self, other):
        # type: (IntMat) -> IntMat
        """Return the matrix with other's columns appended."""
        if self.nrows != other.nrows:
            raise DimensionMismatch(
                "Cannot join matrices with {} and {} rows.".format(
                    self.nrows, other.nrows
                )
            )
        return IntMat(
            (a + b for a, b in zip(self._rows, other.rows)),
            ncols=self._ncols + other.ncols,
        )

    def scaled(self, factor):
        # type: (int) -> IntMat
        """Return the matrix with every entry multiplied by factor."""
        return IntMat(
            ([factor * x for x in row] for row in self._rows),
            ncols=self._ncols,
        )

    def det(self):
        # type: () -> int
        """Return the determinant of a square matrix."""
        if self.nrows != self._ncols:
            raise DimensionMismatch(
                "Only square matrices have determinants, got {}x{}.".format(
                    self.nrows, self._ncols
                )
            )
        if not self._rows:
            return 1
        return int(_to_domain(self).det())

    def is_zero(self):
        # type: () -> bool
        """Return True if every entry is zero."""
        return not any(any(row) for row in self._rows)

    def __eq__(self, other):
        if not isinstance(other, IntMat):
            return NotImplemented
        return self.shape == other.shape and self._rows == other.rows

    def __ne__(self, other):
        if not isinstance(other, IntMat):
            return NotImplemented
        return not self == other

    def __hash__(self):
        return hash((self.shape, self._rows))

    def __repr__(self):
        return "IntMat({!r})".format([list(row) for row in self._rows])


def _to_domain(matrix):
    # type: (IntMat) -> DomainMatrix
    """Return the matrix as a sympy DomainMatrix over ZZ."""
    return DomainMatrix(
        [[ZZ(x) for x in row] for row in matrix.rows], matrix.shape, ZZ
    )


def _from_domain(domain_matrix):
    # type: (DomainMatrix) -> IntMat
    """Return a sympy DomainMatrix over ZZ as an IntMat."""
    nrows, ncols = domain_matrix.shape
    dense = domain_matrix.to_Matrix()
    return IntMat(
        ([int(dense[i, j]) for j in range(ncols)] for i in range(nrows)),
        ncols=ncols,
    )


def hnf(matrix, full_rank_required=False):
    # type: (IntMat, bool) -> IntMat
    """Return the canonical column Hermite form of a matrix's column span.

    The result has one column per unit of rank. For a full-rank span of Z^N
    it is N by N, upper triangular, with a positive diagonal and each entry
    right of the diagonal reduced into [0, diagonal entry).

    Args:
        matrix: A matrix with N rows whose columns span the module.
        full_rank_required: If True, raise unless the span has rank N.

    Returns:
        The canonical Hermite basis of the column span.

    Raises:
        RankDeficient: Raised when full rank is required and missing.
    """
    nrows = matrix.nrows
    if matrix.ncols == 0 or matrix.is_zero():
        result = IntMat([() for _ in range(nrows)], ncols=0)
    else:
        result = _from_domain(hermite_normal_form(_to_domain(matrix)))
    if full_rank_required and result.ncols < nrows:
        raise RankDeficient(
            "The columns span a module of rank {} in dimension {}.".format(
                result.ncols, nrows
            )
        )
    return result


class SmithForm(Record):
    """The Smith decomposition U * M * V = diag(diagonal) of a matrix.

    The diagonal is positive and forms a divisor chain. U_inverse is the
    exact inverse of the unimodular matrix U.
    """

    U: IntMat
    diagonal: Tuple[int, ...]
    V: IntMat
    U_inverse: IntMat


def smith_decomposition(matrix):
    # type: (IntMat) -> SmithForm
    """Return the Smith decomposition of a square nonsingular matrix.

    Args:
        matrix: A square nonsingular integer matrix M.

    Returns:
        A SmithForm with U * M * V = diag(d_1, ..., d_N), d_1 | ... | d_N,
        all positive, together with the inverse of U.

    Raises:
        DimensionMismatch: Raised when the matrix is not square.
        Singular: Raised when the determinant is zero.
    """
    n = matrix.nrows
    if matrix.ncols != n:
        raise DimensionMismatch(
            "Smith decomposition needs a square matrix, got {}x{}.".format(
                n, matrix.ncols
            )
        )
    if matrix.det() == 0:
        raise Singular("The matrix {!r} is singular.".format(matrix))
    a = [list(row) for row in matrix.rows]
    u = [[int(i == j) for j in range(n)] for i in range(n)]
    u_inv = [[int(i == j) for j in range(n)] for i in range(n)]
    v = [[int(i == j) for j in range(n)] for i in range(n)]

    def swap_rows(i, j):
        a[i], a[j] = a[j], a[i]
        u[i], u[j] = u[j], u[i]
        for row in u_inv:
            row[i], row[j] = row[j], row[i]

    def swap_cols(i, j):
        for rows in (a, v):
            for row in rows:
                row[i], row[j] = row[j], row[i]

    def add_row(target, source, factor):
        # row_target += factor * row_source; U^-1 gets the inverse op.
        for rows in (a, u):
            src, dst = rows[source], rows[target]
            for k in range(n):
                dst[k] += factor * src[k]
        for row in u_inv:
            row[source] -= factor * row[target]

    def add_col(target, source, factor):
        for rows in (a, v):
            for row in rows:
                row[target] += factor * row[source]

    for t in range(n):
        while True:
            pivot = min(
                (
                    (abs(a[i][j]), i, j)
                    for i in range(t, n)
                    for j in range(t, n)
                    if a[i][j]
                ),
                default=None,
            )
            if pivot is None:
                raise Singular("The matrix {!r} is singular.".format(matrix))
            _, pi, pj = pivot
            if pi != t:
                swap_rows(t, pi)
            if pj != t:
                swap_cols(t, pj)
            clean = True
            for i in range(t + 1, n):
                if a[i][t]:
                    add_row(i, t, -(a[i][t] // a[t][t]))
                    clean = clean and not a[i][t]
            for j in range(t + 1, n):
                if a[t][j]:
                    add_col(j, t, -(a[t][j] // a[t][t]))
                    clean = clean and not a[t][j]
            if not clean:
                continue
            stray = next(
                (
                    i
                    for i in range(t + 1, n)
                    for j in range(t + 1, n)
                    if a[i][j] % a[t][t]
                ),
                None,
            )
            if stray is None:
                break
            add_row(t, stray, 1)
        if a[t][t] < 0:
            for rows in (a, u):
                rows[t] = [-x for x in rows[t]]
            for row in u_inv:
                row[t] = -row[t]
    return SmithForm(
        U=IntMat(u, ncols=n),
        diagonal=tuple(a[i][i] for i in range(n)),
        V=IntMat(v, ncols=n),
        U_inverse=IntMat(u_inv, ncols=n),
    )


def snf_diag(matrix):
    # type: (IntMat) -> Tuple[int, ...]
    """Return the Smith invariant factors d_1 | ... | d_N of a matrix.

    >>> snf_diag(IntMat([[2, 1], [0, 1]]))
    (1, 2)

    Raises:
        Singular: Raised when the determinant is zero.
    """
    return smith_decomposition(matrix).diagonal


def _gcdex(a, b):
    # type: (int, int) -> Tuple[int, int, int]
    """Return x, y, g with x*a + y*b = g = gcd(a, b), preferring y = 0."""
    if a != 0 and b % a == 0:
        return (-1 if a < 0 else 1), 0, abs(a)
    x, y, g = igcdex(a, b)
    return int(x), int(y), int(g)


def _column_echelon(matrix):
    # type: (IntMat) -> Tuple[List[List[int]], List[List[int]], int]
    """Column-reduce a matrix and record the unimodular transform.

    Follows the column Hermite reduction: rows are processed bottom-up and
    each pivot is placed as far right as possible.

    Args:
        matrix: An m by n integer matrix A.

    Returns:
        A tuple (H, T, k) of row lists with A * T = H, T unimodular, the
        columns 0..k-1 of H zero and the columns k..n-1 of H independent.
    """
    m, n = matrix.shape
    a = [list(row) for row in matrix.rows]
    t = [[int(i == j) for j in range(n)] for i in range(n)]

    def combine(i, j, p, q, r, s):
        # col_i, col_j <- p*col_i + q*col_j, r*col_i + s*col_j
        for rows in (a, t):
            for row in rows:
                ci, cj = row[i], row[j]
                row[i] = p * ci + q * cj
                row[j] = r * ci + s * cj

    k = n
    for i in range(m - 1, -1, -1):
        if k == 0:
            break
        k -= 1
        for j in range(k - 1, -1, -1):
            if a[i][j]:
                x, y, g = _gcdex(a[i][k], a[i][j])
                r, s = a[i][k] // g, a[i][j] // g
                combine(k, j, x, y, -s, r)
        b = a[i][k]
        if b < 0:
            combine(k, k, -1, 0, -1, 0)
            b = -b
        if b == 0:
            k += 1
        else:
            for j in range(k + 1, n):
                q = a[i][j] // b
                if q:
                    for rows in (a, t):
                        for row in rows:
                            row[j] -= q * row[k]
    return a, t, k


def kernel_basis(matrix):
    # type: (IntMat) -> Tuple[Vector, ...]
    """Return a basis of the integer kernel {z in Z^n : M * z = 0}."""
    _, t, k = _column_echelon(matrix)
    return tuple(tuple(row[j] for row in t) for j in range(k))


def solve_in_span(matrix, vector):
    # type: (IntMat, Sequence[int]) -> Vector
    """Return an integer z with M * z = vector for M of full row rank.

    Raises:
        RankDeficient: Raised when M does not have full row rank.
        NotInSpan: Raised when vector is not in the integer column span.
    """
    m, n = matrix.shape
    if len(vector) != m:
        raise DimensionMismatch(
            "Expected a vector of length {}, got {}.".format(m, len(vector))
        )
    h, t, k = _column_echelon(matrix)
    if n - k != m:
        raise RankDeficient(
            "Cannot solve against columns of rank {} in dimension {}.".format(
                n - k, m
            )
        )
    rest = list(vector)
    coeffs = [0] * m
    for i in range(m - 1, -1, -1):
        q, r = divmod(rest[i], h[i][k + i])
        if r:
            raise NotInSpan(
                "{} is not in the integer span of the columns.".format(
                    tuple(vector)
                )
            )
        coeffs[i] = q
        for row in range(i + 1):
            rest[row] -= q * h[row][k + i]
    return tuple(
        sum(t[row][k + i] * coeffs[i] for i in range(m)) for row in range(n)
    )


class Lattice(object):
    """A full-rank sublattice of Z^N stored by its canonical Hermite basis.

    The basis columns are the basis vectors. The dimension-0 lattice is
    allowed and carries the ideals of the zero ring.
    """

    __slots__ = ("_basis", "_hash")

    def __init__(self, basis):
        # type: (IntMat) -> None
        """Create the lattice spanned by the columns of a matrix.

        Args:
            basis: A matrix with N rows whose columns span a rank-N lattice.

        Raises:
            RankDeficient: Raised when the columns do not have rank N.
        """
        self._basis = hnf(basis, full_rank_required=True)
        self._hash = hash(self._basis)

    @classmethod
    def _from_hnf(cls, basis):
        # type: (IntMat) -> Lattice
        """Wrap a matrix that is already in canonical form."""
        lattice = cls.__new__(cls)
        lattice._basis = basis
        lattice._hash = hash(basis)
        return lattice

    @classmethod
    def span(cls, vectors, dim):
        # type: (Iterable[Sequence[int]], int) -> Lattice
        """Return the lattice spanned by vectors of length dim."""
        vectors = [tuple(v) for v in vectors]
        if dim == 0:
            return cls._from_hnf(IntMat([], ncols=0))
        return cls(IntMat.from_columns(vectors, dim))

    @classmethod
    def standard(cls, dim):
        # type: (int) -> Lattice
        """Return Z^dim."""
        return cls._from_hnf(IntMat.identity(dim))

    @classmethod
    def scaled_standard(cls, dim, factor):
        # type: (int, int) -> Lattice
        """Return factor * Z^dim."""
        return cls._from_hnf(IntMat.diagonal([abs(factor)] * dim))

    @property
    def basis(self):
        # type: () -> IntMat
        """Return the canonical Hermite basis."""
        return self._basis

    @property
    def dim(self):
        # type: () -> int
        """Return the dimension N of the ambient Z^N."""
        return self._basis.nrows

    @property
    def columns(self):
        # type: () -> Tuple[Vector, ...]
        """Return the basis vectors."""
        return self._basis.columns()

    @property
    def det(self):
        # type: () -> int
        """Return the covolume [Z^N : L], the product of the diagonal."""
        return functools.reduce(
            operator.mul,
            (self._basis.rows[i][i] for i in range(self.dim)),
            1,
        )

    def coordinates(self, vector):
        # type: (Sequence[int]) -> Vector
        """Return the coefficients c with basis * c = vector.

        Raises:
            DimensionMismatch: Raised when the vector has the wrong length.
            NotContained: Raised when the vector is not in the lattice.
        """
        n = self.dim
        if len(vector) != n:
            raise DimensionMismatch(
                "Vector of length {} expressed in a lattice of dimension "
                "{}.".format(len(vector), n)
            )
        rows = self._basis.rows
        rest = list(vector)
        coeffs = [0] * n
        for i in range(n - 1, -1, -1):
            q, r = divmod(rest[i], rows[i][i])
            if r:
                raise NotContained(
                    "{} is not in {!r}.".format(tuple(vector), self)
                )
            coeffs[i] = q
            if q:
                for row in range(i + 1):
                    rest[row] -= q * rows[row][i]
        return tuple(coeffs)

    def scale(self, factor):
        # type: (int) -> Lattice
        """Return factor * L for a nonzero factor."""
        return Lattice(self._basis.scaled(factor))

    def image(self, matrix):
        # type: (IntMat) -> Lattice
        """Return M * L for a nonsingular square matrix M."""
        return Lattice(matrix @ self._basis)

    def __contains__(self, vector):
        return lat_contains(self, vector)

    def __le__(self, other):
        """Return True if self is a sublattice of other."""
        if not isinstance(other, Lattice):
            return NotImplemented
        return all(lat_contains(other, col) for col in self.columns)

    def __eq__(self, other):
        if not isinstance(other, Lattice):
            return NotImplemented
        return self._basis == other.basis

    def __ne__(self, other):
        if not isinstance(other, Lattice):
            return NotImplemented
        return not self == other

    def __hash__(self):
        return self._hash

    def __repr__(self):
        return "Lattice({!r})".format([list(col) for col in self.columns])


def _check_dims(first, second):
    # type: (Lattice, Lattice) -> None
    """Raise DimensionMismatch unless two lattices share a dimension."""
    if first.dim != second.dim:
        raise DimensionMismatch(
            "Lattices of dimension {} and {} cannot be combined.".format(
                first.dim, second.dim
            )
        )


def lat_contains(lattice, vector):
    # type: (Lattice, Sequence[int]) -> bool
    """Determine if a vector lies in a lattice by exact triangular solve.

    Raises:
        DimensionMismatch: Raised when the vector has the wrong length.
    """
    n = lattice.dim
    if len(vector) != n:
        raise DimensionMismatch(
            "Vector of length {} tested against a lattice of dimension "
            "{}.".format(len(vector), n)
        )
    rows = lattice.basis.rows
    rest = list(vector)
    for i in range(n - 1, -1, -1):
        q, r = divmod(rest[i], rows[i][i])
        if r:
            return False
        if q:
            for row in range(i + 1):
                rest[row] -= q * rows[row][i]
    return True


def lat_index(outer, inner):
    # type: (Lattice, Lattice) -> int
    """Return the index [outer : inner] of a sublattice.

    Raises:
        DimensionMismatch: Raised when the dimensions differ.
        NotContained: Raised when inner is not a sublattice of outer.
    """
    _check_dims(outer, inner)
    if not inner <= outer:
        raise NotContained(
            "{!r} is not contained in {!r}.".format(inner, outer)
        )
    return inner.det // outer.det


def lat_sum(first, second):
    # type: (Lattice, Lattice) -> Lattice
    """Return the smallest lattice containing both lattices."""
    _check_dims(first, second)
    if first.dim == 0:
        return first
    return Lattice(first.basis.hstack(second.basis))


def lat_intersect(first, second):
    # type: (Lattice, Lattice) -> Lattice
    """Return the largest lattice contained in both lattices.

    The intersection is the image under B1 of the first half of the integer
    kernel of [B1 | -B2].
    """
    _check_dims(first, second)
    n = first.dim
    if n == 0 or first == second:
        return first
    stacked = first.basis.hstack(second.basis.scaled(-1))
    kernel = kernel_basis(stacked)
    return Lattice.span(
        (first.basis.mul_vec(z[:n]) for z in kernel), n
    )


def lat_preimage(matrix, lattice):
    # type: (IntMat, Lattice) -> Lattice
    """Return {x in Z^N : M * x in L} for a nonsingular square matrix M.

    Raises:
        DimensionMismatch: Raised when the shapes do not agree.
        Singular: Raised when M is singular.
    """
    n = lattice.dim
    if matrix.shape != (n, n):
        raise DimensionMismatch(
            "Expected a {0}x{0} matrix, got {1}x{2}.".format(
                n, matrix.nrows, matrix.ncols
            )
        )
    if n == 0:
        return lattice
    if matrix.det() == 0:
        raise Singular("The matrix {!r} is singular.".format(matrix))
    stacked = matrix.hstack(lattice.basis.scaled(-1))
    return Lattice.span((z[:n] for z in kernel_basis(stacked)), n)
