# -*- coding: utf-8 -*-
"""Tests for integer matrices, normal forms and lattices."""

from __future__ import unicode_literals

import functools
import operator

from hypothesis import given, settings, strategies
import pytest

from ringrank.errors import (
    DimensionMismatch,
    NotContained,
    NotInSpan,
    RankDeficient,
    Singular,
)
from ringrank.latcore import (
    IntMat,
    Lattice,
    hnf,
    kernel_basis,
    lat_contains,
    lat_index,
    lat_intersect,
    lat_preimage,
    lat_sum,
    smith_decomposition,
    snf_diag,
    solve_in_span,
)


entries = strategies.integers(min_value=-9, max_value=9)


@strategies.composite
def square_matrices(draw, size=3):
    rows = draw(
        strategies.lists(
            strategies.lists(entries, min_size=size, max_size=size),
            min_size=size,
            max_size=size,
        )
    )
    return IntMat(rows)


@strategies.composite
def nonsingular_matrices(draw, size=3):
    matrix = draw(square_matrices(size))
    if matrix.det() == 0:
        # Adding a large diagonal makes the matrix diagonally dominant.
        matrix = IntMat(
            [
                [a + (100 if i == j else 0) for j, a in enumerate(row)]
                for i, row in enumerate(matrix.rows)
            ]
        )
    return matrix


@strategies.composite
def unimodular_matrices(draw, size=3):
    matrix = IntMat.identity(size)
    steps = draw(
        strategies.lists(
            strategies.tuples(
                strategies.integers(0, size - 1),
                strategies.integers(0, size - 1),
                strategies.integers(-3, 3),
            ),
            max_size=6,
        )
    )
    for i, j, factor in steps:
        if i == j:
            continue
        elementary = IntMat(
            [
                [
                    int(r == c) + (factor if (r, c) == (i, j) else 0)
                    for c in range(size)
                ]
                for r in range(size)
            ]
        )
        matrix = matrix @ elementary
    return matrix


def test_intmat_basics():
    """Test construction, products and shape errors of integer matrices."""
    m = IntMat([[1, 2], [3, 4]])
    assert m.shape == (2, 2)
    assert m.column(1) == (2, 4)
    assert m.transpose().rows == ((1, 3), (2, 4))
    assert m.mul_vec((1, 1)) == (3, 7)
    assert (m @ IntMat.identity(2)) == m
    assert m.det() == -2
    assert IntMat.from_columns([(1, 3), (2, 4)], 2) == m
    with pytest.raises(DimensionMismatch):
        IntMat([[1, 2], [3]])
    with pytest.raises(DimensionMismatch):
        m.mul_vec((1, 2, 3))
    with pytest.raises(TypeError):
        IntMat([[1.5]])


def test_hnf_shape_and_rank():
    """Test that the Hermite form keeps one column per unit of rank."""
    m = IntMat.from_columns([(2, 0), (4, 0)], 2)
    assert hnf(m).shape == (2, 1)
    with pytest.raises(RankDeficient):
        hnf(m, full_rank_required=True)
    with pytest.raises(RankDeficient):
        Lattice(m)


def test_hnf_known_values():
    """Test canonical bases of small lattices."""
    lattice = Lattice.span([(1, 0), (0, 2)], 2)
    assert lattice.basis == IntMat([[1, 0], [0, 2]])
    assert lattice.det == 2
    assert Lattice.span([(2, 0), (1, 1), (0, 2)], 2).det == 2
    assert Lattice.span([(3, 0), (0, 3), (1, 1)], 2) == Lattice.span(
        [(1, 1), (0, 3)], 2
    )


def test_snf_known_values():
    """Test invariant factors and transforms of small matrices."""
    assert snf_diag(IntMat.diagonal([2, 2])) == (2, 2)
    assert snf_diag(IntMat([[2, 1], [0, 1]])) == (1, 2)
    assert snf_diag(IntMat([[6]])) == (6,)
    smith = smith_decomposition(IntMat([[2, 1], [0, 1]]))
    assert smith.diagonal == (1, 2)
    assert smith.U.shape == smith.V.shape == (2, 2)
    with pytest.raises(Singular):
        snf_diag(IntMat([[1, 2], [2, 4]]))


@settings(max_examples=1000, deadline=None)
@given(nonsingular_matrices(), unimodular_matrices())
def test_hnf_idempotent_and_unimodular_invariant(matrix, unimodular):
    """Test that the Hermite form is a canonical form of the column span."""
    form = hnf(matrix)
    assert hnf(form) == form
    assert hnf(matrix @ unimodular) == form
    for i in range(form.nrows):
        assert form.rows[i][i] > 0
        for j in range(i):
            assert form.rows[i][j] == 0
        for j in range(i + 1, form.ncols):
            assert 0 <= form.rows[i][j] < form.rows[i][i]


@settings(max_examples=1000, deadline=None)
@given(nonsingular_matrices())
def test_smith_product_is_abs_det(matrix):
    """Test that the invariant factors multiply to |det| and divide."""
    diagonal = snf_diag(matrix)
    assert functools.reduce(operator.mul, diagonal, 1) == abs(matrix.det())
    assert all(b % a == 0 for a, b in zip(diagonal, diagonal[1:]))


@settings(max_examples=1000, deadline=None)
@given(nonsingular_matrices())
def test_smith_transforms(matrix):
    """Test that U * M * V is the invariant factor diagonal."""
    smith = smith_decomposition(matrix)
    assert smith.U @ matrix @ smith.V == IntMat.diagonal(smith.diagonal)
    assert smith.U @ smith.U_inverse == IntMat.identity(matrix.nrows)


def test_smith_errors():
    """Test that Smith decomposition rejects non-square and singular input."""
    with pytest.raises(DimensionMismatch):
        smith_decomposition(IntMat([[1, 2]]))
    with pytest.raises(Singular):
        smith_decomposition(IntMat([[1, 2], [2, 4]]))


@settings(max_examples=200, deadline=None)
@given(
    nonsingular_matrices(),
    nonsingular_matrices(),
    nonsingular_matrices(),
)
def test_index_multiplicative_on_chains(a, b, c):
    """Test [L1 : L3] = [L1 : L2][L2 : L3] for L1 >= L2 >= L3."""
    first = Lattice(a)
    second = first.image(b)
    third = second.image(c)
    # The images may escape the first lattice, so intersect downward.
    second = lat_intersect(first, second)
    third = lat_intersect(second, third)
    assert lat_index(first, third) == (
        lat_index(first, second) * lat_index(second, third)
    )


@settings(max_examples=200, deadline=None)
@given(nonsingular_matrices(), nonsingular_matrices())
def test_sum_and_intersection(a, b):
    """Test that sum and intersection bound both lattices."""
    first, second = Lattice(a), Lattice(b)
    total = lat_sum(first, second)
    common = lat_intersect(first, second)
    assert first <= total and second <= total
    assert common <= first and common <= second
    assert lat_index(total, common) == (
        lat_index(total, first) * lat_index(first, common)
    )
    assert lat_index(total, first) == lat_index(second, common)


def test_contains_and_coordinates():
    """Test membership and coordinates in a lattice."""
    lattice = Lattice.span([(1, 0), (0, 2)], 2)
    assert lat_contains(lattice, (5, 4))
    assert (5, 3) not in lattice
    assert lattice.coordinates((5, 4)) == (5, 2)
    with pytest.raises(NotContained):
        lattice.coordinates((5, 3))
    with pytest.raises(DimensionMismatch):
        lat_contains(lattice, (1, 2, 3))
    with pytest.raises(NotContained):
        lat_index(lattice, Lattice.standard(2))


def test_preimage():
    """Test the lattice of vectors mapped into a lattice."""
    doubling = IntMat.diagonal([2, 1])
    target = Lattice.scaled_standard(2, 4)
    assert lat_preimage(doubling, target) == Lattice.span(
        [(2, 0), (0, 4)], 2
    )
    with pytest.raises(Singular):
        lat_preimage(IntMat([[1, 1], [1, 1]]), target)


@settings(max_examples=1000, deadline=None)
@given(square_matrices())
def test_kernel_basis(matrix):
    """Test that kernel vectors are annihilated and independent."""
    kernel = kernel_basis(matrix)
    for vector in kernel:
        assert not any(matrix.mul_vec(vector))
    assert len(kernel) == 3 - hnf(matrix).ncols


def test_solve_in_span():
    """Test integer solutions of M * z = v."""
    matrix = IntMat([[2, 3]])
    z = solve_in_span(matrix, (1,))
    assert matrix.mul_vec(z) == (1,)
    with pytest.raises(NotInSpan):
        solve_in_span(IntMat([[2, 4]]), (1,))
    with pytest.raises(RankDeficient):
        solve_in_span(IntMat([[1, 1], [1, 1]]), (1, 1))


def test_zero_dimensional_lattice():
    """Test that the dimension-0 lattice combines with itself."""
    empty = Lattice.span([], 0)
    assert empty.dim == 0
    assert empty.det == 1
    assert lat_sum(empty, empty) == empty
    assert lat_intersect(empty, empty) == empty
