#!/usr/bin/env python

"""Tests for exact linear algebra."""

import random
from fractions import Fraction

import pytest
import sympy

from hadamard_star.exceptions import DimensionMismatchError
from hadamard_star.field import QuadExt
from hadamard_star.geometry import ProjPoint, coordinate_matrix, cremona
from hadamard_star.linalg import (
    Matrix,
    cofactor_determinant,
    determinant,
    kernel_basis,
    mat_vec,
    maximal_minors,
    rank,
    solve,
)

F = Fraction


@pytest.fixture
def rng():
    """Seeded generator for the random matrix suites."""
    return random.Random(4)


@pytest.fixture
def quadric_reciprocals():
    """Reciprocal-coefficient matrix of the ternary quadric HSC forms."""
    return Matrix([[F(4, 13), 2, 3], [F(-15, 13), 3, 6], [7, 7, 5], [1, 3, 4]])


def _random_matrix(rng, rows, cols):
    return Matrix(
        [
            [F(rng.randint(-9, 9), rng.randint(1, 5)) for _ in range(cols)]
            for _ in range(rows)
        ]
    )


def _sympy_det(m):
    det = sympy.Matrix(
        [[sympy.Rational(x.numerator, x.denominator) for x in row] for row in m]
    ).det()
    return Fraction(int(det.p), int(det.q))


def test_determinant_small_cases():
    assert determinant(Matrix.identity(3)) == 1
    assert determinant(Matrix([[1, 1], [2, 3]])) == 1
    assert determinant(Matrix([])) == 1


def test_determinant_of_coplanar_cremona_images():
    points = [
        ProjPoint([1, 2, 3, 14]),
        ProjPoint([1, 1, 1, 6]),
        ProjPoint([-1, 2, -2, -3]),
        ProjPoint([-1, -2, F(190, 33), F(135, 11)]),
    ]
    images = coordinate_matrix([cremona(p) for p in points])
    assert determinant(images) == 0
    assert determinant(coordinate_matrix(points)) == 0


def test_determinant_rejects_non_square():
    with pytest.raises(DimensionMismatchError):
        determinant(Matrix([[1, 2, 3], [4, 5, 6]]))


def test_determinant_matches_oracles(rng):
    for _ in range(500):
        size = rng.randint(1, 4)
        m = _random_matrix(rng, size, size)
        det = determinant(m)
        assert det == cofactor_determinant(m)
        assert det == _sympy_det(m)


def test_bareiss_over_quadratic_field():
    s = QuadExt(0, 1, 2641)
    m = Matrix([[1, s, 2, 0], [s, 3, 1, 1], [0, 1, s + 1, 2], [5, 0, 1, s]])
    assert determinant(m) == cofactor_determinant(m)


@pytest.mark.parametrize(
    "rows, expected",
    [
        ([[F(4, 13), 2, 3], [F(-15, 13), 3, 6], [7, 7, 5], [1, 3, 4]], 2),
        (
            [
                [1, F(1, 3), F(-1, 2)],
                [F(-1, 3), F(1, 5), 1],
                [-2, 4, F(1, 7)],
                [F(1, 4), F(1, 3), 1],
            ],
            3,
        ),
        ([[1, 1, 1]] * 4, 1),
        ([[0, 0], [0, 0]], 0),
    ],
)
def test_rank(rows, expected):
    assert rank(Matrix(rows)) == expected


def test_kernel_basis(quadric_reciprocals):
    assert len(kernel_basis(Matrix([[1, 1, 1]]))) == 2
    assert kernel_basis(Matrix.identity(3)) == []
    basis = kernel_basis(quadric_reciprocals)
    assert len(basis) == 1
    assert mat_vec(quadric_reciprocals, basis[0]) == [0, 0, 0, 0]


def test_rank_nullity_on_random_matrices(rng):
    for _ in range(100):
        rows, cols = rng.randint(1, 5), rng.randint(1, 5)
        m = _random_matrix(rng, rows, cols)
        if rng.random() < 0.5 and rows > 1:
            duplicated = m.to_lists()
            duplicated[-1] = list(duplicated[0])
            m = Matrix(duplicated)
        r = rank(m)
        assert r == cols - len(kernel_basis(m))
        assert r == rows - len(kernel_basis(m.T))
        for vector in kernel_basis(m):
            assert all(x == 0 for x in m @ vector)


def test_solve():
    m = Matrix([[1, 1], [1, -1]])
    assert solve(m, [2, 0]) == [1, 1]
    assert solve(Matrix([[1, 1], [2, 2]]), [1, 3]) is None
    assert solve(Matrix([[1, 1, 0]]), [4]) == [4, 0, 0]
    with pytest.raises(DimensionMismatchError):
        solve(m, [1])


def test_maximal_minors():
    minors = maximal_minors(Matrix([[1, 0], [0, 1], [1, 1]]))
    assert minors == [((0, 1), 1), ((0, 2), 1), ((1, 2), -1)]
    values = [v for _, v in maximal_minors(Matrix([[1, 1], [2, 2], [0, 1]]))]
    assert values.count(0) == 1 and values[0] == 0
    wide = maximal_minors(Matrix([[1, 2, 3], [4, 5, 6]]))
    assert [cols for cols, _ in wide] == [(0, 1), (0, 2), (1, 2)]


def test_minors_vanish_with_equal_rows(rng):
    for _ in range(20):
        m = _random_matrix(rng, 4, 3).to_lists()
        m[3] = list(m[1])
        for rows, minor in maximal_minors(Matrix(m)):
            if 1 in rows and 3 in rows:
                assert minor == 0


def test_ragged_matrix_is_rejected():
    with pytest.raises(DimensionMismatchError):
        Matrix([[1, 2], [3]])


def test_matrix_shape_and_views():
    m = Matrix([[1, 2, 3], [4, 5, 6]])
    assert m.shape == (2, 3)
    assert m.transpose().shape == (3, 2)
    assert Matrix([], cols=4).T.shape == (4, 0)
    assert m.submatrix([1], [2, 0]) == Matrix([[6, 4]])
    assert Matrix.identity(3) @ [1, F(1, 2), 7] == [1, F(1, 2), 7]
    copy = m.to_lists()
    copy[0][0] = 9
    assert m[0, 0] == 1


@pytest.mark.parametrize(
    "name",
    ["identity", "rows", "cols", "shape", "to_lists", "submatrix", "transpose", "__matmul__"],
)
def test_public_matrix_api_is_documented(name):
    assert getattr(Matrix, name).__doc__
