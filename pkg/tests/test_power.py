#!/usr/bin/env python

"""Tests for square-free Hadamard powers and the line-power condition."""

import random
from fractions import Fraction

import pytest

from hadamard_star.exceptions import DegenerateInputError, PreconditionError
from hadamard_star.geometry import ProjPoint, hadamard_point_hyperplane, hadamard_points
from hadamard_star.linalg import Matrix, cofactor_determinant
from hadamard_star.star import (
    PointSet,
    build_star_config,
    hsc_power_pipeline,
    hsc_witness,
    line_avoids_delta,
    line_power_condition,
    line_power_determinants,
    line_power_form,
    squarefree_power,
)

F = Fraction


@pytest.fixture
def rng():
    """Seeded generator for random lines."""
    return random.Random(2024)


def _random_point(rng, n):
    return ProjPoint([rng.randint(1, 30) * rng.choice([-1, 1]) for _ in range(n + 1)])


def _random_line(rng, n, p=None):
    while True:
        first = p or _random_point(rng, n)
        second = _random_point(rng, n)
        if first != second and line_avoids_delta(first, second):
            return first, second


def _points_on_line(rng, p, q, m):
    points = []
    while len(points) < m:
        a, b = rng.randint(-9, 9), rng.randint(-9, 9)
        coords = [a * x + b * y for x, y in zip(p.coords, q.coords)]
        if all(c != 0 for c in coords):
            point = ProjPoint(coords)
            if point not in points:
                points.append(point)
    return points


def test_squarefree_power_of_two_points():
    a, b = ProjPoint([1, 2, 3]), ProjPoint([3, 2, 1])
    power = squarefree_power(PointSet([a, b]), 2)
    assert list(power) == [ProjPoint([3, 4, 3])]


def test_point_set_rejects_repeats():
    with pytest.raises(DegenerateInputError):
        PointSet([ProjPoint([1, 2]), ProjPoint([2, 4])])
    with pytest.raises(DegenerateInputError):
        PointSet([])


def test_squarefree_power_preconditions():
    xs = PointSet([ProjPoint([1, 2, 3]), ProjPoint([3, 2, 1])])
    with pytest.raises(PreconditionError):
        squarefree_power(xs, 3)
    with pytest.raises(PreconditionError):
        squarefree_power(PointSet([ProjPoint([1, 0, 3]), ProjPoint([3, 2, 1])]), 2)


def test_line_power_form_in_the_plane():
    p, q = ProjPoint([1, 1, 2]), ProjPoint([1, 2, 3])
    form = line_power_form(p, q, 2)
    assert form.contains(p) and form.contains(q)


def test_line_power_form_contains_products():
    p, q = ProjPoint([1, 1, 1, 1]), ProjPoint([1, 2, 3, 4])
    form = line_power_form(p, q, 3)
    rng = random.Random(5)
    for a, b in zip(_points_on_line(rng, p, q, 6), _points_on_line(rng, p, q, 6)):
        assert form.contains(hadamard_points(a, b))


def test_line_power_form_rejects_equal_points():
    p = ProjPoint([1, 2, 3, 4])
    with pytest.raises(DegenerateInputError):
        line_power_form(p, ProjPoint([3, 6, 9, 12]), 3)


def test_line_power_form_depends_only_on_the_line(rng):
    for n in (2, 3, 4):
        for _ in range(10):
            p, q = _random_line(rng, n)
            form = line_power_form(p, q, n)
            assert line_power_form(q, p, n) == form
            other = _points_on_line(rng, p, q, 2)
            if other[0] != other[1]:
                assert line_power_form(*other, n) == form


def test_condition_holds_in_the_plane(rng):
    for _ in range(20):
        p, q = _random_line(rng, 2)
        assert line_power_condition(p, q, 2)
        if q != ProjPoint([1, 1, 1]):
            assert line_power_condition(ProjPoint([1, 1, 1]), q, 2)


def test_condition_holds_through_the_unit_point(rng):
    unit = ProjPoint([1, 1, 1, 1])
    for _ in range(20):
        p, q = _random_line(rng, 3, unit)
        assert line_power_condition(p, q, 3)
        assert line_power_condition(ProjPoint([5, 5, 5, 5]), ProjPoint([3 * c for c in q]), 3)


def test_condition_matches_determinant_oracle(rng):
    failures = 0
    for _ in range(20):
        p, q = _random_line(rng, 3)
        rows = [[x**2, x * y, y**2] for x, y in zip(p.coords, q.coords)]
        rows = [list(col) for col in zip(*rows)]
        det_p = cofactor_determinant(Matrix(rows + [list(p.coords)]))
        det_q = cofactor_determinant(Matrix(rows + [list(q.coords)]))
        assert line_power_determinants(p, q, 3) == (det_p, det_q)
        assert line_power_condition(p, q, 3) == (det_p == 0 and det_q == 0)
        failures += not line_power_condition(p, q, 3)
    assert failures > 0


@pytest.mark.parametrize("n, m", [(2, 4), (2, 5), (3, 5)])
def test_power_equals_star_configuration(rng, n, m):
    for _ in range(20):
        p, q = _random_line(rng, n)
        xs = PointSet(_points_on_line(rng, p, q, m))
        form = line_power_form(p, q, n)
        forms = [hadamard_point_hyperplane(x, form) for x in xs]
        config = build_star_config(forms, n)
        assert squarefree_power(xs, n).as_set() == frozenset(config.points())


def test_pipeline_in_the_plane(rng):
    for _ in range(10):
        p, q = _random_line(rng, 2)
        xs = PointSet(_points_on_line(rng, p, q, 4))
        result = hsc_power_pipeline(xs, p, q)
        assert result.is_hsc
        assert result.hsc_route == "line-power-condition"
        forms = [hadamard_point_hyperplane(x, line_power_form(p, q, 2)) for x in xs]
        assert hsc_witness(forms) is not None


def test_pipeline_through_the_unit_point(rng):
    p, q = _random_line(rng, 3, ProjPoint([1, 1, 1, 1]))
    xs = PointSet(_points_on_line(rng, p, q, 5))
    result = hsc_power_pipeline(xs, p, q)
    assert result.is_hsc
    assert result.hsc_route == "line-power-condition"
    forms = [hadamard_point_hyperplane(x, line_power_form(p, q, 3)) for x in xs]
    assert hsc_witness(forms) is not None


def test_pipeline_without_the_condition(rng):
    while True:
        p, q = _random_line(rng, 3)
        if not line_power_condition(p, q, 3):
            break
    xs = PointSet(_points_on_line(rng, p, q, 4))
    result = hsc_power_pipeline(xs, p, q)
    assert result.is_whsc
    assert result.hsc_route != "line-power-condition"


def test_pipeline_preconditions():
    p, q = ProjPoint([1, 1, 2]), ProjPoint([1, 2, 3])
    on_line = [ProjPoint([2, 3, 5]), ProjPoint([3, 4, 7]), ProjPoint([1, 3, 4])]
    with pytest.raises(PreconditionError, match="more than"):
        hsc_power_pipeline(PointSet(on_line[:2]), p, q)
    with pytest.raises(PreconditionError, match="not on the line"):
        hsc_power_pipeline(PointSet(on_line[:2] + [ProjPoint([1, 1, 1])]), p, q)
    with pytest.raises(PreconditionError, match="Delta"):
        hsc_power_pipeline(PointSet(on_line), ProjPoint([1, 1, 1]), ProjPoint([1, 1, 2]))
