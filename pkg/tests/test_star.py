#!/usr/bin/env python

"""Tests for star configurations and the WHSC/HSC classification."""

import random
from fractions import Fraction

import pytest

from hadamard_star.exceptions import NotGenerallyLinearError, PreconditionError
from hadamard_star.field import QuadExt
from hadamard_star.geometry import (
    LinearForm,
    ProjPoint,
    Ring,
    cremona,
    general_position,
    hadamard_point_hyperplane,
)
from hadamard_star.linalg import rank
from hadamard_star.search import RandomConfigurations
from hadamard_star.settings import Settings
from hadamard_star.star import (
    Verdict,
    build_star_config,
    classify,
    generally_linear,
    hsc_witness,
    reciprocal_matrix,
    whsc_from_data,
)

F = Fraction


@pytest.fixture
def quadric_forms():
    """Four generally linear forms whose star configuration is an HSC."""
    return [
        LinearForm([F(13, 4), F(1, 2), F(1, 3)], Ring.T),
        LinearForm([F(-13, 15), F(1, 3), F(1, 6)], Ring.T),
        LinearForm([F(1, 7), F(1, 7), F(1, 5)], Ring.T),
        LinearForm([1, F(1, 3), F(1, 4)], Ring.T),
    ]


@pytest.fixture
def gamma_forms():
    """Four full-support forms with a reciprocal matrix of rank 3."""
    return [
        LinearForm([1, 3, -2], Ring.T),
        LinearForm([-3, 5, 1], Ring.T),
        LinearForm([F(-1, 2), F(1, 4), 7], Ring.T),
        LinearForm([4, 3, 1], Ring.T),
    ]


@pytest.fixture
def planted_forms():
    """``P_i * V(x0 + x1 + x2)`` for four points lying on that plane."""
    h = LinearForm([1, 1, 1])
    points = [ProjPoint(c) for c in ([1, 1, -2], [1, -2, 1], [-2, 1, 1], [1, 2, -3])]
    return [hadamard_point_hyperplane(p, h) for p in points]


@pytest.fixture
def sampler():
    """Seeded sampler that does not read any config file."""
    return RandomConfigurations(seed=43, settings=Settings())


def _assert_witness(forms, witness):
    for point, form in zip(witness.points, forms):
        assert point.has_full_support
        assert witness.hyperplane.contains(point)
        assert hadamard_point_hyperplane(point, witness.hyperplane) == form


def test_generally_linear(quadric_forms):
    y0, y1, y2 = (LinearForm(c, Ring.T) for c in ([1, 0, 0], [0, 1, 0], [0, 0, 1]))
    assert generally_linear([y0, y1, y2])
    assert not generally_linear([y0, y1, LinearForm([1, 1, 0], Ring.T)])
    assert generally_linear(quadric_forms)


def test_build_star_config(quadric_forms):
    lines = [LinearForm(c) for c in ([1, 0, 0], [0, 1, 0], [1, 1, 1])]
    assert len(build_star_config(lines, 2).points()) == 3
    config = build_star_config(quadric_forms, 2)
    assert len(config.flats) == 6
    for flat in config.flats:
        point = flat.point
        for i, form in enumerate(quadric_forms):
            assert form.contains(point) == (i in flat.indices)
    hyperplanes = build_star_config(quadric_forms, 1)
    assert len(hyperplanes.flats) == 4
    assert all(len(flat.basis) == 2 and flat.point is None for flat in hyperplanes.flats)


def test_build_star_config_rejects(quadric_forms):
    with pytest.raises(PreconditionError):
        build_star_config(quadric_forms, 3)
    with pytest.raises(PreconditionError):
        build_star_config(quadric_forms[:1], 2)
    dependent = [LinearForm(c) for c in ([1, 0, 0], [0, 1, 0], [1, 1, 0])]
    with pytest.raises(NotGenerallyLinearError):
        build_star_config(dependent, 2)


def test_classify_examples(quadric_forms, gamma_forms):
    coordinate = [LinearForm(c, Ring.T) for c in ([1, 0, 0], [0, 1, 0], [0, 0, 1], [1, 1, 1])]
    assert classify(coordinate).verdict is Verdict.STAR_CONFIG
    dependent = [LinearForm(c, Ring.T) for c in ([1, 0, 0], [0, 1, 0], [1, 1, 0])]
    assert classify(dependent).verdict is Verdict.NOT_GENERALLY_LINEAR

    result = classify(quadric_forms)
    assert result.verdict is Verdict.HSC
    assert result.reciprocal_rank == 2
    assert result.hsc_route == "kernel"

    gamma = classify(gamma_forms)
    assert gamma.verdict is Verdict.WHSC
    assert gamma.reciprocal_rank == 3
    assert gamma.witness is None


def test_verdicts_are_nested(quadric_forms, gamma_forms):
    for forms in (quadric_forms, gamma_forms):
        result = classify(forms)
        assert not result.is_hsc or result.is_whsc
        assert not result.is_whsc or result.is_star_config


def test_classify_is_invariant(quadric_forms, gamma_forms):
    rng = random.Random(11)
    for forms in (quadric_forms, gamma_forms):
        verdict = classify(forms).verdict
        scaled = []
        for form in forms:
            factor = F(rng.choice([-1, 1]) * rng.randint(1, 9), rng.randint(1, 9))
            scaled.append(LinearForm([factor * c for c in form.coeffs], form.ring))
        rng.shuffle(scaled)
        assert classify(scaled).verdict is verdict


def test_hsc_witness_implicit(quadric_forms):
    witness = hsc_witness(quadric_forms)
    assert witness is not None
    assert not witness.explicit
    kernel = witness.kernel_vector
    assert all(x != 0 for x in kernel)
    assert [x / kernel[0] for x in kernel] == [1, F(-23, 13), F(14, 13)]


def test_hsc_witness_explicit(planted_forms):
    witness = hsc_witness(planted_forms)
    assert witness.explicit
    assert witness.hyperplane == LinearForm([1, 1, 1])
    _assert_witness(planted_forms, witness)
    assert classify(planted_forms).is_hsc


def test_hsc_witness_in_quadratic_extension():
    # reciprocal rows (2,1,-2), (4,-1,-1), (2,-2,1), (6,-1,-2) share the kernel (1/2, 1, 1)
    forms = [
        LinearForm([F(1, 2), 1, F(-1, 2)], Ring.T),
        LinearForm([F(1, 4), -1, -1], Ring.T),
        LinearForm([F(1, 2), F(-1, 2), 1], Ring.T),
        LinearForm([F(1, 6), -1, F(-1, 2)], Ring.T),
    ]
    witness = hsc_witness(forms)
    assert witness.explicit
    root2 = QuadExt(0, 1, 2)
    assert witness.hyperplane == LinearForm([1, root2, root2], Ring.T)
    _assert_witness(forms, witness)
    assert classify(forms).is_hsc


def test_hsc_witness_absent(gamma_forms):
    assert hsc_witness(gamma_forms) is None


def test_hsc_witness_preconditions():
    with pytest.raises(PreconditionError):
        hsc_witness([LinearForm(c) for c in ([1, 0, 0], [0, 1, 0], [1, 1, 0])])
    with pytest.raises(PreconditionError):
        reciprocal_matrix([LinearForm([1, 0, 1])])


def test_reciprocal_matrix(quadric_forms):
    assert rank(reciprocal_matrix(quadric_forms)) == 2
    assert reciprocal_matrix(quadric_forms)[0] == (F(4, 13), 2, 3)


def test_whsc_from_coplanar_points():
    h = LinearForm([1, 2, 3, -1])
    points = [
        ProjPoint([1, 2, 3, 14]),
        ProjPoint([1, 1, 1, 6]),
        ProjPoint([-1, 2, -2, -3]),
        ProjPoint([-1, -2, F(190, 33), F(135, 11)]),
    ]
    classification, sigma_general = whsc_from_data(h, points, 3)
    assert not classification.is_whsc
    assert not sigma_general


def test_whsc_from_single_point():
    h = LinearForm([2, 3, 5])
    classification, sigma_general = whsc_from_data(h, [ProjPoint([1, 1, 1])], 1)
    assert classification.is_whsc
    assert sigma_general


def test_whsc_from_data_preconditions():
    with pytest.raises(PreconditionError):
        whsc_from_data(LinearForm([1, 0, 1]), [ProjPoint([1, 1, 1])], 1)
    with pytest.raises(PreconditionError):
        whsc_from_data(LinearForm([1, 1, 1]), [ProjPoint([1, 0, 1])], 1)


def _dependent_images(rng, n, r):
    while True:
        images = [
            [F(rng.randint(1, 30) * rng.choice([-1, 1])) for _ in range(n + 1)]
            for _ in range(r - 1)
        ]
        extra = [a + b for a, b in zip(images[0], images[1])]
        if all(x != 0 for x in extra):
            return [cremona(ProjPoint(c)) for c in (*images, extra)]


@pytest.mark.parametrize("n, r", [(2, 4), (2, 5), (3, 5), (3, 6)])
def test_forms_route_agrees_with_cremona_route(sampler, n, r):
    rng = random.Random(1000 * n + r)
    agreements = 0
    for trial in range(100):
        h = sampler.random_hyperplane(n)
        if trial % 4 == 0:
            points = _dependent_images(rng, n, r)
        else:
            points = sampler.random_generic_points(n, r)
        if len(set(points)) != len(points):
            continue
        forms = [hadamard_point_hyperplane(p, h) for p in points]
        is_whsc = classify(forms).is_whsc
        assert is_whsc == general_position([cremona(p) for p in points])
        classification, sigma_general = whsc_from_data(h, points, n)
        assert classification.is_whsc == sigma_general == is_whsc
        agreements += 1
    assert agreements >= 95


@pytest.mark.parametrize("n, r", [(2, 4), (2, 5), (3, 5)])
def test_points_on_the_hyperplane_give_hsc(sampler, n, r):
    for _ in range(20):
        h = sampler.random_hyperplane(n)
        points = sampler.random_points_on_hyperplane(h, r)
        forms = [hadamard_point_hyperplane(p, h) for p in points]
        result = classify(forms, codim=n)
        assert result.is_hsc
        assert len(result.config.points()) == len(result.config.flats)
