#!/usr/bin/env python

"""Tests for the differentiation action, perp components and Waring sums."""

from fractions import Fraction

import pytest

from hadamard_star.apolarity import (
    HomogeneousForm,
    catalecticant,
    catalecticant_rank,
    diff_apply,
    is_apolar_points,
    monomials,
    perp_component,
    vanishing_component,
    waring_coefficients,
    waring_reconstruct,
)
from hadamard_star.exceptions import (
    DegenerateInputError,
    DimensionMismatchError,
    PreconditionError,
    ScalarParseError,
)
from hadamard_star.geometry import ProjPoint, Ring
from hadamard_star.search import RandomConfigurations
from hadamard_star.settings import Settings

F = Fraction
S = HomogeneousForm.from_text


def y(text, nvars=None):
    form = S(text, nvars=nvars)
    assert form.ring is Ring.T
    return form


@pytest.fixture
def sampler():
    """Small coordinates keep the interpolation systems readable."""
    return RandomConfigurations(seed=11, bound=6, settings=Settings())


def test_monomials_order():
    assert monomials(3, 1) == [(1, 0, 0), (0, 1, 0), (0, 0, 1)]
    assert monomials(2, 2) == [(2, 0), (1, 1), (0, 2)]
    assert len(monomials(3, 3)) == 10


def test_from_text():
    f = S("1/5*x0^2 + x0*x1 - 3*x1^2")
    assert (f.nvars, f.degree, f.ring) == (2, 2, Ring.S)
    assert f.coefficient((2, 0)) == F(1, 5)
    assert f.coefficient((1, 1)) == 1
    assert f.coefficient((0, 2)) == -3
    assert S("x0*x0") == S("x0^2")
    assert S("x1 - x1", nvars=2).is_zero()
    assert S("x0^2", nvars=3).nvars == 3


def test_text_is_reparsed():
    f = S("1/5*x0^2 + x0*x1 + 3*x1^2 + 7/9*x0*x2 + 5/4*x1*x2 + 5/4*x2^2")
    assert S(f.to_text(), nvars=3) == f


@pytest.mark.parametrize(
    "text",
    ["", "x0^2 + x1", "x0*y1", "x0 + 2/0*x1", "x0 + foo", "0.5*x0^2", "1e3*x0"],
)
def test_from_text_rejects(text):
    with pytest.raises(ScalarParseError):
        S(text)


def test_from_text_rejects_too_few_variables():
    with pytest.raises(ScalarParseError):
        S("x0*x2", nvars=2)


def test_bad_exponents():
    with pytest.raises(DimensionMismatchError):
        HomogeneousForm({(1, 1): 1, (1, 0): 2}, 2)
    with pytest.raises(DimensionMismatchError):
        HomogeneousForm({(1, 1, 0): 1}, 2)
    with pytest.raises(DimensionMismatchError):
        HomogeneousForm({}, 2)


def test_linear_power():
    assert HomogeneousForm.linear_power([1, 1], 2) == S("x0^2 + 2*x0*x1 + x1^2")
    assert HomogeneousForm.linear_power([1, -1, 0], 3) == S(
        "x0^3 - 3*x0^2*x1 + 3*x0*x1^2 - x1^3", nvars=3
    )


@pytest.mark.parametrize(
    "operator, form, expected",
    [
        ("y0", "x0*x1*x2", "x1*x2"),
        ("y0*y1", "x0^2*x1", "2*x0"),
        ("y0^2", "x0^3 + x1^3", "6*x0"),
        ("y0 + y1", "x0^2 + x1^2", "2*x0 + 2*x1"),
    ],
)
def test_diff_apply_examples(operator, form, expected):
    f = S(form)
    result = diff_apply(S(operator, nvars=f.nvars), f)
    assert result == S(expected, nvars=f.nvars)


def test_diff_apply_to_constant():
    result = diff_apply(y("y0*y1*y2"), S("x0*x1*x2"))
    assert result.degree == 0
    assert result.coefficient((0, 0, 0)) == 1


def test_diff_apply_annihilates():
    assert diff_apply(y("y0^2", nvars=3), S("x0*x1*x2")).is_zero()
    assert diff_apply(y("y2"), S("x0^2 + x1^2", nvars=3)).is_zero()


def test_diff_apply_bilinear(sampler):
    ops = [
        HomogeneousForm({e: sampler.integer() for e in monomials(3, 2)}, 3, 2, Ring.T)
        for _ in range(2)
    ]
    forms = [sampler.random_form(2, 4) for _ in range(2)]
    c = F(3, 7)
    assert diff_apply(ops[0] + ops[1], forms[0]) == (
        diff_apply(ops[0], forms[0]) + diff_apply(ops[1], forms[0])
    )
    assert diff_apply(ops[0], forms[0] + forms[1].scale(c)) == (
        diff_apply(ops[0], forms[0]) + diff_apply(ops[0], forms[1]).scale(c)
    )


def test_diff_apply_composes(sampler):
    f = sampler.random_form(2, 5)
    for alpha in monomials(3, 2):
        for gamma in monomials(3, 1):
            step = diff_apply(
                HomogeneousForm.monomial(gamma, ring=Ring.T),
                diff_apply(HomogeneousForm.monomial(alpha, ring=Ring.T), f),
            )
            joint = tuple(a + g for a, g in zip(alpha, gamma))
            assert step == diff_apply(HomogeneousForm.monomial(joint, ring=Ring.T), f)


def test_diff_apply_preconditions():
    with pytest.raises(PreconditionError):
        diff_apply(y("y0^3"), S("x0^2"))
    with pytest.raises(PreconditionError):
        diff_apply(S("x0"), S("x0^2"))
    with pytest.raises(PreconditionError):
        diff_apply(y("y0"), y("y0^2"))
    with pytest.raises(DimensionMismatchError):
        diff_apply(y("y0"), S("x0^2", nvars=2))


def test_perp_of_monomial():
    f = S("x0*x1*x2")
    assert perp_component(f, 1).dimension == 0
    quad = perp_component(f, 2)
    assert quad.dimension == 3
    for g in quad.basis:
        assert diff_apply(g, f).is_zero()
    assert perp_component(f, 3).dimension == 9
    assert perp_component(f, 4).dimension == 15


def test_perp_beyond_degree_is_everything():
    f = S("x0^2 + x1^2")
    component = perp_component(f, 3)
    assert component.dimension == 4
    assert {g.ring for g in component.basis} == {Ring.T}


def test_perp_dimension_matches_catalecticant(sampler):
    for _ in range(20):
        f = sampler.random_form(2, 4)
        for e in range(f.degree + 1):
            component = perp_component(f, e)
            assert component.dimension == len(monomials(3, e)) - catalecticant_rank(f, e)
            for g in component.basis:
                assert diff_apply(g, f).is_zero()


def test_catalecticant_shape():
    assert catalecticant(S("x0*x1*x2"), 1).shape == (6, 3)


def test_catalecticant_rank_symmetry(sampler):
    for _ in range(20):
        f = sampler.random_form(2, 4)
        for e in range(f.degree + 1):
            assert catalecticant_rank(f, e) == catalecticant_rank(f, f.degree - e)


def test_apolar_binary_examples():
    points = [ProjPoint([1, 0]), ProjPoint([0, 1])]
    assert is_apolar_points(points, S("x0^2 + x1^2"))
    assert not is_apolar_points(points, S("x0*x1"))


def test_waring_binary_quadric():
    points = [ProjPoint([1, 1]), ProjPoint([1, -1])]
    f = S("2*x0^2 + 2*x1^2")
    alphas = waring_coefficients(points, f)
    assert alphas == [1, 1]
    assert waring_reconstruct(points, alphas, 2) == f


def test_waring_monomial():
    points = [
        ProjPoint([1, 1, 1]),
        ProjPoint([-1, 1, 1]),
        ProjPoint([1, -1, 1]),
        ProjPoint([1, 1, -1]),
    ]
    f = S("x0*x1*x2")
    alphas = waring_coefficients(points, f)
    assert alphas == [F(1, 24), F(-1, 24), F(-1, 24), F(-1, 24)]
    assert waring_reconstruct(points, alphas, 3) == f


def test_waring_absent():
    assert waring_coefficients([ProjPoint([1, 0]), ProjPoint([0, 1])], S("x0*x1")) is None


def test_waring_preconditions():
    with pytest.raises(DegenerateInputError):
        waring_coefficients([], S("x0^2"))
    with pytest.raises(DegenerateInputError):
        waring_coefficients([ProjPoint([1, 2]), ProjPoint([2, 4])], S("x0^2 + x1^2"))
    with pytest.raises(DimensionMismatchError):
        waring_coefficients([ProjPoint([1, 2, 3])], S("x0^2 + x1^2"))


def test_vanishing_component():
    points = [ProjPoint([1, 0, 0]), ProjPoint([0, 1, 0]), ProjPoint([0, 0, 1])]
    ideal = vanishing_component(points, 2)
    assert len(ideal) == 3
    for g in ideal:
        for exps, _ in g.terms.items():
            assert sorted(exps) == [0, 1, 1]


@pytest.mark.parametrize("d", [2, 3])
def test_apolarity_matches_interpolation(sampler, d):
    """The span test agrees with ``I(X)_d`` annihilating the form."""
    planted = 0
    for trial in range(30):
        points = sampler.random_generic_points(2, 1 + trial % 6)
        if trial % 2:
            alphas = [sampler.integer() for _ in points]
            f = waring_reconstruct(points, alphas, d)
        else:
            f = sampler.random_form(2, d)
        ideal = vanishing_component(points, d)
        annihilated = all(diff_apply(g, f).is_zero() for g in ideal)
        apolar = is_apolar_points(points, f)
        assert apolar == annihilated
        if trial % 2:
            assert apolar
            planted += 1
    assert planted == 15
