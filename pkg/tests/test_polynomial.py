from fractions import Fraction

import pytest

from apolarity_lab.parser import parse_poly
from apolarity_lab.polynomial import (
    UVZ,
    X,
    Y,
    FrameMismatchError,
    Poly,
    VariableFrame,
    change_frame,
    inverse_substitution,
    mi_factorial,
    mi_sub,
    monomials,
    quadric,
    uvz_to_y,
    y_to_uvz,
)
from apolarity_lab.scalars import GaussianRational

from conftest import exact_eval, random_gaussian, random_poly


def test_multi_index_helpers():
    assert mi_factorial((2, 0, 3)) == 12
    assert mi_sub((2, 1), (1, 1)) == (1, 0)
    assert mi_sub((2, 1), (0, 2)) is None


def test_monomials_graded_lex_descending():
    assert monomials(3, 2)[0] == (2, 0, 0)
    assert monomials(3, 2)[-1] == (0, 0, 2)
    assert len(monomials(4, 5)) == 56


def test_uvz_frame_needs_three_variables():
    with pytest.raises(ValueError):
        VariableFrame("UVZ", 2)
    assert UVZ.variables == ("z", "u", "v")


def test_difference_of_squares():
    x1, x2 = Poly.gens(X(2))
    assert (x1 + x2) * (x1 - x2) == parse_poly("x1^2 - x2^2", X(2))


def test_empty_power_is_one():
    assert quadric(X(3)) ** 0 == 1


def test_degree_additive_for_forms(rng):
    f = random_poly(rng, X(3), 0) + quadric(X(3)) ** 2
    g = quadric(X(3)) * parse_poly("x1 + 2*x3", X(3))
    assert (quadric(X(3)) * g).homogeneous_degree() == 2 + 3
    assert f.homogeneous_degree() is None or f.homogeneous_degree() == 4


def test_frames_do_not_mix():
    with pytest.raises(FrameMismatchError):
        Poly.var(X(3), "x1") + Poly.var(Y(3), "y1")


def test_q2_is_uv():
    # u = x1 + i x2, v = x1 - i x2 in the binary frame
    x1, x2 = Poly.gens(X(2))
    i = GaussianRational(0, 1)
    assert (x1 + x2 * i) * (x1 - x2 * i) == quadric(X(2))


def test_uv_substitution():
    uv = parse_poly("u*v", UVZ)
    # expand ((y1 + i y2)/2)((y1 - i y2)/2) by hand: (y1^2 + y2^2)/4
    assert change_frame(uv, Y(3), uvz_to_y()) == parse_poly("y1^2/4 + y2^2/4", Y(3))


def test_substitution_agrees_with_pointwise_evaluation(rng):
    p = random_poly(rng, UVZ, 4)
    q = change_frame(p, Y(3), uvz_to_y())
    sub = uvz_to_y()
    for _ in range(5):
        pt = [random_gaussian(rng) for _ in range(3)]
        images = [exact_eval(sub[v], pt) for v in UVZ.variables]
        assert exact_eval(q, pt) == exact_eval(p, images)


def test_identity_substitution():
    p = parse_poly("x1^3 - 2*x2*x3 + 5", X(3))
    ident = {v: Poly.var(X(3), v) for v in X(3).variables}
    assert change_frame(p, X(3), ident) == p


def test_rename_z():
    sub = uvz_to_y()
    assert change_frame(parse_poly("z^5", UVZ), Y(3), sub) == parse_poly("y3^5", Y(3))


def test_inverse_substitution_values():
    inv = y_to_uvz()
    assert inv["y1"] == parse_poly("u + v", UVZ)
    assert inv["y2"] == parse_poly("-i*u + i*v", UVZ)
    assert inv["y3"] == parse_poly("z", UVZ)


def test_round_trip_random_polys(rng):
    fwd, back = uvz_to_y(), y_to_uvz()
    for _ in range(25):
        p = random_poly(rng, UVZ, 6, density=0.3)
        assert change_frame(change_frame(p, Y(3), fwd), UVZ, back) == p


def test_change_frame_is_multiplicative(rng):
    sub = uvz_to_y()
    a, b = random_poly(rng, UVZ, 3), random_poly(rng, UVZ, 3)
    assert change_frame(a * b, Y(3), sub) == change_frame(a, Y(3), sub) * change_frame(b, Y(3), sub)


def test_non_invertible_substitution():
    y1, y2, y3 = Poly.gens(Y(3))
    with pytest.raises(ValueError, match="invertible"):
        change_frame(parse_poly("u", UVZ), Y(3), {"u": y1, "v": y1 * 2, "z": y3})


def test_nonlinear_image_rejected():
    y1, y2, y3 = Poly.gens(Y(3))
    with pytest.raises(ValueError, match="linear"):
        change_frame(parse_poly("u", UVZ), Y(3), {"u": y1 * y1, "v": y2, "z": y3})


def test_inverse_substitution_of_scaling():
    x1, x2 = Poly.gens(X(2))
    sub = {"y1": x1 * 2, "y2": x2}
    inv = inverse_substitution(Y(2), X(2), sub)
    assert inv["x1"] == Poly.var(Y(2), "y1") * Fraction(1, 2)


def test_diff():
    p = parse_poly("x1^3*x2 + x2^2", X(2))
    assert p.diff("x1") == parse_poly("3*x1^2*x2", X(2))
    assert p.diff(1, 2) == 2
