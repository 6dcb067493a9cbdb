import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from apolarity_lab.parser import PolySyntaxError, UnknownVariableError, parse_poly
from apolarity_lab.polynomial import UVZ, X, Y, Poly
from apolarity_lab.scalars import GaussianRational


def test_sum_of_squares():
    q = parse_poly("x1^2+x2^2+x3^2", X(3))
    assert len(q) == 3
    assert set(q.terms.values()) == {1}


def test_u_form_of_y_frame():
    u = parse_poly("y1+i*y2", Y(3))
    assert u.terms == {(1, 0, 0): 1, (0, 1, 0): GaussianRational(0, 1)}


def test_zero():
    assert parse_poly("0", X(2)).terms == {}
    assert parse_poly("x1 - x1", X(2)).is_zero()


@pytest.mark.parametrize("text, expected", [
    ("(1/2+3/4i)*y1", {(1, 0): GaussianRational(0.5, 0.75)}),
    ("3i*y2", {(0, 1): GaussianRational(0, 3)}),
    ("3 i * y2", {(0, 1): GaussianRational(0, 3)}),
    ("y1^2/4", {(2, 0): GaussianRational(0.25)}),
    ("-y1^2", {(2, 0): -1}),
    ("(y1+y2)^2 - 2*y1*y2", {(2, 0): 1, (0, 2): 1}),
])
def test_grammar(text, expected):
    assert parse_poly(text, Y(2)).terms == expected


def test_whitespace_insignificant():
    assert parse_poly(" x1 ^ 2 * x2 + 2 / 3 ", X(2)) == parse_poly("x1^2*x2+2/3", X(2))


@pytest.mark.parametrize("text, pos", [("x1 + * x2", 5), ("x1^", 3), ("(x1", 3), ("x1 $ x2", 3), ("", 0)])
def test_syntax_errors_report_position(text, pos):
    with pytest.raises(PolySyntaxError) as exc:
        parse_poly(text, X(2))
    assert exc.value.pos == pos
    assert f"position {pos}" in str(exc.value)


def test_unknown_variable():
    with pytest.raises(UnknownVariableError) as exc:
        parse_poly("x1 + x3", X(2))
    assert exc.value.pos == 5
    with pytest.raises(UnknownVariableError):
        parse_poly("y1", UVZ)


def test_division_by_polynomial_rejected():
    with pytest.raises(PolySyntaxError):
        parse_poly("1/x1", X(1))
    with pytest.raises(PolySyntaxError):
        parse_poly("x1/0", X(1))


coeff = st.builds(
    GaussianRational,
    st.fractions(max_denominator=9).filter(lambda q: abs(q) < 100),
    st.fractions(max_denominator=9).filter(lambda q: abs(q) < 100),
)


@st.composite
def polys(draw, frame):
    n = frame.n
    exps = st.tuples(*[st.integers(0, 4)] * n)
    return Poly(frame, draw(st.dictionaries(exps, coeff, max_size=6)))


@settings(max_examples=200)
@given(st.sampled_from([X(3), Y(2), UVZ]).flatmap(polys))
def test_print_parse_round_trip(p):
    assert parse_poly(str(p), p.frame) == p
