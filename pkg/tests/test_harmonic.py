from fractions import Fraction

import pytest

from apolarity_lab.harmonic import (
    check_brackets,
    harmonic_basis,
    harmonic_basis_3,
    harmonic_decompose,
    harmonic_dim,
    is_harmonic,
    laplacian,
    laplacian_power_constant,
    ladder_scalars,
    p_dk,
    so3_action,
    so3_uvz,
    so3_y,
    span_dim,
)
from apolarity_lab.parser import parse_poly
from apolarity_lab.polynomial import UVZ, X, Y, FrameMismatchError, Poly, change_frame, quadric, uvz_to_y

from conftest import random_form, random_poly


@pytest.mark.parametrize("n", [2, 3, 4])
@pytest.mark.parametrize("s", [1, 2, 3])
def test_laplacian_of_quadric_power(n, s):
    q = quadric(X(n))
    assert laplacian(q ** s) == (q ** (s - 1)).scale(laplacian_power_constant(n, s))


def test_harmonic_dims():
    assert harmonic_dim(3, 2) == 5
    assert harmonic_dim(3, 5) == 11
    assert harmonic_dim(2, 4) == 2
    assert harmonic_dim(4, 0) == 1
    assert [harmonic_dim(3, d) for d in range(6)] == [2 * d + 1 for d in range(6)]


@pytest.mark.parametrize("n,d", [(2, 3), (3, 2), (3, 4), (4, 3)])
def test_harmonic_basis(n, d):
    basis = harmonic_basis(X(n), d)
    assert len(basis) == harmonic_dim(n, d)
    assert span_dim(basis) == len(basis)
    assert all(is_harmonic(h) for h in basis)


def test_decompose_x1_squared():
    parts = dict(harmonic_decompose(parse_poly("x1^2", X(3))))
    assert parts[0] == parse_poly("2*x1^2/3 - x2^2/3 - x3^2/3", X(3))
    assert parts[1] == Fraction(1, 3)


def test_decompose_harmonic_is_trivial():
    h = parse_poly("x1*x2", X(3))
    parts = dict(harmonic_decompose(h))
    assert parts[0] == h and parts[1] == 0


def test_decompose_quadric_power():
    parts = dict(harmonic_decompose(quadric(X(3)) ** 2))
    assert parts[0] == 0 and parts[1] == 0 and parts[2] == 1


@pytest.mark.parametrize("n,d", [(2, 5), (3, 4), (3, 5), (4, 4)])
def test_decompose_reconstructs(rng, n, d):
    f = random_form(rng, X(n), d, density=0.6)
    q = quadric(X(n))
    total = Poly.zero(X(n))
    for j, h in harmonic_decompose(f):
        assert is_harmonic(h)
        assert h.is_zero() or h.homogeneous_degree() == d - 2 * j
        total = total + q ** j * h
    assert total == f


def test_decompose_rejects_uvz():
    with pytest.raises(FrameMismatchError):
        harmonic_decompose(parse_poly("u*v", UVZ))


def test_p_dk_examples():
    assert p_dk(2, 0) == parse_poly("z^2/2 - u*v", UVZ)
    assert p_dk(3, 1) == parse_poly("z^2*u/2 - u^2*v/2", UVZ)
    assert p_dk(4, 4) == parse_poly("u^4/24", UVZ)
    assert p_dk(3, -3) == parse_poly("v^3/6", UVZ)
    with pytest.raises(ValueError):
        p_dk(2, 3)


@pytest.mark.parametrize("d", range(7))
def test_canonical_basis_harmonic_and_independent(d):
    basis = harmonic_basis_3(d)
    assert len(basis.elements) == 2 * d + 1
    assert span_dim(basis.elements) == 2 * d + 1
    assert all(is_harmonic(p) for p in basis.elements)
    sub = uvz_to_y()
    assert all(is_harmonic(change_frame(p, Y(3), sub)) for p in basis.elements)


def test_basis_indexing():
    b = harmonic_basis_3(3)
    assert b[3] == p_dk(3, 3) and b[-2] == p_dk(3, -2)
    assert len(b.nonnegative()) == 4
    with pytest.raises(KeyError):
        b[4]


def test_laplacian_matches_between_frames(rng):
    sub = uvz_to_y()
    for _ in range(5):
        p = random_poly(rng, UVZ, 4)
        assert change_frame(laplacian(p), Y(3), sub) == laplacian(change_frame(p, Y(3), sub))


def test_brackets():
    assert all(check_brackets(so3_y()).values())
    assert all(check_brackets(so3_uvz()).values())


def test_weights():
    b = so3_uvz()
    for d in range(5):
        for k in range(-d, d + 1):
            p = p_dk(d, k)
            assert so3_action(b.H, p, b.variables) == p.scale(2 * k)


@pytest.mark.parametrize("d", range(1, 6))
def test_ladder(d):
    scalars = ladder_scalars(d)
    for k in range(-d, d):
        assert scalars[("E", k)] not in (None, 0)
    for k in range(-d + 1, d + 1):
        assert scalars[("F", k)] not in (None, 0)
    assert scalars[("E", d)] == 0 and scalars[("F", -d)] == 0


def test_commutator_acts_as_h(rng):
    b = so3_uvz()
    f = random_poly(rng, UVZ, 3)
    ef = so3_action(b.E, so3_action(b.F, f, b.variables), b.variables)
    fe = so3_action(b.F, so3_action(b.E, f, b.variables), b.variables)
    assert ef - fe == so3_action(b.H, f, b.variables)


def test_so3_y_kills_quadric():
    b = so3_y()
    q = quadric(Y(3))
    for M in (b.H, b.E, b.F):
        assert so3_action(M, q) == 0
