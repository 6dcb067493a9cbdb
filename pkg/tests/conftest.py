import random
from fractions import Fraction

import pytest

from apolarity_lab.polynomial import Poly, monomials
from apolarity_lab.scalars import GaussianRational

ACCEPTANCE_LINES = []


@pytest.fixture
def rng():
    return random.Random(20241018)


def exact_eval(p: Poly, point):
    """Exact value of p at a point of Gaussian rationals (independent of Poly arithmetic)."""
    total = GaussianRational(0)
    for alpha, c in p.terms.items():
        t = c
        for x, e in zip(point, alpha):
            t = t * x ** e
        total = total + t
    return total


def random_gaussian(rng, lo=-4, hi=4, den=3):
    return GaussianRational(
        Fraction(rng.randint(lo, hi), rng.randint(1, den)),
        Fraction(rng.randint(lo, hi), rng.randint(1, den)),
    )


def random_poly(rng, frame, max_deg, density=0.5):
    terms = {}
    for d in range(max_deg + 1):
        for a in monomials(frame.n, d):
            if rng.random() < density:
                terms[a] = rng.randint(-5, 5)
    return Poly(frame, terms)


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


def random_form(rng, frame, d, density=0.5):
    """Nonzero homogeneous form of degree d."""
    mons = monomials(frame.n, d)
    terms = {a: rng.randint(-5, 5) for a in mons if rng.random() < density}
    terms[rng.choice(mons)] = rng.choice([-3, -2, -1, 1, 2, 3])
    return Poly(frame, terms)
