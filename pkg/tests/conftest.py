import random
from fractions import Fraction

import pytest

from nijenhuis2d.exact_poly import BivariatePolynomial


def random_polynomial(rng: random.Random, max_terms=6, max_exp=6, max_coeff=9, max_den=4):
    """Random sparse polynomial with small rational coefficients."""
    terms = {}
    for _ in range(rng.randint(0, max_terms)):
        i = rng.randint(0, max_exp)
        j = rng.randint(0, max_exp - i)
        num = rng.randint(-max_coeff, max_coeff)
        den = rng.randint(1, max_den)
        if num:
            terms[(i, j)] = terms.get((i, j), Fraction(0)) + Fraction(num, den)
    return BivariatePolynomial(terms)


@pytest.fixture
def rng():
    return random.Random(20260811)
