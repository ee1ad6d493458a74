"""Cross-validation of the lean sweep decision routes against the exact
library implementations, on seeded samples of the sweep space."""

import random
from fractions import Fraction

from nijenhuis2d import sweep
from nijenhuis2d.sweep import to_fraction
from nijenhuis2d.classify import cubic_path, morse_path
from nijenhuis2d.exact_poly import NotDivisible, exact_div
from nijenhuis2d.jets import Jet2, morse_normalize_y


def sample_cases(fixed_j, rng, count):
    total = sweep.combo_count(fixed_j)
    picks = sorted(rng.sample(range(total), min(count, total)))
    for idx in picks:
        for terms, _mult in sweep.enumerate_cases(fixed_j, (idx, idx + 1)):
            yield terms
            break  # one case per combo is plenty


class TestEnumeration:
    def test_flip_canonicality(self):
        seen = set()
        for terms, mult in sweep.enumerate_cases(2, (0, 60)):
            flipped = sweep._flip_y(terms)
            assert tuple(sorted(terms)) <= flipped
            assert mult == (1 if flipped == tuple(sorted(terms)) else 2)
            assert terms not in seen
            seen.add(terms)

    def test_degree_and_support_bounds(self):
        for terms, _ in sweep.enumerate_cases(3, (0, 40)):
            assert len(terms) <= sweep.MAX_MONOMIALS
            assert all(i + j <= sweep.MAX_TOTAL_DEGREE for i, j, _ in terms)
            assert any((i, j) == (0, 3) for i, j, _ in terms)
            assert all((i, j) not in ((0, 0), (0, 1), (0, 2)) for i, j, _ in terms)


class TestDivisionRoute:
    def test_matches_exact_division(self):
        rng = random.Random(123)
        for fixed_j in (2, 3):
            for terms in sample_cases(fixed_j, rng, 250):
                g = sweep.terms_to_polynomial(terms)
                gy = g.partial_y()
                gx = g.partial_x()
                try:
                    exact_div(gx * gx - g, gy)
                    expected = True
                except NotDivisible:
                    expected = False
                assert sweep.division_verdict(terms) == expected, terms


class TestNormalFormRoute:
    def test_morse_tau_matches_jets(self):
        rng = random.Random(456)
        for terms in sample_cases(2, rng, 120):
            g = sweep.terms_to_polynomial(terms)
            norm = morse_normalize_y(Jet2.from_polynomial(g, 10))
            lean = sweep.morse_tau(terms, 10)
            assert [to_fraction(c) for c in lean] == [
                norm.tau.coefficient(k, 0) for k in range(11)
            ], terms

    def test_cubic_data_matches_jets(self):
        rng = random.Random(789)
        from nijenhuis2d.jets import cubic_normalize_y

        for terms in sample_cases(3, rng, 120):
            g = sweep.terms_to_polynomial(terms)
            norm = cubic_normalize_y(Jet2.from_polynomial(g, 10))
            b, t_hat, beta = sweep.cubic_data(terms, 10)
            assert to_fraction(b) == norm.scale or norm.scale == 1
            assert [to_fraction(c) for c in t_hat] == [
                norm.tau_scaled.coefficient(k, 0) for k in range(11)
            ], terms
            assert [to_fraction(c) for c in beta] == [
                norm.beta.coefficient(k, 0) for k in range(11)
            ], terms

    def test_verdict_matches_classify_paths(self):
        rng = random.Random(321)
        for terms in sample_cases(2, rng, 80):
            g = sweep.terms_to_polynomial(terms)
            assert sweep.morse_verdict(terms) == morse_path(g, jet_order=28).admissible, terms
        for terms in sample_cases(3, rng, 80):
            g = sweep.terms_to_polynomial(terms)
            assert sweep.cubic_verdict(terms) == cubic_path(g, jet_order=28).admissible, terms


class TestHomogeneousRoute:
    def test_pattern_matches_division_small(self):
        for terms in sweep.homogeneous_cases(3):
            assert sweep.homogeneous_pattern_verdict(terms) == sweep.division_verdict(terms), terms
