"""Hyperelliptic model discriminants, the odd-degree normalization
pipeline, cross-ratio sets, and the discriminant bound checker."""

import math
import random
from fractions import Fraction as F

import pytest

from szpirocheck.elliptic import EllipticModel, model_invariants
from szpirocheck.errors import DomainError, SingularModelError
from szpirocheck.exactmath import Poly, poly_discriminant
from szpirocheck.hyperelliptic import (INFINITY, cross_ratio_set,
                                       disc_conductor_bound_check,
                                       model_discriminant, rescale_model,
                                       trace_shift_normalize)

from oracles import discriminant_subresultant, rational_cross_ratios


class TestModelDiscriminant:
    def test_genus_one_j_zero(self):
        m = model_discriminant(Poly.of(0, 0, 0, 1), Poly.of(1))
        assert m.genus == 1 and m.disc == -27

    def test_genus_two_odd_degree(self):
        m = model_discriminant(Poly.of(1, 0, 0, 0, 0, 1), Poly.zero())
        assert m.genus == 2 and m.disc == 800000
        assert discriminant_subresultant(Poly.of(1, 0, 0, 0, 0, 1)) == 3125

    def test_genus_two_even_degree_branch(self):
        # deg f0 = 2g + 2: no a0^2 factor; disc(x^6 - 1) = 46656
        f = Poly.of(-1, 0, 0, 0, 0, 0, 1)
        assert discriminant_subresultant(f) == 46656
        m = model_discriminant(f, Poly.zero())
        assert m.disc == 256 * 46656
        assert not m.branch_at_infinity

    def test_repeated_root_rejected(self):
        with pytest.raises(SingularModelError):
            model_discriminant(Poly.of(0, 0, 1) * Poly.of(0, 1), Poly.zero())

    def test_degree_too_small(self):
        with pytest.raises(DomainError):
            model_discriminant(Poly.of(1, 0, 1), Poly.zero())

    def test_genus_one_agrees_with_elliptic_formulas(self):
        rng = random.Random(41)
        found = 0
        while found < 20:
            a1, a2, a3, a4, a6 = (rng.randint(-5, 5) for _ in range(5))
            try:
                em = model_invariants(a1, a2, a3, a4, a6)
            except SingularModelError:
                continue
            f = Poly.of(a6, a4, a2, 1)
            f2 = Poly.of(a3, a1)
            hm = model_discriminant(f, f2)
            assert hm.genus == 1 and hm.disc == em.disc
            found += 1


class TestTraceShift:
    def test_zero_trace(self):
        theta, eta, shifted = trace_shift_normalize(Poly.of(0, 0, 0, 1))
        assert (theta, eta) == (0, 0) and shifted == Poly.of(0, 0, 0, 1)

    def test_exact_division_case(self):
        theta, eta, shifted = trace_shift_normalize(Poly.of(-1, 1, -6, 1))
        assert (theta, eta) == (2, 0)
        assert shifted == Poly.of(-1, 1, -6, 1).shift(2)

    def test_remainder_case(self):
        theta, eta, _ = trace_shift_normalize(Poly.of(1, 0, -4, 1))
        assert (theta, eta) == (1, 1) and abs(eta) <= 3

    def test_rejects_even_degree_and_nonmonic(self):
        with pytest.raises(DomainError):
            trace_shift_normalize(Poly.of(1, 0, 1))
        with pytest.raises(DomainError):
            trace_shift_normalize(Poly.of(1, 0, 0, 2))

    def test_discriminant_invariance_random(self):
        rng = random.Random(13)
        done = 0
        while done < 100:
            nu = rng.choice([3, 5, 7])
            coeffs = [rng.randint(-8, 8) for _ in range(nu)] + [1]
            f = Poly.from_list(coeffs)
            if poly_discriminant(f) == 0:
                continue
            _, _, shifted = trace_shift_normalize(f)
            assert poly_discriminant(shifted) == poly_discriminant(f)
            done += 1


class TestRescale:
    def test_quarter_coefficient(self):
        a0, scaled, verdict = rescale_model(Poly.of(0, F(1, 4), 0, 1))
        assert a0 == 4 and verdict.passed
        base = model_discriminant(Poly.of(0, F(1, 4), 0, 1), Poly.zero())
        assert scaled.disc == base.disc * F(4) ** 12

    def test_integral_noop(self):
        a0, scaled, verdict = rescale_model(Poly.of(1, 2, 0, 1))
        assert a0 == 1 and verdict.passed
        assert scaled.disc == model_discriminant(Poly.of(1, 2, 0, 1),
                                                 Poly.zero()).disc

    def test_degree_five(self):
        a0, _, verdict = rescale_model(Poly.of(0, F(1, 2), 0, 0, 0, 1))
        assert a0 == 2 and verdict.passed

    def test_random_rescalings(self):
        rng = random.Random(7)
        done = 0
        while done < 50:
            nu = rng.choice([3, 5, 7])
            den = rng.choice([2, 3, 4, 6])
            coeffs = [F(rng.randint(-6, 6), rng.choice([1, den]))
                      for _ in range(nu)] + [F(1)]
            f = Poly.from_list(coeffs)
            if poly_discriminant(f) == 0:
                continue
            a0, scaled, verdict = rescale_model(f)
            assert verdict.passed
            base = model_discriminant(f, Poly.zero())
            assert scaled.disc == base.disc * F(a0) ** (4 * nu)
            done += 1


class TestCrossRatios:
    def test_four_rational_points(self):
        f0 = Poly.of(0, 1) * Poly.of(-1, 1) * Poly.of(-2, 1) * Poly.of(-3, 1)
        crs = cross_ratio_set(f0)
        assert crs.exact
        expected = rational_cross_ratios([0, 1, 2, 3])
        assert set(crs.values) == expected
        for v in (F(4, 3), F(3, 4), F(-3), F(4), F(-1, 3), F(1, 4)):
            assert v in crs.values
        assert crs.h_set == pytest.approx(math.log(4), abs=1e-12)

    def test_quadruple_with_minus_three(self):
        f0 = Poly.of(0, 1) * Poly.of(-1, 1) * Poly.of(1, 1) * Poly.of(-2, 1)
        crs = cross_ratio_set(f0)
        assert F(-3) in crs.values
        idx = crs.values.index(F(-3))
        assert crs.heights[idx] == pytest.approx(math.log(3), abs=1e-12)

    def test_reciprocal_closure(self):
        f0 = Poly.of(0, 1) * Poly.of(-1, 1) * Poly.of(-2, 1) * Poly.of(-3, 1)
        crs = cross_ratio_set(f0)
        for v in crs.values:
            assert 1 / v in crs.values and 1 - v in crs.values

    def test_infinity_branch_point(self):
        # cubic: three finite points + infinity
        f0 = Poly.of(0, 1) * Poly.of(-1, 1) * Poly.of(-3, 1)
        crs = cross_ratio_set(f0)
        assert crs.branch_points[-1] is INFINITY
        expected = rational_cross_ratios([0, 1, 3, None])
        assert set(crs.values) == expected

    def test_irrational_branch_points(self):
        crs = cross_ratio_set(Poly.of(1, 0, 0, 0, 0, 1))  # x^5 + 1
        assert not crs.exact
        assert crs.h_set >= 1.0
        for a in crs.values:
            assert a.minpoly.degree >= 1

    def test_height_floor(self):
        # all cross ratios of {0,1,2,inf} have height <= log 2 -> floor 1
        f0 = Poly.of(0, 1) * Poly.of(-1, 1) * Poly.of(-2, 1)
        crs = cross_ratio_set(f0)
        assert crs.h_set == 1.0


class TestDiscBound:
    def test_genus_two_example(self):
        m = model_discriminant(Poly.of(1, 0, 0, 0, 0, 1), Poly.zero())
        crs = cross_ratio_set(m.f0)
        v = disc_conductor_bound_check(m, crs.h_set, math.log(800000))
        assert v.passed

    def test_rhs_value(self):
        m = model_discriminant(Poly.of(1, 0, 0, 0, 0, 1), Poly.zero())
        v = disc_conductor_bound_check(m, 1.0, 0.0)
        rhs = 8 * 125 * (1.0 + 0.0 + 2 * math.log(5))
        assert v.margin == pytest.approx(rhs - math.log(800000), abs=1e-9)

    def test_mu_floor_enforced(self):
        m = model_discriminant(Poly.of(1, 0, 0, 0, 0, 1), Poly.zero())
        with pytest.raises(DomainError):
            disc_conductor_bound_check(m, 0.0, 0.0)

    def test_genus_one_rejected(self):
        m = model_discriminant(Poly.of(0, 0, 0, 1), Poly.of(1))
        with pytest.raises(DomainError):
            disc_conductor_bound_check(m, 1.0, 0.0)
