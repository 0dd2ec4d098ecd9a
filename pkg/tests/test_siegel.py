"""Theta constants, characteristic tables, the discriminant modular form,
the symplectic action, the sup-norm bound, and fundamental-domain
reduction."""

import math
from fractions import Fraction as F

import mpmath as mp
import pytest

from szpirocheck.errors import ConditioningError, DomainError
from szpirocheck.sampling import (sample_conditioned_pairs, sample_symplectic,
                                  sample_tau_g1, sample_tau_g2)
from szpirocheck.siegel import (SiegelPoint, SymplecticMatrix,
                                ThetaCharacteristic,
                                branch_subset_characteristics, delta_g,
                                delta_g_sup_constant, gottschling_family,
                                minkowski_constant, mumford_characteristics,
                                reduce_to_fundamental, symplectic_act,
                                symplectic_act_char, theta_constant,
                                theta_constants, verify_sup_bound,
                                verify_transform_identity)
from szpirocheck.siegel import _det_ctau_d

from oracles import delta_qprod, theta_jtheta_g1, theta_naive

I_TAU = [[complex(0, 1)]]


class TestThetaConstant:
    def test_classical_value_at_i(self):
        val = theta_constant(ThetaCharacteristic((0,), (0,)),
                             SiegelPoint.create(I_TAU))
        with mp.workprec(280):
            expected = mp.pi ** mp.mpf("0.25") / mp.gamma(mp.mpf(3) / 4)
            assert abs(val - expected) < mp.mpf("1e-60")

    def test_matches_jtheta(self):
        # (a,b)=(0,0) ~ theta3, (0,1/2) ~ theta4, (1/2,0) ~ theta2
        for tau in (mp.mpc("0.3", "1.1"), mp.mpc("-0.4", "0.9")):
            pt = SiegelPoint.create([[tau]])
            pairs = [((0, 0), 3), ((0, 1), 4), ((1, 0), 2)]
            for (a, b), kind in pairs:
                ours = theta_constant(ThetaCharacteristic((a,), (b,)), pt)
                ref = theta_jtheta_g1(kind, tau)
                assert abs(ours - ref) < mp.mpf("1e-50"), (a, b)

    def test_odd_characteristics_vanish(self):
        for pt in sample_tau_g2(5, seed=2):
            for ch in mumford_characteristics(2).values():
                if not ch.is_even:
                    assert abs(theta_constant(ch, pt)) < 1e-28
        val = theta_constant(ThetaCharacteristic((1,), (1,)),
                             SiegelPoint.create(I_TAU))
        assert abs(val) < 1e-28

    def test_diagonal_product_splitting(self):
        pt = SiegelPoint.create([[complex(0, 1), 0], [0, complex(0, 1)]])
        val = theta_constant(ThetaCharacteristic.zero(2), pt)
        one = theta_constant(ThetaCharacteristic.zero(1),
                             SiegelPoint.create(I_TAU))
        with mp.workprec(280):
            assert abs(val - one ** 2) < mp.mpf("1e-55")

    def test_matches_naive_sum_g2(self):
        for pt in sample_tau_g2(3, seed=9, eig_lo=0.8, eig_hi=2.0):
            rows = [[pt.tau[i][j] for j in range(2)] for i in range(2)]
            for ch in [((0, 1), (1, 0)), ((1, 1), (0, 0)), ((0, 0), (1, 1))]:
                ours = theta_constants([ThetaCharacteristic(*ch)], pt)[0]
                ref = theta_naive(ch[0], ch[1], rows, box=9)
                assert abs(ours - ref) < mp.mpf("1e-25"), ch

    def test_quasi_periodicity_modulus(self):
        # |theta| is invariant under integer shifts of the characteristic
        for i, pt in enumerate(sample_tau_g2(5, seed=31, eig_lo=0.8)):
            rows = [[pt.tau[r][c] for c in range(2)] for r in range(2)]
            a, b = (0, 1), (1, 1)
            base = theta_naive(a, b, rows, box=9)
            shifted = theta_naive((0 + 2, 1), (1, 1 - 2), rows, box=9)
            assert abs(abs(base) - abs(shifted)) < mp.mpf("1e-25")
            ours = theta_constant(ThetaCharacteristic(a, b), pt)
            assert abs(abs(ours) - abs(base)) < mp.mpf("1e-25")

    def test_conditioning_guard(self):
        pt = SiegelPoint.create([[complex(0, 1e-7)]])
        with pytest.raises(ConditioningError):
            theta_constant(ThetaCharacteristic.zero(1), pt)

    def test_not_positive_definite_rejected(self):
        with pytest.raises(DomainError):
            SiegelPoint.create([[complex(0, -1)]])


class TestCharacteristicTable:
    def test_g1_even_triple(self):
        chars = branch_subset_characteristics(1)
        got = {(c.a, c.b) for c in chars}
        assert got == {((0,), (0,)), ((0,), (1,)), ((1,), (0,))}
        assert all(c.is_even for c in chars)

    def test_eta_empty_is_zero(self):
        table = mumford_characteristics(2)
        z = table[frozenset()]
        assert z.a == (0, 0) and z.b == (0, 0)

    def test_g2_ten_even_distinct(self):
        chars = branch_subset_characteristics(2)
        assert len(chars) == 10
        assert all(c.is_even for c in chars)
        assert len({(c.a, c.b) for c in chars}) == 10

    def test_g3_all_even(self):
        chars = branch_subset_characteristics(3)
        assert len(chars) == 35
        assert all(c.is_even for c in chars)


class TestDeltaG:
    def test_bridge_identity_at_i(self):
        pt = SiegelPoint.create(I_TAU)
        ours = delta_g(pt)
        ref = delta_qprod(mp.mpc(0, 1))
        assert abs(ours - ref) / abs(ref) < mp.mpf("1e-30")

    def test_bridge_identity_sampled(self):
        for pt in sample_tau_g1(10, seed=3):
            red, _ = reduce_to_fundamental(pt)
            tau = red.tau[0][0]
            ours = delta_g(red)
            ref = delta_qprod(tau)
            assert abs(ours - ref) / abs(ref) < mp.mpf("1e-10")

    def test_vanishes_on_product_locus(self):
        pt = SiegelPoint.create([[complex(0, 1.3), 0], [0, complex(0, 1.9)]])
        assert abs(delta_g(pt)) < 1e-8

    def test_translation_modulus_invariance(self):
        pt = SiegelPoint.create([[mp.mpc("0.2", "1.4")]])
        moved = symplectic_act(SymplecticMatrix.translation([[1]]), pt)
        assert abs(abs(delta_g(pt)) - abs(delta_g(moved))) < mp.mpf("1e-40")


class TestSymplectic:
    def test_identity_and_inversion_fixed_point(self):
        pt = SiegelPoint.create(I_TAU)
        ident = SymplecticMatrix.identity(1)
        assert abs(symplectic_act(ident, pt).tau[0][0] - mp.mpc(0, 1)) == 0
        s = SymplecticMatrix.inversion(1)
        assert abs(symplectic_act(s, pt).tau[0][0] - mp.mpc(0, 1)) < 1e-70
        ch = ThetaCharacteristic((1,), (0,))
        assert symplectic_act_char(ident, ch) == ch

    def test_non_symplectic_rejected(self):
        with pytest.raises(DomainError):
            SymplecticMatrix.from_blocks([[2]], [[0]], [[0]], [[1]])

    def test_composition_is_action(self):
        pairs = sample_symplectic(2, 40, seed=12)
        taus = sample_tau_g2(20, seed=13, eig_lo=0.8, eig_hi=2.5)
        for k in range(20):
            s1, s2 = pairs[2 * k], pairs[2 * k + 1]
            pt = taus[k]
            lhs = symplectic_act(s1.compose(s2), pt)
            rhs = symplectic_act(s1, symplectic_act(s2, pt))
            err = max(abs(lhs.tau[i][j] - rhs.tau[i][j])
                      for i in range(2) for j in range(2))
            assert err < mp.mpf("1e-25")

    def test_transform_identity_g1_entry_bounded(self):
        pt = SiegelPoint.create([[mp.mpc("0.3", "1.2")]])
        for sig in sample_symplectic(1, 8, seed=5, entry_bound=5):
            assert verify_transform_identity(sig, pt).passed

    def test_transform_identity_g2(self):
        for sig, pt in sample_conditioned_pairs(2, 6, seed=21,
                                                min_im_eig=0.15):
            assert verify_transform_identity(sig, pt).passed


class TestSupBound:
    def test_constants(self):
        assert minkowski_constant(1) == 1
        assert minkowski_constant(2) == F(3, 8)
        assert delta_g_sup_constant(1).log == pytest.approx(
            -8 * math.log(2) + 24 * math.log(8) + 6 * math.log(6), abs=1e-9)
        expected = (-48 * math.log(2) + 160 * math.log(18)
                    + 40 * math.log(320 / 3))
        assert delta_g_sup_constant(2).log == pytest.approx(expected, abs=1e-9)
        assert delta_g_sup_constant(2).log == pytest.approx(616.0, abs=0.1)

    def test_bound_at_i(self):
        v = verify_sup_bound(SiegelPoint.create(I_TAU))
        assert v.passed and v.margin > 50

    def test_bound_at_diagonal_g2(self):
        pt = SiegelPoint.create([[complex(0, 1), 0], [0, complex(0, 1)]])
        v = verify_sup_bound(pt)
        assert v.passed and v.margin >= 600

    def test_sampled(self):
        for pt in sample_tau_g2(25, seed=6):
            assert verify_sup_bound(pt).passed


class TestReduction:
    def test_g1_example(self):
        pt = SiegelPoint.create([[complex(0.7, 0.8)]])
        red, sig = reduce_to_fundamental(pt)
        tau = red.tau[0][0]
        assert abs(tau) >= 1 - 1e-12
        assert abs(tau.real) <= 0.5 + 1e-12
        assert tau.imag >= math.sqrt(3) / 2 - 1e-12
        chk = symplectic_act(sig, pt)
        assert abs(chk.tau[0][0] - tau) < 1e-40

    def test_g1_brute_force_word_oracle(self):
        # the reduced point maximizes Im over the orbit; compare against a
        # brute-force search over short generator words
        pt = SiegelPoint.create([[mp.mpc("0.37", "0.41")]])
        red, _ = reduce_to_fundamental(pt)
        best = mp.mpf(0)
        S = SymplecticMatrix.inversion(1)
        frontier = [SymplecticMatrix.identity(1)]
        seen = set()
        for _ in range(8):
            nxt = []
            for sig in frontier:
                key = tuple(map(tuple, sig.full()))
                if key in seen:
                    continue
                seen.add(key)
                moved = symplectic_act(sig, pt)
                best = max(best, moved.tau[0][0].imag)
                for step in (S, SymplecticMatrix.translation([[1]]),
                             SymplecticMatrix.translation([[-1]])):
                    nxt.append(step.compose(sig))
            frontier = nxt
        assert abs(red.tau[0][0].imag - best) < mp.mpf("1e-25")

    def test_already_reduced_is_fixed(self):
        pt = SiegelPoint.create([[complex(0.1, 1.5)]])
        red, sig = reduce_to_fundamental(pt)
        assert sig.full() == SymplecticMatrix.identity(1).full()
        assert abs(red.tau[0][0] - pt.tau[0][0]) == 0

    def test_g2_postconditions_and_invariance(self):
        taus = sample_tau_g2(4, seed=44, eig_lo=0.7, eig_hi=2.0)
        sigs = sample_symplectic(2, 4, seed=45)
        for pt0, sig in zip(taus, sigs):
            pt = symplectic_act(sig, pt0)
            if float(pt.im_min_eigenvalue()) < 1e-5:
                continue
            red, sig_out = reduce_to_fundamental(pt)
            y = red.im_matrix()
            assert float(y[0][0]) <= float(y[1][1]) * (1 + 1e-12)
            assert 2 * abs(float(y[0][1])) <= float(y[0][0]) * (1 + 1e-12)
            for i in range(2):
                for j in range(2):
                    assert abs(float(red.tau[i][j].real)) <= 0.5 + 1e-9
            for cand in gottschling_family():
                assert abs(_det_ctau_d(cand, red)) >= 1 - 1e-9
            # |Delta_2| det(Im)^{2r} is an orbit invariant
            lhs = abs(delta_g(pt)) * pt.im_det() ** 20
            rhs = abs(delta_g(red)) * red.im_det() ** 20
            assert abs(lhs - rhs) <= mp.mpf("1e-9") * max(abs(lhs), abs(rhs))
            chk = symplectic_act(sig_out, pt)
            err = max(abs(chk.tau[i][j] - red.tau[i][j])
                      for i in range(2) for j in range(2))
            assert err < mp.mpf("1e-30")
