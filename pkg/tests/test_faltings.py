"""Faltings heights through the Noether identity: exactness for semistable
curves, the interval form otherwise, invariance under coordinate changes,
and the archimedean pin."""

import math
from fractions import Fraction as F

import mpmath as mp
import pytest

from szpirocheck.corpus import DESK_CORPUS
from szpirocheck.elliptic import (dedekind_delta_q, faltings_height,
                                  global_invariants, model_invariants)

from oracles import delta_qprod


def _model(label):
    curve = next(c for c in DESK_CORPUS if c.label == label)
    return model_invariants(*curve.ainvs)


class TestSemistable:
    def test_37a1_exact_value_vs_qprod_oracle(self):
        hf = faltings_height(_model("37a1"))
        assert hf.exact and hf.gamma_log_interval == (0.0, 0.0)
        with mp.workprec(300):
            tau = mp.mpc(hf.tau)
            arch = mp.log(abs((2 * mp.pi) ** 12 * delta_qprod(tau)
                              * tau.imag ** 6))
            expected = (mp.log(37) - arch) / 12
        assert hf.h_f == pytest.approx(float(expected), abs=1e-12)

    def test_tau_in_fundamental_domain(self):
        for label in ("37a1", "11a1", "389a1", "5077a1"):
            hf = faltings_height(_model(label))
            assert abs(hf.tau.real) <= 0.5 + 1e-9
            assert hf.tau.imag >= math.sqrt(3) / 2 - 1e-9
            assert abs(hf.tau) >= 1 - 1e-9

    def test_archimedean_pin(self):
        for curve in DESK_CORPUS:
            hf = faltings_height(model_invariants(*curve.ainvs))
            assert abs(hf.archimedean_log) <= 16.0, curve.label


class TestNonSemistable:
    def test_gamma_interval_width(self):
        hf = faltings_height(_model("32a1"))
        assert not hf.exact
        lo, hi = hf.gamma_log_interval
        assert hi - lo == pytest.approx(24 * math.log(2), abs=1e-12)
        assert lo == 0.0  # bad only at p = 2: no odd contribution
        assert hf.h_f == hf.h_f_interval[1]

    def test_odd_additive_contributes(self):
        # y^2 = x^3 - 25x: T0 = {5} with n_5 = 6
        hf = faltings_height(model_invariants(0, 0, 0, -25, 0))
        lo, _hi = hf.gamma_log_interval
        assert lo == pytest.approx(6 * math.log(5), abs=1e-12)

    def test_j_1728_curve_has_tau_i(self):
        hf = faltings_height(_model("32a1"))
        assert abs(complex(hf.tau) - 1j) < 1e-9


class TestInvariance:
    def test_coordinate_change_invariance(self):
        base = faltings_height(_model("37a1"))
        for (u, r, s, t) in [(1, 1, 0, 0), (1, 0, 1, 1), (F(1, 2), 0, 0, 0),
                             (F(1, 3), 2, -1, 1)]:
            moved = faltings_height(_model("37a1").transform(u, r, s, t))
            assert abs(moved.h_f - base.h_f) <= 1e-9

    def test_precision_stability(self):
        for label in ("37a1", "11a1"):
            a = faltings_height(_model(label), prec=128)
            b = faltings_height(_model(label), prec=256)
            assert abs(a.h_f - b.h_f) <= 1e-9

    def test_qprod_tail_contract(self):
        with mp.workprec(280):
            tau = mp.mpc("0.25", "1.1")
            ours = dedekind_delta_q(tau)
            oracle = delta_qprod(tau, terms=600)
            assert abs(ours - oracle) / abs(oracle) < mp.mpf("1e-28")
