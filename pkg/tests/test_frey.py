"""Frey curves and the unconditional abc-triple relations."""

from math import gcd

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from szpirocheck.bounds import frey_chain
from szpirocheck.elliptic import frey_curve, global_invariants
from szpirocheck.errors import DomainError
from szpirocheck.exactmath import radical


class TestFreyCurve:
    def test_1_8_9(self):
        E = frey_curve(1, 8, 9)
        assert E.ainvs == (0, -7, 0, -8, 0)   # y^2 = x(x+1)(x-8)
        assert radical(1 * 8 * 9) == 6

    def test_1_1_2(self):
        E = frey_curve(1, 1, 2)
        assert E.ainvs == (0, 0, 0, -1, 0)    # y^2 = x(x+1)(x-1)
        assert radical(2) == 2

    def test_5_27_32(self):
        assert radical(5 * 27 * 32) == 30
        frey_curve(5, 27, 32)

    def test_rejections(self):
        with pytest.raises(DomainError):
            frey_curve(2, 4, 6)       # not coprime
        with pytest.raises(DomainError):
            frey_curve(1, 2, 4)       # a + b != c
        with pytest.raises(DomainError):
            frey_curve(0, 1, 1)       # zero entry


class TestFreyChain:
    def test_example_1_8_9(self):
        verdicts = {v.name: v for v in frey_chain(1, 8, 9)}
        inv = global_invariants(frey_curve(1, 8, 9))
        assert inv.conductor <= 1536            # 2^8 * 6
        assert 5184 <= 256 * inv.delta_min      # |abc|^2 <= 2^8 Delta
        assert verdicts["frey_conductor"].passed
        assert verdicts["frey_discriminant"].passed
        assert verdicts["frey_exponential_abc"].status == "skip"

    def test_conditional_bound_included_when_supplied(self):
        verdicts = {v.name: v for v in frey_chain(1, 8, 9, log_c4_prime=1.0)}
        assert verdicts["frey_exponential_abc"].status == "pass"

    @given(st.integers(1, 800), st.integers(1, 800))
    @settings(max_examples=60, deadline=None)
    def test_relations_hold_on_random_triples(self, a, b):
        if gcd(a, b) != 1:
            return
        inv = global_invariants(frey_curve(a, b, a + b))
        assert inv.conductor <= 256 * radical(a * b * (a + b))
        assert (a * b * (a + b)) ** 2 <= 256 * inv.delta_min
