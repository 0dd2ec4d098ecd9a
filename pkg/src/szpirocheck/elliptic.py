"""Elliptic curves over Q: model invariants, Tate's algorithm, minimal
discriminant and conductor, Frey curves, the Legendre lambda orbit and its
heights, and the Faltings height through the Noether identity.

Local reduction data is computed by Tate's algorithm in full (all primes,
including 2 and 3, with the non-minimality restart), so any integral model
may be fed in; outputs always describe the local minimal model.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd

import mpmath as mp

from .errors import (DomainError, PrecisionError, ResourceError,
                     SingularModelError)
from .exactmath import (AlgebraicNumber, Poly, algebraic_from_orbit,
                        complex_roots, factor_integer, height_rational)
from .report import Verdict

#: largest prime at which the additive-reduction branch will brute-force
#: roots modulo p (multiplicative reduction has no such limit)
ADDITIVE_PRIME_CAP = 2_000_000

_COMPONENTS = {"I0": 1, "II": 1, "III": 2, "IV": 3,
               "I0*": 5, "IV*": 7, "III*": 8, "II*": 9}


def is_multiplicative(kodaira: str) -> bool:
    """True for I_n with n >= 1."""
    return kodaira[0] == "I" and kodaira[1:].isdigit() and kodaira != "I0"


def is_In_star(kodaira: str) -> bool:
    """True for I_n* with n >= 1."""
    return (kodaira.endswith("*") and kodaira[0] == "I"
            and kodaira[1:-1].isdigit() and kodaira != "I0*")


# ---------------------------------------------------------------------------
# Models
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class EllipticModel:
    """Weierstrass model y^2 + a1 xy + a3 y = x^3 + a2 x^2 + a4 x + a6."""

    a1: Fraction
    a2: Fraction
    a3: Fraction
    a4: Fraction
    a6: Fraction

    @property
    def b2(self) -> Fraction:
        return self.a1 ** 2 + 4 * self.a2

    @property
    def b4(self) -> Fraction:
        return 2 * self.a4 + self.a1 * self.a3

    @property
    def b6(self) -> Fraction:
        return self.a3 ** 2 + 4 * self.a6

    @property
    def b8(self) -> Fraction:
        return (self.a1 ** 2 * self.a6 + 4 * self.a2 * self.a6
                - self.a1 * self.a3 * self.a4 + self.a2 * self.a3 ** 2
                - self.a4 ** 2)

    @property
    def c4(self) -> Fraction:
        return self.b2 ** 2 - 24 * self.b4

    @property
    def c6(self) -> Fraction:
        return -self.b2 ** 3 + 36 * self.b2 * self.b4 - 216 * self.b6

    @property
    def disc(self) -> Fraction:
        return (-self.b2 ** 2 * self.b8 - 8 * self.b4 ** 3
                - 27 * self.b6 ** 2 + 9 * self.b2 * self.b4 * self.b6)

    @property
    def j(self) -> Fraction:
        return self.c4 ** 3 / self.disc

    @property
    def ainvs(self) -> tuple:
        return (self.a1, self.a2, self.a3, self.a4, self.a6)

    def transform(self, u, r, s, t) -> "EllipticModel":
        """Standard change of coordinates x = u^2 x' + r, y = u^3 y' + u^2 s x' + t."""
        u, r, s, t = map(Fraction, (u, r, s, t))
        if u == 0:
            raise DomainError("u must be nonzero")
        a1, a2, a3, a4, a6 = self.ainvs
        na1 = (a1 + 2 * s) / u
        na2 = (a2 - s * a1 + 3 * r - s ** 2) / u ** 2
        na3 = (a3 + r * a1 + 2 * t) / u ** 3
        na4 = (a4 - s * a3 + 2 * r * a2 - (t + r * s) * a1 + 3 * r ** 2
               - 2 * s * t) / u ** 4
        na6 = (a6 + r * a4 + r ** 2 * a2 + r ** 3 - t * a3 - t ** 2
               - r * t * a1) / u ** 6
        return EllipticModel(na1, na2, na3, na4, na6)

    def integral_model(self) -> "EllipticModel":
        """An integral model of the same curve (scale by the lcm of the
        coefficient denominators)."""
        u = 1
        for a in self.ainvs:
            u = u * a.denominator // gcd(u, a.denominator)
        if u == 1:
            return self
        return self.transform(Fraction(1, u), 0, 0, 0)

    def is_integral(self) -> bool:
        return all(a.denominator == 1 for a in self.ainvs)


def model_invariants(a1, a2, a3, a4, a6) -> EllipticModel:
    """Build a model and validate it: disc != 0 and 1728 disc = c4^3 - c6^2."""
    m = EllipticModel(*(Fraction(a) for a in (a1, a2, a3, a4, a6)))
    if m.disc == 0:
        raise SingularModelError(f"singular model, disc = 0: {m.ainvs}")
    assert 1728 * m.disc == m.c4 ** 3 - m.c6 ** 2
    return m


def frey_curve(a: int, b: int, c: int) -> EllipticModel:
    """Frey model y^2 = x (x + a) (x - b) attached to a + b = c.

    Requires a, b, c nonzero and coprime with a + b = c.
    """
    if a == 0 or b == 0 or c == 0:
        raise DomainError("a, b, c must be nonzero")
    if a + b != c:
        raise DomainError("a + b = c violated")
    if gcd(gcd(abs(a), abs(b)), abs(c)) != 1:
        raise DomainError("a, b, c must be coprime")
    return model_invariants(0, a - b, 0, -a * b, 0)


# ---------------------------------------------------------------------------
# Tate's algorithm
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class LocalReductionData:
    """Reduction data of the local minimal model at p."""

    p: int
    kodaira: str          # 'I0', 'In', 'II', 'III', 'IV', 'I0*', 'In*', 'IV*', 'III*', 'II*'
    f: int                # conductor exponent
    n: int                # v_p of the minimal discriminant
    m: int                # components of the special fiber, without multiplicity
    potential_good: bool  # v_p(j) >= 0

    def __post_init__(self):
        assert self.n == self.m - 1 + self.f, "Ogg identity violated at construction"
        assert (self.f == 0) == (self.kodaira == "I0")
        assert (self.f == 1) == is_multiplicative(self.kodaira)


def kodaira_components(kodaira: str) -> int:
    """Component count (without multiplicity) of a Kodaira type."""
    if kodaira in _COMPONENTS:
        return _COMPONENTS[kodaira]
    if kodaira.endswith("*"):
        return 5 + int(kodaira[1:-1])
    return int(kodaira[1:])  # I_n, n >= 1


def _vp(x: int, p: int) -> int:
    if x == 0:
        return 10 ** 9  # effectively infinity at desk scale
    v = 0
    while x % p == 0:
        x //= p
        v += 1
    return v


def _poly_roots_mod_p(coeffs, p):
    """Roots in F_p of a polynomial given low-to-high, with multiplicities."""
    if p > ADDITIVE_PRIME_CAP:
        raise ResourceError(f"additive reduction analysis capped at p <= {ADDITIVE_PRIME_CAP}")
    roots = {}
    for x in range(p):
        acc = 0
        for c in reversed(coeffs):
            acc = (acc * x + c) % p
        if acc == 0:
            # multiplicity by synthetic division
            cs = [c % p for c in coeffs]
            mult = 0
            while len(cs) > 1:
                q = [0] * (len(cs) - 1)
                acc2 = 0
                for i in range(len(cs) - 1, 0, -1):
                    acc2 = (acc2 * x + cs[i]) % p
                    q[i - 1] = acc2
                rem = (acc2 * x + cs[0]) % p
                if rem != 0:
                    break
                mult += 1
                cs = q
            roots[x] = mult
    return roots


def tate_local(model: EllipticModel, p: int) -> LocalReductionData:
    """Tate's algorithm at p; accepts any integral model of the curve."""
    E = model.integral_model()
    if E.disc == 0:
        raise SingularModelError("singular model")
    potential_good = _vp(E.j.denominator, p) == 0
    a1, a2, a3, a4, a6 = (int(a) for a in E.ainvs)

    while True:  # restarts after the u = p rescaling in the last step
        m_cur = model_invariants(a1, a2, a3, a4, a6)
        n = _vp(int(m_cur.disc), p)
        if n == 0:
            return LocalReductionData(p, "I0", 0, 0, 1, potential_good)
        if _vp(int(m_cur.c4), p) == 0:
            # nodal reduction; no translation needed for the invariants
            return LocalReductionData(p, f"I{n}", 1, n, n, potential_good)

        # additive: move the singular point of the reduction to (0, 0)
        if p == 2:
            r = a4 % 2
            t = (r * (1 + a2 + a4) + a6) % 2
        elif p == 3:
            b6 = a3 * a3 + 4 * a6
            r = (-b6) % 3
            t = (a1 * r + a3) % 3
        else:
            inv2 = pow(2, -1, p)
            inv12 = pow(12, -1, p)
            b2 = a1 * a1 + 4 * a2
            r = (-b2 * inv12) % p
            t = (-(a1 * r + a3) * inv2) % p
        a1, a2, a3, a4, a6 = (int(a) for a in
                              m_cur.transform(1, r, 0, t).ainvs)
        assert a3 % p == 0 and a4 % p == 0 and a6 % p == 0

        if _vp(a6, p) < 2:
            return LocalReductionData(p, "II", n, n, 1, potential_good)
        b8 = (a1 * a1 * a6 + 4 * a2 * a6 - a1 * a3 * a4 + a2 * a3 * a3
              - a4 * a4)
        if _vp(b8, p) < 3:
            return LocalReductionData(p, "III", n - 1, n, 2, potential_good)
        b6 = a3 * a3 + 4 * a6
        if _vp(b6, p) < 3:
            return LocalReductionData(p, "IV", n - 2, n, 3, potential_good)

        # normalize so that p | a1, a2; p^2 | a3, a4; p^3 | a6
        if p == 2:
            s = a2 % 2
            cur = EllipticModel(*map(Fraction, (a1, a2, a3, a4, a6)))
            a1, a2, a3, a4, a6 = (int(a) for a in cur.transform(1, 0, s, 0).ainvs)
            assert _vp(a3, 2) >= 2
            t2 = (a6 // 4) % 2
            cur = EllipticModel(*map(Fraction, (a1, a2, a3, a4, a6)))
            a1, a2, a3, a4, a6 = (int(a) for a in cur.transform(1, 0, 0, 2 * t2).ainvs)
        else:
            inv2 = pow(2, -1, p)
            s = (-a1 * inv2) % p
            cur = EllipticModel(*map(Fraction, (a1, a2, a3, a4, a6)))
            a1, a2, a3, a4, a6 = (int(a) for a in cur.transform(1, 0, s, 0).ainvs)
            if _vp(a3, p) < 2:
                t1 = (-(a3 // p) * inv2) % p
                cur = EllipticModel(*map(Fraction, (a1, a2, a3, a4, a6)))
                a1, a2, a3, a4, a6 = (int(a) for a in
                                      cur.transform(1, 0, 0, p * t1).ainvs)
        assert a1 % p == 0 and a2 % p == 0
        assert _vp(a3, p) >= 2 and _vp(a4, p) >= 2 and _vp(a6, p) >= 3

        # cubic T^3 + (a2/p) T^2 + (a4/p^2) T + (a6/p^3) over F_p
        cubic = [a6 // p ** 3, a4 // p ** 2, a2 // p, 1]
        roots = _poly_roots_mod_p(cubic, p)
        mults = sorted(roots.values(), reverse=True)
        nroots_with_mult = sum(roots.values())

        if not mults or mults[0] == 1:
            # distinct roots over the algebraic closure
            # (a cubic over F_p with no repeated root in F_p can still have
            #  a repeated root only if its discriminant vanishes)
            if _cubic_disc_mod_p(cubic, p) != 0:
                return LocalReductionData(p, "I0*", n - 4, n, 5, potential_good)
            # repeated root exists but lies outside F_p: impossible, since a
            # repeated root of a cubic over F_p is Galois-stable, hence F_p-
            # rational.  Reaching here means mults missed it; fall through.
            raise PrecisionError("inconsistent cubic root analysis (internal)")

        if mults[0] == 2:
            # double root: type I_nu* for some nu >= 1
            dbl = next(x for x, mu in roots.items() if mu == 2)
            cur = EllipticModel(*map(Fraction, (a1, a2, a3, a4, a6)))
            a1, a2, a3, a4, a6 = (int(a) for a in
                                  cur.transform(1, p * dbl, 0, 0).ainvs)
            nu = 1
            k = 2
            while True:
                # quadratic Y^2 + (a3/p^k) Y - (a6/p^2k)
                quad = [-(a6 // p ** (2 * k)) % p, (a3 // p ** k) % p, 1]
                if _quad_disc_mod_p(quad, p) != 0:
                    return LocalReductionData(p, f"I{nu}*", n - 4 - nu, n,
                                              5 + nu, potential_good)
                y0 = _quad_double_root(quad, p)
                cur = EllipticModel(*map(Fraction, (a1, a2, a3, a4, a6)))
                a1, a2, a3, a4, a6 = (int(a) for a in
                                      cur.transform(1, 0, 0, p ** k * y0).ainvs)
                nu += 1
                # quadratic (a2/p) X^2 + (a4/p^(k+1)) X + (a6/p^(2k+1))
                quad = [(a6 // p ** (2 * k + 1)) % p,
                        (a4 // p ** (k + 1)) % p, (a2 // p) % p]
                if _quad_disc_mod_p(quad, p) != 0:
                    return LocalReductionData(p, f"I{nu}*", n - 4 - nu, n,
                                              5 + nu, potential_good)
                x0 = _quad_double_root(quad, p)
                cur = EllipticModel(*map(Fraction, (a1, a2, a3, a4, a6)))
                a1, a2, a3, a4, a6 = (int(a) for a in
                                      cur.transform(1, p ** k * x0, 0, 0).ainvs)
                nu += 1
                k += 1

        # triple root: move it to 0
        trp = next(x for x, mu in roots.items() if mu == 3)
        cur = EllipticModel(*map(Fraction, (a1, a2, a3, a4, a6)))
        a1, a2, a3, a4, a6 = (int(a) for a in
                              cur.transform(1, p * trp, 0, 0).ainvs)
        # quadratic Y^2 + (a3/p^2) Y - (a6/p^4)
        quad = [-(a6 // p ** 4) % p, (a3 // p ** 2) % p, 1]
        if _quad_disc_mod_p(quad, p) != 0:
            return LocalReductionData(p, "IV*", n - 6, n, 7, potential_good)
        y0 = _quad_double_root(quad, p)
        cur = EllipticModel(*map(Fraction, (a1, a2, a3, a4, a6)))
        a1, a2, a3, a4, a6 = (int(a) for a in
                              cur.transform(1, 0, 0, p ** 2 * y0).ainvs)
        if _vp(a4, p) < 4:
            return LocalReductionData(p, "III*", n - 7, n, 8, potential_good)
        if _vp(a6, p) < 6:
            return LocalReductionData(p, "II*", n - 8, n, 9, potential_good)
        # non-minimal at p: rescale and restart
        a1, a2, a3, a4, a6 = (a1 // p, a2 // p ** 2, a3 // p ** 3,
                              a4 // p ** 4, a6 // p ** 6)


def _cubic_disc_mod_p(cubic, p):
    d, c, b, _ = [x % p for x in cubic]  # T^3 + b T^2 + c T + d
    disc = (18 * b * c * d - 4 * b ** 3 * d + b ** 2 * c ** 2
            - 4 * c ** 3 - 27 * d ** 2)
    return disc % p


def _quad_disc_mod_p(quad, p):
    c, b, a = [x % p for x in quad]  # a Y^2 + b Y + c
    return (b * b - 4 * a * c) % p


def _quad_double_root(quad, p):
    c, b, a = [x % p for x in quad]
    if p == 2:
        for y in (0, 1):
            if (a * y * y + b * y + c) % 2 == 0:
                return y
        raise PrecisionError("no double root found mod 2 (internal)")
    return (-b * pow(2 * a, -1, p)) % p


# ---------------------------------------------------------------------------
# Global invariants
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class GlobalInvariants:
    """Minimal discriminant, conductor, and per-prime local data."""

    delta_min: int        # |minimal discriminant|
    delta_sign: int
    conductor: int
    locals: tuple         # LocalReductionData at every bad prime, ascending
    semistable: bool
    T0: tuple             # odd p, potential good reduction, bad
    T1: tuple             # odd p, type In* with n >= 1
    T2: tuple             # type In with n >= 1

    @property
    def log_delta_min(self) -> float:
        return math.log(self.delta_min) if self.delta_min > 1 else 0.0


def global_invariants(model: EllipticModel,
                      prime_cap: int = 2 ** 63) -> GlobalInvariants:
    """Factor the discriminant and run Tate's algorithm at every bad prime."""
    E = model.integral_model()
    disc = int(E.disc)
    if disc == 0:
        raise SingularModelError("singular model")
    sign = 1 if disc > 0 else -1
    locs = []
    for p in factor_integer(disc, prime_cap):
        dat = tate_local(E, p)
        if dat.kodaira != "I0":
            locs.append(dat)
    delta_min = 1
    conductor = 1
    for d in locs:
        delta_min *= d.p ** d.n
        conductor *= d.p ** d.f
    semistable = all(is_multiplicative(d.kodaira) for d in locs)
    T0 = tuple(d.p for d in locs if d.p != 2 and d.potential_good)
    T1 = tuple(d.p for d in locs if d.p != 2 and is_In_star(d.kodaira))
    T2 = tuple(d.p for d in locs if is_multiplicative(d.kodaira))
    return GlobalInvariants(delta_min, sign, conductor, tuple(locs),
                            semistable, T0, T1, T2)


# ---------------------------------------------------------------------------
# Legendre lambda orbit
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class LambdaData:
    """The six cross ratios of the 2-torsion x-coordinates with infinity.

    The value set is closed under u -> 1-u and u -> 1/u; heights are
    absolute logarithmic Weil heights computed through Mahler measures of
    the exactly reconstructed minimal polynomials.
    """

    values: tuple          # six AlgebraicNumber, one per ordering
    heights: tuple         # six floats, aligned with `values`
    distinct_values: tuple  # deduplicated AlgebraicNumber list
    h_min: float
    h_max: float
    j_residual: float      # worst relative residual of the j identity


def two_torsion_cubic(model: EllipticModel) -> Poly:
    """4 x^3 + b2 x^2 + 2 b4 x + b6, whose roots are the 2-torsion x's."""
    return Poly.of(model.b6, 2 * model.b4, model.b2, 4)


def lambda_data(model: EllipticModel, prec: int = 256) -> LambdaData:
    """Compute the lambda orbit, exact minimal polynomials, and heights."""
    cubic = two_torsion_cubic(model)
    roots = [z for z, _r, _m in complex_roots(cubic, prec)]
    if len(roots) != 3:
        raise SingularModelError("2-division cubic has a repeated root")
    perms = [(0, 1, 2), (0, 2, 1), (1, 0, 2), (1, 2, 0), (2, 0, 1), (2, 1, 0)]
    with mp.workprec(prec):
        vals = []
        for (i, jx, k) in perms:
            vals.append((roots[i] - roots[jx]) / (roots[i] - roots[k]))
        jq = model.j
        bound = 1024 * jq.denominator
        algs = algebraic_from_orbit(vals, bound, prec)
        jm = mp.mpf(jq.numerator) / jq.denominator
        worst = mp.mpf(0)
        for lam in vals:
            expr = 256 * ((1 - lam) ** 2 + lam) ** 3 / (lam ** 2 * (1 - lam) ** 2)
            worst = max(worst, abs(jm - expr) / max(abs(jm), 1))
        if worst > mp.mpf("1e-20"):
            raise PrecisionError(f"j-identity residual {worst} too large")
    heights = tuple(a.height() for a in algs)
    distinct = []
    seen = set()
    for a in algs:
        key = (a.minpoly.coeffs, mp.nstr(a.approx, 25))
        if key not in seen:
            seen.add(key)
            distinct.append(a)
    return LambdaData(tuple(algs), heights, tuple(distinct),
                      min(heights), max(heights), float(worst))


# ---------------------------------------------------------------------------
# Faltings height
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class FaltingsHeightResult:
    """Faltings height of an elliptic curve over Q.

    Semistable curves get the exact value (unstable discriminant 1); in
    general the height is pinned to an interval whose width comes from the
    24 log 2 slack in the odd-part decomposition of log gamma.
    """

    h_f: float                  # upper end of the admissible interval
    h_f_interval: tuple         # (lo, hi); lo == hi == h_f when exact
    gamma_log_interval: tuple   # (lo, hi) for log gamma
    tau: complex                # period ratio in the fundamental domain
    exact: bool
    archimedean_log: float      # log|(2 pi)^12 Delta(tau) Im(tau)^6|


def _agm_tau_from_cubic(model: EllipticModel, prec: int):
    """Period ratio tau in the fundamental domain, certified against j."""
    cubic = two_torsion_cubic(model)
    roots = [z for z, _r, _m in complex_roots(cubic, prec)]
    jq = model.j
    with mp.workprec(prec):
        jm = mp.mpf(jq.numerator) / jq.denominator
        best = None
        for (i, jx, k) in [(0, 1, 2), (0, 2, 1), (1, 0, 2),
                           (1, 2, 0), (2, 0, 1), (2, 1, 0)]:
            lam = (roots[jx] - roots[k]) / (roots[i] - roots[k])
            try:
                tau = mp.mpc(0, 1) * mp.agm(1, mp.sqrt(1 - lam)) / mp.agm(1, mp.sqrt(lam))
            except (ZeroDivisionError, ValueError):
                continue
            if tau.imag <= 0:
                tau = -mp.conj(tau)
            tau_red, _sig = _reduce_tau(tau)
            jt = _j_from_tau(tau_red)
            denom = max(abs(jm), mp.mpf(1))
            err = abs(jt - jm) / denom
            if best is None or err < best[1]:
                best = (tau_red, err)
            if err < mp.mpf("1e-9"):
                return tau_red
        raise PrecisionError(
            f"period computation failed j-certification (best residual {best[1]})")


def _reduce_tau(tau):
    """Reduce tau into |Re| <= 1/2, |tau| >= 1; returns (tau, (a,b,c,d))."""
    a, b, c, d = 1, 0, 0, 1
    for _ in range(10000):
        nshift = int(mp.nint(tau.real))
        tau = tau - nshift
        a, b = a - nshift * c, b - nshift * d
        if abs(tau) < 1 - mp.mpf(2) ** (-40):
            tau = -1 / tau
            a, b, c, d = -c, -d, a, b
        else:
            break
    else:
        raise PrecisionError("fundamental domain reduction did not terminate")
    return tau, (a, b, c, d)


def _theta_series_g1(tau, which):
    """theta2/theta3/theta4 at z = 0 by direct summation (q = e^{i pi tau})."""
    q = mp.expjpi(tau)
    # enough terms for ~2^-prec at Im tau >= sqrt(3)/2
    nmax = int(mp.ceil(mp.sqrt(mp.mp.prec / (mp.pi * tau.imag / mp.log(2)))) + 3)
    if which == 2:
        s = mp.mpc(0)
        for n_ in range(0, nmax + 1):
            s += q ** ((n_ + mp.mpf("0.5")) ** 2)
        return 2 * s
    s = mp.mpc(1)
    for n_ in range(1, nmax + 1):
        term = q ** (n_ ** 2)
        s += 2 * term if which == 3 else 2 * (-1) ** n_ * term
    return s


def _j_from_tau(tau):
    t2 = _theta_series_g1(tau, 2)
    t3 = _theta_series_g1(tau, 3)
    lam = (t2 / t3) ** 4
    return 256 * (1 - lam + lam ** 2) ** 3 / (lam ** 2 * (1 - lam) ** 2)


def dedekind_delta_q(tau, tail: str = "1e-30", prec: int | None = None):
    """q prod (1 - q^n)^24 with the truncation tail 24 |q|^{n+1}/(1-|q|) < tail."""
    with mp.workprec(prec or max(mp.mp.prec, 256)):
        q = mp.exp(2j * mp.pi * mp.mpc(tau))
        aq = abs(q)
        if aq >= 1:
            raise DomainError("tau not in the upper half plane")
        target = mp.mpf(tail)
        prod = mp.mpc(1)
        n = 1
        qn = q
        while 24 * abs(qn) * aq / (1 - aq) >= target:  # bound for the n+1 tail
            prod *= (1 - qn) ** 24
            n += 1
            qn *= q
            if n > 100000:
                raise PrecisionError("q-product did not meet its tail target")
        prod *= (1 - qn) ** 24
        return q * prod


def faltings_height(model: EllipticModel, prec: int = 256) -> FaltingsHeightResult:
    """Faltings height through log D = 12 h_F + log gamma + archimedean term.

    The archimedean term is log|(2 pi)^12 Delta(tau) Im(tau)^6| at the
    reduced period ratio; gamma is 1 for semistable curves and otherwise
    pinned to [sum_{T0} n_p log p + 6 sum_{T1} log p, same + 24 log 2].
    """
    inv = global_invariants(model)
    with mp.workprec(prec):
        tau = _agm_tau_from_cubic(model, prec)
        delta_q = dedekind_delta_q(tau)
        arch = float(mp.log(abs((2 * mp.pi) ** 12 * delta_q * tau.imag ** 6)))
        tau_out = complex(tau)
    log_delta = inv.log_delta_min
    if inv.semistable:
        h = (log_delta - arch) / 12.0
        return FaltingsHeightResult(h, (h, h), (0.0, 0.0), tau_out, True, arch)
    lo_gamma = 0.0
    for d in inv.locals:
        if d.p in inv.T0:
            lo_gamma += d.n * math.log(d.p)
        if d.p in inv.T1:
            lo_gamma += 6 * math.log(d.p)
    hi_gamma = lo_gamma + 24 * math.log(2)
    h_lo = (log_delta - hi_gamma - arch) / 12.0
    h_hi = (log_delta - lo_gamma - arch) / 12.0
    return FaltingsHeightResult(h_hi, (h_lo, h_hi), (lo_gamma, hi_gamma),
                                tau_out, False, arch)


# ---------------------------------------------------------------------------
# Genus-one inequality suite
# ---------------------------------------------------------------------------

def genus_one_checks(model: EllipticModel,
                     inv: GlobalInvariants | None = None,
                     lam: LambdaData | None = None,
                     hf: FaltingsHeightResult | None = None) -> list:
    """Verdicts for every genus-one identity and inequality in scope.

    Height inequalities use the smallest orbit height h_min: every orbit
    value is a unit solution outside the relevant place set, so checking
    the smallest is the strongest form of each bound.
    """
    inv = inv or global_invariants(model)
    lam = lam or lambda_data(model)
    hf = hf or faltings_height(model)
    out = []

    out.append(Verdict.from_margin(
        "ogg", 0.0 if all(d.n == d.m - 1 + d.f for d in inv.locals) else -1.0,
        "n = m - 1 + f at every bad prime"))

    out.append(Verdict.from_margin(
        "j_identity", 1e-20 - lam.j_residual,
        "j = 256((1-l)^2+l)^3 / (l^2 (1-l)^2) across the orbit"))

    hj = height_rational(model.j)
    note = "" if hf.exact else "non-semistable: upper h_F bound checked"
    out.append(Verdict.from_margin(
        "height_vs_lambda", 0.5 * lam.h_min + 3.36 - hf.h_f, note))
    out.append(Verdict.from_margin(
        "height_vs_lambda_mu", 0.5 * lam.h_min + 4.0 - hf.h_f, note))
    out.append(Verdict.from_margin(
        "height_vs_j", hj / 12.0 + 2.37 - hf.h_f, note))
    out.append(Verdict.from_margin(
        "j_height_vs_lambda", 17 * math.log(2) + 6 * lam.h_min - hj,
        "H(j) <= 2^17 H(lambda)^6 in log space"))

    integral_j = model.j.denominator == 1
    if integral_j:
        ok = (inv.conductor ** 5) % inv.delta_min == 0
        out.append(Verdict.from_margin(
            "integral_j_divisibility", 0.0 if ok else -1.0,
            "Delta | N^5 for integral j (exact)"))
    else:
        out.append(Verdict.skipped("integral_j_divisibility",
                                   "j is not integral"))

    t0_locals = [d for d in inv.locals if d.p in inv.T0]
    if t0_locals:
        worst = min(5 * d.f - d.n for d in t0_locals)
        out.append(Verdict.from_margin(
            "odd_potential_good_exponent", float(worst),
            "n <= 5 f at odd potential-good bad primes"))
    else:
        out.append(Verdict.from_margin(
            "odd_potential_good_exponent", 0.0, "vacuous: T0 empty"))

    out.append(Verdict.from_margin(
        "archimedean_pin", 16.0 - abs(hf.archimedean_log),
        "|log|(2 pi)^12 Delta(tau) Im tau^6|| <= 16"))
    return out
