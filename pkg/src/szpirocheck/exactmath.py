"""Exact integer/rational arithmetic, polynomial algebra, and heights.

Big integers are Python ints, exact rationals are `fractions.Fraction`
(both already reduced with positive denominator, which is exactly the
representation contract the rest of the package assumes).  On top of
those this module provides:

* `Poly` -- dense univariate polynomials over Q with exact arithmetic,
  resultants/discriminants (Sylvester matrix + fraction-free Bareiss
  elimination), Taylor shifts and squarefree decomposition;
* certified complex root finding (Aberth-Ehrlich simultaneous iteration
  at 256-bit working precision with a posteriori inclusion disks);
* Mahler measures and absolute logarithmic Weil heights;
* factorization over Q at desk scale (degree <= 90) by rational-root
  extraction plus bounded-coefficient factor search over conjugation
  closed root clusters, every hit verified by exact division;
* exact reconstruction of minimal polynomials from numerically known
  Galois orbits (`algebraic_from_orbit`);
* `LogMagnitude`, the natural-log representation used for constants that
  overflow any fixed-width float.

All values are immutable after construction; every function is pure.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Iterable, Sequence

import mpmath as mp

from .errors import DomainError, PrecisionError, ResourceError, UnsupportedError

NEG_INF = float("-inf")

#: hard cap for factor_rational_poly / algebraic_from_orbit
DEGREE_CAP = 90

#: working precision (bits) for root finding and orbit reconstruction
ROOT_PRECISION = 256

#: candidate budget for the bounded factor search
FACTOR_SEARCH_BUDGET = 2_000_000


# ---------------------------------------------------------------------------
# LogMagnitude
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class LogMagnitude:
    """A positive quantity represented by its natural logarithm.

    Multiplication of quantities is addition of logs; powers scale the
    log.  The value must be finite (that is the whole point: quantities
    like 2^(2^50 * 81) fit comfortably as a log but nowhere else).
    """

    log: float

    def __post_init__(self) -> None:
        if not math.isfinite(self.log):
            raise DomainError("LogMagnitude must be finite")

    def __mul__(self, other: "LogMagnitude") -> "LogMagnitude":
        return LogMagnitude(self.log + other.log)

    def pow(self, exponent: float) -> "LogMagnitude":
        return LogMagnitude(self.log * exponent)

    @property
    def log10(self) -> float:
        return self.log / math.log(10)

    @staticmethod
    def of(value) -> "LogMagnitude":
        if value <= 0:
            raise DomainError("LogMagnitude requires a positive quantity")
        return LogMagnitude(_log_int_or_float(value))


def _log_int_or_float(value) -> float:
    if isinstance(value, Fraction):
        return _log_int_or_float(value.numerator) - _log_int_or_float(value.denominator)
    return math.log(value)


# ---------------------------------------------------------------------------
# Polynomials over Q
# ---------------------------------------------------------------------------

def _as_fraction(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x)
    raise DomainError(f"not an exact rational: {x!r}")


@dataclass(frozen=True)
class Poly:
    """Dense univariate polynomial over Q, coefficients low to high."""

    coeffs: tuple

    @staticmethod
    def of(*coeffs) -> "Poly":
        return Poly.from_list(coeffs)

    @staticmethod
    def from_list(coeffs: Iterable) -> "Poly":
        cs = [_as_fraction(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        return Poly(tuple(cs))

    @staticmethod
    def zero() -> "Poly":
        return Poly(())

    @staticmethod
    def x_power(k: int) -> "Poly":
        return Poly.from_list([0] * k + [1])

    @property
    def degree(self):
        """Degree, with -inf as the zero-polynomial sentinel."""
        return len(self.coeffs) - 1 if self.coeffs else NEG_INF

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def lead(self) -> Fraction:
        if self.is_zero:
            raise DomainError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def coeff(self, k: int) -> Fraction:
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else Fraction(0)

    def __add__(self, other: "Poly") -> "Poly":
        n = max(len(self.coeffs), len(other.coeffs))
        return Poly.from_list(
            [self.coeff(i) + other.coeff(i) for i in range(n)])

    def __sub__(self, other: "Poly") -> "Poly":
        n = max(len(self.coeffs), len(other.coeffs))
        return Poly.from_list(
            [self.coeff(i) - other.coeff(i) for i in range(n)])

    def __neg__(self) -> "Poly":
        return Poly(tuple(-c for c in self.coeffs))

    def __mul__(self, other) -> "Poly":
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        if self.is_zero or other.is_zero:
            return Poly.zero()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return Poly.from_list(out)

    __rmul__ = __mul__

    def scale(self, q) -> "Poly":
        q = _as_fraction(q)
        if q == 0:
            return Poly.zero()
        return Poly(tuple(c * q for c in self.coeffs))

    def derivative(self) -> "Poly":
        return Poly.from_list(
            [i * c for i, c in enumerate(self.coeffs)][1:])

    def shift(self, c) -> "Poly":
        """Taylor shift: returns p(x + c), exactly."""
        c = _as_fraction(c)
        cs = list(self.coeffs)
        n = len(cs)
        # repeated synthetic division by (x - (-c))
        for i in range(n - 1):
            for j in range(n - 2, i - 1, -1):
                cs[j] += c * cs[j + 1]
        return Poly.from_list(cs)

    def __call__(self, x):
        """Horner evaluation; x may be Fraction, int, mpf/mpc or complex."""
        if self.is_zero:
            return 0 * x if not isinstance(x, (int, Fraction)) else Fraction(0)
        acc = None
        for c in reversed(self.coeffs):
            if acc is None:
                acc = c if not _needs_cast(x) else _cast_like(c, x)
            else:
                acc = acc * x + (c if not _needs_cast(x) else _cast_like(c, x))
        return acc

    def divmod(self, other: "Poly"):
        """Exact polynomial division with remainder over Q."""
        if other.is_zero:
            raise DomainError("division by zero polynomial")
        rem = list(self.coeffs)
        dn, dd = len(rem) - 1, other.degree
        if dn < dd:
            return Poly.zero(), self
        quot = [Fraction(0)] * (dn - dd + 1)
        inv_lead = 1 / other.lead
        for k in range(dn - dd, -1, -1):
            q = rem[k + dd] * inv_lead
            quot[k] = q
            if q != 0:
                for j, b in enumerate(other.coeffs):
                    rem[k + j] -= q * b
        return Poly.from_list(quot), Poly.from_list(rem)

    def content(self) -> Fraction:
        """Positive rational content (gcd of numerators / lcm of denominators)."""
        if self.is_zero:
            raise DomainError("zero polynomial has no content")
        num = 0
        den = 1
        for c in self.coeffs:
            num = gcd(num, c.numerator)
            den = den * c.denominator // gcd(den, c.denominator)
        return Fraction(num, den)

    def primitive(self) -> tuple:
        """(content-with-sign, primitive integer polynomial).

        The returned polynomial has coprime integer coefficients and a
        positive leading coefficient; content * primitive == self.
        """
        cont = self.content()
        if self.lead < 0:
            cont = -cont
        return cont, Poly(tuple(c / cont for c in self.coeffs))

    def int_coeffs(self) -> list:
        out = []
        for c in self.coeffs:
            if c.denominator != 1:
                raise DomainError("polynomial is not integral")
            out.append(c.numerator)
        return out

    def __str__(self) -> str:
        if self.is_zero:
            return "0"
        terms = []
        for i, c in enumerate(self.coeffs):
            if c == 0:
                continue
            terms.append(f"{c}*x^{i}" if i else f"{c}")
        return " + ".join(reversed(terms))


def _needs_cast(x) -> bool:
    return isinstance(x, (mp.mpf, mp.mpc, float, complex))


def _cast_like(c: Fraction, x):
    if isinstance(x, (mp.mpf, mp.mpc)):
        return mp.mpf(c.numerator) / c.denominator
    return c.numerator / c.denominator


# ---------------------------------------------------------------------------
# Resultants and discriminants (Sylvester + Bareiss)
# ---------------------------------------------------------------------------

def _bareiss_det(mat: list) -> int:
    """Determinant of an integer matrix by fraction-free elimination."""
    n = len(mat)
    if n == 0:
        return 1
    m = [row[:] for row in mat]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            for i in range(k + 1, n):
                if m[i][k] != 0:
                    m[k], m[i] = m[i], m[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
            m[i][k] = 0
        prev = m[k][k]
    return sign * m[n - 1][n - 1]


def resultant(f: Poly, g: Poly) -> Fraction:
    """Res(f, g) via the Sylvester matrix of the primitive integer forms."""
    if f.is_zero or g.is_zero:
        raise DomainError("resultant of the zero polynomial")
    n, m = f.degree, g.degree
    if n == 0 and m == 0:
        return Fraction(1)
    if n == 0:
        return f.coeffs[0] ** m
    if m == 0:
        return g.coeffs[0] ** n
    cf, F = f.primitive()
    cg, G = g.primitive()
    fc = F.int_coeffs()[::-1]  # high to low
    gc = G.int_coeffs()[::-1]
    size = n + m
    rows = []
    for i in range(m):
        rows.append([0] * i + fc + [0] * (size - n - 1 - i))
    for i in range(n):
        rows.append([0] * i + gc + [0] * (size - m - 1 - i))
    det = _bareiss_det(rows)
    return cf ** m * cg ** n * det


def poly_discriminant(f: Poly) -> Fraction:
    """Discriminant disc(f) = (-1)^(n(n-1)/2) Res(f, f') / lead(f).

    Zero exactly when f has a repeated complex root.
    """
    if f.is_zero:
        raise DomainError("discriminant of the zero polynomial")
    n = f.degree
    if n < 1:
        raise DomainError("discriminant requires degree >= 1")
    if n == 1:
        return Fraction(1)
    res = resultant(f, f.derivative())
    sign = -1 if (n * (n - 1) // 2) % 2 else 1
    return sign * res / f.lead


# ---------------------------------------------------------------------------
# gcd / squarefree machinery
# ---------------------------------------------------------------------------

def poly_gcd(f: Poly, g: Poly) -> Poly:
    """Monic gcd over Q (primitive-part Euclid to tame growth)."""
    a, b = f, g
    if a.is_zero:
        return _monic(b)
    if b.is_zero:
        return _monic(a)
    while not b.is_zero:
        _, r = a.divmod(b)
        if not r.is_zero:
            _, r = r.primitive()
        a, b = b, r
    return _monic(a)


def _monic(f: Poly) -> Poly:
    if f.is_zero:
        return f
    return f.scale(1 / f.lead)


def squarefree_decomposition(f: Poly) -> list:
    """Yun decomposition: list of (squarefree monic factor, multiplicity).

    The product of factor^multiplicity equals f up to a rational constant.
    """
    if f.is_zero:
        raise DomainError("squarefree decomposition of zero")
    if f.degree == 0:
        return []
    return _yun(_monic(f))


def _yun(fm: Poly) -> list:
    d = fm.derivative()
    g = poly_gcd(fm, d)
    if g.degree == 0:
        return [(fm, 1)]
    b, _ = fm.divmod(g)
    c, _ = d.divmod(g)
    out = []
    i = 1
    while True:
        z = c - b.derivative()
        if z.is_zero:
            if b.degree >= 1:
                out.append((b, i))
            break
        w = poly_gcd(b, z)
        if w.degree >= 1:
            out.append((w, i))
        b, _ = b.divmod(w)
        c, _ = z.divmod(w)
        i += 1
        if b.degree == 0:
            break
    return out


# ---------------------------------------------------------------------------
# Certified complex roots (Aberth-Ehrlich)
# ---------------------------------------------------------------------------

def complex_roots(f: Poly, prec: int = ROOT_PRECISION) -> list:
    """All complex roots of f with multiplicity, as (mpc, radius, mult).

    Multiple roots are handled through the exact squarefree decomposition;
    each returned disk (center, radius) is certified to contain exactly one
    root of the corresponding squarefree part.
    """
    if f.is_zero or f.degree < 1:
        raise DomainError("root finding requires degree >= 1")
    out = []
    for part, mult in _yun(_monic(f)):
        for z, rad in _aberth(part, prec):
            out.append((z, rad, mult))
    return out


def _aberth(f: Poly, prec: int) -> list:
    """Roots of a squarefree polynomial with certified inclusion radii."""
    n = f.degree
    if n == 1:
        root = -f.coeffs[0] / f.coeffs[1]
        with mp.workprec(prec):
            return [(mp.mpc(mp.mpf(root.numerator) / root.denominator), mp.mpf(0))]
    _, F = f.primitive()
    ic = F.int_coeffs()
    lead = ic[-1]
    work = prec + 32 + 2 * n
    with mp.workprec(work):
        cs = [mp.mpc(c) for c in ic]
        dcs = [mp.mpc(i * c) for i, c in enumerate(ic)][1:]

        def ev(coeffs, z):
            acc = mp.mpc(0)
            for c in reversed(coeffs):
                acc = acc * z + c
            return acc

        radius = 1 + max(abs(mp.mpf(c)) / abs(mp.mpf(lead)) for c in ic[:-1])
        z = [radius * mp.expjpi(mp.mpf(2 * k) / n + mp.mpf("0.35"))
             for k in range(n)]
        tol = mp.mpf(2) ** (-(prec + 16))
        for _ in range(600):
            moved = mp.mpf(0)
            for i in range(n):
                pv = ev(cs, z[i])
                dv = ev(dcs, z[i])
                if dv == 0:
                    z[i] = z[i] + tol * (1 + abs(z[i]))
                    moved = mp.inf
                    continue
                w = pv / dv
                s = mp.mpc(0)
                for j in range(n):
                    if j != i:
                        s += 1 / (z[i] - z[j])
                denom = 1 - w * s
                step = w if denom == 0 else w / denom
                z[i] = z[i] - step
                moved = max(moved, abs(step) / (1 + abs(z[i])))
            if moved < tol:
                break
        else:
            raise PrecisionError(
                f"Aberth iteration did not converge for degree {n} at {prec} bits")
        roots = []
        for i in range(n):
            dv = ev(dcs, z[i])
            if dv == 0:
                raise PrecisionError("derivative vanished at an approximate root")
            rad = n * abs(ev(cs, z[i]) / dv)
            roots.append((z[i], rad))
        # inclusion disks must be pairwise disjoint for certification
        for i in range(n):
            for j in range(i + 1, n):
                if abs(roots[i][0] - roots[j][0]) <= roots[i][1] + roots[j][1]:
                    raise PrecisionError(
                        "root inclusion disks overlap; raise working precision")
    return roots


# ---------------------------------------------------------------------------
# Heights and Mahler measure
# ---------------------------------------------------------------------------

def height_rational(q) -> float:
    """Absolute logarithmic Weil height of a rational: log max(|p|, |q|)."""
    q = _as_fraction(q)
    if q == 0:
        return 0.0
    return _log_int_or_float(max(abs(q.numerator), q.denominator))


def weil_height_poly(f: Poly) -> float:
    """Absolute logarithmic Weil height of a nonzero polynomial over Q.

    Computed as the projective height of the coefficient vector: bring f
    to its primitive integer form (coprime coefficients), then take the
    log of the largest absolute coefficient.  Invariant under scaling by
    any nonzero rational.
    """
    if f.is_zero:
        raise DomainError("height of the zero polynomial")
    _, F = f.primitive()
    return _log_int_or_float(max(abs(c) for c in F.int_coeffs()))


def log_mahler_measure_mp(f: Poly, prec: int = ROOT_PRECISION):
    """log M(f) as an mpf at working precision (for tight identity checks)."""
    if f.is_zero:
        raise DomainError("Mahler measure of the zero polynomial")
    for c in f.coeffs:
        if c.denominator != 1:
            raise DomainError("Mahler measure requires integer coefficients")
    with mp.workprec(prec):
        total = mp.log(abs(int(f.lead)))
        if f.degree >= 1:
            for z, _rad, mult in complex_roots(f, prec):
                a = abs(z)
                if a > 1:
                    total += mult * mp.log(a)
        return total


def log_mahler_measure(f: Poly, prec: int = ROOT_PRECISION) -> float:
    """log M(f) = log|lead| + sum over roots of log max(1, |root|)."""
    return float(log_mahler_measure_mp(f, prec))


def mahler_measure(f: Poly, prec: int = ROOT_PRECISION) -> float:
    return math.exp(log_mahler_measure(f, prec))


# ---------------------------------------------------------------------------
# Factorization over Q at desk scale
# ---------------------------------------------------------------------------

def factor_rational_poly(f: Poly) -> list:
    """Factor f over Q into irreducibles: list of (primitive factor, mult).

    Degree is capped at DEGREE_CAP.  Strategy per the module contract:
    squarefree (Yun) split, then for each squarefree part a bounded
    factor search over conjugation-closed subsets of its certified
    complex roots; every candidate (coefficients rounded to integers,
    justified by the Landau-Mignotte bound) is verified by exact
    division, so hits are proofs.  The full product of the returned
    factors times the content reproduces f exactly (checked).
    """
    if f.is_zero:
        raise DomainError("cannot factor the zero polynomial")
    if f.degree > DEGREE_CAP:
        raise UnsupportedError(f"degree {f.degree} exceeds cap {DEGREE_CAP}")
    factors = []
    if f.degree == 0:
        return factors
    # strip powers of x
    k = 0
    while f.coeff(k) == 0:
        k += 1
    if k:
        factors.append((Poly.of(0, 1), k))
        f_red = Poly.from_list(f.coeffs[k:])
    else:
        f_red = f
    for part, mult in _yun(_monic(f_red)):
        _, P = part.primitive()
        for irr in _factor_squarefree(P):
            factors.append((irr, mult))
    _verify_reassembly(f, factors)
    return factors


def _verify_reassembly(f: Poly, factors: list) -> None:
    prod = Poly.of(1)
    for g, m in factors:
        for _ in range(m):
            prod = prod * g
    # the two sides agree up to a rational constant; check it is constant
    scaled = prod.scale(f.lead / prod.lead)
    if scaled != f:
        raise PrecisionError("factor reassembly check failed")


def _factor_squarefree(F: Poly) -> list:
    """Irreducible factors of a primitive squarefree integer polynomial."""
    n = F.degree
    if n == 1:
        return [F]
    norm2 = math.sqrt(sum(float(c) ** 2 for c in F.int_coeffs()))
    # Landau-Mignotte style coefficient bound for any factor
    lm_bits = n + math.log2(max(norm2, 1.0)) + math.log2(abs(int(F.lead)) + 1)
    prec = max(ROOT_PRECISION, int(lm_bits) + 2 * n + 64)
    roots = [(z, rad) for z, rad, _ in complex_roots(F, prec)]
    atoms = _conjugate_atoms(roots)
    remaining = F
    remaining_atoms = atoms
    out = []
    budget = FACTOR_SEARCH_BUDGET
    while True:
        hit = _find_factor(remaining, remaining_atoms, budget)
        if hit is None:
            out.append(remaining)
            return out
        factor, used = hit
        out.append(factor)
        q, r = remaining.divmod(factor)
        if not r.is_zero:
            raise PrecisionError("verified factor stopped dividing (internal)")
        _, remaining = q.primitive()
        remaining_atoms = [a for i, a in enumerate(remaining_atoms) if i not in used]
        if remaining.degree == 0:
            return out
        if remaining.degree == 1:
            out.append(remaining)
            return out


def _conjugate_atoms(roots: list) -> list:
    """Group roots into real singletons and conjugate pairs."""
    real, upper, lower = [], [], []
    for z, rad in roots:
        band = max(float(rad), 1e-40)
        if abs(z.imag) <= band:
            real.append((z, rad))
        elif z.imag > 0:
            upper.append((z, rad))
        else:
            lower.append((z, rad))
    if len(upper) != len(lower):
        raise PrecisionError("could not split roots into conjugate pairs")
    atoms = [[z] for z, _ in real]
    used = [False] * len(lower)
    for z, _ in upper:
        best, best_d = None, None
        for i, (w, _) in enumerate(lower):
            if used[i]:
                continue
            d = abs(mp.conj(w) - z)
            if best_d is None or d < best_d:
                best, best_d = i, d
        used[best] = True
        atoms.append([z, lower[best][0]])
    return atoms


def _find_factor(F: Poly, atoms: list, budget: int):
    """Smallest-degree proper factor discoverable from root subsets."""
    n = F.degree
    lead = int(F.lead)
    singles = [i for i, a in enumerate(atoms) if len(a) == 1]
    pairs = [i for i, a in enumerate(atoms) if len(a) == 2]
    tried = 0
    for k in range(1, n // 2 + 1):
        for npairs in range(0, min(k // 2, len(pairs)) + 1):
            nsing = k - 2 * npairs
            if nsing < 0 or nsing > len(singles):
                continue
            for ps in itertools.combinations(pairs, npairs):
                for ss in itertools.combinations(singles, nsing):
                    tried += 1
                    if tried > budget:
                        raise UnsupportedError(
                            "factor search budget exceeded; degree too hostile")
                    chosen = list(ps) + list(ss)
                    cand = _candidate_from_atoms(F, atoms, chosen, lead)
                    if cand is None:
                        continue
                    q, r = F.divmod(cand)
                    if r.is_zero and q.degree >= 0:
                        return cand, set(chosen)
    return None


def _candidate_from_atoms(F: Poly, atoms: list, chosen: list, lead: int):
    coeffs = [mp.mpc(lead)]
    for idx in chosen:
        for z in atoms[idx]:
            # multiply running product by (x - z)
            coeffs = [mp.mpc(0)] + coeffs
            for i in range(len(coeffs) - 1):
                coeffs[i] -= z * coeffs[i + 1]
    ints = []
    for c in coeffs:
        r = mp.nint(c.real)
        if abs(c.real - r) > 0.25 or abs(c.imag) > 0.25:
            return None
        ints.append(int(r))
    cand = Poly.from_list(ints)
    if cand.degree != sum(len(atoms[i]) for i in chosen):
        return None
    _, prim = cand.primitive()
    return prim


# ---------------------------------------------------------------------------
# Rational reconstruction and algebraic numbers
# ---------------------------------------------------------------------------

def rational_reconstruct(x, denominator_bound: int):
    """Nearest p/q with q <= bound and |x - p/q| < 1/(4 q bound), or None.

    Continued-fraction convergents; the acceptance window makes the
    reconstruction sound (at most one candidate can satisfy it).
    """
    if denominator_bound < 1:
        raise DomainError("denominator bound must be >= 1")
    x = mp.mpf(x)
    p0, q0, p1, q1 = 0, 1, 1, 0
    y = x
    for _ in range(20000):
        a = int(mp.floor(y))
        p0, p1 = p1, a * p1 + p0
        q0, q1 = q1, a * q1 + q0
        if q1 > denominator_bound:
            cand_p, cand_q = p0, q0
            break
        frac = y - a
        if frac == 0:
            cand_p, cand_q = p1, q1
            break
        y = 1 / frac
    else:
        return None
    if cand_q < 1:
        return None
    err = abs(x - mp.mpf(cand_p) / cand_q)
    if err < mp.mpf(1) / (4 * cand_q * denominator_bound):
        return Fraction(cand_p, cand_q)
    return None


@dataclass(frozen=True)
class AlgebraicNumber:
    """Exact algebraic number: irreducible minimal polynomial over Q plus
    a certified complex approximation (within `radius` of exactly one
    root of `minpoly`)."""

    minpoly: Poly
    approx: object  # mpc
    radius: float

    @property
    def degree(self) -> int:
        return self.minpoly.degree

    @property
    def is_rational(self) -> bool:
        return self.degree == 1

    def as_fraction(self) -> Fraction:
        if not self.is_rational:
            raise DomainError("not a rational number")
        return -self.minpoly.coeffs[0] / self.minpoly.coeffs[1]

    def height(self) -> float:
        """Absolute logarithmic Weil height via the Mahler measure."""
        return log_mahler_measure(self.minpoly) / self.degree


def algebraic_from_orbit(values: Sequence, denominator_bound: int,
                         prec: int = ROOT_PRECISION) -> list:
    """Recognize a Galois-stable multiset of complex values exactly.

    Expands prod (x - v) at working precision, rationalizes each
    coefficient by continued fractions with denominators <= bound, then
    factors the reconstructed polynomial and certifies that the product
    of irreducible factors re-expands exactly to it.  Returns one
    AlgebraicNumber per input value, in input order.
    """
    vals = [mp.mpc(v) for v in values]
    if not vals:
        raise DomainError("empty orbit")
    if len(vals) > DEGREE_CAP:
        raise UnsupportedError(f"orbit size {len(vals)} exceeds cap {DEGREE_CAP}")
    with mp.workprec(prec):
        coeffs = [mp.mpc(1)]
        for v in vals:
            coeffs = [mp.mpc(0)] + coeffs
            for i in range(len(coeffs) - 1):
                coeffs[i] -= v * coeffs[i + 1]
        rats = []
        imag_tol = mp.mpf(2) ** (-(prec // 2))
        for c in coeffs:
            if abs(c.imag) > imag_tol * (1 + abs(c)):
                raise PrecisionError("orbit product has a non-real coefficient; "
                                     "the multiset is not Galois-stable")
            q = rational_reconstruct(c.real, denominator_bound)
            if q is None:
                raise PrecisionError(
                    "rationalization failed within the denominator bound")
            rats.append(q)
    product_poly = Poly.from_list(rats)
    factors = factor_rational_poly(product_poly)  # includes exact reassembly
    # map every input value to the unique factor root within isolation radius
    all_roots = []
    for g, _m in factors:
        for z, rad, _ in complex_roots(g, prec):
            all_roots.append((g, z, rad))
    sep = float(_min_separation([z for _, z, _ in all_roots]))
    assign_tol = max(sep / 3 if sep > 0 else 0.0, float(mp.mpf(2) ** (-prec // 2)))
    out = []
    for v in vals:
        g, z, rad = min(all_roots, key=lambda t: abs(v - t[1]))
        dist = float(abs(v - z))
        if dist > assign_tol:
            raise PrecisionError("orbit value matched no reconstructed root")
        out.append(AlgebraicNumber(g, z, max(float(rad), dist)))
    return out


def _min_separation(roots: list):
    if len(roots) < 2:
        return mp.mpf(1)
    best = None
    for i in range(len(roots)):
        for j in range(i + 1, len(roots)):
            d = abs(roots[i] - roots[j])
            if best is None or d < best:
                best = d
    return best


# ---------------------------------------------------------------------------
# Integer factorization (trial division + Pollard rho, 2^63 cap)
# ---------------------------------------------------------------------------

_MR_WITNESSES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def is_prime(n: int) -> bool:
    """Miller-Rabin, deterministic for n < 3.3e24 with fixed witnesses."""
    if n < 2:
        return False
    for p in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if n % p == 0:
            return n == p
    d, r = n - 1, 0
    while d % 2 == 0:
        d //= 2
        r += 1
    for a in _MR_WITNESSES:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(r - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def _pollard_rho(n: int) -> int:
    if n % 2 == 0:
        return 2
    for c in range(1, 40):
        x = y = 2
        d = 1
        while d == 1:
            x = (x * x + c) % n
            y = (y * y + c) % n
            y = (y * y + c) % n
            d = gcd(abs(x - y), n)
        if d != n:
            return d
    raise ResourceError(f"Pollard rho failed on {n}")


def factor_integer(n: int, cap: int = 2 ** 63) -> dict:
    """Prime factorization {p: e} of |n|; primes above cap are refused."""
    if n == 0:
        raise DomainError("cannot factor 0")
    n = abs(n)
    out: dict = {}
    for p in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47):
        while n % p == 0:
            out[p] = out.get(p, 0) + 1
            n //= p
    d = 49
    while d * d <= n and d < 100000:
        while n % d == 0:
            out[d] = out.get(d, 0) + 1
            n //= d
        d += 2
    stack = [n] if n > 1 else []
    while stack:
        m = stack.pop()
        if m == 1:
            continue
        if is_prime(m):
            if m > cap:
                raise ResourceError(f"prime factor {m} exceeds cap {cap}")
            out[m] = out.get(m, 0) + 1
            continue
        d = _pollard_rho(m)
        stack.extend([d, m // d])
    return dict(sorted(out.items()))


def radical(n: int, cap: int = 2 ** 63) -> int:
    """Product of the distinct primes dividing n."""
    out = 1
    for p in factor_integer(n, cap):
        out *= p
    return out
