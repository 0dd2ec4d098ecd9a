"""The explicit-constants ledger and the inequality calculators.

Every constant lives in natural-log space as a `LogMagnitude`: the
leading entries reach exp(2^50 * 81 * log 2) and beyond, so nothing is
ever exponentiated back.  Constants that the source results leave
unspecified (effective-but-uncomputed absolute constants) are carried as
named parameters; verdicts that would depend on an unsupplied parameter
are labeled conditional and excluded from default runs.

FORMULAS (d = field degree, D_K = |field discriminant|, h_K = class
number, g = genus; all logs natural):

  kappa1 = (8 g d)^4 log(3 h_K)          c1 = (3 D_K^{h_K})^{kappa1}
  kappa2 = 6                             c2 = k0 (4 g d)^{15 d} D_K^{10}   [k0 parameter]
  kappa3 = 96 d g^4                      c3' = k3' D_K^{24 g^4}            [k3' parameter]
  semistable hyperelliptic:  log D <= c3 N^{d (4g)^8},
                                         c3 = 2^{2^{50} 9^g d^2} D_K^{24 g^4}
  kappa4 = 22 d                          c4 = c(d) D_K^4                   [c(d) parameter]
  kappa4 = 162 d                         c4 = 5^{(18 d)^2} D_K^5
  kappa5 = 8^8 d^4 log(3 h_K)            c5 = max(c1(g=2), c3(g=2))
  kappa6 = 6                             c6 = k0 (8 d)^{15 d} D_K^{10}     [k0 parameter]
  potential-good exponent    kappa(g) = 2 (2g+1) (ceil((g+1)/2) + 1)
  height coefficients        2^{2^{22} 9^g}  and  2^{2^{23} 9^g} d
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

from .elliptic import frey_curve, global_invariants
from .errors import DomainError
from .exactmath import LogMagnitude, radical
from .report import Verdict

LOG2 = math.log(2)


# ---------------------------------------------------------------------------
# Field context and ledger
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class FieldContext:
    """Degree, absolute discriminant, and class number of the base field.

    All caller-supplied; rejected unless h_K <= 5 (4d)^d D_K^{3/2}, the
    standard consistency inequality between the three.
    """

    d: int = 1
    disc: int = 1
    class_number: int = 1

    def __post_init__(self):
        if self.d < 1 or self.disc < 1 or self.class_number < 1:
            raise DomainError("need d, D_K, h_K >= 1")
        if self.d == 1 and (self.disc != 1 or self.class_number != 1):
            raise DomainError("d = 1 forces D_K = h_K = 1")
        bound = math.log(5) + self.d * math.log(4 * self.d) \
            + 1.5 * math.log(self.disc)
        if math.log(self.class_number) > bound + 1e-12:
            raise DomainError("h_K violates h_K <= 5 (4d)^d D_K^{3/2}")

    @property
    def log_disc(self) -> float:
        return math.log(self.disc)


@dataclass(frozen=True)
class LedgerEntry:
    name: str
    kappa: float                      # exponent of N (or of log N)
    log_c: LogMagnitude | None        # None when the constant is parameterized
    provenance: str                   # 'explicit' | 'parameterized'
    note: str = ""

    @property
    def usable(self) -> bool:
        return self.provenance == "explicit"


def kappa_potential_good(g: int) -> int:
    """2 (2g+1) (ceil((g+1)/2) + 1): the everywhere-potential-good exponent."""
    if g < 1:
        raise DomainError("g >= 1")
    return 2 * (2 * g + 1) * (-(-(g + 1) // 2) + 1)


def _log_c1(ctx: FieldContext, g: int) -> float:
    kappa1 = (8 * g * ctx.d) ** 4 * math.log(3 * ctx.class_number)
    return kappa1 * (math.log(3) + ctx.class_number * ctx.log_disc)


def _log_c3(ctx: FieldContext, g: int) -> float:
    return 2.0 ** 50 * 9.0 ** g * ctx.d ** 2 * LOG2 + 24 * g ** 4 * ctx.log_disc


def ledger(ctx: FieldContext, g: int, params: dict | None = None) -> dict:
    """All named constants for (K, g), as LedgerEntry keyed by name.

    `params` may supply values (natural logs) for the parameterized
    constants: k0, k3_prime, c_of_d, c4_prime, c_prime, c_double_prime,
    k7, c_delta, c_g, k8.  Unsupplied ones stay provenance='parameterized'
    and are excluded from default verdicts.
    """
    if g < 1:
        raise DomainError("g >= 1")
    params = params or {}
    d = ctx.d
    out = {}

    def put(name, kappa, log_c, provenance, note=""):
        lc = LogMagnitude(log_c) if log_c is not None else None
        out[name] = LedgerEntry(name, kappa, lc, provenance, note)

    kappa1 = (8 * g * d) ** 4 * math.log(3 * ctx.class_number)
    put("kappa1_c1", kappa1, _log_c1(ctx, g), "explicit",
        "log Delta <= c1 N^kappa1 (rational Weierstrass point)")

    k0 = params.get("k0")
    log_c2 = (None if k0 is None
              else k0 + 15 * d * math.log(4 * g * d) + 10 * ctx.log_disc)
    put("kappa2_c2", 6.0, log_c2,
        "explicit" if k0 is not None else "parameterized",
        "log Delta <= exp(c2 (log N)^6); needs absolute constant k0")

    k3p = params.get("k3_prime")
    log_c3p = None if k3p is None else k3p + 24 * g ** 4 * ctx.log_disc
    put("kappa3_c3prime", 96 * d * g ** 4, log_c3p,
        "explicit" if k3p is not None else "parameterized",
        "cyclic prime-degree covers; k3' not effective in general")

    put("semistable_hyperelliptic_c3", d * (4 * g) ** 8.0, _log_c3(ctx, g),
        "explicit", "log D <= c3 N^{d (4g)^8}, semistable hyperelliptic")

    c_of_d = params.get("c_of_d")
    log_c4a = None if c_of_d is None else c_of_d + 4 * ctx.log_disc
    put("kappa4_22d", 22.0 * d, log_c4a,
        "explicit" if c_of_d is not None else "parameterized",
        "genus one, sharper exponent; needs c(d)")

    put("kappa4_162d", 162.0 * d, (18 * d) ** 2 * math.log(5) + 5 * ctx.log_disc,
        "explicit", "genus one, fully explicit variant")

    kappa5 = 8 ** 8 * d ** 4 * math.log(3 * ctx.class_number)
    put("kappa5_c5", kappa5, max(_log_c1(ctx, 2), _log_c3(ctx, 2)), "explicit",
        "genus two, semistable or rational Weierstrass point")

    log_c6 = (None if k0 is None
              else k0 + 15 * d * math.log(8 * d) + 10 * ctx.log_disc)
    put("kappa6_c6", 6.0, log_c6,
        "explicit" if k0 is not None else "parameterized",
        "genus two general; needs absolute constant k0")

    put("potential_good_exponent", float(kappa_potential_good(g)), 0.0,
        "explicit", "Delta | M^kappa for everywhere potential good reduction")

    put("jacobian_height_coeff", 0.0, 2.0 ** 22 * 9.0 ** g * LOG2, "explicit",
        "h_F(J) <= coeff * mu for cyclic prime covers")
    put("semistable_disc_height_coeff", 0.0,
        2.0 ** 23 * 9.0 ** g * LOG2 + math.log(d), "explicit",
        "log D <= coeff * mu, semistable hyperelliptic")

    for name in ("c4_prime", "c_prime", "c_double_prime", "k7", "c_delta",
                 "c_g", "k8"):
        val = params.get(name)
        put(name, 0.0, val, "explicit" if val is not None else "parameterized",
            "caller-supplied auxiliary constant")
    return out


# ---------------------------------------------------------------------------
# Verdicts on exponential discriminant bounds
# ---------------------------------------------------------------------------

def verify_exponential_szpiro(log_disc: float, conductor: int, kappa: float,
                              log_c: LogMagnitude,
                              shape: str = "exponential") -> Verdict:
    """Compare log Delta against c N^kappa (or exp(c (log N)^kappa)).

    Comparison in log space: with L = max(log Delta, 1e-9),
      'exponential':        log L <= log c + kappa log N
      'double_exponential': log L <= log c + kappa log log N  (N >= 3)
    """
    if conductor < 1:
        raise DomainError("conductor >= 1 required")
    if log_disc < 0:
        raise DomainError("log Delta must be nonnegative")
    lhs = math.log(max(log_disc, 1e-9))
    if shape == "exponential":
        rhs = log_c.log + kappa * math.log(conductor)
    elif shape == "double_exponential":
        if conductor < 3:
            return Verdict.skipped("szpiro_bound", "log log N undefined")
        rhs = log_c.log + kappa * math.log(math.log(conductor))
    else:
        raise DomainError(f"unknown shape {shape!r}")
    return Verdict.from_margin("szpiro_bound", rhs - lhs,
                               f"kappa={kappa:g}, shape={shape}")


# ---------------------------------------------------------------------------
# Frey chain
# ---------------------------------------------------------------------------

def frey_chain(a: int, b: int, c: int, log_c4_prime: float | None = None) -> list:
    """The unconditional Frey-curve relations for a coprime triple a+b=c.

    Emits exact verdicts for N_E <= 2^8 rad(abc) and |abc|^2 <= 2^8 Delta_E,
    plus the exponential triple bound max|.| <= exp(c4' rad^22) when the
    constant c4' is supplied (conditional otherwise).
    """
    E = frey_curve(a, b, c)
    inv = global_invariants(E)
    support = radical(a * b * c)
    out = []
    out.append(Verdict.from_margin(
        "frey_conductor", float(256 * support - inv.conductor),
        f"N = {inv.conductor}, 2^8 rad(abc) = {256 * support} (exact)"))
    lhs = (a * b * c) ** 2
    rhs = 256 * inv.delta_min
    out.append(Verdict.from_margin(
        "frey_discriminant", math.log(rhs) - math.log(lhs),
        f"|abc|^2 = {lhs}, 2^8 Delta = {rhs} (log-space margin)"))
    if log_c4_prime is None:
        out.append(Verdict.skipped(
            "frey_exponential_abc", "conditional: needs constant c4'"))
    else:
        lhs_h = math.log(max(abs(a), abs(b), abs(c)))
        rhs_h = log_c4_prime + 22 * math.log(support)
        out.append(Verdict.from_margin(
            "frey_exponential_abc", rhs_h - math.log(max(lhs_h, 1e-9)),
            "max(|a|,|b|,|c|) <= exp(c4' rad^22), compared doubly-log"))
    return out


# ---------------------------------------------------------------------------
# Unit-equation bounds
# ---------------------------------------------------------------------------

def gyory_yu_mu_bound(ctx: FieldContext, l: int, n_t: int) -> LogMagnitude:
    """log of (2 m d N_T^{log m})^{15 m d - 1} D_K^{m - 1}, m = max(6, l)."""
    if l < 1 or n_t < 1:
        raise DomainError("l, N_T >= 1")
    m = max(6, l)
    d = ctx.d
    return LogMagnitude(
        (15 * m * d - 1) * (math.log(2 * m * d) + math.log(m) * math.log(n_t))
        + (m - 1) * ctx.log_disc)


@dataclass(frozen=True)
class UnitEquationConstants:
    log_kappa_t: float
    log_c_field: float
    log_c_places: float
    log_bound: float          # kappa_T N_T^l c_K c_S log(c_K c_S), S = T
    log_regulator_bound: float | None
    log_gyory_display: float | None  # kappa_T N_S^l R max(1, log R) when R given


def unit_equation_constants(ctx: FieldContext, l: int, t: int, s: int,
                            n_s: int, n_s_logprod: float,
                            log_regulator: float | None = None
                            ) -> UnitEquationConstants:
    """Log-space constants of the explicit unit-equation height bound.

      kappa_T = 2^34 (l n (t+d))^{2 l (t+d) + 5} 2^{7 l (t+d)},  n = l d
      c_K = D_K^{l/2} (3 m^3 d^2 max(1, log D_K))^{n-1}
      c_S = (N_S^{1/2} n_S)^l (max(1,s) m^{2s} max(1, log N_S))^{m d - 1}

    with m = max(6, l); n_s_logprod is the product of log N_v over the
    finite places (1 for the empty set).  The assembled bound takes S = T.
    A caller-supplied regulator turns on the direct display bound
    kappa_T N_S^l R max(1, log R) and the regulator inequality
    R <= (2n)^{n-1} D_L^{1/2} max(1, D_L)^{n-1} (l^s n_S)^l is exposed
    through `dedekind_bound` for D_L.
    """
    if l < 1 or t < 0 or s < 0 or n_s < 1 or n_s_logprod <= 0:
        raise DomainError("bad unit-equation parameters")
    d = ctx.d
    n = l * d
    m = max(6, l)
    log_kappa_t = (34 * LOG2 + (2 * l * (t + d) + 5) * math.log(l * n * (t + d))
                   + 7 * l * (t + d) * LOG2)
    log_ck = (l / 2) * ctx.log_disc \
        + (n - 1) * math.log(3 * m ** 3 * d ** 2 * max(1.0, ctx.log_disc))
    log_ns = math.log(n_s)
    log_cs = l * (0.5 * log_ns + math.log(n_s_logprod)) \
        + (m * d - 1) * (math.log(max(1, s)) + 2 * s * math.log(m)
                         + math.log(max(1.0, log_ns)))
    log_bound = (log_kappa_t + l * log_ns + log_ck + log_cs
                 + math.log(max(log_ck + log_cs, 1e-9)))
    log_reg_bound = None
    log_display = None
    if log_regulator is not None:
        log_display = (log_kappa_t + l * log_ns + log_regulator
                       + math.log(max(1.0, log_regulator)))
        log_dl = dedekind_bound(ctx, l, s, n_s).log
        log_reg_bound = ((n - 1) * math.log(2 * n) + 0.5 * log_dl
                         + (n - 1) * max(0.0, log_dl)
                         + l * (s * math.log(l) + math.log(n_s_logprod)))
    return UnitEquationConstants(log_kappa_t, log_ck, log_cs, log_bound,
                                 log_reg_bound, log_display)


def abc_conditional_mu(ctx: FieldContext, l: int, s: int, n_t: int, n_s: int,
                       r: float, eps: float, log_c: float) -> float:
    """r log N_T + (eps/n) log(N_S^{l-1} l^{s n}) + (eps/d) log D_K + (log c)/n."""
    if r <= 1 or eps <= 1:
        raise DomainError("need r, eps > 1")
    if l < 1 or s < 0 or n_t < 1 or n_s < 1:
        raise DomainError("bad parameters")
    n = l * ctx.d
    return (r * math.log(n_t)
            + (eps / n) * ((l - 1) * math.log(n_s) + s * n * math.log(l))
            + (eps / ctx.d) * ctx.log_disc
            + log_c / n)


def dedekind_bound(ctx: FieldContext, l: int, s: int, n_s: int) -> LogMagnitude:
    """log(D_K^l N_S^{l-1} l^{n s}), the relative-extension discriminant cap."""
    if l < 1 or s < 0 or n_s < 1:
        raise DomainError("bad parameters")
    n = l * ctx.d
    return LogMagnitude(l * ctx.log_disc + (l - 1) * math.log(n_s)
                        + n * s * math.log(l))


# ---------------------------------------------------------------------------
# Analytic prime-counting bounds
# ---------------------------------------------------------------------------

def _primes_upto(n: int) -> list:
    sieve = bytearray([1]) * (n + 1)
    sieve[:2] = b"\x00\x00"
    for p in range(2, int(n ** 0.5) + 1):
        if sieve[p]:
            sieve[p * p::p] = b"\x00" * len(sieve[p * p::p])
    return [i for i, v in enumerate(sieve) if v]


@dataclass(frozen=True)
class AnalyticRecord:
    t: int
    n_t: int
    log_n_t_prod: float     # product of log p over the set (1 if empty)
    theta_at_q: float       # log of the primorial of the t-th prime
    omega: int
    checks: tuple           # Verdicts for the displayed inequalities


def analytic_prime_bounds(ctx: FieldContext, eps: float, t_primes: list,
                          k4: float | None = None, k5_log: float | None = None,
                          k6_log: float | None = None,
                          log_k7: float | None = None) -> AnalyticRecord:
    """Evaluate the prime-counting inequalities on an explicit place set.

    Over Q the places are rational primes; t = |T| and N_T = prod p.  The
    two-sided displays checked (when their constants are supplied):
      t <= eps log N_T + k4
      t^t <= k5 N_T^{d+eps}
      n_T <= k6 N_T^{eps}
      t <= d(1+eps)/log(omega) log N_T + d log(k7)/log(omega)   (omega >= 2)
      t^t <= N_T^{d(1+eps)} k7^d d^t
    Empty T follows the empty-product convention N_T = 1, t = 0.
    """
    if eps <= 0:
        raise DomainError("eps > 0 required")
    primes = sorted(set(t_primes))
    t = len(primes)
    n_t = 1
    for p in primes:
        n_t *= p
    log_prod = 1.0
    if primes:
        log_prod = math.prod(math.log(p) for p in primes)
    omega = len(primes)
    theta = 0.0
    if omega:
        qprime = _primes_upto(200 + 20 * omega)
        theta = sum(math.log(p) for p in qprime[:omega])
    checks = []
    if k4 is not None:
        checks.append(Verdict.from_margin(
            "prime_count_linear", eps * math.log(n_t) + k4 - t,
            f"t <= eps log N_T + k4 with k4 = {k4:g}"))
    if k5_log is not None:
        lhs = t * math.log(t) if t else 0.0
        checks.append(Verdict.from_margin(
            "prime_count_power", k5_log + (ctx.d + eps) * math.log(n_t) - lhs,
            "t^t <= k5 N_T^{d+eps}"))
    if k6_log is not None:
        checks.append(Verdict.from_margin(
            "prime_logprod", k6_log + eps * math.log(n_t) - math.log(log_prod),
            "n_T <= k6 N_T^eps"))
    if log_k7 is not None and omega >= 2:
        lw = math.log(omega)
        rhs = ctx.d * (1 + eps) / lw * math.log(n_t) + ctx.d * log_k7 / lw
        checks.append(Verdict.from_margin(
            "prime_count_sharp", rhs - t, "explicit two-term variant"))
        lhs = t * math.log(t) if t else 0.0
        rhs = (ctx.d * (1 + eps) * math.log(n_t) + ctx.d * log_k7
               + t * math.log(ctx.d))
        checks.append(Verdict.from_margin(
            "prime_count_sharp_power", rhs - lhs,
            "t^t <= N_T^{d(1+eps)} k7^d d^t"))
    return AnalyticRecord(t, n_t, log_prod, theta, omega, tuple(checks))


@dataclass(frozen=True)
class ScanCertificate:
    eps: float
    cap: int
    k4: float
    log_k5: float
    log_k6: float
    note: str


def scan_analytic_constants(eps: float, cap: int, d: int = 1) -> ScanCertificate:
    """Smallest (k4, k5, k6) valid for every rational prime set with
    N_T <= cap (d = 1 scan; the certificate covers only that range).

    k4 and k5 are extremal on primorial prefixes (for fixed t the product
    of the t smallest primes minimizes N_T, and both margins are monotone
    in N_T); k6 needs a genuine subset search, done by depth-first search
    with an admissible bound over primes with positive weight.
    """
    if d != 1:
        raise DomainError("scan mode certifies d = 1 only")
    if eps <= 0 or cap < 1:
        raise DomainError("bad scan parameters")
    primes = _primes_upto(max(100, cap if cap < 10 ** 6 else 10 ** 6))
    # primorial prefixes
    k4 = 0.0
    log_k5 = 0.0
    n_t = 1
    t = 0
    for p in primes:
        if n_t * p > cap:
            break
        n_t *= p
        t += 1
        k4 = max(k4, t - eps * math.log(n_t))
        log_k5 = max(log_k5, t * math.log(t) - (1 + eps) * math.log(n_t))
    # subset search for k6 = max prod(log p) / N_T^eps
    weights = [(math.log(math.log(p)) - eps * math.log(p), math.log(p), p)
               for p in primes if p <= cap]
    weights.sort(reverse=True)
    positive = [w for w in weights if w[0] > 0]
    budget = math.log(cap)
    best = 0.0  # empty set: ratio 1, log 0

    def dfs(i, acc, room):
        nonlocal best
        if acc > best:
            best = acc
        if i >= len(positive):
            return
        # admissible bound: add every remaining positive weight that fits
        bound = acc + sum(w for w, lp, _ in positive[i:] if lp <= room)
        if bound <= best:
            return
        w, lp, _ = positive[i]
        if lp <= room:
            dfs(i + 1, acc + w, room - lp)
        dfs(i + 1, acc, room)

    dfs(0, 0.0, budget)
    return ScanCertificate(eps, cap, k4, log_k5, best,
                           f"certified for all prime sets with N_T <= {cap}, d=1")


# ---------------------------------------------------------------------------
# Conditional genus-one bound
# ---------------------------------------------------------------------------

def conditional_genus_one_bound(ctx: FieldContext, r: float, eps: float,
                                log_c_prime: float, log_n: float) -> float:
    """RHS of log D <= 6 (d r + eps) log N + 6 eps log D_K + c'."""
    if r <= 1 or eps <= 1:
        raise DomainError("need r, eps > 1")
    if log_n < 0:
        raise DomainError("log N >= 0")
    return (6 * (ctx.d * r + eps) * log_n + 6 * eps * ctx.log_disc
            + log_c_prime)


def conditional_genus_one_power_form(ctx: FieldContext, r: float,
                                     log_c_double_prime: float,
                                     log_n: float) -> float:
    """log of the comparison form c'' N^{6 d r}."""
    if r <= 1:
        raise DomainError("need r > 1")
    return log_c_double_prime + 6 * ctx.d * r * log_n
