"""Batch front door.

Subcommands: invariants, szpiro, frey, lambda, theta, delta2, constants,
selftest.  Curve files hold one curve per line (optional label then the
five a-invariants, '#' comments); abc files hold one "a,b,c" triple per
line.  Reports are emitted as one self-contained JSON record per line
with big integers as decimal strings, and identical inputs plus seeds
produce byte-identical report streams (timings go to stderr only).
Exit status: 0 all checks pass, 1 any failure, 2 usage or parse error.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import math
import sys
import time
from dataclasses import dataclass
from pathlib import Path

import mpmath as mp

from . import bounds
from .arakelov import faltings_delta_genus2
from .corpus import DESK_CORPUS
from .elliptic import (EllipticModel, LocalReductionData, GlobalInvariants,
                       faltings_height, genus_one_checks, global_invariants,
                       lambda_data, model_invariants)
from .errors import SzpirocheckError
from .exactmath import LogMagnitude
from .report import Verdict
from .siegel import SiegelPoint, ThetaCharacteristic, theta_constant

USAGE_ERROR = 2


class ParseFailure(SzpirocheckError):
    pass


@dataclass(frozen=True)
class CurveRecord:
    label: str
    ainvs: tuple


@dataclass(frozen=True)
class ReportEntry:
    label: str
    invariants: dict | None
    checks: dict
    error: str | None
    elapsed: float  # seconds; never serialized (reports stay deterministic)

    def to_json(self) -> str:
        doc = {"label": self.label, "invariants": self.invariants,
               "checks": self.checks, "error": self.error}
        return json.dumps(doc, sort_keys=True, separators=(",", ":"))


# ---------------------------------------------------------------------------
# Parsing
# ---------------------------------------------------------------------------

def parse_curve_file(path) -> list:
    """One curve per line: optional label then a1 a2 a3 a4 a6."""
    records = []
    for lineno, raw in enumerate(Path(path).read_text().splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        toks = line.split()
        label = None
        if len(toks) == 6:
            label, toks = toks[0], toks[1:]
        if len(toks) != 5:
            raise ParseFailure(f"{path}:{lineno}: expected 5 integers "
                               f"(optionally after a label), got {raw!r}")
        try:
            ainvs = tuple(int(t) for t in toks)
        except ValueError:
            raise ParseFailure(f"{path}:{lineno}: non-integer coefficient "
                               f"in {raw!r}") from None
        records.append(CurveRecord(label or f"line{lineno}", ainvs))
    return records


def parse_abc_file(path) -> list:
    triples = []
    for lineno, raw in enumerate(Path(path).read_text().splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = [p.strip() for p in line.split(",")]
        if len(parts) != 3:
            raise ParseFailure(f"{path}:{lineno}: expected 'a,b,c'")
        try:
            triples.append(tuple(int(p) for p in parts))
        except ValueError:
            raise ParseFailure(f"{path}:{lineno}: non-integer entry") from None
    return triples


def parse_field(text: str) -> bounds.FieldContext:
    try:
        d, dk, hk = (int(x) for x in text.split(","))
        return bounds.FieldContext(d, dk, hk)
    except (ValueError, SzpirocheckError) as e:
        raise ParseFailure(f"bad --field {text!r}: {e}") from None


def parse_tau(values: list, g: int) -> SiegelPoint:
    if len(values) != 2 * g * g:
        raise ParseFailure(f"tau for g={g} needs {2 * g * g} decimals "
                           "(re,im row-major)")
    rows = []
    it = iter(values)
    for _ in range(g):
        row = []
        for _ in range(g):
            re = next(it)
            im = next(it)
            row.append(complex(re, im))
        rows.append(row)
    return SiegelPoint.create(rows)


# ---------------------------------------------------------------------------
# Invariants cache (content-addressed, append-only)
# ---------------------------------------------------------------------------

def _cache_key(ainvs) -> str:
    blob = " ".join(str(a) for a in ainvs).encode()
    return hashlib.sha256(blob).hexdigest()


def _invariants_to_doc(inv: GlobalInvariants) -> dict:
    return {
        "delta_min": str(inv.delta_min),
        "delta_sign": inv.delta_sign,
        "conductor": str(inv.conductor),
        "semistable": inv.semistable,
        "locals": [{"p": str(d.p), "kodaira": d.kodaira, "f": d.f, "n": d.n,
                    "m": d.m, "potential_good": d.potential_good}
                   for d in inv.locals],
        "T0": [str(p) for p in inv.T0],
        "T1": [str(p) for p in inv.T1],
        "T2": [str(p) for p in inv.T2],
    }


def _invariants_from_doc(doc: dict) -> GlobalInvariants:
    locs = tuple(LocalReductionData(int(d["p"]), d["kodaira"], d["f"], d["n"],
                                    d["m"], d["potential_good"])
                 for d in doc["locals"])
    return GlobalInvariants(int(doc["delta_min"]), doc["delta_sign"],
                            int(doc["conductor"]), locs, doc["semistable"],
                            tuple(int(p) for p in doc["T0"]),
                            tuple(int(p) for p in doc["T1"]),
                            tuple(int(p) for p in doc["T2"]))


def cached_invariants(model: EllipticModel, cache_dir) -> GlobalInvariants:
    """Content-addressed invariant store; corrupt entries are recomputed."""
    if cache_dir is None:
        return global_invariants(model)
    key = _cache_key(model.ainvs)
    path = Path(cache_dir) / f"{key}.json"
    if path.exists():
        try:
            return _invariants_from_doc(json.loads(path.read_text()))
        except (ValueError, KeyError, AssertionError):
            print(f"warning: corrupt cache entry {path}, recomputing",
                  file=sys.stderr)
    inv = global_invariants(model)
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(json.dumps(_invariants_to_doc(inv), sort_keys=True))
    return inv


# ---------------------------------------------------------------------------
# Check registry
# ---------------------------------------------------------------------------

def _check_szpiro162(model, inv, ctx):
    entry = bounds.ledger(ctx, 1)["kappa4_162d"]
    v = bounds.verify_exponential_szpiro(
        inv.log_delta_min, inv.conductor, entry.kappa, entry.log_c)
    return {"szpiro162": v}


def _check_ogg(model, inv, ctx):
    ok = all(d.n == d.m - 1 + d.f for d in inv.locals)
    return {"ogg": Verdict.from_margin("ogg", 0.0 if ok else -1.0,
                                       "n = m - 1 + f at every bad prime")}


def _check_integral_j(model, inv, ctx):
    if model.j.denominator != 1:
        return {"integral_j_div": Verdict.skipped("integral_j_div",
                                                  "j is not integral")}
    ok = (inv.conductor ** 5) % inv.delta_min == 0
    bad = [d for d in inv.locals if d.p in inv.T0 and d.n > 5 * d.f]
    return {"integral_j_div": Verdict.from_margin(
        "integral_j_div", 0.0 if ok and not bad else -1.0,
        "Delta | N^5 and n <= 5f at odd potential-good primes")}


def _check_heights(model, inv, ctx):
    out = {}
    for v in genus_one_checks(model, inv=inv):
        out[v.name] = v
    return out


CHECKS = {
    "szpiro162": _check_szpiro162,
    "ogg": _check_ogg,
    "integral_j_div": _check_integral_j,
    "heights": _check_heights,
}

DEFAULT_CHECKS = ("szpiro162", "ogg", "integral_j_div")


def run_suite(records, checks, ctx, out, cache_dir=None) -> dict:
    """One report line per record; math failures skip the record only."""
    unknown = [c for c in checks if c not in CHECKS]
    if unknown:
        raise ParseFailure(f"unknown checks: {', '.join(unknown)}")
    summary = {"pass": 0, "fail": 0, "skip": 0, "error": 0}
    for rec in records:
        t0 = time.perf_counter()
        try:
            model = model_invariants(*rec.ainvs)
            inv = cached_invariants(model, cache_dir)
            verdicts = {}
            for name in checks:
                verdicts.update(CHECKS[name](model, inv, ctx))
            doc_checks = {k: {"status": v.status, "margin": v.margin,
                              "notes": v.notes} for k, v in verdicts.items()}
            for v in verdicts.values():
                summary[v.status if v.status in summary else "skip"] += 1
            entry = ReportEntry(rec.label, _invariants_to_doc(inv), doc_checks,
                                None, time.perf_counter() - t0)
        except SzpirocheckError as e:
            summary["error"] += 1
            entry = ReportEntry(rec.label, None,
                                {}, f"{type(e).__name__}: {e}",
                                time.perf_counter() - t0)
        out.write(entry.to_json() + "\n")
    return summary


# ---------------------------------------------------------------------------
# Subcommands
# ---------------------------------------------------------------------------

def _records_from_args(args) -> list:
    if args.curves:
        return parse_curve_file(args.curves)
    return [CurveRecord(c.label, c.ainvs) for c in DESK_CORPUS]


def _cmd_invariants(args) -> int:
    ctx = parse_field(args.field)
    records = _records_from_args(args)
    summary = run_suite(records, (), ctx, sys.stdout, args.cache_dir)
    print(f"curves: {len(records)}, errors: {summary['error']}",
          file=sys.stderr)
    return 0 if summary["error"] == 0 else 1


def _cmd_szpiro(args) -> int:
    ctx = parse_field(args.field)
    records = _records_from_args(args)
    checks = tuple(args.checks.split(",")) if args.checks else DEFAULT_CHECKS
    summary = run_suite(records, checks, ctx, sys.stdout, args.cache_dir)
    print(f"pass {summary['pass']}  fail {summary['fail']}  "
          f"skip {summary['skip']}  error {summary['error']}",
          file=sys.stderr)
    return 0 if summary["fail"] == 0 and summary["error"] == 0 else 1


def _cmd_frey(args) -> int:
    triples = parse_abc_file(args.abc)
    any_fail = False
    for (a, b, c) in triples:
        try:
            verdicts = bounds.frey_chain(a, b, c)
            doc = {"triple": [str(a), str(b), str(c)],
                   "checks": {v.name: {"status": v.status, "margin": v.margin}
                              for v in verdicts}}
            any_fail |= any(v.status == "fail" for v in verdicts)
        except SzpirocheckError as e:
            doc = {"triple": [str(a), str(b), str(c)],
                   "error": f"{type(e).__name__}: {e}"}
            any_fail = True
        print(json.dumps(doc, sort_keys=True, separators=(",", ":")))
    return 1 if any_fail else 0


def _cmd_lambda(args) -> int:
    records = _records_from_args(args)
    status = 0
    for rec in records:
        try:
            model = model_invariants(*rec.ainvs)
            ld = lambda_data(model)
            hf = faltings_height(model)
            doc = {"label": rec.label,
                   "minpolys": [str(v.minpoly) for v in ld.distinct_values],
                   "heights": list(ld.heights),
                   "h_min": ld.h_min, "h_max": ld.h_max,
                   "faltings_height": hf.h_f, "faltings_exact": hf.exact}
        except SzpirocheckError as e:
            doc = {"label": rec.label, "error": f"{type(e).__name__}: {e}"}
            status = 1
        print(json.dumps(doc, sort_keys=True, separators=(",", ":")))
    return status


def _cmd_theta(args) -> int:
    g = args.g
    pt = parse_tau(args.tau, g)
    if args.char:
        parts = [int(x) for x in args.char.split(",")]
        if len(parts) != 2 * g:
            raise ParseFailure(f"--char needs {2 * g} doubled entries")
        ch = ThetaCharacteristic(tuple(parts[:g]), tuple(parts[g:]))
    else:
        ch = ThetaCharacteristic.zero(g)
    val = theta_constant(ch, pt)
    print(json.dumps({"re": float(val.real), "im": float(val.imag),
                      "abs": float(abs(val))},
                     sort_keys=True, separators=(",", ":")))
    return 0


def _cmd_delta2(args) -> int:
    pt = parse_tau(args.tau, 2)
    res = faltings_delta_genus2(pt, args.samples, args.seed)
    doc = {"delta": res.delta, "log_h": res.log_h,
           "log_h_stderr": res.log_h_stderr,
           "log_norm_delta2": res.log_norm_delta2,
           "samples": res.samples, "seed": res.seed,
           "floored": res.floored, "degenerate": res.degenerate,
           "lower_bound_ok": res.degenerate or res.delta >= -186}
    print(json.dumps(doc, sort_keys=True, separators=(",", ":")))
    return 0 if doc["lower_bound_ok"] else 1


def _cmd_constants(args) -> int:
    ctx = parse_field(args.field)
    led = bounds.ledger(ctx, args.genus)
    print(f"{'name':34} {'kappa':>14} {'log10 c':>14} provenance")
    for name, e in led.items():
        logc = f"{e.log_c.log10:.6g}" if e.log_c is not None else "-"
        print(f"{name:34} {e.kappa:14.6g} {logc:>14} {e.provenance}")
    return 0


def _cmd_selftest(args) -> int:
    ctx = bounds.FieldContext()
    failures = 0

    def note(name, ok):
        nonlocal failures
        print(f"{'PASS' if ok else 'FAIL'}  {name}")
        failures += 0 if ok else 1

    inv = global_invariants(model_invariants(0, 0, 1, -1, 0))
    note("invariants 37a1", inv.delta_min == 37 and inv.conductor == 37)
    vs = {v.name: v for v in genus_one_checks(model_invariants(0, 0, 1, -1, 0))}
    note("genus-one checks 37a1", all(v.status != "fail" for v in vs.values()))
    note("frey (1,8,9)", all(v.status != "fail"
                             for v in bounds.frey_chain(1, 8, 9)))
    pt = SiegelPoint.create([[complex(0, 1.7), complex(0.25, 0.1)],
                             [complex(0.25, 0.1), complex(0, 1.9)]])
    res = faltings_delta_genus2(pt, 10 ** 4, 1)
    note("delta2 sample", res.delta >= -186)
    led = bounds.ledger(ctx, 2)
    note("ledger finite", all(math.isfinite(e.log_c.log)
                              for e in led.values() if e.log_c is not None))
    return 1 if failures else 0


def main(argv=None) -> int:
    ap = argparse.ArgumentParser(
        prog="szpirocheck",
        description="arithmetic/Arakelov invariants and inequality checks")
    sub = ap.add_subparsers(dest="command", required=True)

    def add_common(p, curves=True):
        if curves:
            p.add_argument("--curves", help="curve file (default: desk corpus)")
        p.add_argument("--field", default="1,1,1",
                       help="d,D_K,h_K of the base field (default 1,1,1)")
        p.add_argument("--cache-dir", default=None)

    p = sub.add_parser("invariants", help="minimal discriminants/conductors")
    add_common(p)
    p.set_defaults(func=_cmd_invariants)

    p = sub.add_parser("szpiro", help="per-curve inequality verdicts")
    add_common(p)
    p.add_argument("--checks", help=f"csv of {','.join(CHECKS)}")
    p.set_defaults(func=_cmd_szpiro)

    p = sub.add_parser("frey", help="Frey-curve relations over abc triples")
    p.add_argument("--abc", required=True, help="csv file of a,b,c per line")
    p.set_defaults(func=_cmd_frey)

    p = sub.add_parser("lambda", help="two-torsion cross-ratio data")
    add_common(p)
    p.set_defaults(func=_cmd_lambda)

    p = sub.add_parser("theta", help="theta constant with characteristic")
    p.add_argument("--g", type=int, default=2)
    p.add_argument("--tau", type=float, nargs="+", required=True,
                   help="row-major re,im pairs (2g^2 decimals)")
    p.add_argument("--char", help="doubled characteristic a;b as csv of 2g ints")
    p.set_defaults(func=_cmd_theta)

    p = sub.add_parser("delta2", help="genus-2 delta invariant")
    p.add_argument("--tau", type=float, nargs=8, required=True,
                   help="8 decimals: re,im row-major upper triangle rows")
    p.add_argument("--samples", type=int, default=10 ** 5)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=_cmd_delta2)

    p = sub.add_parser("constants", help="print the constants ledger")
    p.add_argument("--field", default="1,1,1")
    p.add_argument("--genus", type=int, default=2)
    p.set_defaults(func=_cmd_constants)

    p = sub.add_parser("selftest", help="quick end-to-end sanity run")
    p.set_defaults(func=_cmd_selftest)

    try:
        args = ap.parse_args(argv)
        return args.func(args)
    except ParseFailure as e:
        print(f"error: {e}", file=sys.stderr)
        return USAGE_ERROR


if __name__ == "__main__":
    sys.exit(main())
