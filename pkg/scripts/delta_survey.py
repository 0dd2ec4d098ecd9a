#!/usr/bin/env python3
"""Sample genus-2 period matrices and survey the delta invariant and the
T-invariant against their proven bounds (delta >= -186, -log T <= 288)."""

import argparse
import sys

from szpirocheck.arakelov import dejong_t, faltings_delta_genus2
from szpirocheck.sampling import sample_tau_g2


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--count", type=int, default=100)
    ap.add_argument("--samples", type=int, default=10 ** 4)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()

    violations = 0
    deltas = []
    for i, pt in enumerate(sample_tau_g2(args.count, args.seed,
                                         eig_lo=0.6, eig_hi=3.0)):
        res = faltings_delta_genus2(pt, args.samples, args.seed + i)
        log_t = dejong_t(pt)
        ok = (res.degenerate or res.delta >= -186) and -log_t <= 288
        violations += not ok
        deltas.append(res.delta)
        print(f"{i:3d} delta={res.delta:+10.4f} (+-{4 * res.log_h_stderr:.4f}) "
              f"-logT={-log_t:+8.4f} {'ok' if ok else 'VIOLATION'}")
    print(f"\nmin delta: {min(deltas):.4f}   max: {max(deltas):.4f}   "
          f"violations: {violations}")
    return 1 if violations else 0


if __name__ == "__main__":
    sys.exit(main())
