#!/usr/bin/env python3
"""Run the full per-curve check battery over the desk corpus and print a
compact table: invariants, Kodaira data, and every verdict margin."""

import math
import sys

from szpirocheck.corpus import DESK_CORPUS
from szpirocheck.elliptic import (faltings_height, genus_one_checks,
                                  global_invariants, lambda_data,
                                  model_invariants)


def main():
    failures = 0
    for curve in DESK_CORPUS:
        model = model_invariants(*curve.ainvs)
        inv = global_invariants(model)
        locs = " ".join(f"{d.p}:{d.kodaira}(f{d.f})" for d in inv.locals)
        print(f"{curve.label:9} Delta={inv.delta_sign * inv.delta_min:<12} "
              f"N={inv.conductor:<6} {'ss' if inv.semistable else '  '} {locs}")
        for v in genus_one_checks(model, inv=inv):
            flag = {"pass": " ", "fail": "!", "skip": "-"}[v.status]
            print(f"   {flag} {v.name:32} margin={v.margin:+.4f} {v.notes}")
            failures += v.status == "fail"
    print(f"\nfailures: {failures}")
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
