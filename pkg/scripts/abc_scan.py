#!/usr/bin/env python3
"""Scan coprime triples a + b = c and verify the Frey-curve relations
N <= 2^8 rad(abc) and |abc|^2 <= 2^8 Delta on every one; also report the
highest-quality triples found (quality = log c / log rad(abc))."""

import argparse
import math
import sys
from math import gcd

import numpy as np

from szpirocheck.bounds import frey_chain
from szpirocheck.exactmath import radical


def generate_triples(count, cmax, seed):
    gen = np.random.Generator(np.random.Philox(key=np.array([seed, 0],
                                                            dtype=np.uint64)))
    out = []
    # small systematic block first, then random fill
    for a in range(1, 40):
        for b in range(a, 60):
            if gcd(a, b) == 1:
                out.append((a, b, a + b))
            if len(out) >= count // 2:
                break
        if len(out) >= count // 2:
            break
    while len(out) < count:
        a = int(gen.integers(1, cmax // 2))
        b = int(gen.integers(1, cmax - a))
        if gcd(a, b) == 1 and a + b <= cmax:
            out.append((a, b, a + b))
    return out


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--count", type=int, default=1000)
    ap.add_argument("--cmax", type=int, default=10 ** 6)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()

    triples = generate_triples(args.count, args.cmax, args.seed)
    failures = 0
    best = []
    for (a, b, c) in triples:
        verdicts = frey_chain(a, b, c)
        failures += sum(v.status == "fail" for v in verdicts)
        q = math.log(c) / math.log(radical(a * b * c))
        best.append((q, (a, b, c)))
    best.sort(reverse=True)
    print(f"checked {len(triples)} triples, failures: {failures}")
    print("highest quality:")
    for q, t in best[:10]:
        print(f"  q={q:.4f}  {t}")
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
