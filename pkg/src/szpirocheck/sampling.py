"""Deterministic samplers for period matrices and symplectic matrices.

Shared by the property harnesses, the survey scripts, and the acceptance
suite; everything is keyed by an explicit seed through the counter-based
Philox generator, so identical seeds give identical samples on any host.
"""

from __future__ import annotations

import math

import numpy as np

from .siegel import SiegelPoint, SymplecticMatrix, symplectic_act


def _gen(seed: int, stream: int = 0) -> np.random.Generator:
    return np.random.Generator(np.random.Philox(
        key=np.array([seed % 2 ** 64, stream], dtype=np.uint64)))


def sample_tau_g2(count: int, seed: int, eig_lo: float = 0.5,
                  eig_hi: float = 10.0, re_scale: float = 0.5) -> list:
    """Random genus-2 points: Im = R diag(l1, l2) R^T with eigenvalues
    uniform in [eig_lo, eig_hi], Re entries uniform in [-re_scale, re_scale]."""
    gen = _gen(seed, 1)
    out = []
    for _ in range(count):
        phi = gen.uniform(0, 2 * math.pi)
        l1, l2 = gen.uniform(eig_lo, eig_hi, size=2)
        c, s = math.cos(phi), math.sin(phi)
        R = np.array([[c, -s], [s, c]])
        Y = R @ np.diag([l1, l2]) @ R.T
        X = gen.uniform(-re_scale, re_scale, size=3)
        rows = [[complex(X[0], Y[0, 0]), complex(X[2], Y[0, 1])],
                [complex(X[2], Y[0, 1]), complex(X[1], Y[1, 1])]]
        out.append(SiegelPoint.create(rows))
    return out


def sample_tau_g1(count: int, seed: int, im_lo: float = 0.9,
                  im_hi: float = 3.0) -> list:
    """Random reduced-ish genus-1 points: Re in [-1/2, 1/2], Im in range."""
    gen = _gen(seed, 2)
    out = []
    for _ in range(count):
        re = gen.uniform(-0.5, 0.5)
        im = gen.uniform(im_lo, im_hi)
        out.append(SiegelPoint.create([[complex(re, im)]]))
    return out


def sample_symplectic(g: int, count: int, seed: int, word_len: int = 4,
                      entry_bound: int | None = None) -> list:
    """Random symplectic matrices as short words in the standard generators
    (translations, inversion, unimodular congruences)."""
    gen = _gen(seed, 3)
    out = []
    while len(out) < count:
        sig = SymplecticMatrix.identity(g)
        for _ in range(int(gen.integers(1, word_len + 1))):
            k = int(gen.integers(0, 3))
            if k == 0:
                B = [[int(gen.integers(-2, 3)) for _ in range(g)]
                     for _ in range(g)]
                for i in range(g):
                    for j in range(i + 1, g):
                        B[j][i] = B[i][j]
                sig = SymplecticMatrix.translation(B).compose(sig)
            elif k == 1:
                sig = SymplecticMatrix.inversion(g).compose(sig)
            else:
                V = [[1 if i == j else 0 for j in range(g)] for i in range(g)]
                if g > 1:
                    i, j = 0, 1
                    V[i][j] = int(gen.integers(-2, 3))
                sig = SymplecticMatrix.gl_embed(V).compose(sig)
        if entry_bound is not None:
            flat = [abs(x) for row in sig.full() for x in row]
            if max(flat) > entry_bound:
                continue
        out.append(sig)
    return out


def sample_conditioned_pairs(g: int, count: int, seed: int,
                             min_im_eig: float = 0.05) -> list:
    """(sigma, tau) pairs where sigma tau stays numerically comfortable."""
    taus = (sample_tau_g1(4 * count, seed)
            if g == 1 else sample_tau_g2(4 * count, seed, 0.7, 3.0))
    sigs = sample_symplectic(g, 4 * count, seed + 1)
    out = []
    for sig, tau in zip(sigs, taus):
        moved = symplectic_act(sig, tau)
        if float(moved.im_min_eigenvalue()) >= min_im_eig:
            out.append((sig, tau))
        if len(out) == count:
            break
    if len(out) < count:
        raise RuntimeError("sampler could not produce enough conditioned pairs")
    return out
