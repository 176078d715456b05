#!/usr/bin/env python3
"""Benchmark the two enumeration kernels on both backends.

Runs each workload through the numba jit path and the pure-numpy fallback,
checks they agree, and prints a timing table.  Kernel selection normally
follows WEYLCERT_BACKEND; here both implementations are imported directly.

Usage: python benchmarks/bench_kernels.py [--heavy]
"""

from __future__ import annotations

import argparse
import time

import numpy as np

from weylcert.oracles import FormSpec, _form_blocks
from weylcert.oracles import _kern_numba, _kern_numpy
from weylcert.roots import RootDatum, cartan_matrix
from weylcert.weights import Weight

HIST_CASES = [
    FormSpec("quadratic_plus", 8, 5),     # 390,625 vectors
    FormSpec("quadratic_odd", 9, 5),      # 1,953,125
    FormSpec("quadratic_minus", 12, 3),   # 531,441
    FormSpec("hermitian", 7, 3),          # 4,782,969
]

HEAVY_HIST = [
    FormSpec("quadratic_plus", 16, 3),    # 43,046,721
    FormSpec("quadratic_odd", 11, 5),     # 48,828,125
]

ORBIT_CASES = [
    ("B", 7, (1, 0, 1, 0, 0, 1, 0)),
    ("D", 8, (0, 1, 0, 0, 1, 0, 0, 1)),
    ("A", 8, (1, 1, 0, 1, 0, 0, 1, 0)),
]

HEAVY_ORBIT = [
    ("C", 8, (1, 1, 1, 0, 1, 0, 1, 0)),
]


def _time(fn, *args):
    t0 = time.perf_counter()
    out = fn(*args)
    return out, time.perf_counter() - t0


def bench_histograms(cases):
    print(f"{'form-value histogram':44s} {'numba':>9s} {'numpy':>9s} {'ratio':>7s}")
    for spec in cases:
        blocks, tabs, add = _form_blocks(spec)
        args = (spec.n, spec.alphabet, blocks, tabs, add)
        _kern_numba.histogram_values(*args)  # warm the jit cache
        h_nb, t_nb = _time(_kern_numba.histogram_values, *args)
        h_np, t_np = _time(_kern_numpy.histogram_values, *args)
        assert np.array_equal(h_nb, h_np), f"backend mismatch on {spec}"
        label = f"{spec.kind} n={spec.n} q={spec.q} ({spec.alphabet ** spec.n:,} vecs)"
        print(f"{label:44s} {t_nb:8.3f}s {t_np:8.3f}s {t_np / max(t_nb, 1e-9):6.1f}x")


def bench_orbits(cases):
    print(f"\n{'weyl orbit closure':44s} {'numba':>9s} {'numpy':>9s} {'ratio':>7s}")
    for family, rank, coeffs in cases:
        w = Weight(RootDatum(family, rank), coeffs)
        cart = np.array(cartan_matrix(w.datum), dtype=np.int64)
        key = 0
        for k, c in enumerate(coeffs):
            key |= (c + 64) << (7 * k)
        _kern_numba.orbit_size(key, cart, 64)  # warm the jit cache
        n_nb, t_nb = _time(_kern_numba.orbit_size, key, cart, 64)
        n_np, t_np = _time(_kern_numpy.orbit_size, key, cart, 64)
        assert n_nb == n_np, f"backend mismatch on {w}"
        label = f"{w} (orbit {n_nb:,})"
        print(f"{label:44s} {t_nb:8.3f}s {t_np:8.3f}s {t_np / max(t_nb, 1e-9):6.1f}x")


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--heavy", action="store_true", help="add the large workloads")
    args = ap.parse_args()
    hist = HIST_CASES + (HEAVY_HIST if args.heavy else [])
    orb = ORBIT_CASES + (HEAVY_ORBIT if args.heavy else [])
    bench_histograms(hist)
    bench_orbits(orb)


if __name__ == "__main__":
    main()
