#!/usr/bin/env python3
"""Micro-benchmark: compiled kernels vs the NumPy reference.

Times the four hot kernels on representative workloads and prints a
small table. Runs fine when only one backend is importable.

    python3 benchmarks/bench_kernels.py [--repeat N]
"""

import argparse
import time

import numpy as np

from framelab import _kernels_py


def load_backends():
    backends = [("python", _kernels_py)]
    try:
        from framelab import _accel
    except ImportError:
        print("note: compiled backend not built, timing the reference only")
    else:
        backends.append(("compiled", _accel))
    return backends


def make_workloads(rng):
    n_atoms = 64
    log_terms = rng.uniform(-5.0, 2.0, n_atoms)
    log_mods = rng.uniform(-2.0, 1.0, n_atoms)
    powers = np.arange(5000, dtype=np.float64)

    pts = (np.sqrt(rng.uniform(0, 1, 2000)) * 0.97
           * np.exp(2j * np.pi * rng.uniform(0, 1, 2000)))

    dim = 64
    cols = 4096
    atom_of_coord = np.arange(dim, dtype=np.int64)
    coords = rng.normal(size=dim) + 1j * rng.normal(size=dim)
    angles = rng.uniform(-np.pi, np.pi, dim)
    col_powers = rng.integers(0, 200, cols).astype(np.float64)
    log_scales = rng.uniform(-3.0, 3.0, cols)
    phases = np.exp(1j * rng.uniform(-np.pi, np.pi, cols))

    big = rng.uniform(-700.0, 700.0, 1_000_000)

    return [
        ("power_log_norms_sq (64 atoms x 5000 powers)",
         lambda mod: mod.power_log_norms_sq(log_terms, log_mods, powers)),
        ("carleson_log_sums (2000 points)",
         lambda mod: mod.carleson_log_sums(pts)),
        ("scaled_power_matrix (64 x 4096)",
         lambda mod: mod.scaled_power_matrix(
             coords, atom_of_coord, log_mods[:dim], angles,
             col_powers, log_scales, phases)),
        ("logsumexp (1e6 values)",
         lambda mod: mod.logsumexp(big)),
    ]


def best_of(repeat, fn):
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t0)
    return best


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--repeat", type=int, default=5,
                        help="timing repetitions per kernel (best-of)")
    args = parser.parse_args()

    backends = load_backends()
    workloads = make_workloads(np.random.default_rng(42))

    name_w = max(len(name) for name, _ in workloads)
    header = f"{'kernel':<{name_w}}"
    for bname, _ in backends:
        header += f"  {bname + ' (ms)':>14}"
    if len(backends) == 2:
        header += f"  {'speedup':>8}"
    print(header)
    print("-" * len(header))

    for wname, call in workloads:
        times = [best_of(args.repeat, lambda m=mod: call(m))
                 for _, mod in backends]
        line = f"{wname:<{name_w}}"
        for t in times:
            line += f"  {t * 1e3:>14.3f}"
        if len(times) == 2:
            line += f"  {times[0] / times[1]:>7.2f}x"
        print(line)


if __name__ == "__main__":
    main()
