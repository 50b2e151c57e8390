"""Timing comparison of the batch kernel backends.

Runs the gamma-factor and Einstein-addition batch kernels under each
available backend in a fresh subprocess (the backend is chosen at
import time from GYROBALL_BACKEND) and prints best-of-N wall times.

Usage: python benchmarks/bench_kernels.py [--n 2000000] [--repeat 5]
"""

import argparse
import json
import os
import subprocess
import sys
import time


def run_child(n, repeat):
    import numpy as np

    from gyroball import _kernels
    from gyroball.einstein import ModelParams

    p = ModelParams()
    rng = np.random.default_rng(7)
    theta = rng.uniform(0.0, 2.0 * np.pi, size=(2, n))
    r = 0.95 * np.sqrt(rng.uniform(0.0, 1.0, size=(2, n)))
    U = np.stack([r[0] * np.cos(theta[0]), r[0] * np.sin(theta[0])], axis=1)
    V = np.stack([r[1] * np.cos(theta[1]), r[1] * np.sin(theta[1])], axis=1)

    # warm up once so jit compilation is not timed
    _kernels.gamma_batch(U[:100], p.s)
    _kernels.add_batch(U[:100], V[:100], p.s)

    def best(fn):
        times = []
        for _ in range(repeat):
            t0 = time.perf_counter()
            fn()
            times.append(time.perf_counter() - t0)
        return min(times)

    out = {
        "backend": _kernels.BACKEND,
        "n": n,
        "gamma_s": best(lambda: _kernels.gamma_batch(U, p.s)),
        "add_s": best(lambda: _kernels.add_batch(U, V, p.s)),
    }
    print(json.dumps(out))


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--n", type=int, default=2_000_000)
    ap.add_argument("--repeat", type=int, default=5)
    ap.add_argument("--child", action="store_true", help=argparse.SUPPRESS)
    args = ap.parse_args()

    if args.child:
        run_child(args.n, args.repeat)
        return

    backends = ["numpy"]
    try:
        import numba  # noqa: F401

        backends.append("numba")
    except ImportError:
        print("numba not installed; benchmarking the numpy backend only")

    rows = []
    for backend in backends:
        env = dict(os.environ, GYROBALL_BACKEND=backend)
        proc = subprocess.run(
            [sys.executable, os.path.abspath(__file__), "--child",
             "--n", str(args.n), "--repeat", str(args.repeat)],
            env=env, capture_output=True, text=True, check=True,
        )
        rows.append(json.loads(proc.stdout.strip().splitlines()[-1]))

    print("%-8s %12s %14s %14s" % ("backend", "n", "gamma [ms]", "add [ms]"))
    for row in rows:
        print(
            "%-8s %12d %14.2f %14.2f"
            % (row["backend"], row["n"], row["gamma_s"] * 1e3, row["add_s"] * 1e3)
        )
    if len(rows) == 2:
        print(
            "speedup: gamma %.2fx, add %.2fx"
            % (rows[0]["gamma_s"] / rows[1]["gamma_s"], rows[0]["add_s"] / rows[1]["add_s"])
        )


if __name__ == "__main__":
    main()
