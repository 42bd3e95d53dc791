#!/usr/bin/env python3
"""Benchmark the event-detecting RK4 kernel: numba JIT vs the plain twin.

The plain lane is measured in a subprocess with SYNCPATHS_DISABLE_NUMBA=1,
i.e. through the exact switch users have; both lanes run the same function
source, and their event outputs are compared bit-for-bit before timing is
reported.  Run from the repo root:

    python benchmarks/bench_kernels.py
"""

import json
import os
import subprocess
import sys
import time

import numpy as np


def make_problem(n: int):
    rng = np.random.default_rng(n)
    u = np.sort(rng.random(n))
    x0 = 0.02 * (u - u.mean())
    pairs = [(a, b) for a in range(n) for b in range(a + 1, n)]
    pu = np.array([p[0] for p in pairs], dtype=np.int64)
    pv = np.array([p[1] for p in pairs], dtype=np.int64)
    eps = 1e-3
    active0 = np.abs(x0[pu] - x0[pv]) <= eps
    step = min(1e-3, eps / (10.0 * n))
    return (x0, 1.0, eps, 0, step, 1e-10, 10_000_000, pu, pv, active0)


def run_lane(n: int, repeats: int) -> dict:
    from syncpaths._kernels import NUMBA_ENABLED, integrate_events

    args = make_problem(n)
    integrate_events(*args)  # warm-up / compile
    best = min(
        _timed(integrate_events, args) for _ in range(repeats)
    )
    ev_t, ev_p, n_ev, status, _, _ = integrate_events(*args)
    return {
        "jit": NUMBA_ENABLED,
        "n": n,
        "seconds": best,
        "events": n_ev,
        "status": int(status),
        "times": [repr(float(t)) for t in ev_t[:n_ev]],
        "pairs": [int(p) for p in ev_p[:n_ev]],
    }


def _timed(fn, args) -> float:
    t0 = time.perf_counter()
    fn(*args)
    return time.perf_counter() - t0


def main() -> None:
    if len(sys.argv) > 1 and sys.argv[1] == "--lane":
        print(json.dumps(run_lane(int(sys.argv[2]), int(sys.argv[3]))))
        return

    print(f"{'n':>3} {'events':>6} {'python (s)':>11} {'numba (s)':>10} {'speedup':>8}")
    for n in (4, 6, 8):
        env = dict(os.environ)
        env["SYNCPATHS_DISABLE_NUMBA"] = "1"
        plain = json.loads(
            subprocess.check_output(
                [sys.executable, __file__, "--lane", str(n), "1"], env=env
            )
        )
        env.pop("SYNCPATHS_DISABLE_NUMBA")
        jitted = json.loads(
            subprocess.check_output(
                [sys.executable, __file__, "--lane", str(n), "5"], env=env
            )
        )
        assert not plain["jit"] and jitted["jit"]
        same = (
            plain["times"] == jitted["times"]
            and plain["pairs"] == jitted["pairs"]
            and plain["status"] == jitted["status"]
        )
        marker = "" if same else "  OUTPUT MISMATCH"
        print(
            f"{n:>3} {jitted['events']:>6} {plain['seconds']:>11.3f} "
            f"{jitted['seconds']:>10.4f} {plain['seconds'] / jitted['seconds']:>7.0f}x"
            f"{marker}"
        )


if __name__ == "__main__":
    main()
