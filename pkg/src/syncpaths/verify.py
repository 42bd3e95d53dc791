"""Verification harness: every release gate as a named, reportable check.

``run_verify`` executes the checks, prints one pass/fail line each, and
returns a machine-readable report.  Reports carry no timing data so that
repeated runs are byte-identical.  Two checks are expected to fail and are
annotated as documented discrepancies of the bundled reference material:
the bipartite 20-row ordering table (exact enumeration yields 24 rows and
an empty balanced family at n = 2) and the asymptotic location of the
complete-family length-distribution peak (the exact argmax ratio rises with
n instead of settling near 0.632).
"""

from __future__ import annotations

import json
import math
import time
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable

import numpy as np

from . import reference
from .codes import catalan, narayana_count, enumerate_phi_n, enumerate_phi_nn, encode_kn, encode_knn
from .diagram import build_diagram, count_admissible_paths, export_dot
from .distributions import f_kn, f_knn, sloane_prefix_check, summary
from .errors import NotTypicalError
from .flows import (
    KuramotoParams,
    cross_party_crossing_times,
    kuramoto_sequence,
    laplacian_trajectory_kn,
    laplacian_trajectory_knn,
    switching_times_kn,
)
from .graphs import Configuration, bipartite, complete, laplacian
from .realizability import (
    GOLOMB_TABLE,
    count_realizable_paths_kn,
    enumerate_realizable_orderings_kn,
    enumerate_realizable_orderings_knn,
    feasible,
    golomb_bounds,
    path_to_ordering_kn,
)
from .witness import witness_kn, witness_knn

SEED = 20260808


@dataclass
class CheckResult:
    name: str
    passed: bool
    detail: str


def _deadline(budget: float, elapsed: float, detail: str) -> tuple[bool, str]:
    if elapsed > budget:
        return False, f"{detail}; exceeded {budget:.0f}s budget"
    return True, detail


# ---------------------------------------------------------------------------
# individual checks
# ---------------------------------------------------------------------------

def check_golomb_counts(quick: bool) -> CheckResult:
    t0 = time.perf_counter()
    got = [count_realizable_paths_kn(n) for n in range(1, 6)]
    want = [GOLOMB_TABLE[n] for n in range(1, 6)]
    if got != want:
        return CheckResult("golomb_counts", False, f"{got} != {want}")
    ok, detail = _deadline(60.0, time.perf_counter() - t0, f"n=1..5 -> {got}")
    return CheckResult("golomb_counts", ok, detail)


def check_golomb_stretch(quick: bool) -> CheckResult:
    if quick:
        return CheckResult("golomb_stretch_n6", True, "skipped in quick mode")
    got = count_realizable_paths_kn(6)
    return CheckResult(
        "golomb_stretch_n6", got == GOLOMB_TABLE[6], f"n=6 -> {got}"
    )


def check_kn4_orderings(quick: bool) -> CheckResult:
    got = set(enumerate_realizable_orderings_kn(4))
    ok = got == set(reference.KN4_ORDERINGS)
    counterexample = path_to_ordering_kn((1, 2, 3, 4), (1, 3, 2, 2, 1, 1))
    ok = ok and feasible(counterexample) is None
    return CheckResult(
        "kn4_ordering_table",
        ok,
        f"{len(got)} orderings; contradictory jump path infeasible",
    )


def check_admissible_counts(quick: bool) -> CheckResult:
    d4 = build_diagram(complete(4))
    d3 = build_diagram(complete(3))
    a4 = count_admissible_paths(d4, (1, 2, 3, 4))
    a3 = count_admissible_paths(d3, (1, 2, 3))
    return CheckResult(
        "admissible_counts", a4 == 16 and a3 == 2, f"K4 -> {a4}, K3 -> {a3}"
    )


def check_kn_distribution_rows(quick: bool) -> CheckResult:
    t0 = time.perf_counter()
    top = 5 if quick else 8
    rows_ok = all(
        f_kn(n).counts == reference.KN_LENGTH_ROWS[n] for n in range(2, top + 1)
    )
    sums_ok = all(f_kn(n).total() == catalan(n) for n in range(2, 13))
    ok, detail = _deadline(
        5.0, time.perf_counter() - t0, f"rows 2..{top} exact; sums = Catalan to 12"
    )
    return CheckResult("kn_length_rows", rows_ok and sums_ok and ok, detail)


def check_knn_distribution_rows(quick: bool) -> CheckResult:
    t0 = time.perf_counter()
    top = 5 if quick else 8
    rows_ok = all(
        f_knn(n).counts == reference.KNN_LENGTH_ROWS[n] for n in range(2, top + 1)
    )
    sums_ok = all(f_knn(n).total() == narayana_count(n) for n in range(1, 11))
    ends_ok = all(
        f_knn(n).counts[-1] == math.comb(2 * n, n) for n in range(1, 11)
    )
    sloane_ok = all(sloane_prefix_check(n) for n in range(1, 9))
    ok, detail = _deadline(
        60.0,
        time.perf_counter() - t0,
        f"rows 2..{top} exact; sums, endpoints, partition-pair prefixes",
    )
    return CheckResult(
        "knn_length_rows", rows_ok and sums_ok and ends_ok and sloane_ok and ok, detail
    )


def check_knn_ordering_table(quick: bool) -> CheckResult:
    rows = set(enumerate_realizable_orderings_knn(2, balanced=False))
    balanced = enumerate_realizable_orderings_knn(2, balanced=True)
    table = set(reference.KNN2_ORDERING_TABLE)
    ok = rows == table and len(balanced) == 16
    extra = len(rows - table)
    missing = len(table - rows)
    return CheckResult(
        "knn2_ordering_table",
        ok,
        (
            f"documented discrepancy: exact enumeration yields {len(rows)} rows "
            f"({extra} beyond the 20-row table, {missing} table rows infeasible); "
            f"balanced-exact yields {len(balanced)} (ties are forced at n=2)"
        ),
    )


def check_diagram_levels(quick: bool) -> CheckResult:
    ok = True
    for n in range(2, 7):
        sizes = build_diagram(complete(n)).level_sizes()
        ok = ok and tuple(reversed(sizes)) == f_kn(n).counts
    for n in range(1, 5):
        sizes = build_diagram(bipartite(n)).level_sizes()
        ok = ok and tuple(reversed(sizes)) == f_knn(n).counts
    return CheckResult(
        "diagram_level_consistency", ok, "level sizes match distributions"
    )


def check_witness_roundtrips(quick: bool) -> CheckResult:
    t0 = time.perf_counter()
    eps_set = (Fraction(1), Fraction(1, 100))
    count = 0
    ok = True
    for n in range(1, 7):
        for code in enumerate_phi_n(n):
            for eps in eps_set:
                if encode_kn(witness_kn(code, eps), eps) != code:
                    ok = False
                count += 1
    for n in range(1, 5):
        for code in enumerate_phi_nn(n):
            for eps in eps_set:
                if encode_knn(witness_knn(code, eps), eps) != code:
                    ok = False
                count += 1
    passed, detail = _deadline(
        60.0, time.perf_counter() - t0, f"{count} roundtrips exact"
    )
    return CheckResult("witness_roundtrips", ok and passed, detail)


def check_eps_invariance(quick: bool) -> CheckResult:
    rng = np.random.default_rng(SEED)
    eps, eps2 = 0.1, 0.003
    trials = 0
    ok = True
    for n in range(3, 7):
        done = 0
        while done < 100:
            x = np.sort(rng.random(n))
            try:
                a = switching_times_kn(Configuration(complete(n), tuple(x)), eps)
                b = switching_times_kn(
                    Configuration(complete(n), tuple(x * (eps2 / eps))), eps2
                )
            except NotTypicalError:
                continue
            ok = ok and a.edge_order() == b.edge_order()
            done += 1
            trials += 1
    return CheckResult("eps_invariance", ok, f"{trials} scaled pairs, orders equal")


def check_flow_exactness(quick: bool) -> CheckResult:
    rng = np.random.default_rng(SEED + 1)
    worst = 0.0
    step = 1e-3
    for n in range(2, 9):
        for spec, closed in (
            (complete(n), laplacian_trajectory_kn),
            (bipartite(n), laplacian_trajectory_knn),
        ):
            size = spec.vertex_count
            x = np.sort(rng.random(size))
            if spec.family.value == "knn":
                x = np.concatenate([np.sort(x[: n]), np.sort(x[n:])])
            cfg = Configuration(spec, tuple(x))
            mat = laplacian(spec).astype(np.float64)
            state = cfg.as_array()
            t = 0.0
            for _ in range(int(round(5.0 / step))):
                k1 = mat @ state
                k2 = mat @ (state + 0.5 * step * k1)
                k3 = mat @ (state + 0.5 * step * k2)
                k4 = mat @ (state + step * k3)
                state = state + (step / 6.0) * (k1 + 2 * k2 + 2 * k3 + k4)
                t += step
                exact = closed(cfg, t).as_array()
                worst = max(worst, float(np.max(np.abs(state - exact))))
    ok = worst < 1e-8

    # crossing times: exact quadratic roots vs bisection on the closed form
    worst_t = 0.0
    for trial in range(20):
        n = int(rng.integers(2, 5))
        x = rng.random(2 * n) * 3.0
        cfg = Configuration(
            bipartite(n), tuple(np.concatenate([np.sort(x[:n]), np.sort(x[n:])]))
        )
        eps = 0.25
        for row in range(1, n + 1):
            for col in range(1, n + 1):
                got = cross_party_crossing_times(cfg, eps, row, col)
                ref = _bisect_crossings(cfg, eps, row, col)
                if len(got) != len(ref):
                    return CheckResult(
                        "flow_exactness",
                        False,
                        f"crossing count mismatch: {got} vs {ref}",
                    )
                for a, b in zip(got, ref):
                    worst_t = max(worst_t, abs(a - b))
    ok = ok and worst_t < 1e-10
    return CheckResult(
        "flow_exactness",
        ok,
        f"rk4 sup error {worst:.2e}; crossing-time deviation {worst_t:.2e}",
    )


def _bisect_crossings(cfg: Configuration, eps: float, row: int, col: int):
    """Crossing times located by sign scan + bisection on the closed form."""
    n = cfg.spec.n
    d0 = float(cfg[row]) - float(cfg[n + col])
    m1, m2 = cfg.party_means()
    beta = float(m1 - m2)

    def gap(t):
        u = np.exp(-n * t)
        return np.abs(u * (d0 - (1.0 - u) * beta)) - eps

    ts = np.linspace(0.0, 12.0, 48001)
    vals = gap(ts)
    out = []
    for i in range(len(ts) - 1):
        if vals[i] * vals[i + 1] < 0:
            lo, hi = float(ts[i]), float(ts[i + 1])
            flo = gap(lo)
            for _ in range(80):
                mid = 0.5 * (lo + hi)
                if flo * gap(mid) <= 0:
                    hi = mid
                else:
                    lo = mid
                    flo = gap(lo)
            out.append(0.5 * (lo + hi))
    return [t for t in out if t > 1e-9]


def check_kuramoto_consistency(quick: bool) -> CheckResult:
    rng = np.random.default_rng(SEED + 2)
    eps = 1e-3
    params = KuramotoParams(sigma=1.0)
    site_paths = {
        tuple(n for n, _k in order) for order in enumerate_realizable_orderings_kn(4)
    }
    samples = 50 if quick else 200
    matches = 0
    mismatch_gaps = []
    in_diagram = True
    done = 0
    while done < samples:
        u = np.sort(rng.random(4))
        x = 0.01 * (u - u.mean())
        cfg = Configuration(complete(4), tuple(x))
        try:
            lin = switching_times_kn(cfg, eps)
        except NotTypicalError:
            continue
        if len(lin.events) != 6:
            continue  # initial code must be empty so paths start at the identity
        kur = kuramoto_sequence(cfg, params, eps)
        done += 1
        if kur.jump_sites() not in site_paths:
            in_diagram = False
        if kur.edge_order() == lin.edge_order():
            matches += 1
        else:
            mismatch_gaps.append(_reorder_gap(cfg, kur.edge_order(), lin.edge_order()))
    gaps_ok = all(g < 1e-6 for g in mismatch_gaps)
    need = math.ceil(samples * 195 / 200)
    ok = in_diagram and matches >= need and gaps_ok
    return CheckResult(
        "kuramoto_consistency",
        ok,
        (
            f"{matches}/{samples} match the linear path; all observed paths realizable; "
            f"{len(mismatch_gaps)} near-tie mismatches"
        ),
    )


def _reorder_gap(cfg: Configuration, order_a, order_b) -> float:
    """Smallest increment gap among edge pairs ranked differently by the two orders."""
    vals = cfg.as_array()
    inc = {e: float(vals[e[1] - 1] - vals[e[0] - 1]) for e in order_a}
    rank_a = {e: i for i, e in enumerate(order_a)}
    rank_b = {e: i for i, e in enumerate(order_b)}
    worst = math.inf
    for e1 in order_a:
        for e2 in order_a:
            if e1 < e2 and (rank_a[e1] - rank_a[e2]) * (rank_b[e1] - rank_b[e2]) < 0:
                worst = min(worst, abs(inc[e1] - inc[e2]))
    return worst


def check_bounds(quick: bool) -> CheckResult:
    # The factorial lower bound is tight at n = 3 (both sides equal 2, as the
    # "thrall(3) is tight" clause implies), strict from n = 4 on.
    ok = True
    for n in (3, 4, 5):
        g = count_realizable_paths_kn(n)
        b = golomb_bounds(n)
        lower_ok = b.lower <= g if n == 3 else b.lower < g
        ok = ok and lower_ok and g <= b.upper_thrall <= b.upper_factorial
    b3, b4 = golomb_bounds(3), golomb_bounds(4)
    ok = ok and b3.upper_thrall == 2 and b4.upper_thrall == 12
    return CheckResult(
        "golomb_bounds",
        ok,
        "gap-order bound <= count <= thrall <= pair-order bound (equality at n=3)",
    )


def check_asymptotic_shape(quick: bool) -> CheckResult:
    dist8 = f_knn(8)
    s8 = summary(dist8)
    exact_mean = Fraction(
        sum(l * c for l, c in enumerate(dist8.counts)), dist8.total()
    )
    knn_ok = s8.modes == (51,) and s8.mean == exact_mean
    if quick:
        return CheckResult(
            "asymptotic_shape",
            knn_ok,
            "bipartite n=8 exact (complete-family n=60 window skipped in quick mode)",
        )
    s60 = summary(f_kn(60))
    mode_ratio = float(s60.mode_ratios[0])
    mean_ratio = float(s60.mean_ratio)
    kn_ok = 0.60 <= mode_ratio <= 0.66 and 0.50 <= mean_ratio <= 0.55
    return CheckResult(
        "asymptotic_shape",
        knn_ok and kn_ok,
        (
            f"bipartite n=8 exact (argmax 51); documented discrepancy for the "
            f"complete family: exact n=60 argmax ratio {mode_ratio:.4f} and mean "
            f"ratio {mean_ratio:.4f} lie outside the expected [0.60,0.66]/[0.50,0.55]"
        ),
    )


def check_determinism(quick: bool) -> CheckResult:
    d = build_diagram(complete(4))
    ok = export_dot(d) == export_dot(build_diagram(complete(4)))
    rng1 = np.random.default_rng(SEED)
    rng2 = np.random.default_rng(SEED)
    ok = ok and np.array_equal(rng1.random(16), rng2.random(16))
    x = tuple(np.sort(np.random.default_rng(7).random(4)))
    s1 = switching_times_kn(Configuration(complete(4), x), 0.01).to_json()
    s2 = switching_times_kn(Configuration(complete(4), x), 0.01).to_json()
    ok = ok and s1 == s2
    return CheckResult("determinism", ok, "exports and seeded runs byte-identical")


CHECKS: tuple[tuple[str, Callable[[bool], CheckResult]], ...] = (
    ("golomb_counts", check_golomb_counts),
    ("golomb_stretch_n6", check_golomb_stretch),
    ("kn4_ordering_table", check_kn4_orderings),
    ("admissible_counts", check_admissible_counts),
    ("kn_length_rows", check_kn_distribution_rows),
    ("knn_length_rows", check_knn_distribution_rows),
    ("knn2_ordering_table", check_knn_ordering_table),
    ("diagram_level_consistency", check_diagram_levels),
    ("witness_roundtrips", check_witness_roundtrips),
    ("eps_invariance", check_eps_invariance),
    ("flow_exactness", check_flow_exactness),
    ("kuramoto_consistency", check_kuramoto_consistency),
    ("golomb_bounds", check_bounds),
    ("asymptotic_shape", check_asymptotic_shape),
    ("determinism", check_determinism),
)

# Checks that encode reference-table values refuted by exact computation;
# they stay in the suite and are reported as failures with an explanation.
DOCUMENTED_DISCREPANCIES = ("knn2_ordering_table", "asymptotic_shape")


def run_verify(quick: bool = False, echo=print) -> dict:
    results = []
    for name, fn in CHECKS:
        t0 = time.perf_counter()
        try:
            res = fn(quick)
        except Exception as exc:  # a crashed check is a failed check
            res = CheckResult(name, False, f"raised {type(exc).__name__}: {exc}")
        elapsed = time.perf_counter() - t0
        status = "PASS" if res.passed else "FAIL"
        echo(f"{status} {res.name}: {res.detail} [{elapsed:.1f}s]")
        results.append(res)
    report = {
        "checks": [
            {"name": r.name, "passed": r.passed, "detail": r.detail} for r in results
        ],
        "passed": all(r.passed for r in results),
        "documented_discrepancies": [
            r.name
            for r in results
            if not r.passed and r.name in DOCUMENTED_DISCREPANCIES
        ],
    }
    return report


def report_to_json(report: dict) -> str:
    return json.dumps(report, indent=2, sort_keys=True) + "\n"
