"""Hot numeric kernel: fixed-step RK4 with threshold-crossing detection.

The integrator below dominates the runtime of every nonlinear-flow
computation, so it is compiled with numba when available.  Setting
``SYNCPATHS_DISABLE_NUMBA=1`` (or running without numba installed) selects
the plain-Python/numpy twin: the very same function objects, undecorated,
so both paths execute identical floating-point arithmetic.

Status codes returned by ``integrate_events``:
    0  subnetwork completed
    1  horizon exhausted before completion
    2  two crossings closer than the bisection tolerance (not typical)
    3  a synchronized pair desynchronized (outside the monotone regime)
"""

from __future__ import annotations

import math
import os

import numpy as np

try:
    import numba
except ImportError:  # pragma: no cover - numba is a declared dependency
    numba = None

NUMBA_ENABLED = numba is not None and os.environ.get(
    "SYNCPATHS_DISABLE_NUMBA", ""
).lower() not in ("1", "true", "yes")

if NUMBA_ENABLED:
    _jit = numba.njit(cache=True)
else:
    def _jit(func):
        return func


@_jit
def kuramoto_rhs(x, sigma, n_party, out):
    """Phase velocities; n_party == 0 means all-to-all, else bipartite parties."""
    n = x.shape[0]
    if n_party == 0:
        for v in range(n):
            acc = 0.0
            for u in range(n):
                acc += math.sin(x[u] - x[v])
            out[v] = sigma * acc
    else:
        for v in range(n):
            acc = 0.0
            if v < n_party:
                for u in range(n_party, n):
                    acc += math.sin(x[u] - x[v])
            else:
                for u in range(n_party):
                    acc += math.sin(x[u] - x[v])
            out[v] = sigma * acc


@_jit
def rk4_step(x, sigma, n_party, h, out, k1, k2, k3, k4, xs):
    """One classical RK4 step of size h from state x into out."""
    n = x.shape[0]
    kuramoto_rhs(x, sigma, n_party, k1)
    for i in range(n):
        xs[i] = x[i] + 0.5 * h * k1[i]
    kuramoto_rhs(xs, sigma, n_party, k2)
    for i in range(n):
        xs[i] = x[i] + 0.5 * h * k2[i]
    kuramoto_rhs(xs, sigma, n_party, k3)
    for i in range(n):
        xs[i] = x[i] + h * k3[i]
    kuramoto_rhs(xs, sigma, n_party, k4)
    for i in range(n):
        out[i] = x[i] + (h / 6.0) * (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i])


@_jit
def _pair_gap(x, u, v, eps):
    return abs(x[u] - x[v]) - eps


@_jit
def integrate_events(x0, sigma, eps, n_party, step, crossing_tol, max_steps, pu, pv, active0):
    """Integrate until every monitored pair is within eps.

    pu/pv are 0-based endpoint arrays of the monitored pairs; active0 marks
    pairs already within eps at t=0.  Crossing times are refined by
    bisection (re-stepping from the pre-step state) to crossing_tol.

    Returns (event_times, event_pairs, n_events, status, x_final, t_final).
    """
    n = x0.shape[0]
    npairs = pu.shape[0]
    x = x0.copy()
    xnew = np.empty(n)
    xb = np.empty(n)
    k1 = np.empty(n)
    k2 = np.empty(n)
    k3 = np.empty(n)
    k4 = np.empty(n)
    xs = np.empty(n)
    active = active0.copy()

    ev_t = np.empty(npairs, dtype=np.float64)
    ev_p = np.empty(npairs, dtype=np.int64)
    n_ev = 0
    remaining = 0
    for i in range(npairs):
        if not active[i]:
            remaining += 1

    t = 0.0
    if remaining == 0:
        return ev_t, ev_p, 0, 0, x, t

    cross_t = np.empty(npairs, dtype=np.float64)
    cross_p = np.empty(npairs, dtype=np.int64)

    for _ in range(max_steps):
        rk4_step(x, sigma, n_party, step, xnew, k1, k2, k3, k4, xs)

        n_cross = 0
        for i in range(npairs):
            if active[i]:
                if _pair_gap(xnew, pu[i], pv[i], eps) > 0.0:
                    return ev_t, ev_p, n_ev, 3, x, t
            elif _pair_gap(xnew, pu[i], pv[i], eps) <= 0.0:
                # bisect tau in (0, step]: the crossing of |x_u - x_v| = eps
                lo = 0.0
                hi = step
                while hi - lo > crossing_tol:
                    mid = 0.5 * (lo + hi)
                    rk4_step(x, sigma, n_party, mid, xb, k1, k2, k3, k4, xs)
                    if _pair_gap(xb, pu[i], pv[i], eps) > 0.0:
                        lo = mid
                    else:
                        hi = mid
                cross_t[n_cross] = t + hi
                cross_p[n_cross] = i
                n_cross += 1

        if n_cross > 0:
            # insertion sort by crossing time (rarely more than a couple)
            for a in range(1, n_cross):
                tt = cross_t[a]
                pp = cross_p[a]
                b = a - 1
                while b >= 0 and cross_t[b] > tt:
                    cross_t[b + 1] = cross_t[b]
                    cross_p[b + 1] = cross_p[b]
                    b -= 1
                cross_t[b + 1] = tt
                cross_p[b + 1] = pp
            for a in range(1, n_cross):
                if cross_t[a] - cross_t[a - 1] < crossing_tol:
                    return ev_t, ev_p, n_ev, 2, x, t
            for a in range(n_cross):
                ev_t[n_ev] = cross_t[a]
                ev_p[n_ev] = cross_p[a]
                n_ev += 1
                active[cross_p[a]] = True
                remaining -= 1

        for i in range(n):
            x[i] = xnew[i]
        t += step
        if remaining == 0:
            return ev_t, ev_p, n_ev, 0, x, ev_t[n_ev - 1]

    return ev_t, ev_p, n_ev, 1, x, t
