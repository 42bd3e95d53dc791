"""Realizability of event orderings via exact rational feasibility.

An admissible path prescribes a strict order on pairwise increments (complete
family) or on signed cross-difference magnitudes (bipartite family).  Whether
some configuration actually produces that order is a linear feasibility
question over an open homogeneous cone; strict inequalities are normalized to
slack-1 form and decided exactly (see ``ratlp``), so every "feasible" verdict
carries an exact rational witness.

Counting feasible full orders for the complete graph counts combinatorial
classes of Golomb rulers: depth-first extension "which increment is next
smallest", pruned by interval containment (a nested increment is forced
smaller) and by exact feasibility of each prefix.
"""

from __future__ import annotations

import math
import os
import warnings
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Iterable, NamedTuple, Sequence

from .codes import KnCode, KnnCode, validate_kn, validate_knn
from .errors import NotTypicalError, SizeGuardError, SyncPathsError
from .graphs import Configuration, Family, bipartite, complete

# Literature values for the number of Golomb-ruler classes (OEIS A237749).
GOLOMB_TABLE = {
    1: 1,
    2: 1,
    3: 2,
    4: 10,
    5: 114,
    6: 2608,
    7: 107498,
    8: 7325650,
    9: 771505180,
}

KnLabel = tuple[int, int]          # (n, k): increment x_{n+k} - x_n
KnnLabel = tuple[int, int, int]    # (n, m, q): |x_{N+m} - x_n| with sign q


@dataclass(frozen=True)
class IncrementOrder:
    """Labels listed in strictly increasing magnitude."""

    family: Family
    n: int
    labels: tuple[KnLabel, ...] | tuple[KnnLabel, ...]

    def to_json(self) -> str:
        import json

        return json.dumps([list(lab) for lab in self.labels])

    def __post_init__(self) -> None:
        if len(set(self.labels)) != len(self.labels):
            raise ValueError("labels must be pairwise distinct")
        limit = self.n * (self.n - 1) // 2 if self.family is Family.COMPLETE else self.n**2
        if len(self.labels) > limit:
            raise ValueError("too many labels for the family")
        for lab in self.labels:
            if self.family is Family.COMPLETE:
                n, k = lab
                if not (1 <= n and 1 <= k and n + k <= self.n):
                    raise ValueError(f"label out of range: {lab}")
            else:
                n, m, q = lab
                if not (1 <= n <= self.n and 1 <= m <= self.n and q in (-1, 1)):
                    raise ValueError(f"label out of range: {lab}")


# ---------------------------------------------------------------------------
# interval chains over gap variables (shared by both families)
# ---------------------------------------------------------------------------

class _ChainSpace(NamedTuple):
    """Feasibility context: items are windows over strict (slack-1) gaps."""

    windows: tuple[tuple[int, int], ...]   # half-open gap-index windows (lo, hi)
    n_gaps: int
    eq_rows: tuple[tuple[tuple[Fraction, ...], Fraction], ...]


def _window_row(space: _ChainSpace, a: int, b: int):
    """Coefficients/rhs of magnitude(b) - magnitude(a) >= 1 in shifted vars."""
    coeffs = [Fraction(0)] * space.n_gaps
    lo, hi = space.windows[b]
    for i in range(lo, hi):
        coeffs[i] += 1
    if a >= 0:
        lo, hi = space.windows[a]
        for i in range(lo, hi):
            coeffs[i] -= 1
        base = (space.windows[b][1] - space.windows[b][0]) - (hi - lo)
    else:
        base = space.windows[b][1] - space.windows[b][0]
    return coeffs, Fraction(1 - base)


def _chain_feasible(space: _ChainSpace, chain: Sequence[int], tails: Iterable[int] = ()):
    """Witness gaps for: chain strictly increasing, every tail above the last."""
    from .ratlp import solve_feasibility

    ge = [_window_row(space, a, b) for a, b in zip(chain, chain[1:])]
    if chain:
        last = chain[-1]
        ge.extend(_window_row(space, last, j) for j in tails)
    y = solve_feasibility(space.n_gaps, ge_rows=ge, eq_rows=space.eq_rows)
    if y is None:
        return None
    return tuple(v + 1 for v in y)


def _magnitude(space: _ChainSpace, gaps: Sequence[Fraction], item: int) -> Fraction:
    lo, hi = space.windows[item]
    return sum(gaps[lo:hi], Fraction(0))


def _containment_masks(windows: Sequence[tuple[int, int]]) -> list[int]:
    """mask[i] = bitset of items whose window is strictly inside window i."""
    masks = [0] * len(windows)
    for i, (lo_i, hi_i) in enumerate(windows):
        for j, (lo_j, hi_j) in enumerate(windows):
            if i != j and lo_i <= lo_j and hi_j <= hi_i:
                masks[i] |= 1 << j
    return masks


def _chain_dfs(space: _ChainSpace, on_complete, root_witness=None, prefix: tuple[int, ...] = ()) -> None:
    """Enumerate feasible full chains extending prefix; calls on_complete per chain.

    A node's witness is reused for any extension it already satisfies, so the
    exact LP runs only when the next-smallest choice disagrees with it.
    """
    n_items = len(space.windows)
    masks = _containment_masks(space.windows)
    remaining0 = (1 << n_items) - 1
    for c in prefix:
        remaining0 &= ~(1 << c)

    if root_witness is None or prefix:
        tails = [j for j in range(n_items) if remaining0 & (1 << j)]
        root_witness = _chain_feasible(space, list(prefix), tails)
        if root_witness is None:
            return

    chain: list[int] = list(prefix)

    def recurse(remaining: int, witness) -> None:
        if remaining == 0:
            on_complete(tuple(chain))
            return
        last = chain[-1] if chain else -1
        for c in range(n_items):
            bit = 1 << c
            if not remaining & bit or masks[c] & remaining & ~bit:
                continue
            rest = remaining & ~bit
            w = witness
            if w is not None:
                mc = _magnitude(space, w, c)
                ok = last < 0 or mc >= _magnitude(space, w, last) + 1
                if ok:
                    for j in range(n_items):
                        if rest & (1 << j) and _magnitude(space, w, j) < mc + 1:
                            ok = False
                            break
                if not ok:
                    w = None
            if w is None:
                tails = [j for j in range(n_items) if rest & (1 << j)]
                w = _chain_feasible(space, chain + [c], tails)
                if w is None:
                    continue
            chain.append(c)
            recurse(rest, w)
            chain.pop()

    recurse(remaining0, root_witness)


# ---------------------------------------------------------------------------
# complete graph: orderings, Golomb counting
# ---------------------------------------------------------------------------

def kn_labels(n: int) -> list[KnLabel]:
    return [(a, k) for a in range(1, n) for k in range(1, n - a + 1)]


def _kn_space(n: int) -> tuple[_ChainSpace, list[KnLabel]]:
    labels = kn_labels(n)
    windows = tuple((a - 1, a - 1 + k) for a, k in labels)
    return _ChainSpace(windows, n - 1, ()), labels


def _powers_witness(n_gaps: int) -> tuple[Fraction, ...]:
    # distinct window sums for free: consecutive powers of two
    return tuple(Fraction(2**i) for i in range(n_gaps))


def enumerate_realizable_orderings_kn(n: int) -> list[tuple[KnLabel, ...]]:
    """All feasible strict orders on the pairwise increments, deterministic order."""
    if n < 1:
        raise ValueError("n must be >= 1")
    if n == 1:
        return [()]
    space, labels = _kn_space(n)
    out: list[tuple[KnLabel, ...]] = []
    _chain_dfs(
        space,
        lambda chain: out.append(tuple(labels[i] for i in chain)),
        root_witness=_powers_witness(space.n_gaps),
    )
    return out


def _count_branch(args) -> int:
    n, prefix = args
    space, _ = _kn_space(n)
    count = 0

    def bump(_chain) -> None:
        nonlocal count
        count += 1

    _chain_dfs(space, bump, root_witness=_powers_witness(space.n_gaps), prefix=prefix)
    return count


COUNT_LIMIT = 9  # the table above ends here; the search tree beyond is astronomical

_count_cache: dict[int, int] = {}


def count_realizable_paths_kn(n: int, jobs: int | None = None, limit: int = COUNT_LIMIT) -> int:
    """Number of feasible full increment orders = number of Golomb-ruler classes."""
    if n < 1:
        raise ValueError("n must be >= 1")
    if n > limit:
        raise SizeGuardError(f"counting is guarded to n <= {limit}")
    if n in _count_cache:
        return _count_cache[n]
    if n <= 2:
        return 1
    if jobs is None:
        jobs = int(os.environ.get("SYNCPATHS_THREADS", str(os.cpu_count() or 1)))
    space, _ = _kn_space(n)
    masks = _containment_masks(space.windows)
    n_items = len(space.windows)
    full = (1 << n_items) - 1

    if jobs <= 1 or n <= 4:
        count = _count_branch((n, ()))
    else:
        # split the search at depth two; workers feasibility-check their prefix
        prefixes = []
        for c1 in range(n_items):
            if masks[c1] & full & ~(1 << c1):
                continue
            rem = full & ~(1 << c1)
            for c2 in range(n_items):
                bit = 1 << c2
                if not rem & bit or masks[c2] & rem & ~bit:
                    continue
                prefixes.append((n, (c1, c2)))
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            count = sum(pool.map(_count_branch, prefixes))
    _count_cache[n] = count
    return count


def golomb_reference(n: int) -> int:
    """Golomb class count: literature table where available, else computed."""
    if n in GOLOMB_TABLE:
        return GOLOMB_TABLE[n]
    return count_realizable_paths_kn(n)


class GolombBounds(NamedTuple):
    lower: int            # (n-1)!
    upper_factorial: int  # C(n,2)!
    upper_thrall: int


def golomb_bounds(n: int) -> GolombBounds:
    """Exact bounds on the Golomb class count."""
    if n < 2:
        raise ValueError("n must be >= 2")
    lower = math.factorial(n - 1)
    upper_factorial = math.factorial(math.comb(n, 2))
    num = math.prod(math.factorial(k) for k in range(1, n))
    den = math.prod(math.factorial(2 * k - 1) for k in range(1, n + 1))
    thrall = num * math.factorial(n * (n + 1) // 2) // den
    return GolombBounds(lower, upper_factorial, thrall)


def knn_path_upper_bound(n: int) -> int:
    """(C(2n, n) - 2) * Golomb(2n); degenerate (zero) at n = 1."""
    bound = (math.comb(2 * n, n) - 2) * golomb_reference(2 * n)
    if n == 1:
        warnings.warn(
            "the interleaving bound degenerates to 0 at n=1 and cannot bound "
            "the positive path count; intended for n >= 2",
            stacklevel=2,
        )
    return bound


# ---------------------------------------------------------------------------
# bipartite family: coordinate arrangements and signed orderings
# ---------------------------------------------------------------------------

def arrangements(n: int) -> list[tuple[int, ...]]:
    """All interleavings of the two (internally ordered) parties, as vertex ids."""
    out = []
    for first_positions in combinations(range(2 * n), n):
        arr = [0] * (2 * n)
        p1 = iter(range(1, n + 1))
        p2 = iter(range(n + 1, 2 * n + 1))
        fp = set(first_positions)
        for pos in range(2 * n):
            arr[pos] = next(p1) if pos in fp else next(p2)
        out.append(tuple(arr))
    return out


def _knn_space(n: int, arr: tuple[int, ...], balanced: bool):
    pos = {v: i for i, v in enumerate(arr)}
    labels = [(row, col) for row in range(1, n + 1) for col in range(1, n + 1)]
    windows = []
    signs = []
    for row, col in labels:
        a, b = pos[row], pos[n + col]
        signs.append(1 if b > a else -1)
        windows.append((min(a, b), max(a, b)))
    eq_rows: tuple = ()
    if balanced:
        # party-sum equality in shifted gap vars: sum_i c_i (y_i + 1) = 0
        coeffs = []
        for i in range(2 * n - 1):
            later = arr[i + 1 :]
            c = sum(1 for v in later if v <= n) - sum(1 for v in later if v > n)
            coeffs.append(Fraction(c))
        eq_rows = ((tuple(coeffs), Fraction(-sum(coeffs))),)
    return _ChainSpace(tuple(windows), 2 * n - 1, eq_rows), labels, signs


def enumerate_realizable_orderings_knn(
    n: int, balanced: bool = False
) -> list[tuple[tuple[int, ...], tuple[KnnLabel, ...]]]:
    """Feasible (arrangement, signed magnitude order) pairs for the bipartite family.

    Iterates the C(2n, n) party interleavings; for each, enumerates strict
    total orders on the cross-difference magnitudes feasible by exact LP,
    with signs fixed by the arrangement.  balanced adds the exact party-mean
    equality (which at n = 2 forces magnitude ties, leaving no strictly
    orderable configuration; see the project notes on the reference table).
    """
    if n > 3:
        raise SizeGuardError("bipartite ordering enumeration is guarded to n <= 3")
    out: list[tuple[tuple[int, ...], tuple[KnnLabel, ...]]] = []
    for arr in arrangements(n):
        space, labels, signs = _knn_space(n, arr, balanced)
        root = None if balanced else _powers_witness(space.n_gaps)

        def emit(chain: tuple[int, ...], arr=arr, labels=labels, signs=signs) -> None:
            out.append(
                (arr, tuple((labels[i][0], labels[i][1], signs[i]) for i in chain))
            )

        _chain_dfs(space, emit, root_witness=root)
    return out


# ---------------------------------------------------------------------------
# feasibility of a single IncrementOrder
# ---------------------------------------------------------------------------

def feasible(order: IncrementOrder, balanced: bool = False) -> Configuration | None:
    """Exact-rational witness configuration for the order, or None if infeasible."""
    if order.family is Family.COMPLETE:
        if balanced:
            raise ValueError("balanced applies to the bipartite family only")
        return _feasible_kn(order)
    return _feasible_knn(order, balanced)


def _feasible_kn(order: IncrementOrder) -> Configuration | None:
    n = order.n
    space, labels = _kn_space(n)
    index = {lab: i for i, lab in enumerate(labels)}
    chain = [index[lab] for lab in order.labels]
    gaps = _chain_feasible(space, chain)
    if gaps is None:
        return None
    x = [Fraction(0)]
    for g in gaps:
        x.append(x[-1] + g)
    return Configuration(complete(n), tuple(x))


def _feasible_knn(order: IncrementOrder, balanced: bool) -> Configuration | None:
    from .ratlp import solve_feasibility

    n = order.n
    # vars: party-one gaps (n-1), party-two gaps (n-1), offset+ , offset-
    ng = n - 1
    nv = 2 * ng + 2

    def delta_coeffs(row: int, col: int):
        # x_{N+col} - x_row = offset + sum(g2[:col-1]) - sum(g1[:row-1])
        c = [Fraction(0)] * nv
        for i in range(col - 1):
            c[ng + i] += 1
        for i in range(row - 1):
            c[i] -= 1
        c[2 * ng] += 1
        c[2 * ng + 1] -= 1
        return c

    ge_rows = []
    prev = None
    for row, col, q in order.labels:
        c = [q * v for v in delta_coeffs(row, col)]
        ge_rows.append((c, Fraction(1)))  # sign consistency, slack-1
        if prev is not None:
            ge_rows.append(([a - b for a, b in zip(c, prev)], Fraction(1)))
        prev = c
    eq_rows = []
    if balanced:
        coeffs = [Fraction(0)] * nv
        for i in range(ng):
            coeffs[i] = Fraction(-(n - 1 - i))      # party-one gaps
            coeffs[ng + i] = Fraction(n - 1 - i)    # party-two gaps
        coeffs[2 * ng] = Fraction(n)
        coeffs[2 * ng + 1] = Fraction(-n)
        eq_rows.append((coeffs, Fraction(0)))
    y = solve_feasibility(nv, ge_rows=ge_rows, eq_rows=eq_rows)
    if y is None:
        return None
    x1 = [Fraction(0)]
    for i in range(ng):
        x1.append(x1[-1] + y[i])
    offset = y[2 * ng] - y[2 * ng + 1]
    x2 = [offset]
    for i in range(ng):
        x2.append(x2[-1] + y[ng + i])
    return Configuration(bipartite(n), tuple(x1 + x2))


def verify_witness(order: IncrementOrder, config: Configuration) -> bool:
    """Substitute the witness and check the claimed strict order exactly."""
    if not config.is_ordered():
        return False
    vals = config.values
    mags = []
    if order.family is Family.COMPLETE:
        for a, k in order.labels:
            mags.append(vals[a + k - 1] - vals[a - 1])
    else:
        n = order.n
        for row, col, q in order.labels:
            d = vals[n + col - 1] - vals[row - 1]
            if (d > 0) != (q > 0) or d == 0:
                return False
            mags.append(abs(d))
    return all(a < b for a, b in zip(mags, mags[1:])) and all(m > 0 for m in mags)


# ---------------------------------------------------------------------------
# paths -> orderings, configurations -> rulers
# ---------------------------------------------------------------------------

def path_to_ordering_kn(initial: KnCode, sites: Sequence[int]) -> IncrementOrder:
    """Translate a jump-site path into its increment order; rejects inadmissible paths."""
    code = list(validate_kn(initial))
    n = len(code)
    labels = []
    for site in sites:
        if not (1 <= site <= n - 1) or code[site - 1] >= code[site]:
            raise SyncPathsError(f"inadmissible jump at site {site} from {tuple(code)}")
        labels.append((site, code[site - 1] + 1 - site))
        code[site - 1] += 1
    return IncrementOrder(Family.COMPLETE, n, tuple(labels))


def path_to_ordering_knn(initial: KnnCode, moves: Sequence[tuple[int, int]]) -> IncrementOrder:
    """Translate (site, sign) moves into a signed cross-difference order."""
    alpha, omega = validate_knn(initial)
    alpha, omega = list(alpha), list(omega)
    n = len(alpha)
    labels = []
    for site, q in moves:
        if not 1 <= site <= n:
            raise SyncPathsError(f"site out of range: {site}")
        if q == -1:
            if alpha[site - 1] <= 1 or (site > 1 and alpha[site - 1] - 1 < alpha[site - 2]):
                raise SyncPathsError(f"inadmissible move ({site}, -1)")
            alpha[site - 1] -= 1
            labels.append((site, alpha[site - 1], -1))
        elif q == +1:
            if omega[site - 1] >= n or (site < n and omega[site - 1] + 1 > omega[site]):
                raise SyncPathsError(f"inadmissible move ({site}, +1)")
            omega[site - 1] += 1
            labels.append((site, omega[site - 1], +1))
        else:
            raise SyncPathsError(f"sign must be -1 or +1: {q}")
    return IncrementOrder(Family.BIPARTITE, n, tuple(labels))


def ruler_from_configuration(config: Configuration) -> tuple[int, ...]:
    """Integer ruler inducing the same increment order as a typical configuration.

    Scales by the smallest integer p with p * min(e1, e2/4) > 1, where e1 is
    the least increment and e2 the least gap between increments, then floors.
    """
    if config.spec.family is not Family.COMPLETE:
        raise ValueError("rulers are defined for the complete family")
    if not config.is_ordered():
        raise ValueError("configuration must be sorted ascending")
    vals = [Fraction(v) for v in config.values]
    incs = []
    n = len(vals)
    for a in range(n):
        for b in range(a + 1, n):
            incs.append(vals[b] - vals[a])
    if any(i == 0 for i in incs):
        raise NotTypicalError("zero increment")
    diffs = [abs(p - q) for p, q in combinations(incs, 2)]
    if any(d == 0 for d in diffs):
        raise NotTypicalError("tied increments")
    e1 = min(incs)
    e2 = min(diffs)
    bound = min(e1, e2 / 4)
    p = int(1 / bound) + 1
    return tuple(math.floor(p * v) for v in vals)
