"""Exact path-length distributions and their summary statistics.

For the complete family the area generating polynomials satisfy the
convolution recurrence P_N = sum_{j<N} t^j P_j P_{N-1-j} with P_0 = 1; the
length distribution is the coefficient list read from the top degree down.
For the bipartite family the distribution is computed by a column-sweep
dynamic program over polyomino border pairs, accumulating column areas.

Everything here is exact: big-integer counts, Fraction ratios.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .errors import SizeGuardError
from .graphs import Family

AreaPolynomial = list[int]  # coefficient vector, index = area statistic


@dataclass(frozen=True)
class LengthDistribution:
    family: Family
    n: int
    counts: tuple[int, ...]  # counts[l] = number of codes at remaining length l

    @property
    def max_length(self) -> int:
        return len(self.counts) - 1

    def total(self) -> int:
        return sum(self.counts)

    def to_json(self) -> str:
        return json.dumps(
            {
                "family": self.family.value,
                "n": self.n,
                "counts": [str(c) for c in self.counts],
            }
        )


@dataclass(frozen=True)
class SummaryStats:
    modes: tuple[int, ...]          # argmax lengths, ascending (ties listed)
    mode_ratios: tuple[Fraction, ...]
    mean: Fraction
    mean_ratio: Fraction


def _poly_mul(a: AreaPolynomial, b: AreaPolynomial) -> AreaPolynomial:
    """Exact convolution via Kronecker substitution into one big integer."""
    if not a or not b:
        return []
    # pack coefficients into fixed-width digits wide enough for any column sum
    bits = max(max(a).bit_length(), max(b).bit_length(), 1) * 2 + min(len(a), len(b)).bit_length() + 1
    big_a = sum(c << (i * bits) for i, c in enumerate(a))
    big_b = sum(c << (i * bits) for i, c in enumerate(b))
    prod = big_a * big_b
    mask = (1 << bits) - 1
    out = []
    for _ in range(len(a) + len(b) - 1):
        out.append(prod & mask)
        prod >>= bits
    return out


def carlitz_polynomials(n: int) -> list[AreaPolynomial]:
    """Area generating polynomials P_0..P_n (P_0 = 1; see module notes)."""
    if n < 0:
        raise ValueError("n must be >= 0")
    polys: list[AreaPolynomial] = [[1]]
    for m in range(1, n + 1):
        acc = [0] * (m * (m - 1) // 2 + 1)
        for j in range(m):
            term = _poly_mul(polys[j], polys[m - 1 - j])
            for i, c in enumerate(term):
                acc[i + j] += c
        polys.append(acc)
    return polys


@lru_cache(maxsize=None)
def f_kn(n: int) -> LengthDistribution:
    """counts[l] = number of codes whose remaining path length is l (complete family)."""
    if n < 1:
        raise ValueError("n must be >= 1")
    poly = carlitz_polynomials(n)[n]
    return LengthDistribution(Family.COMPLETE, n, tuple(reversed(poly)))


@lru_cache(maxsize=None)
def f_knn(n: int) -> LengthDistribution:
    """Bipartite analogue via the border-pair column sweep."""
    if n < 1:
        raise ValueError("n must be >= 1")
    size = n + 2  # border values live in 0..n+1
    max_area = (n + 1) ** 2

    # state[(lo, up)][area]: border values at the current column, area so far
    state: dict[tuple[int, int], list[int]] = {}
    for up in range(1, n + 2):
        state.setdefault((0, up), [0] * (max_area + 1))[up] = 1

    for _col in range(2, n + 2):
        new: dict[tuple[int, int], list[int]] = {}
        for area in range(max_area + 1):
            # prefix[lo][up] = sum of counts over states (l <= lo, u <= up)
            prefix = [[0] * size for _ in range(size)]
            any_nonzero = False
            for (lo, up), counts in state.items():
                if counts[area]:
                    prefix[lo][up] += counts[area]
                    any_nonzero = True
            if not any_nonzero:
                continue
            for lo in range(size):
                row = prefix[lo]
                for up in range(1, size):
                    row[up] += row[up - 1]
                if lo:
                    prev = prefix[lo - 1]
                    for up in range(size):
                        row[up] += prev[up]
            for lo2 in range(0, n + 1):
                for up2 in range(lo2 + 1, n + 2):
                    # predecessors: lo <= lo2, up <= up2, up >= lo2 + 1
                    total = prefix[lo2][up2] - prefix[lo2][lo2]
                    if total:
                        a2 = area + (up2 - lo2)
                        bucket = new.setdefault((lo2, up2), [0] * (max_area + 1))
                        bucket[a2] += total
        state = new

    hist = [0] * (max_area + 1)
    for (lo, up), counts in state.items():
        if up == n + 1:
            for area, c in enumerate(counts):
                hist[area] += c
    # remaining length l corresponds to area (n+1)^2 - l; lengths run 0..n^2
    counts = tuple(hist[max_area - l] for l in range(n * n + 1))
    return LengthDistribution(Family.BIPARTITE, n, counts)


def length_distribution(family: Family, n: int) -> LengthDistribution:
    return f_kn(n) if family is Family.COMPLETE else f_knn(n)


def partition_counts(limit: int) -> list[int]:
    """Partition numbers p(0..limit) by the bounded-part recurrence."""
    p = [0] * (limit + 1)
    p[0] = 1
    for part in range(1, limit + 1):
        for total in range(part, limit + 1):
            p[total] += p[total - part]
    return p


def sloane_prefix_check(n: int) -> bool:
    """True iff counts[l] for l <= n equals the number of pairs of partitions of l."""
    dist = f_knn(n)
    p = partition_counts(n)
    pairs = [sum(p[i] * p[l - i] for i in range(l + 1)) for l in range(n + 1)]
    return list(dist.counts[: n + 1]) == pairs


def cumulative(dist: LengthDistribution, x) -> Fraction:
    """Normalized cumulative distribution at x in [0, 1] (exact)."""
    x = Fraction(x)
    if not 0 <= x <= 1:
        raise ValueError("x must lie in [0, 1]")
    cutoff = x * dist.max_length
    total = sum(c for l, c in enumerate(dist.counts) if l <= cutoff)
    return Fraction(total, dist.total())


def summary(dist: LengthDistribution) -> SummaryStats:
    peak = max(dist.counts)
    modes = tuple(l for l, c in enumerate(dist.counts) if c == peak)
    top = dist.max_length or 1  # a single-point distribution has ratio 0
    total = dist.total()
    mean = Fraction(sum(l * c for l, c in enumerate(dist.counts)), total)
    return SummaryStats(
        modes=modes,
        mode_ratios=tuple(Fraction(m, top) for m in modes),
        mean=mean,
        mean_ratio=mean / top,
    )


DENSITY_LIMITS = {Family.COMPLETE: 60, Family.BIPARTITE: 20}


def density_export(family: Family, n: int, bins: int) -> str:
    """CSV histogram "x,density" of normalized lengths; integrates to 1 exactly."""
    if n > DENSITY_LIMITS[family]:
        raise SizeGuardError(f"n={n} exceeds the density limit for {family.value}")
    if bins < 1:
        raise ValueError("bins must be positive")
    dist = length_distribution(family, n)
    top = dist.max_length
    total = dist.total()
    mass = [Fraction(0)] * bins
    for l, c in enumerate(dist.counts):
        j = min(l * bins // top, bins - 1) if top else 0
        mass[j] += Fraction(c, total)
    lines = ["x,density"]
    for j in range(bins):
        x = Fraction(2 * j + 1, 2 * bins)
        rho = mass[j] * bins
        lines.append(f"{float(x):.12g},{float(rho):.12g}")
    return "\n".join(lines) + "\n"
