"""Combinatorial codes for synchronized subnetworks.

A subnetwork of the complete graph compatible with an ordered configuration
is encoded by a nondecreasing "reach" vector ``phi`` with ``n <= phi[n] <= N``:
``phi[n]`` is the last vertex within threshold of vertex ``n``.  There are
Catalan-many such codes.

For the complete bipartite graph the encoding is a border pair ``(alpha,
omega)``: row ``n`` of party one is linked exactly to party-two columns
``alpha[n] .. omega[n]``.  Sentinels ``alpha = n+1`` / ``omega = 0`` encode
empty rows.  Border pairs biject with staircase polyominoes counted by
Narayana numbers.
"""

from __future__ import annotations

import math
from typing import Iterator, Sequence

from .errors import InvalidCodeError
from .graphs import Configuration, Edge, Family

KnCode = tuple[int, ...]
KnnCode = tuple[tuple[int, ...], tuple[int, ...]]


# ---------------------------------------------------------------------------
# validation and text format
# ---------------------------------------------------------------------------

def validate_kn(code: Sequence[int]) -> KnCode:
    code = tuple(code)
    n = len(code)
    if n < 1:
        raise InvalidCodeError("empty code")
    for i, v in enumerate(code, start=1):
        if not (i <= v <= n):
            raise InvalidCodeError(f"entry {i} out of range: {v}")
    if any(a > b for a, b in zip(code, code[1:])):
        raise InvalidCodeError(f"code not nondecreasing: {code}")
    return code


def validate_knn(code: tuple[Sequence[int], Sequence[int]]) -> KnnCode:
    alpha, omega = tuple(code[0]), tuple(code[1])
    n = len(alpha)
    if n < 1 or len(omega) != n:
        raise InvalidCodeError("border vectors must be nonempty and equal-length")
    if any(not (1 <= a <= n + 1) for a in alpha):
        raise InvalidCodeError(f"alpha out of range: {alpha}")
    if any(not (0 <= w <= n) for w in omega):
        raise InvalidCodeError(f"omega out of range: {omega}")
    if any(a > b for a, b in zip(alpha, alpha[1:])) or any(
        a > b for a, b in zip(omega, omega[1:])
    ):
        raise InvalidCodeError(f"borders not nondecreasing: {alpha}, {omega}")
    if any(a > w + 1 for a, w in zip(alpha, omega)):
        raise InvalidCodeError(f"alpha exceeds omega+1: {alpha}, {omega}")
    return alpha, omega


def kn_code_text(code: KnCode) -> str:
    return ",".join(str(v) for v in code)


def knn_code_text(code: KnnCode) -> str:
    alpha, omega = code
    return ",".join(map(str, alpha)) + "|" + ",".join(map(str, omega))


def parse_code_text(text: str, family: Family) -> KnCode | KnnCode:
    if family is Family.COMPLETE:
        return validate_kn([int(t) for t in text.split(",")])
    left, _, right = text.partition("|")
    if not right:
        raise InvalidCodeError("bipartite code text needs 'alpha|omega'")
    return validate_knn(
        ([int(t) for t in left.split(",")], [int(t) for t in right.split(",")])
    )


# ---------------------------------------------------------------------------
# complete graph
# ---------------------------------------------------------------------------

def encode_kn(config: Configuration, eps) -> KnCode:
    """Reach vector of an ordered configuration: last index within eps of each vertex."""
    if config.spec.family is not Family.COMPLETE:
        raise ValueError("encode_kn needs a complete-graph configuration")
    if not config.is_ordered():
        raise ValueError("configuration must be sorted ascending")
    x = config.values
    n = len(x)
    code = []
    reach = 0
    for m in range(n):
        reach = max(reach, m)
        while reach + 1 < n and x[reach + 1] <= x[m] + eps:
            reach += 1
        code.append(reach + 1)
    return tuple(code)


def decode_kn(code: KnCode) -> frozenset[Edge]:
    """Edges {m, n} with m < n <= code[m]."""
    code = validate_kn(code)
    return frozenset(
        (m, n)
        for m in range(1, len(code) + 1)
        for n in range(m + 1, code[m - 1] + 1)
    )


def enumerate_phi_n(n: int) -> list[KnCode]:
    """All reach vectors for party size n, lexicographically sorted."""
    if n < 1:
        raise ValueError("n must be >= 1")
    out: list[KnCode] = []

    def extend(prefix: list[int]) -> None:
        i = len(prefix)
        if i == n:
            out.append(tuple(prefix))
            return
        lo = max(i + 1, prefix[-1] if prefix else 1)
        for v in range(lo, n + 1):
            prefix.append(v)
            extend(prefix)
            prefix.pop()

    extend([])
    return out


def catalan(n: int) -> int:
    return math.comb(2 * n, n) // (n + 1)


def dyck_area(code: KnCode) -> int:
    """Number of edges of the decoded subnetwork: sum of code[n] - n."""
    code = validate_kn(code)
    return sum(v - i for i, v in enumerate(code, start=1))


# ---------------------------------------------------------------------------
# complete bipartite graph
# ---------------------------------------------------------------------------

def encode_knn(config: Configuration, eps) -> KnnCode:
    """Border pair of a party-ordered configuration."""
    if config.spec.family is not Family.BIPARTITE:
        raise ValueError("encode_knn needs a bipartite configuration")
    if not config.is_ordered():
        raise ValueError("both parties must be sorted ascending")
    n = config.spec.n
    first, second = config.party(1), config.party(2)
    alpha, omega = [], []
    for xn in first:
        if second[-1] < xn - eps:
            alpha.append(n + 1)
        else:
            alpha.append(next(l for l in range(1, n + 1) if xn - eps <= second[l - 1]))
        if second[0] > xn + eps:
            omega.append(0)
        else:
            omega.append(max(l for l in range(1, n + 1) if xn + eps >= second[l - 1]))
    return tuple(alpha), tuple(omega)


def decode_knn(code: KnnCode) -> frozenset[Edge]:
    """Edges {n, N+m} with alpha[n] <= m <= omega[n]."""
    alpha, omega = validate_knn(code)
    n = len(alpha)
    return frozenset(
        (row, n + m)
        for row in range(1, n + 1)
        for m in range(alpha[row - 1], omega[row - 1] + 1)
    )


def enumerate_phi_nn(n: int) -> list[KnnCode]:
    """All border pairs for party size n, lexicographic in (alpha, omega)."""
    if n < 1:
        raise ValueError("n must be >= 1")

    def nondecreasing(lo: int, hi: int) -> Iterator[tuple[int, ...]]:
        def extend(prefix: list[int]) -> Iterator[tuple[int, ...]]:
            if len(prefix) == n:
                yield tuple(prefix)
                return
            for v in range(prefix[-1] if prefix else lo, hi + 1):
                prefix.append(v)
                yield from extend(prefix)
                prefix.pop()

        yield from extend([])

    out = []
    for alpha in nondecreasing(1, n + 1):
        for omega in nondecreasing(0, n):
            if all(a <= w + 1 for a, w in zip(alpha, omega)):
                out.append((alpha, omega))
    return out


def narayana_count(n: int) -> int:
    """Cardinality of the border-pair family: T(2n+1, n+1)."""
    return math.comb(2 * n + 1, n + 1) * math.comb(2 * n + 1, n) // (2 * n + 1)


# ---------------------------------------------------------------------------
# staircase polyominoes
# ---------------------------------------------------------------------------

def to_polyomino(code: KnnCode) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """Lower/upper border functions (L, U) on columns 1..n+1 for a border pair."""
    alpha, omega = validate_knn(code)
    n = len(alpha)
    lower = (0,) + tuple(a - 1 for a in alpha)
    upper = tuple(w + 1 for w in omega) + (n + 1,)
    return lower, upper


def polyomino_area(borders: tuple[Sequence[int], Sequence[int]]) -> int:
    lower, upper = borders
    return sum(u - l for l, u in zip(lower, upper))


def validate_polyomino(
    borders: tuple[Sequence[int], Sequence[int]], height: int | None = None
) -> None:
    """Check the border-function invariants; raises InvalidCodeError.

    height defaults to the width (the square lattice produced by
    to_polyomino); rectangular lattices pass it explicitly.
    """
    lower, upper = tuple(borders[0]), tuple(borders[1])
    p = len(lower)
    if height is None:
        height = p
    if len(upper) != p or p < 2:
        raise InvalidCodeError("borders must be equal-length, at least two columns")
    if lower[0] != 0:
        raise InvalidCodeError("lower border must start at 0")
    if upper[-1] != height:
        raise InvalidCodeError("upper border must end at the lattice height")
    if any(a > b for a, b in zip(lower, lower[1:])) or any(
        a > b for a, b in zip(upper, upper[1:])
    ):
        raise InvalidCodeError("borders must be nondecreasing")
    if any(lower[i] >= upper[i - 1] for i in range(1, p)):
        raise InvalidCodeError("connectivity violated: lower[n] must stay below upper[n-1]")
