"""Graph families, Laplacian matrices, and threshold-synchronized subnetworks.

Two families are supported: the complete graph on ``n`` vertices and the
complete bipartite graph with two parties of ``n`` vertices each.  Vertices
are 1-based everywhere in the public API; for the bipartite family party one
is ``1..n`` and party two is ``n+1..2n``.
"""

from __future__ import annotations

import enum
import json
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, Sequence

import numpy as np

Number = int | float | Fraction
Edge = tuple[int, int]


class Family(enum.Enum):
    COMPLETE = "kn"
    BIPARTITE = "knn"


@dataclass(frozen=True)
class GraphSpec:
    """A graph family instance: K_n or K_{n,n} with party size n."""

    family: Family
    n: int

    def __post_init__(self) -> None:
        if self.n < 1:
            raise ValueError(f"party size must be positive, got {self.n}")

    @property
    def vertex_count(self) -> int:
        return self.n if self.family is Family.COMPLETE else 2 * self.n

    @property
    def edge_count(self) -> int:
        if self.family is Family.COMPLETE:
            return self.n * (self.n - 1) // 2
        return self.n * self.n

    def edges(self) -> Iterator[Edge]:
        """All edges as 1-based pairs (u, v) with u < v, lexicographic."""
        if self.family is Family.COMPLETE:
            for u in range(1, self.n + 1):
                for v in range(u + 1, self.n + 1):
                    yield (u, v)
        else:
            for u in range(1, self.n + 1):
                for v in range(self.n + 1, 2 * self.n + 1):
                    yield (u, v)

    def is_edge(self, u: int, v: int) -> bool:
        if u > v:
            u, v = v, u
        if not (1 <= u < v <= self.vertex_count):
            return False
        if self.family is Family.COMPLETE:
            return True
        return u <= self.n < v


def complete(n: int) -> GraphSpec:
    return GraphSpec(Family.COMPLETE, n)

def bipartite(n: int) -> GraphSpec:
    return GraphSpec(Family.BIPARTITE, n)


@dataclass(frozen=True)
class Configuration:
    """Vertex positions (radians when driving the Kuramoto flow).

    Values may be floats or exact ``Fraction``s; predicates below compare
    exactly whichever representation is used.
    """

    spec: GraphSpec
    values: tuple[Number, ...]

    def __post_init__(self) -> None:
        if len(self.values) != self.spec.vertex_count:
            raise ValueError(
                f"expected {self.spec.vertex_count} values, got {len(self.values)}"
            )

    def __getitem__(self, vertex: int) -> Number:
        """Position of a 1-based vertex."""
        return self.values[vertex - 1]

    def party(self, which: int) -> tuple[Number, ...]:
        n = self.spec.n
        if self.spec.family is Family.COMPLETE:
            raise ValueError("complete graphs have a single party")
        return self.values[:n] if which == 1 else self.values[n:]

    def mean(self) -> Fraction:
        return Fraction(sum(Fraction(v) for v in self.values), len(self.values))

    def party_means(self) -> tuple[Fraction, Fraction]:
        p1, p2 = self.party(1), self.party(2)
        n = self.spec.n
        return (
            Fraction(sum(Fraction(v) for v in p1), n),
            Fraction(sum(Fraction(v) for v in p2), n),
        )

    def is_ordered(self) -> bool:
        """Nondecreasing overall (complete) or within each party (bipartite)."""
        if self.spec.family is Family.COMPLETE:
            seqs: tuple[Sequence[Number], ...] = (self.values,)
        else:
            seqs = (self.party(1), self.party(2))
        return all(
            all(a <= b for a, b in zip(s, s[1:])) for s in seqs
        )

    def is_balanced(self) -> bool:
        """Equal party means (bipartite only); exact comparison."""
        m1, m2 = self.party_means()
        return m1 == m2

    def as_array(self) -> np.ndarray:
        return np.asarray([float(v) for v in self.values], dtype=np.float64)

    def to_json(self) -> str:
        vals = [
            str(v) if isinstance(v, Fraction) else v for v in self.values
        ]
        return json.dumps(
            {"family": self.spec.family.value, "n": self.spec.n, "values": vals}
        )


def configuration_from_json(text: str) -> Configuration:
    obj = json.loads(text)
    spec = GraphSpec(Family(obj["family"]), obj["n"])
    values = tuple(
        Fraction(v) if isinstance(v, str) else v for v in obj["values"]
    )
    return Configuration(spec, values)


def laplacian(spec: GraphSpec) -> np.ndarray:
    """Coupling matrix of the linear flow: symmetric, zero row sums, -degree diagonal."""
    size = spec.vertex_count
    mat = np.zeros((size, size), dtype=np.int64)
    for u, v in spec.edges():
        mat[u - 1, v - 1] = 1
        mat[v - 1, u - 1] = 1
    for i in range(size):
        mat[i, i] = -mat[i].sum()
    return mat


def sync_subnetwork(config: Configuration, eps: Number) -> frozenset[Edge]:
    """Edges whose endpoint positions are within eps of each other (closed inequality)."""
    if eps <= 0:
        raise ValueError(f"eps must be positive, got {eps}")
    x = config.values
    return frozenset(
        (u, v) for u, v in config.spec.edges() if abs(x[u - 1] - x[v - 1]) <= eps
    )


def edges_to_json(edges: frozenset[Edge] | set[Edge]) -> str:
    """Canonical JSON rendering: [u, v] pairs with u < v, sorted lexicographically."""
    return json.dumps(sorted([list(e) for e in edges]))
