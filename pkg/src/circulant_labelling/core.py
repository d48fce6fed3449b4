"""Powers of cycles C_n^k = Ci_n(1, 2, ..., k), their weightings and bounds.

Edges are stored canonically as ``(u, d)`` meaning the edge between ``u``
and ``(u + d) % n`` with ``1 <= d <= k``.  Because ``n >= 2k + 1`` every
undirected edge has exactly one such form.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterator, Mapping

Edge = tuple[int, int]


class DomainError(ValueError):
    """Raised when (n, k) lies outside the range an operation is defined on."""


class ConstructionError(RuntimeError):
    """An internal consistency check of a construction failed."""


def ceil_div(a: int, b: int) -> int:
    return -(-a // b)


@dataclass(frozen=True)
class CirculantPowerGraph:
    n: int
    k: int

    def __post_init__(self) -> None:
        if self.k < 1:
            raise DomainError(f"k must be at least 1, got {self.k}")
        if self.n < 2 * self.k + 1:
            raise DomainError(
                f"n={self.n} < 2k+1={2 * self.k + 1}: offsets would produce multi-edges"
            )

    @property
    def vertices(self) -> range:
        return range(self.n)

    def edges(self) -> Iterator[Edge]:
        """Canonical edges in (u, d) lexicographic order."""
        for u in range(self.n):
            for d in range(1, self.k + 1):
                yield (u, d)

    @property
    def num_edges(self) -> int:
        return self.n * self.k

    def distance(self, a: int, b: int) -> int:
        diff = (b - a) % self.n
        return min(diff, self.n - diff)

    def adjacent(self, a: int, b: int) -> bool:
        return a != b and self.distance(a, b) <= self.k

    def canonical(self, a: int, b: int) -> Edge:
        """Canonical (u, d) form of the undirected edge {a, b}."""
        a %= self.n
        b %= self.n
        diff = (b - a) % self.n
        if 1 <= diff <= self.k:
            return (a, diff)
        back = (a - b) % self.n
        if 1 <= back <= self.k:
            return (b, back)
        raise ValueError(f"{{{a}, {b}}} is not an edge of C_{self.n}^{self.k}")

    def endpoints(self, edge: Edge) -> tuple[int, int]:
        u, d = edge
        return u, (u + d) % self.n

    def neighbours(self, v: int) -> list[int]:
        return [(v + d) % self.n for d in range(-self.k, self.k + 1) if d]


def build_graph(n: int, k: int) -> CirculantPowerGraph:
    return CirculantPowerGraph(n, k)


@dataclass(frozen=True)
class EdgeWeighting:
    graph: CirculantPowerGraph
    weights: Mapping[Edge, int]

    def __post_init__(self) -> None:
        expected = set(self.graph.edges())
        if set(self.weights) != expected:
            missing = len(expected - set(self.weights))
            extra = len(set(self.weights) - expected)
            raise ValueError(f"weighting does not cover the edge set ({missing} missing, {extra} extra)")
        bad = [e for e, w in self.weights.items() if w < 1]
        if bad:
            raise ValueError(f"non-positive weight on edge {bad[0]}")

    @property
    def max_label(self) -> int:
        return max(self.weights.values())

    def weight(self, a: int, b: int) -> int:
        return self.weights[self.graph.canonical(a, b)]


@dataclass(frozen=True)
class TotalWeighting:
    edges: EdgeWeighting
    vertex_weights: Mapping[int, int]

    def __post_init__(self) -> None:
        if set(self.vertex_weights) != set(self.graph.vertices):
            raise ValueError("vertex weights must cover every vertex exactly once")
        if any(w < 1 for w in self.vertex_weights.values()):
            raise ValueError("vertex weights must be positive")

    @property
    def graph(self) -> CirculantPowerGraph:
        return self.edges.graph

    @property
    def max_label(self) -> int:
        return max(self.edges.max_label, max(self.vertex_weights.values()))


@dataclass(frozen=True)
class WeightedDegreeProfile:
    values: tuple[int, ...]
    mode: str = field(default="edge")  # "edge" or "total"

    def is_irregular(self) -> bool:
        return len(set(self.values)) == len(self.values)


def weighted_degrees(w: EdgeWeighting | TotalWeighting) -> WeightedDegreeProfile:
    if isinstance(w, TotalWeighting):
        base = weighted_degrees(w.edges).values
        return WeightedDegreeProfile(
            tuple(x + w.vertex_weights[v] for v, x in enumerate(base)), "total"
        )
    g = w.graph
    wd = [0] * g.n
    for (u, d), x in w.weights.items():
        wd[u] += x
        wd[(u + d) % g.n] += x
    return WeightedDegreeProfile(tuple(wd), "edge")


def _check_theorem_range(n: int, k: int) -> None:
    if k < 2 or n < 2 * k + 1:
        raise DomainError(f"formula needs k >= 2 and n >= 2k+1, got n={n}, k={k}")


def tvs_formula(n: int, k: int) -> int:
    """Total vertex irregularity strength of C_n^k."""
    _check_theorem_range(n, k)
    return ceil_div(n + 2 * k, 2 * k + 1)


def is_s_exception(n: int, k: int) -> bool:
    return (n % (4 * k) == 2 * k + 1 and k % 2 == 1) or n == 2 * k + 1


def s_formula(n: int, k: int) -> int:
    """Irregularity strength of C_n^k."""
    _check_theorem_range(n, k)
    return ceil_div(n + 2 * k - 1, 2 * k) + (1 if is_s_exception(n, k) else 0)


def lower_bound_s_regular_exact(n: int, d: int) -> Fraction:
    """The rational lower bound (n + d - 1) / d on s(G) for d-regular G."""
    return Fraction(n + d - 1, d)


def lower_bound_s_regular(n: int, d: int) -> int:
    """Smallest integer satisfying the rational bound (n + d - 1) / d.

    Note this is an integer rounding of the rational bound; see
    :func:`lower_bound_s_regular_exact` for the value itself.
    """
    return ceil_div(n + d - 1, d)


def lower_bound_tvs_regular(n: int, d: int) -> int:
    return ceil_div(n + d, d + 1)


def parity_obstruction(n: int, k: int) -> bool:
    """True when labels 1..ceil((n+2k-1)/2k) cannot be irregular by parity.

    Applies to n = 4kt + 2k + 1 with t >= 1 and k odd: the 4kt + 2k + 1
    distinct weighted degrees would have to fill [2k, 2k*s] exactly, and
    that sum is odd while every degree sum is even.
    """
    info = parity_certificate(n, k)
    return info is not None and info["forced_sum"] % 2 == 1


def parity_certificate(n: int, k: int) -> dict | None:
    """Forced interval and degree sum behind :func:`parity_obstruction`."""
    if k < 1 or k % 2 == 0 or n % (4 * k) != 2 * k + 1:
        return None
    t = (n - 2 * k - 1) // (4 * k)
    if t < 1:
        return None
    s = ceil_div(n + 2 * k - 1, 2 * k)
    lo, hi = 2 * k, 2 * k * s
    if hi - lo + 1 != n:
        # the degrees would not be forced onto the whole interval
        return None
    forced = (lo + hi) * n // 2
    assert forced == k * (2 * t + 3) * (4 * k * t + 2 * k + 1)
    return {"n": n, "k": k, "t": t, "labels": s, "interval": [lo, hi], "forced_sum": forced}
