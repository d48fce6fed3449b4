"""Placing segments around C_n^k and assembling the {0,1,2} weighting w*."""

from __future__ import annotations

from dataclasses import dataclass, field

from .core import CirculantPowerGraph, ConstructionError, Edge
from .segments import Segment, SegmentLabelling


@dataclass(frozen=True)
class PlacedSegment:
    index: int  # j in S_j
    segment: Segment
    start: int  # global vertex holding the first position
    ascending: bool

    @property
    def size(self) -> int:
        return len(self.segment.vertices)

    def vertex(self, i: int) -> int:
        """Global vertex of local index i (modulo n is applied by the tiling)."""
        seg = self.segment
        if i not in seg.vertices:
            raise ConstructionError(f"{seg.kind}^({seg.k}) has no vertex v_{i}")
        pos = i - seg.vertices[0] if self.ascending else seg.top - i
        return self.start + pos

    def globals(self) -> list[int]:
        return [self.start + p for p in range(self.size)]

    def top(self, offset: int = 0) -> int:
        """Global vertex of v_{top - offset}."""
        return self.vertex(self.segment.top - offset)


@dataclass
class SegmentTiling:
    """Consecutive segments (and at most one extra vertex) covering C_n^k."""

    graph: CirculantPowerGraph
    segments: list[PlacedSegment] = field(default_factory=list)
    extra: int | None = None

    @classmethod
    def build(cls, graph, plan: list, extra_after: int | None = None) -> "SegmentTiling":
        """``plan`` is a list of (Segment, ascending); the extra vertex goes after
        the segment at position ``extra_after`` of the plan."""
        tiling = cls(graph)
        pos = 0
        for idx, (seg, asc) in enumerate(plan):
            placed = PlacedSegment(idx + 1, seg, pos, asc)
            tiling.segments.append(placed)
            pos += placed.size
            if extra_after is not None and idx == extra_after:
                tiling.extra = pos
                pos += 1
        if pos != graph.n:
            raise ConstructionError(f"tiling covers {pos} vertices, graph has {graph.n}")
        return tiling

    def owner(self) -> dict[int, int]:
        """vertex -> segment index (0 for the extra vertex)."""
        out = {}
        for placed in self.segments:
            for v in placed.globals():
                out[v] = placed.index
        if self.extra is not None:
            out[self.extra] = 0
        if sorted(out) != list(range(self.graph.n)):
            raise ConstructionError("tiling is not a bijection onto the vertex set")
        return out


class StarWeighting:
    """Mutable edge weighting of C_n^k, zero by default."""

    def __init__(self, graph: CirculantPowerGraph):
        self.graph = graph
        self.w: dict[Edge, int] = {e: 0 for e in graph.edges()}

    def set(self, a: int, b: int, x: int) -> None:
        self.w[self.graph.canonical(a, b)] = x

    def get(self, a: int, b: int) -> int:
        return self.w[self.graph.canonical(a, b)]

    def add_segment(self, placed: PlacedSegment, labelling: SegmentLabelling) -> None:
        for (a, b), x in labelling.weights.items():
            self.set(placed.vertex(a), placed.vertex(b), x)

    def join(self, first: PlacedSegment, second: PlacedSegment, x: int) -> None:
        """Put x on every edge of the graph between two segments."""
        other = set(v % self.graph.n for v in second.globals())
        for a in first.globals():
            for b in self.graph.neighbours(a % self.graph.n):
                if b in other:
                    self.set(a, b, x)

    def degrees(self) -> list[int]:
        n = self.graph.n
        wd = [0] * n
        for (u, d), x in self.w.items():
            wd[u] += x
            wd[(u + d) % n] += x
        return wd

    def ones(self) -> list[tuple[int, int]]:
        return [self.graph.endpoints(e) for e, x in self.w.items() if x == 1]


def staircase(graph, A: PlacedSegment, B: PlacedSegment, h: int, shift: int) -> list[tuple[int, int]]:
    """Pairs (A_i, B_j) with A_i = v_{top-h+i}(A), B_j = v_{top-j+1}(B).

    shift = 0 gives 1 <= j <= i <= h; shift = 1 gives 2 <= i <= h, j <= i - 1.
    """
    pairs = []
    for i in range(1 + shift, h + 1):
        for j in range(1, i - shift + 1):
            a, b = A.top(h - i), B.top(j - 1)
            if not graph.adjacent(a % graph.n, b % graph.n):
                raise ConstructionError(f"junction pair ({a}, {b}) is not an edge")
            pairs.append((a, b))
    return pairs


def insert_block(
    graph: CirculantPowerGraph, weights: dict[Edge, int], after: int, m: int, default: int
) -> tuple[CirculantPowerGraph, dict[Edge, int]]:
    """Insert m new vertices between ``after`` and ``after + 1``.

    Surviving old edges keep their weights, new edges get ``default``.  Every
    old edge that stops being an edge must weigh ``default``, which keeps the
    weighted degree of every old vertex unchanged.  New vertices occupy
    positions after+1 .. after+m of the enlarged cycle.
    """
    n = graph.n
    new = CirculantPowerGraph(n + m, graph.k)

    def old_index(x: int) -> int | None:
        if x <= after:
            return x
        if x <= after + m:
            return None
        return x - m

    out = {}
    for e in new.edges():
        a, b = new.endpoints(e)
        oa, ob = old_index(a), old_index(b)
        if oa is None or ob is None:
            out[e] = default
        else:
            out[e] = weights[graph.canonical(oa, ob)]
    kept = {graph.canonical(old_index(a), old_index(b))
            for a, b in (new.endpoints(e) for e in new.edges())
            if old_index(a) is not None and old_index(b) is not None}
    dropped = [e for e in weights if e not in kept]
    if any(weights[e] != default for e in dropped):
        raise ConstructionError("insertion would drop an edge whose weight differs from the default")
    return new, out


def find_uniform_gap(graph: CirculantPowerGraph, weights: dict[Edge, int], value: int) -> int | None:
    """Lowest i such that every edge of length k crossing the gap (i, i+1) weighs ``value``.

    Those are exactly the edges an insertion after i removes.
    """
    n, k = graph.n, graph.k
    for i in range(n):
        if all(weights[graph.canonical(j, j + k)] == value for j in range(i - k + 1, i + 1)):
            return i
    return None
