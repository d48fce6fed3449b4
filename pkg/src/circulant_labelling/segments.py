"""Segment gadgets S^(k), R^(k), D^(k) and their {0,1,2} labellings.

A segment is a run of consecutive vertices of C_n^k carrying only the
"short" edges.  Each vertex has a preload ``l(v)``: the weight it will
receive from edges leaving the segment.  The labellings make
``sum of incident weights + l(v)`` hit a prescribed even target.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping

import networkx as nx

from .core import ConstructionError, DomainError

Pair = tuple[int, int]


@dataclass(frozen=True)
class Segment:
    kind: str  # "S", "R" or "D"
    k: int

    def __post_init__(self) -> None:
        if self.kind not in ("S", "R", "D"):
            raise DomainError(f"unknown segment kind {self.kind!r}")
        if self.kind == "D" and self.k < 2:
            raise DomainError("D segments need k >= 2")
        if self.k < 1:
            raise DomainError("segments need k >= 1")

    @property
    def vertices(self) -> range:
        k = self.k
        return {"S": range(0, 2 * k + 1), "R": range(1, 2 * k + 1), "D": range(0, 4 * k + 2)}[self.kind]

    @property
    def top(self) -> int:
        return self.vertices[-1]

    def edges(self) -> list[Pair]:
        k = self.k
        if self.kind == "S":
            return [(i, i + j) for i in range(0, 2 * k) for j in range(1, min(k, 2 * k - i) + 1)]
        if self.kind == "R":
            return [(i, i + j) for i in range(1, 2 * k) for j in range(1, min(k, 2 * k - i) + 1)]
        return [(i, i + j) for i in range(0, 4 * k + 1) for j in range(1, min(k, 4 * k - i + 1) + 1)]

    def preload(self, i: int) -> int:
        k = self.k
        if self.kind == "D":
            return 0 if i <= 3 * k + 1 else 2 * (i - 3 * k - 1)
        return 0 if i <= k else 2 * (i - k)

    def target(self, i: int) -> int:
        return 2 * (i // 2) if self.kind == "D" else 2 * i


def build_segment(kind: str, k: int) -> Segment:
    return Segment(kind, k)


@dataclass(frozen=True)
class SegmentLabelling:
    segment: Segment
    weights: Mapping[Pair, int]

    @property
    def kind(self) -> str:
        return self.segment.kind

    @property
    def k(self) -> int:
        return self.segment.k

    def degree(self, i: int) -> int:
        return sum(w for (a, b), w in self.weights.items() if i in (a, b))

    def loaded_degrees(self) -> dict[int, int]:
        """Weighted degree plus preload, for every segment vertex."""
        wd = {i: self.segment.preload(i) for i in self.segment.vertices}
        for (a, b), w in self.weights.items():
            wd[a] += w
            wd[b] += w
        return wd

    def check_targets(self) -> None:
        for i, x in self.loaded_degrees().items():
            if x != self.segment.target(i):
                raise ConstructionError(
                    f"{self.kind}^({self.k}): vertex {i} reaches {x}, expected {self.segment.target(i)}"
                )

    def ones(self) -> list[Pair]:
        return [e for e, w in self.weights.items() if w == 1]


def _fill(
    vertices, edges: list[Pair], preload, target, fixed: Mapping[Pair, int] | None = None
) -> dict[Pair, int]:
    """Close vertices in increasing order, splitting each deficit over forward edges.

    The open forward edges of a vertex get nondecreasing labels from {0,1,2}
    (in order of the far endpoint) summing to the deficit.
    """
    w: dict[Pair, int] = dict(fixed or {})
    incident: dict[int, list[Pair]] = {v: [] for v in vertices}
    for e in edges:
        incident[e[0]].append(e)
        incident[e[1]].append(e)
    for v in vertices:
        done = sum(w[e] for e in incident[v] if e in w)
        forward = sorted((e for e in incident[v] if e[0] == v and e not in w), key=lambda e: e[1])
        m = len(forward)
        p = target(v) - done - preload(v)
        if not 0 <= p <= 2 * m:
            raise ConstructionError(f"infeasible deficit {p} at vertex {v} with {m} forward edges")
        labels = [0] * (m - p) + [1] * p if p <= m else [1] * (2 * m - p) + [2] * (p - m)
        w.update(zip(forward, labels))
    return w


def forward_fill(segment: Segment) -> SegmentLabelling:
    w = _fill(segment.vertices, segment.edges(), segment.preload, segment.target)
    lab = SegmentLabelling(segment, w)
    lab.check_targets()
    return lab


def label_D(k: int) -> SegmentLabelling:
    """Labelling of D^(k) with loaded degrees 2*floor(i/2).

    Odd k embeds D^(k-1) on v_4..v_{4k+1}, fills it, puts 2 on the long
    edges (v_i, v_{i+k}) for 4 <= i <= 3k+1 and repairs v_2..v_{k+3}
    with a few 0 -> 1 flips.
    """
    seg = Segment("D", k)
    if k % 2 == 0:
        return forward_fill(seg)
    inner = Segment("D", k - 1)
    shift = 4
    w = _fill(
        [i + shift for i in inner.vertices],
        [(a + shift, b + shift) for a, b in inner.edges()],
        lambda i: inner.preload(i - shift),
        lambda i: inner.target(i - shift),
    )
    for i in range(4, 3 * k + 2):
        w[(i, i + k)] = 2
    if k >= 5:
        flips = [(i, i + 1) for i in range(6, k + 3)] + [(6, k + 3), (2, 3), (3, 4), (4, 5), (2, 5)]
    else:
        flips = [(2, 3), (3, 6), (5, 6), (4, 5), (2, 4)]
    for e in flips:
        if w.get(e, 0) != 0:
            raise ConstructionError(f"D^({k}) repair expects edge {e} to be unlabelled or 0")
        w[e] = 1
    edges = seg.edges()
    for e in edges:
        w.setdefault(e, 0)
    if len(w) != len(edges):
        raise ConstructionError(f"D^({k}) labelling touches non-edges")
    lab = SegmentLabelling(seg, w)
    lab.check_targets()
    return lab


def label_segment(kind: str, k: int) -> SegmentLabelling:
    if kind == "D":
        return label_D(k)
    return forward_fill(Segment(kind, k))


@dataclass(frozen=True)
class EulerOnesStructure:
    walks: tuple[tuple[int, ...], ...]  # closed walks, first vertex repeated at the end

    @property
    def vertices(self) -> set[int]:
        return {v for walk in self.walks for v in walk}

    def __len__(self) -> int:
        return len(self.walks)


def euler_circuits(edges: list[Pair]) -> list[tuple[int, ...]]:
    """Closed walks covering each edge once, one per connected component.

    Each walk starts and ends at the lowest vertex of its component;
    neighbours are explored in increasing order, so the result is
    deterministic.
    """
    g = nx.MultiGraph()
    g.add_edges_from(edges)
    odd = [v for v, d in g.degree() if d % 2]
    if odd:
        raise ConstructionError(f"vertex {min(odd)} has odd degree in the weight-1 subgraph")
    walks = []
    for comp in sorted(nx.connected_components(g), key=min):
        start = min(comp)
        adj = {v: sorted(g.neighbors(v)) for v in comp}
        # multiedges cannot occur in simple segment graphs
        used: set[frozenset] = set()
        stack, walk = [start], []
        while stack:
            v = stack[-1]
            while adj[v] and frozenset((v, adj[v][0])) in used:
                adj[v].pop(0)
            if adj[v]:
                u = adj[v].pop(0)
                used.add(frozenset((v, u)))
                stack.append(u)
            else:
                walk.append(stack.pop())
        walks.append(tuple(reversed(walk)))
    return walks


def euler_ones(labelling: SegmentLabelling) -> EulerOnesStructure:
    return EulerOnesStructure(tuple(euler_circuits(labelling.ones())))


@dataclass(frozen=True)
class HamiltonCycleF:
    edges: tuple[Pair, ...]
    degenerate: bool = False


def _hamilton_edges(k: int) -> list[Pair]:
    if k == 1:
        return [(1, 2)]
    if k in (2, 3):
        seq = [1, 3, 4, 2, 1] if k == 2 else [1, 3, 2, 5, 6, 4, 1]
        return [tuple(sorted(p)) for p in zip(seq, seq[1:])]
    lo, hi = k // 2, (k + 1) // 2
    edges = [(i, k - i + 1) for i in range(1, lo + 1)]
    edges += [(i, k - i + 2) for i in range(1, hi + 1)]
    edges += [(i, 3 * k - i) for i in range(k + 2, (3 * k + 1) // 2)]
    edges += [(i, 3 * k - i - 1) for i in range(k + 2, (3 * k) // 2)]
    edges += [(lo + 1, (3 * k) // 2), (k + 1, 2 * k), (2 * k - 1, 2 * k), (2 * k - 2, 2 * k - 1)]
    return [tuple(sorted(e)) for e in edges]


def hamilton_F(k: int) -> HamiltonCycleF:
    """Hamilton cycle of R^(k) through edges of weight 1 or 2."""
    if k < 1:
        raise DomainError("hamilton_F needs k >= 1")
    edges = _hamilton_edges(k)
    if k == 1:
        return HamiltonCycleF(tuple(edges), degenerate=True)
    g = nx.Graph(edges)
    ok = (
        len(edges) == 2 * k
        and g.number_of_edges() == 2 * k
        and set(g.nodes) == set(range(1, 2 * k + 1))
        and all(d == 2 for _, d in g.degree())
        and nx.is_connected(g)
    )
    if not ok:
        raise ConstructionError(f"edge list for k={k} is not a Hamilton cycle of R^({k})")
    return HamiltonCycleF(tuple(edges))


def cycle_order(cycle: HamiltonCycleF) -> list[Pair]:
    """F's edges in traversal order, starting at the lowest vertex towards its lower neighbour."""
    if cycle.degenerate:
        return list(cycle.edges)
    g = nx.Graph(cycle.edges)
    start = min(g.nodes)
    prev, cur = start, min(g.neighbors(start))
    order = [tuple(sorted((prev, cur)))]
    while cur != start:
        nxt = next(u for u in g.neighbors(cur) if u != prev)
        prev, cur = cur, nxt
        order.append(tuple(sorted((prev, cur))))
    return order


@dataclass(frozen=True)
class DeltaLabelling:
    segment: Segment
    deltas: Mapping[Pair, int]

    def degrees(self) -> dict[int, int]:
        wd = {i: 0 for i in self.segment.vertices}
        for (a, b), f in self.deltas.items():
            wd[a] += f
            wd[b] += f
        return wd


def delta_labelling(kind: str, k: int) -> DeltaLabelling:
    """{-1,0,1} labelling of S^(k) or R^(k) with (almost) consecutive degrees.

    +1 on every forward edge leaving v_i for i <= k; -1 on a matching that
    pairs v_{k+1}..v_{2k}, with v_{2k} taking a second -1 when k is odd.
    """
    if kind not in ("S", "R"):
        raise DomainError("delta labelling is defined for S and R segments")
    if k < 2:
        raise DomainError("delta labelling needs k >= 2")
    seg = Segment(kind, k)
    edges = set(seg.edges())
    f = {e: 0 for e in edges}
    size = len(seg.vertices)
    for i in seg.vertices:
        if 2 * k + 1 - size <= i <= k:
            for j in range(1, k + 1):
                if (i, i + j) in edges:
                    f[(i, i + j)] = 1
    for i in range(k + 1, 2 * (k // 2) + k - 3 + 1, 2):
        f[(i, i + 1)] = -1
    f[(2 * k - 1, 2 * k)] = -1
    if k % 2:
        f[(2 * k - 2, 2 * k)] = -1
    return DeltaLabelling(seg, f)


def special_g1_block(k: int = 2, g2: int = 2) -> dict[Pair, int]:
    """Labelling of the 12-vertex block S^(2), v*, D^(1) used when g1 = 1.

    Vertices are block positions 0..11: S^(2) ascending on 0..4, v* on 5,
    D^(1) descending on 6..11.  Every edge of C_n^2 inside the window is
    labelled from {0,1,2}.  Constraints: even weighted degrees, even
    weight-1 degrees, each value used at most three times.  The first
    solution in lexicographic edge order (trying 0, 1, 2) is returned.
    """
    if (k, g2) != (2, 2):
        raise DomainError("the g1 = 1 block only arises for k = 2, g2 = 2")
    size = 2 * g2 + 1 + 1 + 6
    edges = [(a, a + d) for a in range(size) for d in range(1, k + 1) if a + d < size]
    last_use = {}
    for idx, (a, b) in enumerate(edges):
        last_use[a] = idx
        last_use[b] = idx
    closing: dict[int, list[int]] = {}
    for v, idx in last_use.items():
        closing.setdefault(idx, []).append(v)

    wd = [0] * size
    ones = [0] * size
    counts: dict[int, int] = {}
    choice: list[int] = []

    def dfs(idx: int) -> bool:
        if idx == len(edges):
            return True
        a, b = edges[idx]
        for x in (0, 1, 2):
            wd[a] += x
            wd[b] += x
            if x == 1:
                ones[a] += 1
                ones[b] += 1
            closed = closing.get(idx, [])
            ok = True
            added = []
            for v in closed:
                if wd[v] % 2 or ones[v] % 2 or counts.get(wd[v], 0) >= 3:
                    ok = False
                    break
                counts[wd[v]] = counts.get(wd[v], 0) + 1
                added.append(wd[v])
            if ok:
                choice.append(x)
                if dfs(idx + 1):
                    return True
                choice.pop()
            for val in added:
                counts[val] -= 1
            wd[a] -= x
            wd[b] -= x
            if x == 1:
                ones[a] -= 1
                ones[b] -= 1
        return False

    if not dfs(0):
        raise ConstructionError("no labelling of the g1 = 1 block exists")
    return dict(zip(edges, choice))


__all__ = [
    "Segment",
    "SegmentLabelling",
    "EulerOnesStructure",
    "HamiltonCycleF",
    "DeltaLabelling",
    "build_segment",
    "forward_fill",
    "label_D",
    "label_segment",
    "euler_ones",
    "euler_circuits",
    "hamilton_F",
    "cycle_order",
    "delta_labelling",
    "special_g1_block",
]
