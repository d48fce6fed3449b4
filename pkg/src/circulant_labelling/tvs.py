"""Optimal total vertex-irregular weightings of C_n^k.

Every construction uses labels 1..ceil((n+2k)/(2k+1)) and is verified
before it is returned.
"""

from __future__ import annotations

import logging
from collections import defaultdict
from dataclasses import dataclass, field

from .core import (
    CirculantPowerGraph,
    ConstructionError,
    DomainError,
    EdgeWeighting,
    TotalWeighting,
    ceil_div,
    tvs_formula,
    weighted_degrees,
)
from .layout import (
    PlacedSegment,
    SegmentTiling,
    StarWeighting,
    find_uniform_gap,
    insert_block,
    staircase,
)
from .segments import Segment, euler_circuits, label_segment, special_g1_block

log = logging.getLogger(__name__)


@dataclass
class EulerWalkPlan:
    walks: list[tuple[int, ...]] = field(default_factory=list)

    @property
    def odd_starts(self) -> set[int]:
        """V_0: start vertices of walks of odd length."""
        return {w[0] for w in self.walks if (len(w) - 1) % 2}


@dataclass
class TvsResult:
    weighting: TotalWeighting
    case: str
    details: dict = field(default_factory=dict)


def _finish(graph, edge_w: dict, vertex_w: dict, case: str, details=None) -> TvsResult:
    tw = TotalWeighting(EdgeWeighting(graph, dict(edge_w)), dict(vertex_w))
    s = tvs_formula(graph.n, graph.k)
    if not weighted_degrees(tw).is_irregular():
        raise ConstructionError(f"tvs construction ({case}) for n={graph.n}, k={graph.k} is not irregular")
    if tw.max_label != s:
        raise ConstructionError(f"tvs construction ({case}) uses label {tw.max_label}, expected {s}")
    return TvsResult(tw, case, details or {})


def kn_total_scheme(n: int) -> TotalWeighting:
    """C_n^k with n = 2k+1 is K_n: w(ij) = 2 iff i+j >= n, w(i) = 1 iff 2i < n."""
    if n < 5 or n % 2 == 0:
        raise DomainError("the K_n scheme needs odd n >= 5")
    g = CirculantPowerGraph(n, (n - 1) // 2)
    ew = {}
    for e in g.edges():
        a, b = g.endpoints(e)
        ew[e] = 2 if a + b >= n else 1
    vw = {v: 1 if 2 * v < n else 2 for v in g.vertices}
    return TotalWeighting(EdgeWeighting(g, ew), vw)


def _signed(v: int, n: int) -> int:
    """Index in -k..k+1 for vertex v of C_{2k+2}."""
    k = (n - 2) // 2
    return v if v <= k + 1 else v - n


def antipodal_edge_weights(k: int) -> dict:
    """Edge part shared by the n = 2k+2 total and edge schemes."""
    n = 2 * k + 2
    g = CirculantPowerGraph(n, k)
    ew = {}
    for e in g.edges():
        i, j = (_signed(x, n) for x in g.endpoints(e))
        light = abs(i) + abs(j) <= k or (abs(i) + abs(j) == k + 1 and max(i, j) <= 0)
        ew[e] = 1 if light else 2
    return ew


def antipodal_scheme_total(k: int) -> TotalWeighting:
    if k < 2:
        raise DomainError("antipodal scheme needs k >= 2")
    n = 2 * k + 2
    g = CirculantPowerGraph(n, k)
    lo, hi = -ceil_div(k, 2), k // 2
    vw = {v: 1 if lo <= _signed(v, n) <= hi else 2 for v in g.vertices}
    return TotalWeighting(EdgeWeighting(g, antipodal_edge_weights(k)), vw)


def _assign_block_labels(vertices, star_degrees, labels) -> dict[int, int]:
    """Give vertices with equal w*-degree distinct labels from ``labels``.

    Greedy by ascending degree then vertex index.
    """
    groups = defaultdict(list)
    for v in sorted(vertices):
        groups[star_degrees[v]].append(v)
    out = {}
    for value in sorted(groups):
        members = groups[value]
        if len(members) > len(labels):
            raise ConstructionError(
                f"{len(members)} vertices share w*-degree {value}; only {len(labels)} labels available"
            )
        for v, lab in zip(members, labels):
            out[v] = lab
    return out


def _junction_with_extra(graph, A, B, star: int, h: int, g: int) -> list[tuple[int, int]]:
    """Weight-2 edges around an extra vertex placed between two max ends.

    When the higher segment is one step larger (h = g + 1) the corrected
    displayed rule is used.  For h = g that rule cannot separate the block,
    so v* takes the top a vertices of A and top b of B with a + 2b = 2g + 1:
    both top runs shift up by 2 and v* lands on B's vacated value.  Against a
    D segment only multiplicity three is needed, and v* joins the top g
    vertices of A plus the top of D.
    """
    if h == g + 1:
        pairs = staircase(graph, A, B, h, shift=1)
        pairs += [(star, A.top(h - i)) for i in range(1, min(g + 1, h) + 1)]
        pairs += [(star, B.top(i - 1)) for i in range(1, g + 2)]
        return pairs
    if h != g:
        raise ConstructionError(f"unsupported junction h={h}, g={g}")
    if B.segment.kind == "D":
        # values 0..4g each occur three times; v* takes A's vacated 2g + 2
        pairs = staircase(graph, A, B, h, shift=0)
        pairs += [(star, A.top(i)) for i in range(g)]
        pairs.append((star, B.top(0)))
        return pairs
    b = (g + 2) // 2
    a = 2 * g + 1 - 2 * b
    pairs = staircase(graph, A, B, h, shift=0)
    pairs += [(star, A.top(i)) for i in range(a)]
    pairs += [(star, B.top(j)) for j in range(b)]
    return pairs


def _apply(graph, wstar: StarWeighting, pairs) -> None:
    for a, b in pairs:
        if not graph.adjacent(a % graph.n, b % graph.n):
            raise ConstructionError(f"({a}, {b}) is not an edge of C_{graph.n}^{graph.k}")
        wstar.set(a, b, 2)


def _split(n: int, k: int) -> tuple[int, int]:
    t, r = divmod(n, 4 * k + 2)
    if r == 0:
        t, r = t - 1, 4 * k + 2
    return t, r


def case31(n: int, k: int, t: int, r: int) -> TvsResult:
    """2k+3 <= r <= 4k+2: odd s, labels j on the j-th segment."""
    graph = CirculantPowerGraph(n, k)
    s = tvs_formula(n, k)
    if s % 2 == 0:
        raise ConstructionError("case 3.1 expects odd s")
    g = (r - 2) // 4
    extra = r % 2
    h = (r - 2 - extra) // 2 - g
    if 2 * h + 2 * g + 2 + extra != r or h not in (g, g + 1):
        raise ConstructionError(f"segment accounting failed for r={r}: g={g}, h={h}")
    plan = [(Segment("S", k), j % 2 == 0) for j in range(2 * t)]
    plan += [(Segment("S", h), True), (Segment("S", g), False)]
    tiling = SegmentTiling.build(graph, plan, extra_after=2 * t if extra else None)
    wstar = StarWeighting(graph)
    for placed in tiling.segments:
        wstar.add_segment(placed, label_segment("S", placed.segment.k))
    segs = tiling.segments
    for i in range(t):
        wstar.join(segs[2 * i], segs[2 * i + 1], 2)
    A, B = segs[2 * t], segs[2 * t + 1]
    if extra:
        pairs = _junction_with_extra(graph, A, B, tiling.extra, h, g)
    else:
        pairs = staircase(graph, A, B, h, shift=0)
    _apply(graph, wstar, pairs)

    star_deg = wstar.degrees()
    if any(x % 2 for x in star_deg):
        raise ConstructionError("w* has an odd weighted degree")
    c = (s - 1) // 2
    edge_w = {e: c * x + 1 for e, x in wstar.w.items()}
    owner = tiling.owner()
    vertex_w = {v: j for v, j in owner.items() if 1 <= j <= 2 * t + 1}
    last = [v for v, j in owner.items() if j in (0, 2 * t + 2)]
    if len({star_deg[v] for v in last}) != len(last):
        raise ConstructionError("last block of case 3.1 has repeated w*-degrees")
    for v in last:
        vertex_w[v] = 2 * t + 2
    return _finish(graph, edge_w, vertex_w, "3.1", {"t": t, "r": r, "g": g, "h": h, "extra": bool(extra)})


def case32(n: int, k: int, t: int, r: int) -> TvsResult:
    """2 <= r <= 2k+1: even s, Euler-walk alternation on weight-1 edges."""
    graph = CirculantPowerGraph(n, k)
    s = tvs_formula(n, k)
    if s % 2 or t < 1:
        raise ConstructionError("case 3.2 expects even s and t >= 1")
    g1 = (4 * k + r + 1) // 6
    special = g1 == 1
    if special:
        g2, extra = 2, 1
    else:
        extra = 1 if r % 2 == 0 else 0
        g2 = (4 * k + r - 1 - 4 * g1 - extra) // 2
        table = g1 + {0: -1, 1: 0, 2: 0, 3: 1, 4: 1, 5: -1}[(4 * k + r) % 6]
        if table != g2:
            log.warning("g2=%d from vertex count differs from residue table value %d (n=%d, k=%d)",
                        g2, table, n, k)
    if 2 * g2 + 4 * g1 + 3 + extra != 4 * k + 2 + r:
        raise ConstructionError(f"segment accounting failed for r={r}: g1={g1}, g2={g2}")

    plan = [(Segment("S", k), j % 2 == 0) for j in range(2 * t - 2)]
    wstar = StarWeighting(graph)
    if special:
        # S^(2), v*, D^(1) labelled as one 12-vertex block after the S^(k) copies
        segs = [PlacedSegment(j + 1, seg, j * (2 * k + 1), asc) for j, (seg, asc) in enumerate(plan)]
        base = (2 * t - 2) * (2 * k + 1)
        if n - base != 12:
            raise ConstructionError("the g1 = 1 block must have 12 vertices")
        for (a, b), x in special_g1_block(k, g2).items():
            wstar.set(base + a, base + b, x)
        owner = {v: min(v // (2 * k + 1) + 1, 2 * t - 1) for v in graph.vertices}
    else:
        plan += [(Segment("S", g2), True), (Segment("D", g1), False)]
        tiling = SegmentTiling.build(graph, plan, extra_after=2 * t - 2 if extra else None)
        segs = tiling.segments
        owner = tiling.owner()
    for placed in segs:
        wstar.add_segment(placed, label_segment(placed.segment.kind, placed.segment.k))
    for i in range(t - 1):
        wstar.join(segs[2 * i], segs[2 * i + 1], 2)
    if not special:
        A, D = segs[2 * t - 2], segs[2 * t - 1]
        h, g = max(g1, g2), min(g1, g2)
        if extra:
            pairs = _junction_with_extra(graph, A, D, tiling.extra, h, g)
        else:
            pairs = staircase(graph, A, D, h, shift=0)
        _apply(graph, wstar, pairs)

    star_deg = wstar.degrees()
    if any(x % 2 for x in star_deg):
        raise ConstructionError("w* has an odd weighted degree")
    walks = EulerWalkPlan(euler_circuits(wstar.ones()))
    lo, hi = (s - 2) // 2 + 1, s // 2 + 1
    edge_w = {e: (s - 1) * x // 2 + 1 for e, x in wstar.w.items() if x != 1}
    for walk in walks.walks:
        for idx, (a, b) in enumerate(zip(walk, walk[1:])):
            edge_w[graph.canonical(a, b)] = lo if idx % 2 == 0 else hi
    v0 = walks.odd_starts

    vertex_w = {v: j for v, j in owner.items() if 1 <= j <= 2 * t - 2}
    last = [v for v in owner if v not in vertex_w]
    vertex_w.update(_assign_block_labels(last, star_deg, [2 * t - 1, 2 * t, 2 * t + 1]))
    for v in v0:
        vertex_w[v] += 1
    details = {"t": t, "r": r, "g1": g1, "g2": g2, "extra": bool(extra), "V0": sorted(v0),
               "walks": walks.walks}
    return _finish(graph, edge_w, vertex_w, "3.2", details)


def insert_vertex_total(n: int, k: int) -> TvsResult:
    """r in {1, 2k+2}: weight C_{n-1}^k, then splice in one vertex labelled s everywhere."""
    base = construct_tvs_result(n - 1, k)
    s = tvs_formula(n, k)
    if tvs_formula(n - 1, k) != s:
        raise ConstructionError("insertion expects equal strength for n-1 and n")
    old = base.weighting
    gap = find_uniform_gap(old.graph, dict(old.edges.weights), s)
    if gap is None:
        raise ConstructionError(f"no gap with all crossing edges labelled {s} in C_{n - 1}^{k}")
    graph, edge_w = insert_block(old.graph, dict(old.edges.weights), gap, 1, s)
    vertex_w = {}
    for v, x in old.vertex_weights.items():
        vertex_w[v if v <= gap else v + 1] = x
    vertex_w[gap + 1] = s
    return _finish(graph, edge_w, vertex_w, f"3.3<{base.case}", {"inserted": gap + 1, "base": base.details})


def construct_tvs_result(n: int, k: int) -> TvsResult:
    if k < 2:
        raise DomainError("construct_tvs needs k >= 2")
    if n < 2 * k + 1:
        raise DomainError(f"n must be at least 2k+1 = {2 * k + 1}")
    if n == 2 * k + 1:
        tw = kn_total_scheme(n)
        return _finish(tw.graph, tw.edges.weights, tw.vertex_weights, "1")
    if n == 2 * k + 2:
        tw = antipodal_scheme_total(k)
        return _finish(tw.graph, tw.edges.weights, tw.vertex_weights, "2")
    t, r = _split(n, k)
    if r in (1, 2 * k + 2):
        return insert_vertex_total(n, k)
    if r >= 2 * k + 3:
        return case31(n, k, t, r)
    return case32(n, k, t, r)


def construct_tvs(n: int, k: int) -> TotalWeighting:
    return construct_tvs_result(n, k).weighting
