"""Irregular edge weightings of C_n^k with labels 1..s(C_n^k).

In the exceptional family n = 4kt + 2k + 1 (k odd) exactly one edge
carries s_formula(n, k) itself, which there equals the standard bound plus one.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .core import (
    CirculantPowerGraph,
    ConstructionError,
    DomainError,
    EdgeWeighting,
    is_s_exception,
    parity_certificate,
    s_formula,
    weighted_degrees,
)
from .layout import SegmentTiling, StarWeighting, insert_block, staircase
from .segments import Segment, cycle_order, delta_labelling, hamilton_F, label_segment
from .tvs import _junction_with_extra, antipodal_edge_weights


@dataclass
class StrengthResult:
    weighting: EdgeWeighting
    case: str
    details: dict = field(default_factory=dict)


def _finish(graph, weights: dict, case: str, details=None) -> StrengthResult:
    ew = EdgeWeighting(graph, dict(weights))
    s = s_formula(graph.n, graph.k)
    if not weighted_degrees(ew).is_irregular():
        raise ConstructionError(f"s construction ({case}) for n={graph.n}, k={graph.k} is not irregular")
    if ew.max_label != s:
        raise ConstructionError(f"s construction ({case}) uses label {ew.max_label}, expected {s}")
    return StrengthResult(ew, case, details or {})


def kn_edge_scheme(n: int) -> EdgeWeighting:
    """Labels 1..3 on K_n (n odd, n >= 5) with distinct weighted degrees.

    Start from all ones and realise a set of distinct surpluses in
    {0, ..., n} with even sum, each edge absorbing at most 2 extra.
    Havel-Hakimi style: the largest open demand is served by the other
    largest demands.
    """
    if n < 5 or n % 2 == 0:
        raise DomainError("the K_n scheme needs odd n >= 5")
    g = CirculantPowerGraph(n, (n - 1) // 2)
    surplus = list(range(n))
    if sum(surplus) % 2:
        surplus[-1] += 1
    demand = dict(zip(g.vertices, surplus))
    extra = {e: 0 for e in g.edges()}
    open_vertices = set(g.vertices)
    while open_vertices:
        v = max(open_vertices, key=lambda x: (demand[x], x))
        open_vertices.discard(v)
        need = demand[v]
        others = sorted(open_vertices, key=lambda x: (-demand[x], -x))
        for cap in (1, 2):
            for u in others:
                if need == 0:
                    break
                if demand[u] > 0 and extra[g.canonical(u, v)] < cap:
                    extra[g.canonical(u, v)] += 1
                    demand[u] -= 1
                    need -= 1
        if need:
            raise ConstructionError(f"surplus of vertex {v} cannot be realised in K_{n}")
    return EdgeWeighting(g, {e: 1 + x for e, x in extra.items()})


def antipodal_scheme_edges(k: int) -> EdgeWeighting:
    """n = 2k+2: the {1,2} part of the total scheme plus 1 on edges to v_{k+1}."""
    if k < 2:
        raise DomainError("antipodal scheme needs k >= 2")
    n = 2 * k + 2
    g = CirculantPowerGraph(n, k)
    w = antipodal_edge_weights(k)
    apex = k + 1
    lifted = list(range(-k, -((k + 1) // 2))) + list(range(k // 2 + 1, k + 1))
    for i in lifted:
        w[g.canonical(i, apex)] += 1
    return EdgeWeighting(g, w)


@dataclass(frozen=True)
class DecrementPlan:
    """Amounts subtracted along the cycle order of a segment's F."""

    mode: str
    steps: tuple[int, ...]

    @property
    def per_vertex(self) -> int:
        if self.mode == "single-edge":
            return self.steps[0]
        return self.steps[0] + self.steps[1] if self.steps else 0


def decrement_plan(j: int, m: int, t: int, g: int, k: int) -> DecrementPlan:
    """Plan for segment S_j of R^(m) in case 3.1 with 2t copies of R^(k)."""
    size = 2 * m if m > 1 else 1
    if j == 2 * t + 2:
        if g != k:
            return DecrementPlan("none", ())
        return DecrementPlan("uniform", (t + 1,) * size)
    if j == 2 * t + 1:
        if m == 1:
            return DecrementPlan("single-edge", (2 * t + 1,))
        return DecrementPlan("alternating", (t, t + 1) * m)
    if j % 2 == 0:
        return DecrementPlan("uniform", (j // 2,) * size)
    return DecrementPlan("alternating", ((j - 1) // 2, (j + 1) // 2) * m)


def _split(n: int, k: int) -> tuple[int, int]:
    t, r = divmod(n, 4 * k)
    if r == 0:
        t, r = t - 1, 4 * k
    return t, r


def _case31_weights(n: int, k: int, t: int, r: int):
    """Weights, tiling and s for 2k+2 <= r <= 4k (s odd)."""
    graph = CirculantPowerGraph(n, k)
    s = 2 * t + 3
    g = r // 4
    h = g if r % 4 in (0, 1) else g + 1
    extra = r % 2
    if 2 * h + 2 * g + extra != r:
        raise ConstructionError(f"segment accounting failed for r={r}")
    plan = [(Segment("R", k), j % 2 == 0) for j in range(2 * t)]
    plan += [(Segment("R", h), True), (Segment("R", g), False)]
    tiling = SegmentTiling.build(graph, plan, extra_after=2 * t if extra else None)
    wstar = StarWeighting(graph)
    for placed in tiling.segments:
        wstar.add_segment(placed, label_segment("R", placed.segment.k))
    segs = tiling.segments
    for i in range(t):
        wstar.join(segs[2 * i], segs[2 * i + 1], 2)
    A, B = segs[2 * t], segs[2 * t + 1]
    if extra:
        pairs = _junction_with_extra(graph, A, B, tiling.extra, h, g)
    else:
        pairs = staircase(graph, A, B, h, shift=0)
    for a, b in pairs:
        wstar.set(a, b, 2)

    star_deg = wstar.degrees()
    owner = tiling.owner()
    groups: dict[int, list[int]] = {}
    for v, j in owner.items():
        groups.setdefault(2 * t + 2 if j == 0 else j, []).append(v)
    for j, members in groups.items():
        if len({star_deg[v] for v in members}) != len(members):
            raise ConstructionError(f"segment group {j} has repeated w*-degrees")

    c = (s - 1) // 2
    weights = {e: c * x + 1 for e, x in wstar.w.items()}
    # decrease along the Hamilton cycles F so that S_j loses exactly j
    for placed in segs:
        plan = decrement_plan(placed.index, placed.segment.k, t, g, k)
        for (a, b), dec in zip(cycle_order(hamilton_F(placed.segment.k)), plan.steps):
            e = graph.canonical(placed.vertex(a), placed.vertex(b))
            weights[e] -= dec
            if weights[e] < 1:
                raise ConstructionError("decrement pushed a label below 1")
    return graph, weights, tiling, s


def case31_s(n: int, k: int, t: int, r: int) -> StrengthResult:
    graph, weights, tiling, _ = _case31_weights(n, k, t, r)
    return _finish(graph, weights, "3.1", {"t": t, "r": r})


def case32_s(n: int, k: int, t: int, r: int) -> StrengthResult:
    """1 <= r <= 2k+1: extend the weighting of C_{4kt}^k between v* and v**."""
    base_graph, base_w, _, s_base = _case31_weights(4 * k * t, k, t - 1, 4 * k)
    s = s_base + 1
    star = 2 * k - 1  # top of S_1; the top of S_2 follows it
    if r <= 3:
        graph, w = insert_block(base_graph, base_w, star, r, s - 1)
        v = [star + 1 + i for i in range(r)]
        vss = star + r + 1
        if r == 2:
            w[graph.canonical(v[0], star)] = s
            w[graph.canonical(v[0], v[1])] = s
        elif r == 3:
            w[graph.canonical(star, v[0])] = s - 2
            for a, b in ((vss, v[1]), (v[0], v[1]), (v[0], v[2]), (v[1], v[2])):
                w[graph.canonical(a, b)] = s
        return _finish(graph, w, "3.2", {"t": t, "r": r, "inserted": v})

    rp = r // 2
    kind = "S" if r % 2 else "R"
    H = Segment(kind, rp)
    graph, w = insert_block(base_graph, base_w, star, r, s - 1)
    first = H.vertices[0]

    def pos(i: int) -> int:
        return star + 1 + (i - first)

    delta = delta_labelling(kind, rp)
    for (a, b), f in delta.deltas.items():
        w[graph.canonical(pos(a), pos(b))] += f
    details = {"t": t, "r": r, "H": f"{kind}^({rp})", "inserted": [pos(i) for i in H.vertices]}
    if rp % 2:
        # v_{2r'}(H) collides with v* at 2k(s-1) - 1
        if r <= 2 * k:
            w[graph.canonical(star, pos(rp))] = s
            details["raised"] = [star, pos(rp)]
        else:
            e = graph.canonical(pos(k), pos(2 * k))
            w[e] += 1
            details["raised"] = [pos(k), pos(2 * k)]
    return _finish(graph, w, "3.2", details)


def construct_s_result(n: int, k: int) -> StrengthResult:
    if k < 2:
        raise DomainError("construct_s needs k >= 2")
    if n < 2 * k + 1:
        raise DomainError(f"n must be at least 2k+1 = {2 * k + 1}")
    if n == 2 * k + 1:
        ew = kn_edge_scheme(n)
        return _finish(ew.graph, ew.weights, "1")
    if n == 2 * k + 2:
        ew = antipodal_scheme_edges(k)
        return _finish(ew.graph, ew.weights, "2")
    t, r = _split(n, k)
    if r >= 2 * k + 2:
        return case31_s(n, k, t, r)
    return case32_s(n, k, t, r)


def construct_s(n: int, k: int) -> EdgeWeighting:
    return construct_s_result(n, k).weighting


def certify_exception(n: int, k: int) -> dict:
    """Why one label above ceil((n+2k-1)/2k) is forced, plus a witness edge."""
    if not is_s_exception(n, k) or n == 2 * k + 1:
        raise DomainError(f"(n={n}, k={k}) is not an exceptional pair with n > 2k+1")
    ew = construct_s(n, k)
    top = ew.max_label
    witness = sorted(ew.graph.endpoints(e) for e, x in ew.weights.items() if x == top)
    cert = parity_certificate(n, k)
    return {
        "n": n,
        "k": k,
        "s": top,
        "argument": "parity",
        "parity": cert,
        "top_label_edges": witness,
    }
