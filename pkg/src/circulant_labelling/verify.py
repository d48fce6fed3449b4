"""Builder-independent verification, an exhaustive strength oracle, and certificates."""

from __future__ import annotations

import time
from dataclasses import dataclass, field

from .core import (
    CirculantPowerGraph,
    ConstructionError,
    DomainError,
    EdgeWeighting,
    TotalWeighting,
    is_s_exception,
    lower_bound_s_regular,
    lower_bound_s_regular_exact,
    lower_bound_tvs_regular,
    parity_certificate,
    s_formula,
    tvs_formula,
)


@dataclass(frozen=True)
class StrengthReport:
    mode: str
    distinct: bool
    max_label: int
    degree_multiset: tuple[int, ...]
    expected_max: int | None = None
    claimed_optimal: int | None = None
    certificate: str | None = None

    @property
    def matches_expected(self) -> bool:
        return self.expected_max is None or self.expected_max == self.max_label

    @property
    def ok(self) -> bool:
        return self.distinct and self.matches_expected

    def to_dict(self) -> dict:
        return {
            "mode": self.mode,
            "distinct": self.distinct,
            "maxLabel": self.max_label,
            "expectedMax": self.expected_max,
            "matchesExpected": self.matches_expected,
            "degreeMultiset": list(self.degree_multiset),
            "claimedOptimal": self.claimed_optimal,
            "certificate": self.certificate,
        }


def verify(w: EdgeWeighting | TotalWeighting, expected_max: int | None = None) -> StrengthReport:
    """Recompute every weighted degree directly from the stored labels."""
    if isinstance(w, TotalWeighting):
        edges, vertex_w, mode = w.edges.weights, w.vertex_weights, "tvs"
        n = w.graph.n
    else:
        edges, vertex_w, mode = w.weights, {}, "s"
        n = w.graph.n
    wd = [0] * n
    labels = []
    for (u, d), x in edges.items():
        wd[u] += x
        wd[(u + d) % n] += x
        labels.append(x)
    for v, x in vertex_w.items():
        wd[v] += x
        labels.append(x)
    return StrengthReport(
        mode=mode,
        distinct=len(set(wd)) == n,
        max_label=max(labels),
        degree_multiset=tuple(sorted(wd)),
        expected_max=expected_max,
    )


@dataclass(frozen=True)
class OracleBudget:
    max_nodes: int = 20_000_000
    time_limit: float = 60.0

    def __post_init__(self) -> None:
        if self.max_nodes <= 0 or self.time_limit <= 0:
            raise ValueError("budget values must be positive")


@dataclass
class OracleResult:
    value: int | None
    status: str  # "ok" or "timeout"
    nodes: int
    elapsed: float
    tried: list[int] = field(default_factory=list)
    witness: EdgeWeighting | TotalWeighting | None = None

    @property
    def timed_out(self) -> bool:
        return self.status == "timeout"

    def to_dict(self) -> dict:
        return {"value": self.value, "status": self.status, "nodes": self.nodes,
                "elapsed": round(self.elapsed, 3), "tried": self.tried}


class _Timeout(Exception):
    pass


class _Search:
    """Depth-first search for an irregular weighting with labels 1..s.

    Edges are ordered by their larger linear endpoint, so vertices close
    roughly in index order (the first k close last because of the wrap).
    In tvs mode a vertex label is chosen the moment the vertex closes.
    """

    def __init__(self, graph: CirculantPowerGraph, total: bool, budget: OracleBudget):
        self.g = graph
        self.total = total
        self.budget = budget
        self.nodes = 0
        self.deadline = 0.0
        n = graph.n
        pairs = []
        for u, d in graph.edges():
            a, b = u, (u + d) % n
            pairs.append((min(a, b), max(a, b)))
        pairs.sort(key=lambda p: (p[1], p[0]))
        self.pairs = pairs
        remaining = [2 * graph.k] * n
        self.closes: list[list[int]] = []
        for a, b in pairs:
            remaining[a] -= 1
            remaining[b] -= 1
            self.closes.append([v for v in (a, b) if remaining[v] == 0])
        # open incident edges (plus own label) per vertex before step i
        self.left_before = []
        left = [2 * graph.k + (1 if total else 0)] * n
        for a, b in pairs:
            self.left_before.append(list(left))
            left[a] -= 1
            left[b] -= 1

    def run(self, s: int) -> bool:
        self.s = s
        n = self.g.n
        self.wd = [0] * n
        self.used: set[int] = set()
        self.closed = [False] * n
        self.labels = [0] * len(self.pairs)
        self.vlabels: dict[int, int] = {}
        return self._edge(0)

    def witness(self) -> EdgeWeighting | TotalWeighting:
        pairs, vlabels = self.solution
        ew = EdgeWeighting(self.g, {self.g.canonical(a, b): x for (a, b), x in pairs.items()})
        return TotalWeighting(ew, vlabels) if self.total else ew

    def _tick(self) -> None:
        self.nodes += 1
        if self.nodes > self.budget.max_nodes or (self.nodes & 1023 == 0 and time.monotonic() > self.deadline):
            raise _Timeout

    def _feasible(self, idx: int) -> bool:
        """Open vertices can still be matched to distinct unused values."""
        left = self.left_before[idx] if idx < len(self.pairs) else None
        if left is None:
            return True
        s = self.s
        intervals = []
        for v in range(self.g.n):
            if not self.closed[v]:
                intervals.append((self.wd[v] + left[v] * s, self.wd[v] + left[v]))
        intervals.sort()
        taken = set(self.used)
        for hi, lo in intervals:
            x = lo
            while x in taken:
                x += 1
            if x > hi:
                return False
            taken.add(x)
        return True

    def _close(self, vs: list[int], idx: int, j: int = 0) -> bool:
        if j == len(vs):
            return self._edge(idx + 1)
        v = vs[j]
        labels = range(1, self.s + 1) if self.total else (0,)
        for x in labels:
            val = self.wd[v] + x
            if val in self.used:
                continue
            self.used.add(val)
            self.closed[v] = True
            self.wd[v] += x
            self.vlabels[v] = x
            ok = self._close(vs, idx, j + 1)
            self.wd[v] -= x
            self.closed[v] = False
            self.used.discard(val)
            if ok:
                return True
        return False

    def _edge(self, idx: int) -> bool:
        if idx == len(self.pairs):
            self.solution = (dict(zip(self.pairs, self.labels)), dict(self.vlabels))
            return True
        self._tick()
        if not self._feasible(idx):
            return False
        a, b = self.pairs[idx]
        for x in range(1, self.s + 1):
            self.wd[a] += x
            self.wd[b] += x
            self.labels[idx] = x
            ok = self._close(self.closes[idx], idx)
            self.wd[a] -= x
            self.wd[b] -= x
            if ok:
                return True
        return False


def exact_strength(graph: CirculantPowerGraph, mode: str = "s", budget: OracleBudget | None = None,
                   start: int | None = None) -> OracleResult:
    """Least s admitting an irregular weighting, by exhaustive search.

    Starts at the counting lower bound for 2k-regular graphs unless
    ``start`` is given.  Running out of budget yields status "timeout".
    """
    if mode not in ("s", "tvs"):
        raise ValueError(f"unknown mode {mode!r}")
    budget = budget or OracleBudget()
    n, d = graph.n, 2 * graph.k
    if start is None:
        start = lower_bound_s_regular(n, d) if mode == "s" else lower_bound_tvs_regular(n, d)
    search = _Search(graph, mode == "tvs", budget)
    began = time.monotonic()
    search.deadline = began + budget.time_limit
    tried = []
    s = max(1, start)
    try:
        while True:
            tried.append(s)
            if search.run(s):
                return OracleResult(s, "ok", search.nodes, time.monotonic() - began, tried,
                                    search.witness())
            s += 1
    except _Timeout:
        return OracleResult(None, "timeout", search.nodes, time.monotonic() - began, tried)


def certify(n: int, k: int, mode: str) -> dict | None:
    """Optimality certificate: a verified construction at the lower bound.

    Returns None when the construction does not verify.
    """
    # imported here: the builders import this package's core only
    from .strength import construct_s_result
    from .tvs import construct_tvs_result

    graph = CirculantPowerGraph(n, k)
    if mode == "tvs":
        value = tvs_formula(n, k)
        res = construct_tvs_result(n, k)
        report = verify(res.weighting, value)
        if not report.ok:
            return None
        bound = lower_bound_tvs_regular(n, 2 * k)
        return {"n": n, "k": k, "mode": mode, "value": value, "kind": "formula-bound",
                "lowerBound": bound, "constructedMax": report.max_label, "case": res.case,
                "optimal": bound == report.max_label}
    if mode != "s":
        raise DomainError(f"unknown mode {mode!r}")
    value = s_formula(n, k)
    res = construct_s_result(n, k)
    report = verify(res.weighting, value)
    if not report.ok:
        return None
    cert = {"n": n, "k": k, "mode": mode, "value": value, "constructedMax": report.max_label,
            "case": res.case}
    bound = lower_bound_s_regular(graph.n, 2 * k)
    exact = lower_bound_s_regular_exact(graph.n, 2 * k)
    cert["lowerBound"] = bound
    cert["rationalBound"] = f"{exact.numerator}/{exact.denominator}"
    if not is_s_exception(n, k):
        cert.update(kind="formula-bound", optimal=bound == report.max_label)
    elif n == 2 * k + 1:
        cert.update(kind="external", optimal=True,
                    reference="s(K_n) = 3 for complete graphs (known result)")
    else:
        parity = parity_certificate(n, k)
        if parity is None or parity["forced_sum"] % 2 == 0:
            raise ConstructionError(f"exception ({n}, {k}) lacks a parity obstruction")
        cert.update(kind="parity", parity=parity, optimal=bound + 1 == report.max_label)
    return cert
