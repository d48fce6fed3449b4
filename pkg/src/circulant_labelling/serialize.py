"""JSON weighting documents (canonical interchange) and DOT export."""

from __future__ import annotations

import json
from typing import Any

from .core import CirculantPowerGraph, DomainError, EdgeWeighting, TotalWeighting

TOOL_VERSION = "0.1.0"


class DocumentError(ValueError):
    """A weighting document is malformed."""


def to_document(w: EdgeWeighting | TotalWeighting, case: str | None = None) -> dict[str, Any]:
    total = isinstance(w, TotalWeighting)
    g = w.graph
    edges = w.edges.weights if total else w.weights
    doc = {
        "n": g.n,
        "k": g.k,
        "mode": "tvs" if total else "s",
        "edgeWeights": [{"u": u, "d": d, "w": edges[(u, d)]} for u, d in g.edges()],
    }
    if total:
        doc["vertexWeights"] = [{"v": v, "w": w.vertex_weights[v]} for v in g.vertices]
    doc["meta"] = {"tool": "circulant-labelling", "version": TOOL_VERSION, "case": case}
    return doc


def dumps(doc: dict) -> str:
    return json.dumps(doc, indent=1, sort_keys=False) + "\n"


def _int_field(item: Any, key: str, where: str) -> int:
    if not isinstance(item, dict) or key not in item:
        raise DocumentError(f"{where}: missing field {key!r}")
    value = item[key]
    if isinstance(value, bool) or not isinstance(value, int):
        raise DocumentError(f"{where}: field {key!r} must be an integer")
    return value


def from_document(doc: Any) -> EdgeWeighting | TotalWeighting:
    if not isinstance(doc, dict):
        raise DocumentError("document must be a JSON object")
    n = _int_field(doc, "n", "document")
    k = _int_field(doc, "k", "document")
    mode = doc.get("mode")
    if mode not in ("s", "tvs"):
        raise DocumentError(f"mode must be 's' or 'tvs', got {mode!r}")
    try:
        g = CirculantPowerGraph(n, k)
    except DomainError as exc:
        raise DocumentError(str(exc)) from exc
    raw = doc.get("edgeWeights")
    if not isinstance(raw, list):
        raise DocumentError("edgeWeights must be a list")
    weights: dict = {}
    for idx, item in enumerate(raw):
        where = f"edgeWeights[{idx}]"
        u, d, x = (_int_field(item, key, where) for key in ("u", "d", "w"))
        if not (0 <= u < n and 1 <= d <= k):
            raise DocumentError(f"{where}: ({u}, {d}) is not a canonical edge of C_{n}^{k}")
        if (u, d) in weights:
            raise DocumentError(f"{where}: duplicate edge ({u}, {d})")
        weights[(u, d)] = x
    try:
        ew = EdgeWeighting(g, weights)
    except ValueError as exc:
        raise DocumentError(str(exc)) from exc
    if mode == "s":
        return ew
    raw_v = doc.get("vertexWeights")
    if not isinstance(raw_v, list):
        raise DocumentError("mode 'tvs' requires a vertexWeights list")
    vertex_w: dict = {}
    for idx, item in enumerate(raw_v):
        where = f"vertexWeights[{idx}]"
        v, x = _int_field(item, "v", where), _int_field(item, "w", where)
        if not 0 <= v < n or v in vertex_w:
            raise DocumentError(f"{where}: bad or repeated vertex {v}")
        vertex_w[v] = x
    try:
        return TotalWeighting(ew, vertex_w)
    except ValueError as exc:
        raise DocumentError(str(exc)) from exc


def loads(text: str) -> EdgeWeighting | TotalWeighting:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise DocumentError(f"invalid JSON: {exc}") from exc
    return from_document(doc)


def to_dot(w: EdgeWeighting | TotalWeighting) -> str:
    total = isinstance(w, TotalWeighting)
    g = w.graph
    edges = w.edges.weights if total else w.weights
    lines = [f"graph C_{g.n}_{g.k} {{"]
    for v in g.vertices:
        lines.append(f"  {v} [weight={w.vertex_weights[v]}];" if total else f"  {v};")
    for u, d in g.edges():
        a, b = g.endpoints((u, d))
        lines.append(f"  {a} -- {b} [weight={edges[(u, d)]}];")
    lines.append("}")
    return "\n".join(lines) + "\n"
