"""JSON certificates for px_k / rx_k values and a checker that re-validates
them without the solver's tree search.

Schema (version 1)::

    {
      "schema_version": 1,
      "kind": "px" | "rx",
      "graph6": "<record>",
      "n": int,
      "edges": [[u, v], ...],         # edge id = list position
      "k": int,
      "value": int,
      "colors": [c_0, ..., c_{m-1}],  # 1..value, indexed by edge id
      "witnesses": {"0,1,2": [edge ids], ...},  # one entry per k-subset
      "lower_evidence": {"kind": "bound", "value": v, "provenance": [...]}
                     | {"kind": "exhaustion", "value": v,
                        "searched": [{"palette": c, "leaves_checked": int, "nodes": int}]}
    }
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from itertools import combinations
from typing import Optional

from .coloring import PROPER, RAINBOW
from .graph import Graph, GraphError, encode_graph6, parse_graph6

SCHEMA_VERSION = 1
KINDS = {PROPER: "px", RAINBOW: "rx"}


def certificate_to_dict(cert) -> dict:
    g = cert.graph
    return {
        "schema_version": SCHEMA_VERSION,
        "kind": KINDS[cert.mode],
        "graph6": encode_graph6(g),
        "n": g.n,
        "edges": [list(e) for e in g.edges],
        "k": cert.k,
        "value": cert.value,
        "colors": list(cert.coloring.colors),
        "witnesses": {",".join(map(str, s)): list(w.tree_edges)
                      for s, w in sorted(cert.witnesses.items())},
        "lower_evidence": cert.lower_evidence,
    }


def dumps(obj) -> str:
    return json.dumps(obj, sort_keys=True, separators=(",", ":"))


@dataclass
class CheckResult:
    valid: bool
    reason: str = ""
    failing: Optional[tuple] = None

    def __bool__(self):
        return self.valid


def _fail(reason, failing=None):
    return CheckResult(False, reason, failing)


def _components_without(n, edges, skip):
    parent = list(range(n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for i, (u, v) in enumerate(edges):
        if i != skip:
            parent[find(u)] = find(v)
    return len({find(v) for v in range(n)})


def _max_bridges_brute(n, edges) -> int:
    """Largest number of cut edges at one vertex, by deleting each edge in turn."""
    base = _components_without(n, edges, -1)
    count = [0] * n
    for i, (u, v) in enumerate(edges):
        if _components_without(n, edges, i) > base:
            count[u] += 1
            count[v] += 1
    return max(count, default=0)


def _steiner_diameter_brute(n, edges, k) -> int:
    """Max over k-subsets of the fewest edges in a tree covering them."""
    adj = [set() for _ in range(n)]
    for u, v in edges:
        adj[u].add(v)
        adj[v].add(u)

    def connected(vs):
        vs = set(vs)
        start = next(iter(vs))
        seen, stack = {start}, [start]
        while stack:
            for w in adj[stack.pop()] & vs:
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        return seen == vs

    conn_sets = [set(c) for r in range(1, n + 1) for c in combinations(range(n), r) if connected(c)]
    return max(min(len(w) - 1 for w in conn_sets if set(s) <= w)
               for s in combinations(range(n), k))


def _tree_ok(edges, ids, s, colors, kind) -> str:
    if not ids or len(set(ids)) != len(ids):
        return "witness is empty or repeats an edge"
    if any(not isinstance(e, int) or not 0 <= e < len(edges) for e in ids):
        return "witness names an unknown edge"
    verts = set()
    parent = {}

    def find(x):
        while parent.setdefault(x, x) != x:
            x = parent[x]
        return x

    for e in ids:
        u, v = edges[e]
        verts.update((u, v))
        ru, rv = find(u), find(v)
        if ru == rv:
            return "witness contains a cycle"
        parent[ru] = rv
    if len({find(v) for v in verts}) != 1:
        return "witness is disconnected"
    if not set(s) <= verts:
        return "witness does not cover S"
    cs = [colors[e] for e in ids]
    if kind == "rx":
        if len(cs) != len(set(cs)):
            return "witness is not rainbow"
    else:
        seen = set()
        for e in ids:
            for v in edges[e]:
                if (v, colors[e]) in seen:
                    return "witness is not proper"
                seen.add((v, colors[e]))
    return ""


def check_certificate(data: dict, recheck_exhaustion: bool = True) -> CheckResult:
    """Re-validate a certificate dict; ``failing`` names the first bad S."""
    if data.get("schema_version") != SCHEMA_VERSION:
        return _fail("unsupported schema_version")
    kind = data.get("kind")
    if kind not in ("px", "rx"):
        return _fail("kind must be 'px' or 'rx'")
    try:
        g = parse_graph6(data["graph6"])
        n, k, value = int(data["n"]), int(data["k"]), int(data["value"])
        edges = [tuple(e) for e in data["edges"]]
        colors = list(data["colors"])
        wit = data["witnesses"]
    except (KeyError, TypeError, ValueError, GraphError) as exc:
        return _fail(f"malformed certificate: {exc}")
    if n != g.n:
        return _fail("n disagrees with graph6 record")
    if len(edges) != len(set(edges)) or {tuple(sorted(e)) for e in edges} != set(g.edges):
        return _fail("edge list disagrees with graph6 record")
    if _components_without(n, edges, -1) != 1:
        return _fail("graph is not connected")
    if not 2 <= k <= n:
        return _fail("k out of range")
    if len(colors) != len(edges):
        return _fail("colors length differs from edge count")
    if any(not isinstance(c, int) or not 1 <= c <= value for c in colors):
        return _fail("color outside 1..value")
    expected = {",".join(map(str, s)): s for s in combinations(range(n), k)}
    if set(wit) - set(expected):
        return _fail("witness map has keys that are not k-subsets")
    for key, s in expected.items():
        if key not in wit:
            return _fail("missing witness", s)
        why = _tree_ok(edges, list(wit[key]), s, colors, kind)
        if why:
            return _fail(why, s)
    return _check_lower(data, g, edges, n, k, value, kind, recheck_exhaustion)


def _check_lower(data, g, edges, n, k, value, kind, recheck) -> CheckResult:
    ev = data.get("lower_evidence") or {}
    if ev.get("value") != value:
        return _fail("lower evidence is for a different value")
    complete = len(edges) == n * (n - 1) // 2
    trivial = 2 if (k >= 3 or not complete) else 1
    independent = max(trivial, _max_bridges_brute(n, edges))
    if kind == "rx":
        independent = max(independent, _steiner_diameter_brute(n, edges, k))
    if ev.get("kind") == "bound":
        if independent != value:
            return _fail(f"claimed lower bound {value} not reproduced (got {independent})")
        return CheckResult(True)
    if ev.get("kind") != "exhaustion":
        return _fail("unknown lower evidence kind")
    searched = ev.get("searched") or []
    palettes = [row.get("palette") for row in searched]
    if not palettes or palettes[-1] != value - 1 or palettes != list(range(palettes[0], value)):
        return _fail("exhaustion record does not cover palettes up to value-1")
    if palettes[0] > independent:
        return _fail("exhaustion record starts above the reproducible lower bound")
    if recheck:
        from .solver import search_palette
        # the graph is rebuilt in certificate edge order so search counts reproduce
        gg = Graph(n, edges)
        mode = RAINBOW if kind == "rx" else PROPER
        for row in searched:
            found, stats = search_palette(gg, k, row["palette"], mode)
            if found is not None:
                return _fail(f"palette {row['palette']} admits a valid coloring")
            if stats != row:
                return _fail(f"exhaustion counts for palette {row['palette']} do not reproduce")
    return CheckResult(True)
