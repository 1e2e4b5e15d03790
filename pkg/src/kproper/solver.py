"""Exact k-proper index and k-rainbow index by exhaustive palette search.

For each palette size ``c`` from the best lower bound upward, colorings are
enumerated as restricted-growth strings over a fixed edge order (the first
use of a new color is always the smallest unused one), which visits one
coloring per color-permutation class. Two edges that are bridges at a common
vertex must get different colors in any k-proper coloring with k >= 2, so
those pairs are pruned during the descent. The best upper bound always comes
with an explicit coloring, so the search never has to run at that palette.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterator, Optional

from .coloring import (
    PROPER,
    RAINBOW,
    EdgeColoring,
    TreeWitness,
    _grow,
    chi_prime,
    color_spanning_tree,
    greedy_edge_coloring,
    rainbow_spanning_tree_coloring,
    verify_k,
    SEARCH_CAP,
)
from .graph import (
    DEFAULT_TREE_CAP,
    Graph,
    GraphError,
    SizeCapError,
    bridge_stats,
    degree_stats,
    hamilton_path,
    is_connected,
    require_connected,
    spanning_trees,
)

EXHAUSTION_CAP = 8


class BracketError(AssertionError):
    """The exact value fell outside the computed bounds; indicates a bug."""


@dataclass(frozen=True)
class Bound:
    value: int
    provenance: str
    exact: bool = True
    witness: Optional[EdgeColoring] = field(default=None, compare=False, repr=False)


@dataclass
class BoundsReport:
    k: int
    lower: list
    upper: list

    @property
    def best_lower(self) -> int:
        return max(b.value for b in self.lower)

    @property
    def best_upper(self) -> int:
        return min(b.value for b in self.upper)

    def best_upper_bound(self) -> Bound:
        """The tightest upper bound that carries a witness coloring."""
        return min((b for b in self.upper if b.witness is not None), key=lambda b: b.value)

    def to_dict(self) -> dict:
        def row(b):
            d = {"value": b.value, "provenance": b.provenance}
            if not b.exact:
                d["heuristic"] = True
            return d
        return {
            "k": self.k,
            "lower": [row(b) for b in self.lower],
            "upper": [row(b) for b in self.upper],
            "best_lower": self.best_lower,
            "best_upper": self.best_upper,
        }


@dataclass
class PxCertificate:
    graph: Graph
    k: int
    value: int
    coloring: EdgeColoring
    witnesses: dict
    lower_evidence: dict
    mode: str = PROPER
    bounds: Optional[BoundsReport] = None


# --------------------------------------------------------------------------
# bounds

def min_spanning_tree_delta(g: Graph, cap: int = DEFAULT_TREE_CAP):
    """``(value, exact, tree_edges)``: least max-degree over streamed spanning trees."""
    require_connected(g)
    floor = 1 if g.n <= 2 else 2
    if g.n == 1:
        return 0, True, ()
    path = hamilton_path(g) if g.n <= 20 else None
    if path is not None:
        return floor, True, tuple(sorted(g.edge_id(a, b) for a, b in zip(path, path[1:])))
    stream = spanning_trees(g, cap)
    best, best_tree = None, None
    for tree in stream:
        deg = [0] * g.n
        for e in tree:
            u, v = g.edges[e]
            deg[u] += 1
            deg[v] += 1
        d = max(deg)
        if best is None or d < best:
            best, best_tree = d, tuple(sorted(tree))
            if best <= floor:
                return best, True, best_tree
    return best, not stream.truncated, best_tree


def _is_complete(g: Graph) -> bool:
    return g.m == g.n * (g.n - 1) // 2


def _trivial_lower(g: Graph, k: int) -> int:
    # k >= 3: every S-tree has an internal vertex; k = 2: a nonadjacent pair needs one
    if k >= 3 or not _is_complete(g):
        return 2
    return 1


def _check_k(g: Graph, k: int) -> None:
    if not 2 <= k <= g.n:
        raise GraphError(f"k must satisfy 2 <= k <= n={g.n}, got {k}")


def bounds(g: Graph, k: int, tree_cap: int = DEFAULT_TREE_CAP,
           known_lower: Optional[int] = None) -> BoundsReport:
    """Every applicable lower/upper bound on px_k(g)."""
    require_connected(g)
    _check_k(g, k)
    n = g.n
    ds = degree_stats(g)
    bs = bridge_stats(g)
    lower = [Bound(_trivial_lower(g, k), "trivial-2")]
    if bs.b_max:
        lower.append(Bound(bs.b_max, "bridge-b"))
    if known_lower is not None:
        lower.append(Bound(known_lower, "monotonic-from-smaller-k"))

    upper = []
    path = hamilton_path(g) if n <= 20 else None
    if path is not None:
        pe = [g.edge_id(a, b) for a, b in zip(path, path[1:])]
        upper.append(Bound(2 if n >= 3 else 1, "traceable-2",
                           witness=_path_coloring(g, pe)))
    if n <= SEARCH_CAP:
        cp = chi_prime(g)
        upper.append(Bound(cp.chi_prime, "chi-prime", witness=cp.witness))
    else:
        gr = greedy_edge_coloring(g)
        upper.append(Bound(gr.palette, "greedy-proper-edge-coloring", witness=gr))
    upper.append(Bound(ds.max_degree + 1, "delta-plus-1"))
    value, exact, tree = min_spanning_tree_delta(g, tree_cap)
    tree_col = color_spanning_tree(g, tree)
    upper.append(Bound(value, "min-spanning-tree-delta", exact=exact, witness=tree_col))
    upper.append(Bound(ds.max_degree, "delta", witness=tree_col if value == ds.max_degree else None))
    upper.append(Bound(n - 1, "n-1"))
    return BoundsReport(k, lower, upper)


def _path_coloring(g: Graph, path_edges: list[int]) -> EdgeColoring:
    colors = [1] * g.m
    for i, e in enumerate(path_edges):
        colors[e] = 1 + i % 2
    return EdgeColoring(tuple(colors), 2 if g.m > 1 else 1)


def steiner_diameter(g: Graph, k: int) -> int:
    """Max over k-subsets S of the fewest edges in an S-tree."""
    require_connected(g)
    n = g.n
    nbr = [sum(1 << w for w in g.adj[v]) for v in range(n)]
    inf = n + 1
    # connected[mask]: grow connected sets from singletons
    conn = bytearray(1 << n)
    for v in range(n):
        conn[1 << v] = 1
    for mask in range(1, 1 << n):
        if not conn[mask]:
            continue
        reach = 0
        m = mask
        while m:
            low = m & -m
            reach |= nbr[low.bit_length() - 1]
            m ^= low
        reach &= ~mask
        while reach:
            low = reach & -reach
            conn[mask | low] = 1
            reach ^= low
    best = [inf] * (1 << n)
    for mask in range(1, 1 << n):
        if conn[mask]:
            best[mask] = bin(mask).count("1") - 1
    for i in range(n):
        bit = 1 << i
        for mask in range((1 << n) - 1, -1, -1):
            if mask & bit and best[mask] < best[mask ^ bit]:
                best[mask ^ bit] = best[mask]
    return max(best[sum(1 << v for v in s)] for s in combinations(range(n), k))


def rainbow_bounds(g: Graph, k: int, known_lower: Optional[int] = None) -> BoundsReport:
    require_connected(g)
    _check_k(g, k)
    bs = bridge_stats(g)
    lower = [Bound(_trivial_lower(g, k), "trivial-2")]
    if bs.b_max:
        lower.append(Bound(bs.b_max, "bridge-b"))
    lower.append(Bound(steiner_diameter(g, k), "steiner-diameter"))
    if known_lower is not None:
        lower.append(Bound(known_lower, "monotonic-from-smaller-k"))
    tree = next(iter(spanning_trees(g, 1)))
    upper = [Bound(max(1, g.n - 1), "n-1", witness=rainbow_spanning_tree_coloring(g, tree))]
    return BoundsReport(k, lower, upper)


# --------------------------------------------------------------------------
# canonical enumeration

def canonical_colorings(m: int, c: int) -> Iterator[tuple[int, ...]]:
    """All colorings of m slots with colors 1..c in restricted-growth form."""
    cur = [0] * m

    def rec(i, top):
        if i == m:
            yield tuple(cur)
            return
        for col in range(1, min(c, top + 1) + 1):
            cur[i] = col
            yield from rec(i + 1, max(top, col))

    if m == 0:
        yield ()
        return
    yield from rec(0, 0)


def search_order(g: Graph) -> list[int]:
    """Edge ids with edges at max-degree vertices first, ties by id."""
    deg = g.degrees()
    return sorted(range(g.m), key=lambda e: (-max(deg[v] for v in g.edges[e]),
                                             -min(deg[v] for v in g.edges[e]), e))


def _subset_order(g: Graph, k: int) -> list[int]:
    hub = max(range(g.n), key=lambda v: (g.degree(v), -v))
    subs = [sum(1 << v for v in s) for s in combinations(range(g.n), k)]
    return sorted(subs, key=lambda t: (not (t >> hub) & 1, t))


class _Searcher:
    def __init__(self, g: Graph, k: int, c: int, mode: str):
        self.g, self.k, self.c, self.mode = g, k, c, mode
        self.order = search_order(g)
        bridges = bridge_stats(g).bridges
        pos = {e: i for i, e in enumerate(self.order)}
        # earlier-placed bridges that share a vertex with this bridge
        self.clash = []
        for e in self.order:
            if e not in bridges:
                self.clash.append(())
                continue
            u, v = g.edges[e]
            self.clash.append(tuple(pos[f] for f in bridges
                                    if f != e and pos[f] < pos[e] and set(g.edges[f]) & {u, v}))
        self.subsets = _subset_order(g, k)
        self.killers: list[int] = []
        self.leaves = 0
        self.nodes = 0

    def _valid(self, colors: list[int]) -> bool:
        col = EdgeColoring(tuple(colors), self.c)
        for t in self.killers:
            s0 = (t & -t).bit_length() - 1
            found, _ = _grow(self.g, col, self.mode, [s0], t)
            if not found:
                self.killers.remove(t)
                self.killers.insert(0, t)
                return False
        for t in self.subsets:
            if t in self.killers:
                continue
            s0 = (t & -t).bit_length() - 1
            found, _ = _grow(self.g, col, self.mode, [s0], t)
            if not found:
                self.killers.insert(0, t)
                del self.killers[8:]
                return False
        return True

    def run(self) -> Optional[EdgeColoring]:
        g, c = self.g, self.c
        m = g.m
        assign = [0] * m
        colors = [0] * m

        def rec(i, top):
            self.nodes += 1
            if i == m:
                self.leaves += 1
                return self._valid(colors)
            e = self.order[i]
            for col in range(1, min(c, top + 1) + 1):
                if any(assign[j] == col for j in self.clash[i]):
                    continue
                assign[i] = col
                colors[e] = col
                if rec(i + 1, max(top, col)):
                    return True
            assign[i] = 0
            colors[e] = 0
            return False

        if rec(0, 0):
            return EdgeColoring(tuple(colors), c)
        return None


def search_palette(g: Graph, k: int, c: int, mode: str = PROPER):
    """``(coloring or None, stats)`` for one palette size."""
    s = _Searcher(g, k, c, mode)
    found = s.run()
    return found, {"palette": c, "leaves_checked": s.leaves, "nodes": s.nodes}


# --------------------------------------------------------------------------
# solvers

def _solve(g: Graph, k: int, mode: str, report: BoundsReport,
           witnesses: bool) -> PxCertificate:
    lo, hi = report.best_lower, report.best_upper
    if lo > hi:
        raise BracketError(f"bounds crossed: lower {lo} > upper {hi}")
    if lo < hi and g.n > EXHAUSTION_CAP:
        raise SizeCapError(f"exhaustive search supports n <= {EXHAUSTION_CAP}, got {g.n}")
    exhausted = []
    found = None
    for c in range(lo, hi):
        col, stats = search_palette(g, k, c, mode)
        if col is not None:
            found = col
            break
        exhausted.append(stats)
    if found is None:
        found = report.best_upper_bound().witness
        value = hi
    else:
        value = found.palette
    if not lo <= value <= hi:
        raise BracketError(f"value {value} outside [{lo}, {hi}]")
    check = verify_k(g, found, k, mode, witnesses=witnesses)
    if not check.valid:
        raise BracketError(f"witness coloring fails at {check.failing}")
    if value == lo:
        meeting = [b.provenance for b in report.lower if b.value == value]
        evidence = {"kind": "bound", "value": value, "provenance": meeting}
    else:
        evidence = {"kind": "exhaustion", "value": value, "searched": exhausted}
    coloring = EdgeColoring(found.colors, value)
    return PxCertificate(g, k, value, coloring, check.witnesses, evidence, mode, report)


def solve_px(g: Graph, k: int, known_lower: Optional[int] = None,
             tree_cap: int = DEFAULT_TREE_CAP, witnesses: bool = True) -> PxCertificate:
    """Exact px_k(g) with a checkable certificate."""
    if not is_connected(g):
        raise GraphError("graph is not connected")
    if g.n > SEARCH_CAP:
        raise SizeCapError(f"solve_px supports n <= {SEARCH_CAP}, got {g.n}")
    report = bounds(g, k, tree_cap, known_lower)
    return _solve(g, k, PROPER, report, witnesses)


def solve_rx(g: Graph, k: int, known_lower: Optional[int] = None,
             witnesses: bool = True) -> PxCertificate:
    """Exact rx_k(g): fewest colors so every k-subset has a rainbow S-tree."""
    if not is_connected(g):
        raise GraphError("graph is not connected")
    if g.n > SEARCH_CAP:
        raise SizeCapError(f"solve_rx supports n <= {SEARCH_CAP}, got {g.n}")
    report = rainbow_bounds(g, k, known_lower)
    return _solve(g, k, RAINBOW, report, witnesses)


def px_profile(g: Graph, ks=None) -> dict[int, int]:
    """px_k for each k (default 2..n), feeding each value forward as a lower bound."""
    ks = range(2, g.n + 1) if ks is None else sorted(ks)
    out = {}
    prev = None
    for k in ks:
        out[k] = solve_px(g, k, known_lower=prev, witnesses=False).value
        prev = out[k]
    return out
