"""Edge colorings and the proper / rainbow S-tree checkers.

A tree is grown one leaf at a time from a seed vertex; a new edge ``uv``
(``u`` already in the tree) keeps the tree proper iff its color differs from
every tree edge at ``u``, and keeps it rainbow iff its color is new to the
tree. Every proper (rainbow) tree can be built this way, so a breadth-first
search over growth states reaches exactly the vertex sets that carry a
proper (rainbow) spanning tree, smallest sets first.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Optional, Sequence

from .graph import (
    Graph,
    GraphError,
    SizeCapError,
    degree_stats,
    edges_form_tree,
    is_tree,
    require_connected,
)

SEARCH_CAP = 10

PROPER = "proper"
RAINBOW = "rainbow"


class ColoringError(ValueError):
    pass


@dataclass(frozen=True)
class EdgeColoring:
    """Colors per edge id, drawn from the palette ``1..palette``."""

    colors: tuple[int, ...]
    palette: int

    def __post_init__(self):
        object.__setattr__(self, "colors", tuple(int(c) for c in self.colors))
        for i, c in enumerate(self.colors):
            if not 1 <= c <= self.palette:
                raise ColoringError(f"edge {i} has color {c} outside 1..{self.palette}")

    @classmethod
    def of(cls, colors: Sequence[int], palette: Optional[int] = None) -> "EdgeColoring":
        colors = tuple(colors)
        return cls(colors, palette if palette is not None else max(colors, default=1))

    @property
    def used_colors(self) -> int:
        return len(set(self.colors))

    def recolor(self, edge: int, color: int) -> "EdgeColoring":
        c = list(self.colors)
        c[edge] = color
        return EdgeColoring(tuple(c), max(self.palette, color))


@dataclass(frozen=True)
class TreeWitness:
    s: tuple[int, ...]
    tree_edges: tuple[int, ...]

    def vertices(self, g: Graph) -> set[int]:
        out = set()
        for e in self.tree_edges:
            out.update(g.edges[e])
        return out


@dataclass(frozen=True)
class ChiPrimeResult:
    chi_prime: int
    witness: EdgeColoring


@dataclass
class VerifyResult:
    valid: bool
    failing: Optional[tuple[int, ...]]
    witnesses: dict

    def __bool__(self):
        return self.valid


def _check_coloring(g: Graph, col: EdgeColoring) -> None:
    if len(col.colors) != g.m:
        raise ColoringError(f"coloring has {len(col.colors)} entries for {g.m} edges")


def _require_tree(g: Graph, tree_edges: Iterable[int]) -> list[int]:
    ids = sorted(set(tree_edges))
    if any(not 0 <= e < g.m for e in ids) or not edges_form_tree(g, ids):
        raise GraphError("edge set is not a tree")
    return ids


def is_proper_tree(g: Graph, col: EdgeColoring, tree_edges: Iterable[int]) -> bool:
    ids = _require_tree(g, tree_edges)
    seen = set()
    for e in ids:
        c = col.colors[e]
        for v in g.edges[e]:
            if (v, c) in seen:
                return False
            seen.add((v, c))
    return True


def is_rainbow_tree(g: Graph, col: EdgeColoring, tree_edges: Iterable[int]) -> bool:
    ids = _require_tree(g, tree_edges)
    cs = [col.colors[e] for e in ids]
    return len(cs) == len(set(cs))


# --------------------------------------------------------------------------
# growth search

def _out_edges(g: Graph, col: EdgeColoring):
    out = [[] for _ in range(g.n)]
    for e, (u, v) in enumerate(g.edges):
        bit = 1 << (col.colors[e] - 1)
        out[u].append((v, e, bit))
        out[v].append((u, e, bit))
    return out


def _grow(g: Graph, col: EdgeColoring, mode: str, seeds: Iterable[int], target: int = 0):
    """BFS over tree-growth states.

    Returns ``(found, first)`` where ``first`` maps each reachable vertex
    bitmask to the edge list of the first (fewest-vertex) tree covering it.
    With ``target`` set, stops at the first mask containing ``target``.
    """
    out = _out_edges(g, col)
    n = g.n
    first: dict[int, tuple[int, ...]] = {}
    frontier = []
    seen = set()
    for s in seeds:
        if mode == PROPER:
            st = (1 << s, (0,) * n)
        else:
            st = (1 << s, 0)
        if st not in seen:
            seen.add(st)
            frontier.append((st, ()))
            first.setdefault(1 << s, ())
            if target and (1 << s) & target == target:
                return (1 << s), first
    while frontier:
        nxt = []
        for (mask, used), tree in frontier:
            m = mask
            while m:
                low = m & -m
                u = low.bit_length() - 1
                m ^= low
                for v, e, bit in out[u]:
                    vb = 1 << v
                    if mask & vb:
                        continue
                    if mode == PROPER:
                        if used[u] & bit:
                            continue
                        nu = list(used)
                        nu[u] |= bit
                        nu[v] = bit
                        st = (mask | vb, tuple(nu))
                    else:
                        if used & bit:
                            continue
                        st = (mask | vb, used | bit)
                    if st in seen:
                        continue
                    seen.add(st)
                    t2 = tree + (e,)
                    nm = mask | vb
                    if nm not in first:
                        first[nm] = t2
                        if target and nm & target == target:
                            return nm, first
                    nxt.append((st, t2))
        frontier = nxt
    return 0, first


def _check_search_size(g: Graph) -> None:
    if g.n > SEARCH_CAP:
        raise SizeCapError(f"exhaustive S-tree search supports n <= {SEARCH_CAP}, got {g.n}")


def _s_tree(g: Graph, col: EdgeColoring, s: Iterable[int], mode: str) -> Optional[TreeWitness]:
    _check_search_size(g)
    _check_coloring(g, col)
    s = tuple(sorted(set(s)))
    if len(s) < 1 or any(not 0 <= v < g.n for v in s):
        raise GraphError(f"vertex set {s} is not a subset of V(G)")
    target = sum(1 << v for v in s)
    found, first = _grow(g, col, mode, [s[0]], target)
    if not found:
        return None
    return TreeWitness(s, tuple(sorted(first[found])))


def proper_s_tree_exists(g: Graph, col: EdgeColoring, s: Iterable[int]) -> Optional[TreeWitness]:
    """Smallest proper tree containing ``s``, or None."""
    return _s_tree(g, col, s, PROPER)


def rainbow_s_tree_exists(g: Graph, col: EdgeColoring, s: Iterable[int]) -> Optional[TreeWitness]:
    return _s_tree(g, col, s, RAINBOW)


def covered_sets(g: Graph, col: EdgeColoring, mode: str = PROPER) -> dict[int, tuple[int, ...]]:
    """Every vertex bitmask spanned by some proper (rainbow) tree, with one such tree."""
    _check_search_size(g)
    _check_coloring(g, col)
    _, first = _grow(g, col, mode, range(g.n))
    return first


def _superset_closure(n: int, masks: Iterable[int]) -> bytearray:
    good = bytearray(1 << n)
    for m in masks:
        good[m] = 1
    for i in range(n):
        bit = 1 << i
        for m in range((1 << n) - 1, -1, -1):
            if m & bit and good[m]:
                good[m ^ bit] = 1
    return good


def verify_k(g: Graph, col: EdgeColoring, k: int, mode: str = PROPER,
             witnesses: bool = True) -> VerifyResult:
    require_connected(g)
    if not 2 <= k <= g.n:
        raise GraphError(f"k must satisfy 2 <= k <= n={g.n}, got {k}")
    first = covered_sets(g, col, mode)
    good = _superset_closure(g.n, first)
    for s in combinations(range(g.n), k):
        if not good[sum(1 << v for v in s)]:
            return VerifyResult(False, s, {})
    wit = {}
    if witnesses:
        by_size = sorted(first, key=lambda m: (bin(m).count("1"), m))
        for s in combinations(range(g.n), k):
            t = sum(1 << v for v in s)
            for m in by_size:
                if m & t == t:
                    wit[s] = TreeWitness(s, tuple(sorted(first[m])))
                    break
    return VerifyResult(True, None, wit)


def verify_k_proper(g: Graph, col: EdgeColoring, k: int, witnesses: bool = True) -> VerifyResult:
    """Check that every k-subset has a proper S-tree.

    On failure ``failing`` is the lexicographically first bad subset.
    """
    return verify_k(g, col, k, PROPER, witnesses)


def verify_k_rainbow(g: Graph, col: EdgeColoring, k: int, witnesses: bool = True) -> VerifyResult:
    return verify_k(g, col, k, RAINBOW, witnesses)


# --------------------------------------------------------------------------
# proper edge colorings

def is_proper_edge_coloring(g: Graph, col: EdgeColoring) -> bool:
    for v in range(g.n):
        cs = [col.colors[e] for e in g.incident(v)]
        if len(cs) != len(set(cs)):
            return False
    return True


def _edge_color_with(g: Graph, palette: int) -> Optional[list[int]]:
    m = g.m
    if m == 0:
        return []
    conflicts = [set() for _ in range(m)]
    for v in range(g.n):
        inc = g.incident(v)
        for a in inc:
            conflicts[a].update(x for x in inc if x != a)
    colors = [0] * m
    # pin the edges at one max-degree vertex to 1..deg (color symmetry)
    hub = max(range(g.n), key=lambda v: (g.degree(v), -v))
    for i, e in enumerate(g.incident(hub)):
        colors[e] = i + 1
    if g.degree(hub) > palette:
        return None

    def pick():
        best, best_key = -1, None
        for e in range(m):
            if colors[e]:
                continue
            blocked = {colors[x] for x in conflicts[e] if colors[x]}
            key = (len(blocked), len(conflicts[e]), -e)
            if best_key is None or key > best_key:
                best, best_key = e, key
        return best

    def rec():
        e = pick()
        if e < 0:
            return True
        blocked = {colors[x] for x in conflicts[e] if colors[x]}
        top = max(colors)
        # a fresh color beyond the current maximum is interchangeable with any other fresh one
        for c in range(1, min(palette, top + 1) + 1):
            if c in blocked:
                continue
            colors[e] = c
            if rec():
                return True
        colors[e] = 0
        return False

    return colors if rec() else None


def chi_prime(g: Graph) -> ChiPrimeResult:
    """Exact edge-chromatic number by backtracking over palettes Delta, Delta+1."""
    if g.n > SEARCH_CAP:
        raise SizeCapError(f"chi_prime supports n <= {SEARCH_CAP}, got {g.n}")
    delta = degree_stats(g).max_degree
    if g.m == 0:
        return ChiPrimeResult(0, EdgeColoring((), 1))
    for c in (delta, delta + 1):
        colors = _edge_color_with(g, c)
        if colors is not None:
            return ChiPrimeResult(c, EdgeColoring(tuple(colors), c))
    raise AssertionError("no proper edge coloring with Delta+1 colors")  # Vizing


def greedy_edge_coloring(g: Graph) -> EdgeColoring:
    """First-fit proper edge coloring; at most 2*Delta-1 colors, used as a fallback bound only."""
    colors = [0] * g.m
    for e, (u, v) in enumerate(g.edges):
        blocked = {colors[x] for x in g.incident(u) + g.incident(v) if colors[x]}
        c = 1
        while c in blocked:
            c += 1
        colors[e] = c
    return EdgeColoring.of(colors)


def _tree_colors(g: Graph, tree_edges: Sequence[int], root: int = 0) -> dict[int, int]:
    tadj = [[] for _ in range(g.n)]
    for e in tree_edges:
        u, v = g.edges[e]
        tadj[u].append((v, e))
        tadj[v].append((u, e))
    out: dict[int, int] = {}
    stack = [(root, -1, 0)]
    while stack:
        v, pe, pc = stack.pop()
        c = 1
        for w, e in sorted(tadj[v], key=lambda t: t[1]):
            if e == pe:
                continue
            if c == pc:
                c += 1
            out[e] = c
            stack.append((w, e, c))
            c += 1
    return out


def proper_edge_color_tree(t: Graph) -> EdgeColoring:
    """Proper edge coloring of a tree with exactly Delta(t) colors (root-to-leaf greedy)."""
    if not is_tree(t) or t.n < 2:
        raise GraphError("input is not a tree on at least 2 vertices")
    cmap = _tree_colors(t, range(t.m))
    delta = degree_stats(t).max_degree
    return EdgeColoring(tuple(cmap[e] for e in range(t.m)), delta)


def color_spanning_tree(g: Graph, tree_edges: Sequence[int], palette: Optional[int] = None) -> EdgeColoring:
    """Properly color a spanning tree of ``g``; the other edges avoid the colors
    at their endpoints when the palette allows, else take color 1."""
    tree_edges = sorted(tree_edges)
    if len(tree_edges) != g.n - 1 or not edges_form_tree(g, tree_edges):
        raise GraphError("edge set is not a spanning tree")
    cmap = _tree_colors(g, tree_edges)
    tdeg = [0] * g.n
    for e in tree_edges:
        for v in g.edges[e]:
            tdeg[v] += 1
    if palette is None:
        palette = max(tdeg)
    colors = [0] * g.m
    at = [set() for _ in range(g.n)]
    for e, c in cmap.items():
        colors[e] = c
        for v in g.edges[e]:
            at[v].add(c)
    for e in range(g.m):
        if colors[e]:
            continue
        u, v = g.edges[e]
        free = [c for c in range(1, palette + 1) if c not in at[u] and c not in at[v]]
        colors[e] = free[0] if free else 1
    return EdgeColoring(tuple(colors), palette)


def rainbow_spanning_tree_coloring(g: Graph, tree_edges: Sequence[int]) -> EdgeColoring:
    """Distinct colors 1..n-1 on a spanning tree, color 1 elsewhere."""
    tree_edges = sorted(tree_edges)
    if len(tree_edges) != g.n - 1 or not edges_form_tree(g, tree_edges):
        raise GraphError("edge set is not a spanning tree")
    colors = [1] * g.m
    for i, e in enumerate(tree_edges):
        colors[e] = i + 1
    return EdgeColoring(tuple(colors), max(1, g.n - 1))
