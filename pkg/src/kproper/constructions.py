"""Named graph families and the explicit colorings behind the upper bounds.

Star-derived families put the hub at vertex 0 and the leaves at 1..n-1.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .coloring import EdgeColoring, color_spanning_tree
from .graph import (
    Graph,
    GraphError,
    bridge_stats,
    cycle_vertices,
    degree_stats,
    find_isomorphism,
    hamilton_path,
    is_tree,
    is_unicyclic,
    iso_classes,
)

FAMILIES = (
    "path", "cycle", "star", "wheel", "complete", "star-plus", "star-plus-plus",
    "broom", "unicyclic-broom-variant", "independence-tree",
)


class ReconstructionError(AssertionError):
    """The single-edge extensions of the broom did not give three classes."""


@dataclass(frozen=True)
class FamilySpec:
    family: str
    n: Optional[int] = None
    variant: Optional[str] = None  # star-plus-plus: disjoint | sharing; broom variant: 1 | 2 | 3
    a: Optional[int] = None
    b: Optional[int] = None


def _need(cond: bool, msg: str) -> None:
    if not cond:
        raise GraphError(msg)


def path(n: int) -> Graph:
    _need(n >= 1, "path requires n >= 1")
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


def cycle(n: int) -> Graph:
    _need(n >= 3, "cycle requires n >= 3")
    return Graph(n, [(i, i + 1) for i in range(n - 1)] + [(0, n - 1)])


def star(n: int) -> Graph:
    _need(n >= 2, "star requires n >= 2")
    return Graph(n, [(0, i) for i in range(1, n)])


def wheel(n: int) -> Graph:
    """Hub 0 joined to every vertex of the rim cycle 1..n-1 (n vertices in total)."""
    _need(n >= 4, "wheel requires n >= 4")
    rim = [(i, i + 1) for i in range(1, n - 1)] + [(1, n - 1)]
    return Graph(n, [(0, i) for i in range(1, n)] + rim)


def complete(n: int) -> Graph:
    _need(n >= 1, "complete requires n >= 1")
    return Graph(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def star_plus(n: int) -> Graph:
    _need(n >= 3, "star-plus requires n >= 3")
    return star(n).add_edge(1, 2)


def star_plus_plus(n: int, variant: str = "disjoint") -> Graph:
    """S_n^+ plus one more leaf-leaf edge, disjoint from (``disjoint``) or
    sharing a vertex with (``sharing``) the edge 1-2."""
    _need(n >= 5, "star-plus-plus requires n >= 5")
    if variant == "disjoint":
        return star_plus(n).add_edge(3, 4)
    if variant == "sharing":
        return star_plus(n).add_edge(2, 3)
    raise GraphError(f"star-plus-plus variant must be 'disjoint' or 'sharing', got {variant!r}")


def broom(n: int) -> Graph:
    """The tree with maximum degree n-2: hub 0 on 1..n-2, pendant n-1 hung on 1."""
    _need(n >= 5, "broom requires n >= 5")
    return Graph(n, [(0, i) for i in range(1, n - 1)] + [(1, n - 1)])


def independence_tree(a: int, b: int) -> Graph:
    """Spider with ``a`` legs of near-equal length and ``b`` edges in total.

    It has b + 1 vertices and maximum degree a.
    """
    _need(2 <= a <= b, f"independence-tree requires 2 <= a <= b, got a={a}, b={b}")
    lengths = [b // a + (1 if i < b % a else 0) for i in range(a)]
    edges = []
    nxt = 1
    for length in lengths:
        prev = 0
        for _ in range(length):
            edges.append((prev, nxt))
            prev = nxt
            nxt += 1
    return Graph(b + 1, edges)


# --------------------------------------------------------------------------
# unicyclic classification

def unicyclic_case(g: Graph) -> int:
    """Which branch of the unicyclic classification ``g`` falls in.

    0: g is a cycle; 1: some max-degree vertex lies off the cycle;
    2: at most two max-degree vertices, all on the cycle, adjacent if two;
    3: everything else.
    """
    if not is_unicyclic(g):
        raise GraphError("graph is not unicyclic")
    deg = g.degrees()
    delta = max(deg)
    on_cycle = cycle_vertices(g)
    if len(on_cycle) == g.n and delta == 2:
        return 0
    tops = [v for v in range(g.n) if deg[v] == delta]
    if any(v not in on_cycle for v in tops):
        return 1
    if len(tops) == 1 or (len(tops) == 2 and g.has_edge(*tops)):
        return 2
    return 3


def unicyclic_value(g: Graph) -> int:
    """px_k predicted for a unicyclic graph: Delta-1 in branch 2, else Delta."""
    delta = degree_stats(g).max_degree
    return delta - 1 if unicyclic_case(g) == 2 else delta


def _cycle_edges(g: Graph) -> list[int]:
    br = bridge_stats(g).bridges
    return [e for e in range(g.m) if e not in br]


def color_unicyclic(g: Graph) -> tuple[EdgeColoring, int]:
    """Drop one cycle edge and properly color the remaining spanning tree.

    Returns the coloring and the claimed px_k value.
    """
    case = unicyclic_case(g)
    if case == 0:
        return color_traceable(g), 2
    deg = g.degrees()
    delta = max(deg)
    cyc = _cycle_edges(g)
    if case == 2:
        tops = [v for v in range(g.n) if deg[v] == delta]
        cands = [e for e in cyc if set(g.edges[e]) >= set(tops)] if len(tops) == 2 \
            else [e for e in cyc if tops[0] in g.edges[e]]
    else:
        cands = cyc

    def tree_delta(e):
        d = list(deg)
        for v in g.edges[e]:
            d[v] -= 1
        return max(d)

    drop = min(cands, key=lambda e: (tree_delta(e), e))
    claimed = delta - 1 if case == 2 else delta
    tree = [e for e in range(g.m) if e != drop]
    return color_spanning_tree(g, tree, claimed), claimed


# --------------------------------------------------------------------------
# other constructive colorings

def color_traceable(g: Graph) -> EdgeColoring:
    """Alternate 1, 2 along a Hamilton path; every other edge gets color 1."""
    p = hamilton_path(g)
    if p is None:
        raise GraphError("graph is not traceable")
    colors = [1] * g.m
    for i, (a, b) in enumerate(zip(p, p[1:])):
        colors[g.edge_id(a, b)] = 1 + i % 2
    return EdgeColoring(tuple(colors), 2)


def color_tree(g: Graph) -> EdgeColoring:
    if not is_tree(g):
        raise GraphError("graph is not a tree")
    return color_spanning_tree(g, range(g.m))


def _snpp_drop(g: Graph) -> tuple[int, int]:
    """Leaves whose hub edges are deleted, located in the canonical variant labels."""
    n = g.n
    for variant, drop in (("disjoint", (1, 3)), ("sharing", (2, 3))):
        ref = star_plus_plus(n, variant)
        phi = find_isomorphism(ref, g)
        if phi is not None:
            return phi[0], (phi[drop[0]], phi[drop[1]])
    raise GraphError("graph is not isomorphic to either S_n^{++} variant")


def color_snpp(g: Graph) -> EdgeColoring:
    """(n-3)-coloring of S_n^{++} from a spanning tree of maximum degree n-3.

    Disjoint added edges 1-2, 3-4: delete hub edges to 1 and 3.
    Added edges 1-2, 2-3 sharing 2: delete hub edges to 2 and 3.
    """
    if g.n < 5:
        raise GraphError("S_n^{++} requires n >= 5")
    hub, (x, y) = _snpp_drop(g)
    drop = {g.edge_id(hub, x), g.edge_id(hub, y)}
    tree = [e for e in range(g.m) if e not in drop]
    return color_spanning_tree(g, tree, g.n - 3)


def derive_figure1_variants(n: int) -> list[Graph]:
    """Single-edge extensions of the broom on n vertices that are unicyclic with
    maximum degree n-2 in the favorable branch, one per isomorphism class."""
    if n < 5:
        raise GraphError("requires n >= 5")
    g0 = broom(n)
    cands = []
    for i in range(n):
        for j in range(i + 1, n):
            if g0.has_edge(i, j):
                continue
            h = g0.add_edge(i, j)
            if degree_stats(h).max_degree == n - 2 and unicyclic_case(h) == 2:
                cands.append(h)
    reps = iso_classes(cands)
    if len(reps) != 3:
        raise ReconstructionError(f"expected 3 classes at n={n}, found {len(reps)}")
    return reps


def build(spec: FamilySpec) -> Graph:
    f, n = spec.family, spec.n
    if f == "independence-tree":
        _need(spec.a is not None and spec.b is not None, "independence-tree needs a and b")
        return independence_tree(spec.a, spec.b)
    _need(n is not None, f"{f} needs n")
    simple = {"path": path, "cycle": cycle, "star": star, "wheel": wheel,
              "complete": complete, "star-plus": star_plus, "broom": broom}
    if f in simple:
        return simple[f](n)
    if f == "star-plus-plus":
        return star_plus_plus(n, spec.variant or "disjoint")
    if f == "unicyclic-broom-variant":
        idx = int(spec.variant or 1)
        _need(1 <= idx <= 3, "unicyclic-broom-variant index must be 1, 2 or 3")
        return derive_figure1_variants(n)[idx - 1]
    raise GraphError(f"unknown family {f!r}; expected one of {', '.join(FAMILIES)}")
