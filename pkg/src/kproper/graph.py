"""Simple undirected graphs on vertices 0..n-1 and the structural primitives
the solver needs: graph6 I/O, connectivity, bridges, Hamilton paths,
spanning-tree streams and small-graph isomorphism."""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable, Iterator, Optional

HAMILTON_CAP = 20
ISOMORPHISM_CAP = 10
DEFAULT_TREE_CAP = 10**6


class GraphError(ValueError):
    pass


class Graph6Error(GraphError):
    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} (byte offset {offset})")
        self.offset = offset


class SizeCapError(GraphError):
    """Raised when an exhaustive routine is asked to run beyond its size cap."""


class DisconnectedGraphError(GraphError):
    pass


@dataclass(frozen=True)
class Graph:
    n: int
    edges: tuple[tuple[int, int], ...]
    adj: tuple[frozenset, ...] = field(repr=False, compare=False)
    _edge_index: dict = field(repr=False, compare=False, hash=False)

    def __init__(self, n: int, edges: Iterable[tuple[int, int]] = ()):
        if n < 0:
            raise GraphError("vertex count must be non-negative")
        normalized = []
        seen = set()
        for u, v in edges:
            u, v = int(u), int(v)
            if u == v:
                raise GraphError(f"loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"edge ({u}, {v}) out of range for n={n}")
            e = (u, v) if u < v else (v, u)
            if e in seen:
                raise GraphError(f"parallel edge {e}")
            seen.add(e)
            normalized.append(e)
        nbrs = [set() for _ in range(n)]
        for u, v in normalized:
            nbrs[u].add(v)
            nbrs[v].add(u)
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "edges", tuple(normalized))
        object.__setattr__(self, "adj", tuple(frozenset(s) for s in nbrs))
        object.__setattr__(self, "_edge_index", {e: i for i, e in enumerate(normalized)})

    def __eq__(self, other):
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self.edges == other.edges

    def __hash__(self):
        return hash((self.n, self.edges))

    @property
    def m(self) -> int:
        return len(self.edges)

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def degrees(self) -> list[int]:
        return [len(a) for a in self.adj]

    def edge_id(self, u: int, v: int) -> int:
        key = (u, v) if u < v else (v, u)
        try:
            return self._edge_index[key]
        except KeyError:
            raise GraphError(f"no edge {key}") from None

    def has_edge(self, u: int, v: int) -> bool:
        return ((u, v) if u < v else (v, u)) in self._edge_index

    def incident(self, v: int) -> list[int]:
        """Edge ids incident to ``v``, in increasing order."""
        return sorted(self._edge_index[(v, w) if v < w else (w, v)] for w in self.adj[v])

    def edge_subgraph(self, edge_ids: Iterable[int]) -> "Graph":
        """Spanning subgraph on the same vertex set keeping only ``edge_ids``."""
        return Graph(self.n, [self.edges[i] for i in sorted(set(edge_ids))])

    def add_edge(self, u: int, v: int) -> "Graph":
        return Graph(self.n, list(self.edges) + [(u, v)])

    def remove_edges(self, edge_ids: Iterable[int]) -> "Graph":
        drop = set(edge_ids)
        return Graph(self.n, [e for i, e in enumerate(self.edges) if i not in drop])

    def relabel(self, perm: list[int]) -> "Graph":
        """Graph with vertex ``v`` renamed to ``perm[v]``."""
        return Graph(self.n, [(perm[u], perm[v]) for u, v in self.edges])

    def __repr__(self):
        return f"Graph(n={self.n}, edges={list(self.edges)})"


@dataclass(frozen=True)
class DegreeStats:
    max_degree: int
    min_degree: int
    sequence: tuple[int, ...]


@dataclass(frozen=True)
class BridgeStats:
    bridges: frozenset
    per_vertex: tuple[int, ...]
    b_max: int


def degree_stats(g: Graph) -> DegreeStats:
    d = g.degrees()
    if not d:
        return DegreeStats(0, 0, ())
    return DegreeStats(max(d), min(d), tuple(sorted(d, reverse=True)))


# --------------------------------------------------------------------------
# graph6

def _n_header(n: int) -> str:
    if n <= 62:
        return chr(n + 63)
    if n <= 258047:
        return "~" + "".join(chr(((n >> s) & 63) + 63) for s in (12, 6, 0))
    raise GraphError("graph6 supports at most 68719476735 vertices; refusing n > 258047")


def encode_graph6(g: Graph) -> str:
    bits = []
    for j in range(1, g.n):
        for i in range(j):
            bits.append(1 if g.has_edge(i, j) else 0)
    while len(bits) % 6:
        bits.append(0)
    body = []
    for k in range(0, len(bits), 6):
        val = 0
        for b in bits[k:k + 6]:
            val = (val << 1) | b
        body.append(chr(val + 63))
    return _n_header(g.n) + "".join(body)


def parse_graph6(text: str) -> Graph:
    s = text.strip("\r\n")
    if s.startswith(">>graph6<<"):
        s = s[10:]
        base = 10
    else:
        base = 0
    if not s:
        raise Graph6Error("empty record", base)
    for i, ch in enumerate(s):
        if not 63 <= ord(ch) <= 126:
            raise Graph6Error(f"character {ch!r} outside graph6 range 63..126", base + i)
    if s[0] != "~":
        n, pos = ord(s[0]) - 63, 1
    elif len(s) >= 2 and s[1] == "~":
        raise Graph6Error("8-byte size header not supported", base + 1)
    else:
        if len(s) < 4:
            raise Graph6Error("truncated size header", base + len(s))
        n = 0
        for ch in s[1:4]:
            n = (n << 6) | (ord(ch) - 63)
        if n <= 62:
            raise Graph6Error("long size header used for n <= 62", base)
        pos = 4
    nbits = n * (n - 1) // 2
    need = (nbits + 5) // 6
    body = s[pos:]
    if len(body) < need:
        raise Graph6Error(f"truncated bit field: expected {need} bytes, got {len(body)}",
                          base + len(s))
    if len(body) > need:
        raise Graph6Error("trailing bytes after bit field", base + pos + need)
    edges = []
    k = 0
    for j in range(1, n):
        for i in range(j):
            byte = ord(body[k // 6]) - 63
            if (byte >> (5 - k % 6)) & 1:
                edges.append((i, j))
            k += 1
    if nbits % 6 and need:
        pad = (ord(body[-1]) - 63) & ((1 << (6 - nbits % 6)) - 1)
        if pad:
            raise Graph6Error("nonzero padding bits", base + pos + need - 1)
    return Graph(n, edges)


def read_graph6_lines(lines: Iterable[str]) -> Iterator[tuple[int, Graph]]:
    """Yield ``(line_number, graph)`` for each record; '#' lines and blanks are skipped."""
    for lineno, line in enumerate(lines, 1):
        rec = line.strip()
        if not rec or rec.startswith("#"):
            continue
        yield lineno, parse_graph6(rec)


# --------------------------------------------------------------------------
# connectivity and bridges

def components(g: Graph, skip_edge: Optional[int] = None) -> list[int]:
    """Component label per vertex, optionally ignoring one edge."""
    label = [-1] * g.n
    skip = g.edges[skip_edge] if skip_edge is not None else None
    c = 0
    for s in range(g.n):
        if label[s] >= 0:
            continue
        label[s] = c
        stack = [s]
        while stack:
            u = stack.pop()
            for w in g.adj[u]:
                if label[w] < 0 and (skip is None or {u, w} != set(skip)):
                    label[w] = c
                    stack.append(w)
        c += 1
    return label


def is_connected(g: Graph) -> bool:
    if g.n == 0:
        return False
    return max(components(g)) == 0


def require_connected(g: Graph) -> None:
    if not is_connected(g):
        raise DisconnectedGraphError("graph is not connected")


def bridge_stats(g: Graph) -> BridgeStats:
    require_connected(g)
    disc = [-1] * g.n
    low = [0] * g.n
    bridges = set()
    timer = 0
    # iterative lowpoint DFS; parent tracked by edge id so parallel paths are safe
    for root in range(g.n):
        if disc[root] >= 0:
            continue
        disc[root] = low[root] = timer
        timer += 1
        stack = [(root, -1, iter(g.incident(root)))]
        while stack:
            u, pe, it = stack[-1]
            advanced = False
            for e in it:
                if e == pe:
                    continue
                a, b = g.edges[e]
                w = b if a == u else a
                if disc[w] < 0:
                    disc[w] = low[w] = timer
                    timer += 1
                    stack.append((w, e, iter(g.incident(w))))
                    advanced = True
                    break
                low[u] = min(low[u], disc[w])
            if advanced:
                continue
            stack.pop()
            if stack:
                p = stack[-1][0]
                low[p] = min(low[p], low[u])
                if low[u] > disc[p]:
                    bridges.add(pe)
    per_vertex = [0] * g.n
    for e in bridges:
        u, v = g.edges[e]
        per_vertex[u] += 1
        per_vertex[v] += 1
    return BridgeStats(frozenset(bridges), tuple(per_vertex), max(per_vertex, default=0))


def is_tree(g: Graph) -> bool:
    return g.n >= 1 and g.m == g.n - 1 and is_connected(g)


def is_unicyclic(g: Graph) -> bool:
    return g.n >= 3 and g.m == g.n and is_connected(g)


def edges_form_tree(g: Graph, edge_ids: Iterable[int]) -> bool:
    """True iff the edges form a single tree (acyclic, connected on their endpoints)."""
    ids = list(edge_ids)
    if not ids:
        return False
    parent = {}

    def find(x):
        while parent.setdefault(x, x) != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for e in ids:
        u, v = g.edges[e]
        ru, rv = find(u), find(v)
        if ru == rv:
            return False
        parent[ru] = rv
    roots = {find(x) for x in list(parent)}
    return len(roots) == 1


def cycle_vertices(g: Graph) -> set[int]:
    """Vertices lying on some cycle: endpoints of non-bridge edges."""
    bs = bridge_stats(g)
    out = set()
    for e, (u, v) in enumerate(g.edges):
        if e not in bs.bridges:
            out.update((u, v))
    return out


# --------------------------------------------------------------------------
# Hamilton paths

def hamilton_path(g: Graph) -> Optional[list[int]]:
    """A Hamilton path as a vertex ordering, or None. Bitmask DP, n <= 20."""
    n = g.n
    if n > HAMILTON_CAP:
        raise SizeCapError(f"hamilton_path supports n <= {HAMILTON_CAP}, got {n}")
    if n == 0:
        return None
    if n == 1:
        return [0]
    nbr = [sum(1 << w for w in g.adj[v]) for v in range(n)]
    full = (1 << n) - 1
    # reach[mask] = bitset of end vertices v such that a path covers mask and ends at v
    reach = [0] * (1 << n)
    for v in range(n):
        reach[1 << v] = 1 << v
    for mask in range(1, full + 1):
        ends = reach[mask]
        if not ends:
            continue
        v = 0
        e = ends
        while e:
            if e & 1:
                ext = nbr[v] & ~mask
                while ext:
                    low = ext & -ext
                    w = low.bit_length() - 1
                    reach[mask | low] |= low
                    ext ^= low
            e >>= 1
            v += 1
    if not reach[full]:
        return None
    end = (reach[full] & -reach[full]).bit_length() - 1
    path = [end]
    mask = full
    while mask != (1 << path[-1]):
        v = path[-1]
        prev_mask = mask ^ (1 << v)
        cands = reach[prev_mask] & nbr[v]
        w = (cands & -cands).bit_length() - 1
        path.append(w)
        mask = prev_mask
    path.reverse()
    return path


def hamilton_path_exists(g: Graph) -> bool:
    return hamilton_path(g) is not None


# --------------------------------------------------------------------------
# spanning trees

class SpanningTreeStream:
    """Iterable over spanning trees (frozensets of edge ids) by contraction/deletion.

    After iteration, ``truncated`` tells whether the cap stopped the stream
    before every spanning tree was produced.
    """

    def __init__(self, g: Graph, cap: int = DEFAULT_TREE_CAP):
        require_connected(g)
        self.g = g
        self.cap = cap
        self.truncated = False
        self.count = 0

    def __iter__(self) -> Iterator[frozenset]:
        g = self.g
        if g.n == 1:
            self.count = 1
            yield frozenset()
            return
        for tree in _spanning_trees(g):
            if self.count >= self.cap:
                self.truncated = True
                return
            self.count += 1
            yield tree


def _spanning_trees(g: Graph) -> Iterator[frozenset]:
    n, m = g.n, g.m
    chosen: list[int] = []

    def find(parent, x):
        while parent[x] != x:
            x = parent[x]
        return x

    def connectable(parent, i):
        # can chosen edges plus edges i.. still connect all vertices?
        p = list(parent)
        comps = sum(1 for v in range(n) if p[v] == v)
        for e in range(i, m):
            u, v = g.edges[e]
            ru, rv = find(p, u), find(p, v)
            if ru != rv:
                p[ru] = rv
                comps -= 1
                if comps == 1:
                    return True
        return comps == 1

    def rec(i, parent, comps):
        if comps == 1:
            yield frozenset(chosen)
            return
        if i == m:
            return
        u, v = g.edges[i]
        ru, rv = find(parent, u), find(parent, v)
        if ru != rv:
            # contract: keep edge i
            p2 = list(parent)
            p2[ru] = rv
            chosen.append(i)
            yield from rec(i + 1, p2, comps - 1)
            chosen.pop()
        # delete: drop edge i, only if the rest can still span
        if connectable(parent, i + 1):
            yield from rec(i + 1, parent, comps)

    yield from rec(0, list(range(n)), n)


def spanning_trees(g: Graph, cap: int = DEFAULT_TREE_CAP) -> SpanningTreeStream:
    return SpanningTreeStream(g, cap)


# --------------------------------------------------------------------------
# isomorphism

def _refine_key(g: Graph) -> list[tuple]:
    deg = g.degrees()
    return [(deg[v], tuple(sorted(deg[w] for w in g.adj[v]))) for v in range(g.n)]


def find_isomorphism(g1: Graph, g2: Graph) -> Optional[list[int]]:
    """A vertex map ``phi`` with g1 edge uv -> g2 edge phi[u]phi[v], or None."""
    if max(g1.n, g2.n) > ISOMORPHISM_CAP:
        raise SizeCapError(f"isomorphism supports n <= {ISOMORPHISM_CAP}")
    if g1.n != g2.n or g1.m != g2.m:
        return None
    k1, k2 = _refine_key(g1), _refine_key(g2)
    if sorted(k1) != sorted(k2):
        return None
    n = g1.n
    order = sorted(range(n), key=lambda v: (-g1.degree(v), v))
    # prefer vertices adjacent to already-placed ones to prune early
    placed_order = []
    remaining = set(order)
    while remaining:
        best = max(remaining, key=lambda v: (sum(1 for w in g1.adj[v] if w in placed_order),
                                             g1.degree(v), -v))
        placed_order.append(best)
        remaining.discard(best)
    phi = [-1] * n
    used = [False] * n

    def rec(i):
        if i == n:
            return True
        v = placed_order[i]
        for w in range(n):
            if used[w] or k1[v] != k2[w]:
                continue
            ok = True
            for u in g1.adj[v]:
                if phi[u] >= 0 and not g2.has_edge(phi[u], w):
                    ok = False
                    break
            if ok:
                # non-edges must map to non-edges as well
                for j in range(i):
                    u = placed_order[j]
                    if u not in g1.adj[v] and g2.has_edge(phi[u], w):
                        ok = False
                        break
            if not ok:
                continue
            phi[v] = w
            used[w] = True
            if rec(i + 1):
                return True
            phi[v] = -1
            used[w] = False
        return False

    return list(phi) if rec(0) else None


def are_isomorphic(g1: Graph, g2: Graph) -> bool:
    return find_isomorphism(g1, g2) is not None


def iso_classes(graphs: Iterable[Graph]) -> list[Graph]:
    """First representative of each isomorphism class, in input order."""
    reps: list[Graph] = []
    for g in graphs:
        if not any(are_isomorphic(g, r) for r in reps):
            reps.append(g)
    return reps


def vertex_subsets(n: int, k: int) -> Iterator[tuple[int, ...]]:
    return combinations(range(n), k)
