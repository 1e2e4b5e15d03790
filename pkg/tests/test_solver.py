from itertools import permutations, product

import pytest

from kproper.coloring import verify_k_proper, verify_k_rainbow
from kproper.constructions import complete, cycle, path, star, star_plus, wheel, broom
from kproper.graph import Graph, GraphError, SizeCapError, bridge_stats, spanning_trees
from kproper.solver import (
    bounds,
    canonical_colorings,
    min_spanning_tree_delta,
    px_profile,
    search_order,
    solve_px,
    solve_rx,
    steiner_diameter,
)

from oracles import brute_index, load


def provs(side):
    return {b.provenance: b.value for b in side}


def test_bounds_star():
    rep = bounds(star(6), 3)
    assert provs(rep.lower)["bridge-b"] == 5
    assert provs(rep.upper)["delta"] == 5
    assert rep.best_lower == rep.best_upper == 5


def test_bounds_complete():
    rep = bounds(complete(5), 3)
    assert provs(rep.upper)["traceable-2"] == 2
    assert provs(rep.lower)["trivial-2"] == 2
    assert rep.best_lower == rep.best_upper == 2
    cert = solve_px(complete(5), 3)
    assert cert.lower_evidence["kind"] == "bound"


def test_bounds_min_degree_half():
    # C_6 with the three long diagonals: 3-regular on 6 vertices
    g = cycle(6)
    for a, b in ((0, 3), (1, 4), (2, 5)):
        g = g.add_edge(a, b)
    assert min(g.degrees()) * 2 >= g.n
    assert "traceable-2" in provs(bounds(g, 3).upper)


def test_bounds_upper_ladder():
    rep = bounds(broom(6), 3)
    up = provs(rep.upper)
    assert up["chi-prime"] == 4 and up["delta-plus-1"] == 5 and up["n-1"] == 5
    assert up["min-spanning-tree-delta"] == 4
    assert "traceable-2" not in up


def test_bounds_known_lower():
    rep = bounds(path(5), 4, known_lower=2)
    assert provs(rep.lower)["monotonic-from-smaller-k"] == 2


def test_bounds_heuristic_flag():
    g = star(6).add_edge(1, 2).add_edge(3, 4)
    rep = bounds(g, 3, tree_cap=1)
    mst = [b for b in rep.upper if b.provenance == "min-spanning-tree-delta"][0]
    assert not mst.exact
    assert rep.to_dict()["upper"][[b.provenance for b in rep.upper].index("min-spanning-tree-delta")]["heuristic"]


def test_bounds_reject_bad_input():
    with pytest.raises(GraphError):
        bounds(Graph(4, [(0, 1), (2, 3)]), 3)
    with pytest.raises(GraphError):
        bounds(path(4), 5)


def test_solve_px_examples():
    assert solve_px(path(5), 3).value == 2
    assert solve_px(star(4), 3).value == 3
    assert solve_px(star_plus(5), 3).value == 3


def test_solve_px_k2():
    assert solve_px(complete(4), 2).value == 1
    assert solve_px(path(4), 2).value == 2
    assert solve_px(star(5), 2).value == 4


def test_solve_rx_examples():
    for t in load("trees5.g6"):
        assert solve_rx(t, 3).value == 4
    assert solve_rx(complete(3), 3).value == 2
    # frozen from oracles.brute_index(cycle(5), 3, rainbow=True)
    assert solve_rx(cycle(5), 3).value == 3


def test_solve_caps():
    g = star(9).add_edge(1, 2).add_edge(3, 4).add_edge(5, 6)
    with pytest.raises(SizeCapError):
        solve_px(g, 3)
    # closed brackets need no exhaustion even past the cap
    assert solve_px(star(9), 3).value == 8


def test_min_spanning_tree_delta_examples():
    t = broom(6)
    assert min_spanning_tree_delta(t)[:2] == (4, True)
    assert min_spanning_tree_delta(cycle(6))[:2] == (2, True)
    assert min_spanning_tree_delta(wheel(5))[:2] == (2, True)
    # oracle: full enumeration of W_5's spanning trees
    best = min(max(sum(1 for e in t if v in wheel(5).edges[e]) for v in range(5))
               for t in spanning_trees(wheel(5)))
    assert best == 2


@pytest.mark.parametrize("n", [4, 5, 6])
def test_min_spanning_tree_delta_vs_full_stream(n):
    for g in load(f"connected{n}.g6"):
        value, exact, tree = min_spanning_tree_delta(g)
        full = min(max(sum(1 for e in t if v in g.edges[e]) for v in range(n))
                   for t in spanning_trees(g))
        assert exact and value == full
        assert len(tree) == n - 1


def test_steiner_diameter():
    assert steiner_diameter(path(5), 2) == 4
    assert steiner_diameter(star(5), 3) == 3
    assert steiner_diameter(complete(5), 5) == 4


@pytest.mark.parametrize("m,c", [(m, c) for m in range(0, 7) for c in range(1, 4)])
def test_canonical_enumeration_complete(m, c):
    canon = list(canonical_colorings(m, c))
    assert len(canon) == len(set(canon))
    expanded = set()
    for cs in canon:
        for perm in permutations(range(1, c + 1)):
            expanded.add(tuple(perm[x - 1] for x in cs))
    assert expanded == set(product(range(1, c + 1), repeat=m))


def test_search_order_puts_hub_edges_first():
    g = star_plus(6)
    order = search_order(g)
    assert all(0 in g.edges[e] for e in order[:5])


@pytest.mark.parametrize("n", [3, 4, 5, 6])
def test_px_matches_product_oracle(n):
    for g in load(f"connected{n}.g6"):
        if g.m > (7 if n <= 5 else 6):
            continue
        for k in range(3, n + 1):
            assert solve_px(g, k).value == brute_index(g, k, max_c=5)


def test_rx_matches_product_oracle():
    for g in load("connected4.g6") + [cycle(5), path(5), star_plus(5)]:
        for k in range(3, g.n + 1):
            assert solve_rx(g, k).value == brute_index(g, k, rainbow=True)


@pytest.mark.parametrize("n", [3, 4, 5, 6])
def test_solver_invariants(n):
    for g in load(f"connected{n}.g6"):
        b = bridge_stats(g).b_max
        values = []
        for k in range(2, n + 1):
            cert = solve_px(g, k)
            rep = cert.bounds
            assert rep.best_lower <= cert.value <= rep.best_upper
            assert cert.value >= b
            assert verify_k_proper(g, cert.coloring, k, witnesses=False).valid
            assert cert.coloring.palette == cert.value
            values.append(cert.value)
        assert values == sorted(values)
        if n <= 5:
            for k in range(3, n + 1):
                rc = solve_rx(g, k)
                assert verify_k_rainbow(g, rc.coloring, k, witnesses=False).valid
                assert values[k - 2] <= rc.value <= n - 1


def test_px_profile_feeds_forward():
    assert px_profile(star(5)) == {2: 4, 3: 4, 4: 4, 5: 4}


def test_exhaustion_evidence_shape():
    cert = solve_px(star_plus(6), 3)
    assert cert.value == 4
    ev = cert.lower_evidence
    assert ev["kind"] == "exhaustion"
    assert [r["palette"] for r in ev["searched"]] == [3]
    assert ev["searched"][0]["leaves_checked"] > 0


def test_solver_is_deterministic():
    g = load("connected6.g6")[40]
    a, b = solve_px(g, 3), solve_px(g, 3)
    assert a.coloring == b.coloring and a.lower_evidence == b.lower_evidence
