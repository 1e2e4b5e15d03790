import copy
import json

import pytest

from kproper.certificate import certificate_to_dict, check_certificate, dumps
from kproper.constructions import broom, complete, cycle, path, star, star_plus, wheel
from kproper.graph import Graph
from kproper.solver import solve_px, solve_rx

from oracles import all_subtrees, brute_is_k_good, load, tree_is_proper, tree_is_rainbow


def cert(g, k, rainbow=False):
    return certificate_to_dict((solve_rx if rainbow else solve_px)(g, k))


@pytest.mark.parametrize("n", [3, 4, 5])
def test_roundtrip_all_small_graphs(n):
    for g in load(f"connected{n}.g6"):
        for k in range(2, n + 1):
            for rainbow in (False, True):
                if rainbow and k == 2:
                    continue
                data = json.loads(dumps(cert(g, k, rainbow)))
                res = check_certificate(data)
                assert res.valid, res.reason


def test_roundtrip_exhaustion_certificates():
    for g in (star_plus(6), broom(6), cycle(5)):
        data = cert(g, 3)
        assert check_certificate(data).valid
    assert cert(star_plus(6), 3)["lower_evidence"]["kind"] == "exhaustion"


def witnesses_hold(data, colors, trees=None):
    g = Graph(data["n"], [tuple(e) for e in data["edges"]])
    for ids in data["witnesses"].values():
        ok = tree_is_rainbow(colors, ids) if data["kind"] == "rx" else tree_is_proper(g, colors, ids)
        if not ok:
            return False
    return True


@pytest.mark.parametrize("g,k,rainbow", [
    (star_plus(5), 3, False),
    (broom(5), 4, False),
    (wheel(5), 3, False),
    (path(5), 3, True),
    (cycle(5), 3, True),
])
def test_single_edge_recolor(g, k, rainbow):
    base = cert(g, k, rainbow)
    trees = all_subtrees(g)
    for e in range(g.m):
        for c in range(1, base["value"] + 1):
            if c == base["colors"][e]:
                continue
            data = copy.deepcopy(base)
            data["colors"][e] = c
            res = check_certificate(data, recheck_exhaustion=False)
            assert res.valid == witnesses_hold(data, data["colors"])
            if res.valid:
                # still a genuine k-good coloring
                assert brute_is_k_good(g, data["colors"], k, rainbow, trees)
            else:
                assert res.failing is not None and len(res.failing) == k


def test_recolor_outside_palette_rejected():
    data = cert(star(5), 3)
    data["colors"][0] = data["value"] + 1
    assert not check_certificate(data).valid


def test_dropped_witness_edge_names_s():
    data = cert(path(5), 3)
    key = "0,2,4"
    data["witnesses"][key] = data["witnesses"][key][:-1]
    res = check_certificate(data)
    assert not res.valid and res.failing == (0, 2, 4)


def test_missing_witness_key_names_s():
    data = cert(cycle(5), 3)
    del data["witnesses"]["1,2,3"]
    res = check_certificate(data)
    assert not res.valid and res.failing == (1, 2, 3) and "missing" in res.reason


def test_witness_with_cycle_rejected():
    data = cert(complete(4), 4)
    data["witnesses"]["0,1,2,3"] = [0, 1, 3]  # triangle 0-1-2
    res = check_certificate(data)
    assert not res.valid and "cycle" in res.reason


def test_understated_value_rejected():
    # a claimed px of 1 for K_4 at k = 3 fails at the witnesses or the lower bound
    data = cert(complete(4), 3)
    data["value"] = 1
    data["colors"] = [1] * 6
    data["lower_evidence"]["value"] = 1
    assert not check_certificate(data).valid


def test_lower_bound_mismatch():
    data = cert(star(5), 3)
    data["lower_evidence"]["value"] = 3
    assert not check_certificate(data).valid
    data = cert(star(5), 3)
    data["lower_evidence"] = {"kind": "bound", "value": 4, "provenance": ["trivial-2"]}
    assert check_certificate(data).valid  # provenance labels are informational
    data = cert(path(5), 3)
    data["lower_evidence"] = {"kind": "bound", "value": 2, "provenance": []}
    data["value"] = 3
    assert not check_certificate(data).valid


def test_exhaustion_recheck():
    data = cert(star_plus(6), 3)
    row = data["lower_evidence"]["searched"][0]
    row["nodes"] += 1
    assert check_certificate(data, recheck_exhaustion=False).valid
    res = check_certificate(data)
    assert not res.valid and "reproduce" in res.reason
    data = cert(star_plus(6), 3)
    data["lower_evidence"]["searched"] = []
    assert not check_certificate(data).valid


def test_exhaustion_cannot_hide_a_coloring():
    # claim px_3(S_6^+) = 5 by exhausting palette 4, which does have a coloring
    data = cert(star_plus(6), 3)
    data["value"] = 5
    data["lower_evidence"] = {"kind": "exhaustion", "value": 5, "searched": [
        dict(data["lower_evidence"]["searched"][0]),
        {"palette": 4, "leaves_checked": 0, "nodes": 0},
    ]}
    res = check_certificate(data)
    assert not res.valid and "admits" in res.reason


@pytest.mark.parametrize("field,value", [
    ("schema_version", 2), ("kind", "pc"), ("graph6", "D?"), ("n", 6),
    ("edges", [[0, 1]]), ("k", 9),
])
def test_malformed_fields(field, value):
    data = cert(star_plus(5), 3)
    data[field] = value
    assert not check_certificate(data).valid


def test_dumps_is_stable():
    a = dumps(cert(wheel(6), 4))
    b = dumps(cert(wheel(6), 4))
    assert a == b and json.loads(a)["value"] == 2
