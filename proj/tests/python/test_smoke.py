import itertools
import os
import subprocess

import pytest

import lbcut

PATH3 = [(1, 2), (2, 3)]
C6 = [(i, i % 6 + 1) for i in range(1, 7)]


def grid(rows, cols):
    edges = []
    for r in range(rows):
        for c in range(cols):
            v = r * cols + c + 1
            if c + 1 < cols:
                edges.append((v, v + 1))
            if r + 1 < rows:
                edges.append((v, v + cols))
    return edges


def test_solve_path():
    r = lbcut.solve_mlbc(3, PATH3, 1, 3, 2)
    assert r["size"] == 1
    assert lbcut.verify_cut(3, PATH3, [1, 3], {(1, 3): 3}, r["cut"])


def test_solve_cycle_matches_oracle():
    for L in range(1, 6):
        got = lbcut.solve_mlbc(6, C6, 1, 4, L)
        ref = lbcut.brute_force_mlbc(6, C6, 1, 4, L)
        assert got["size"] == ref["size"]


def test_random_graphs_match_oracle():
    import random

    rng = random.Random(7)
    for _ in range(30):
        n = rng.randint(3, 6)
        pairs = list(itertools.combinations(range(1, n + 1), 2))
        edges = [p for p in pairs if rng.random() < 0.5]
        s, t = rng.sample(range(1, n + 1), 2)
        L = rng.randint(1, 4)
        got = lbcut.solve_mlbc(n, edges, s, t, L)
        ref = lbcut.brute_force_mlbc(n, edges, s, t, L)
        assert got["size"] == ref["size"]
        assert lbcut.verify_cut(n, edges, [s, t], {(s, t): L + 1}, got["cut"])


def test_multicut_star():
    star = [(1, 2), (1, 3), (1, 4)]
    r = lbcut.solve_mlbmc(4, star, [2, 3, 4], {(2, 3): 3, (2, 4): 3, (3, 4): 3})
    assert r["size"] == 2
    ref = lbcut.brute_force_mlbmc(4, star, [2, 3, 4], {(2, 3): 3, (2, 4): 3, (3, 4): 3})
    assert ref["size"] == 2


def test_threads_identical():
    g = grid(2, 5)
    a = lbcut.solve_mlbc(10, g, 1, 10, 5, threads=1)
    b = lbcut.solve_mlbc(10, g, 1, 10, 5, threads=4)
    assert a["size"] == b["size"] and a["cut"] == b["cut"]


def test_resource_refusal():
    k6 = list(itertools.combinations(range(1, 7), 2))
    with pytest.raises(lbcut.ResourceError):
        lbcut.solve_mlbc(6, k6, 1, 6, 4, table_cap=1000)


def test_bad_input_is_value_error():
    with pytest.raises(ValueError):
        lbcut.solve_mlbc(3, PATH3, 1, 1, 2)
    with pytest.raises(ValueError):
        lbcut.parse_graph("p tw 2 1\n1 5\n")


def test_decomposition():
    td = lbcut.heuristic_decomposition(6, C6)
    assert td["width"] == 2
    assert lbcut.validate_decomposition(6, C6, td["bags"], td["tree_edges"]) == []
    assert lbcut.validate_decomposition(6, C6, [[1, 2]], [])


def test_vector_counts():
    assert [lbcut.count_length_vectors(3, lim) for lim in (1, 2, 3)] == [1, 8, 24]


def test_gadgets():
    b = lbcut.make_butte(3, 5)
    assert b["n"] == 2 + 3 + 5 * 4
    h = lbcut.make_highland(2, [17])
    assert len(h["butte_ridges"]) == 3


def test_reduction_witness():
    out = lbcut.reduce_clique(2, 2, 1, plant=True, seed=3)
    assert out["clique"] is not None
    assert len(out["witness"]) == out["budget"]
    hubs_ok = all(out["s"] in bag and out["t"] in bag for bag in out["path_decomposition"]["bags"])
    assert hubs_ok
    d = lbcut.bfs_distances(out["n"], [e for e in out["edges"] if tuple(e) not in set(map(tuple, out["witness"]))], out["s"])
    assert d[out["t"] - 1] is None or d[out["t"] - 1] > out["L"]


def test_cli_runs():
    cli = os.environ.get("LBCUT_CLI")
    if not cli:
        pytest.skip("LBCUT_CLI not set")
    proc = subprocess.run([cli, "--help"], capture_output=True, text=True)
    assert proc.returncode == 0
