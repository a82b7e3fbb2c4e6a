#!/usr/bin/env python3
"""Search for a planar cell widget with strictly submodular 4-corner cut costs.

A widget attaches to the four grid vertices around a cell (NW, NE, SE, SW in
clockwise order).  For a corner-label pattern, its cost is the min internal
cut.  We need, writing f2H/f2V for the track-passage patterns, f3* for the
four T-junction patterns and f4 for the full crossing:

    (H)  f3top + f3bot >= f4 + f2H + 1
    (V)  f3left + f3right >= f4 + f2V + 1

which makes a jogged (hybrid) track pair strictly more expensive than a
straight crossing anywhere in the assembled gadget.
"""

import itertools
import sys

import networkx as nx
import numpy as np

ATT = ["NW", "NE", "SE", "SW"]  # clockwise

# patterns: label per attachment (classes are abstract ints)
PATTERNS = {
    "f2H": (0, 0, 1, 1),   # {NW,NE | SE,SW}
    "f2V": (0, 1, 1, 0),   # {NW,SW | NE,SE}
    "f3top": (0, 0, 1, 2),
    "f3bot": (0, 1, 2, 2),
    "f3left": (0, 1, 2, 0),
    "f3right": (0, 1, 1, 2),
    "f4": (0, 1, 2, 3),
}


def planar_in_disk(edges, n_internal):
    """Widget embeddable in a disk with attachments on the boundary in order."""
    g = nx.MultiGraph()
    g.add_nodes_from(range(4 + n_internal))
    g.add_edges_from(edges)
    # boundary ring + outside apex pins the cyclic order NW,NE,SE,SW
    ring = [(0, 1), (1, 2), (2, 3), (3, 0)]
    apex = 4 + n_internal
    g.add_edges_from(ring)
    g.add_edges_from((apex, i) for i in range(4))
    ok, _ = nx.check_planarity(nx.Graph(g))
    return ok


def pattern_costs_matrix(edges, n_internal):
    """For each pattern, a (n_labelings, n_edges) 0/1 cut-indicator matrix.

    Internal vertices range over 4 classes; attachment labels fixed by the
    pattern.  Returns dict pattern -> indicator matrix.
    """
    out = {}
    internals = list(itertools.product(range(4), repeat=n_internal))
    for name, pat in PATTERNS.items():
        rows = []
        for assign in internals:
            lab = list(pat) + list(assign)
            rows.append([1 if lab[u] != lab[v] else 0 for (u, v) in edges])
        out[name] = np.array(rows, dtype=np.int16)
    return out


def search(n_internal, candidate_edges, wmax, chunk=200_000):
    ne = len(candidate_edges)
    if not planar_in_disk(candidate_edges, n_internal):
        return None
    mats = pattern_costs_matrix(candidate_edges, n_internal)
    # all weight vectors in {0..wmax}^ne, weight 0 = edge absent
    base = wmax + 1
    total = base ** ne
    print(f"  {ne} edges, {total} weightings")
    digits = np.array([base ** i for i in range(ne)], dtype=np.int64)
    best = None
    for start in range(0, total, chunk):
        idx = np.arange(start, min(start + chunk, total), dtype=np.int64)
        W = (idx[:, None] // digits[None, :]) % base  # (m, ne)
        f = {}
        for name, mat in mats.items():
            costs = W @ mat.T.astype(np.int64)  # (m, n_labelings)
            f[name] = costs.min(axis=1)
        condH = f["f3top"] + f["f3bot"] >= f["f4"] + f["f2H"] + 1
        condV = f["f3left"] + f["f3right"] >= f["f4"] + f["f2V"] + 1
        good = condH & condV
        if good.any():
            k = int(np.flatnonzero(good)[0])
            wvec = W[k]
            report = {name: int(f[name][k]) for name in PATTERNS}
            best = (wvec.tolist(), report)
            return best
    return best


def main():
    # k internal vertices: nodes 0..3 att, 4..3+k internal
    for k in range(0, 4):
        nodes = list(range(4 + k))
        all_edges = [
            (u, v)
            for u, v in itertools.combinations(nodes, 2)
        ]
        # try every subset topology implicitly via weight-0; but cap edge count
        # by enumerating supports of bounded size for k >= 2
        if k <= 1:
            cand = all_edges
            wmax = 3
            print(f"k={k}: full edge set {len(cand)}")
            res = search(k, cand, wmax)
            if res:
                print("FOUND", k, cand, res)
                return
        else:
            # enumerate supports with <= 8 edges, weights {1..3}
            for m in range(4, 9):
                print(f"k={k}, support size {m}")
                found = False
                for support in itertools.combinations(all_edges, m):
                    if not planar_in_disk(support, k):
                        continue
                    mats = pattern_costs_matrix(support, k)
                    base = 3
                    total = base ** m
                    digits = np.array([base ** i for i in range(m)], dtype=np.int64)
                    idx = np.arange(total, dtype=np.int64)
                    W = (idx[:, None] // digits[None, :]) % base + 1
                    f = {}
                    for name, mat in mats.items():
                        costs = W @ mat.T.astype(np.int64)
                        f[name] = costs.min(axis=1)
                    condH = f["f3top"] + f["f3bot"] >= f["f4"] + f["f2H"] + 1
                    condV = f["f3left"] + f["f3right"] >= f["f4"] + f["f2V"] + 1
                    good = condH & condV
                    if good.any():
                        kk = int(np.flatnonzero(good)[0])
                        print("FOUND", k, support, W[kk].tolist(),
                              {name: int(f[name][kk]) for name in PATTERNS})
                        found = True
                        break
                if found:
                    return
    print("no widget found")


if __name__ == "__main__":
    sys.exit(main())
