#!/usr/bin/env python3
"""Search for a planar seam widget spanning a whole crossing row (delta=2).

Attachments: top row t1,t2,t3 and bottom row b1,b2,b3 of the cuttable band
(grid columns 1..3).  Boundary cyclic order t1,t2,t3,b3,b2,b1.  Patterns are
partitions of the attachments induced by track cuts; conditions make jogged
cuts strictly dearer than straight crossings.
"""

import itertools
import sys

import networkx as nx
import numpy as np

# attachment index: t1,t2,t3,b1,b2,b3 = 0..5
PATTERNS = {
    "cross1": (0, 1, 1, 2, 3, 3),
    "cross2": (0, 0, 1, 2, 2, 3),
    "hyb21": (0, 0, 1, 2, 3, 3),
    "hyb12": (0, 1, 1, 2, 2, 3),
    "vpass1": (0, 1, 1, 0, 1, 1),
    "vpass2": (0, 0, 1, 0, 0, 1),
    "halfL1": (0, 1, 1, 2, 1, 1),
    "halfL2": (0, 0, 1, 2, 2, 1),
    "halfR1": (0, 1, 1, 0, 2, 2),
    "halfR2": (0, 0, 1, 0, 0, 2),
}

NCLASS = {name: max(p) + 1 for name, p in PATTERNS.items()}


def planar_in_disk(edges, n_internal):
    g = nx.Graph()
    g.add_nodes_from(range(6 + n_internal))
    g.add_edges_from(edges)
    ring = [(0, 1), (1, 2), (2, 5), (5, 4), (4, 3), (3, 0)]  # t1 t2 t3 b3 b2 b1
    apex = 6 + n_internal
    g.add_edges_from(ring)
    g.add_edges_from((apex, i) for i in range(6))
    ok, _ = nx.check_planarity(g)
    return ok


def indicator_columns(edges, n_internal):
    """Per pattern, per internal labeling: cut indicator over edges."""
    cols = []
    meta = []  # (pattern, labeling index)
    for name, pat in PATTERNS.items():
        ncl = NCLASS[name]
        for assign in itertools.product(range(ncl), repeat=n_internal):
            lab = list(pat) + list(assign)
            cols.append([1 if lab[u] != lab[v] else 0 for (u, v) in edges])
            meta.append(name)
    return np.array(cols, dtype=np.int64).T, meta  # (ne, ncols)


def eval_batch(W, ind, meta):
    costs = W @ ind  # (m, ncols)
    f = {}
    for name in PATTERNS:
        sel = [i for i, nm in enumerate(meta) if nm == name]
        f[name] = costs[:, sel].min(axis=1)
    return f


def check(f):
    qmax = np.maximum(f["cross1"], f["cross2"])
    c = (
        (f["hyb21"] >= qmax + 1)
        & (f["hyb12"] >= qmax + 1)
        & (f["halfL1"] + f["halfR1"] >= f["cross1"] + f["vpass1"] + 1)
        & (f["halfL2"] + f["halfR2"] >= f["cross2"] + f["vpass2"] + 1)
    )
    return c


def main():
    # k = 1 internal, full weight scan over 10 candidate edges
    aa = [(0, 1), (1, 2), (3, 4), (4, 5)]
    for k in (1, 2):
        internals = list(range(6, 6 + k))
        ai = [(a, x) for x in internals for a in range(6)]
        ii = list(itertools.combinations(internals, 2))
        cand = aa + ai + ii
        print(f"k={k}: {len(cand)} candidate edges")
        if k == 1:
            ne = len(cand)
            ind, meta = indicator_columns(cand, k)
            base = 4
            digits = np.array([base**i for i in range(ne)], dtype=np.int64)
            total = base**ne
            for start in range(0, total, 1 << 20):
                idx = np.arange(start, min(start + (1 << 20), total), dtype=np.int64)
                W = (idx[:, None] // digits[None, :]) % base
                f = eval_batch(W, ind, meta)
                good = check(f)
                if good.any():
                    kk = int(np.flatnonzero(good)[0])
                    print("FOUND k=1", list(zip(cand, W[kk].tolist())),
                          {n: int(f[n][kk]) for n in PATTERNS})
                    return 0
            print("  k=1 exhausted")
        else:
            # supports of size <= 8, weights 1..3
            for m in range(4, 9):
                print(f"  support size {m}")
                for support in itertools.combinations(cand, m):
                    # internals must appear
                    touched = set()
                    for (u, v) in support:
                        touched.update((u, v))
                    if not all(x in touched for x in internals):
                        continue
                    if not planar_in_disk(support, k):
                        continue
                    ind, meta = indicator_columns(support, k)
                    base = 3
                    digits = np.array([base**i for i in range(m)], dtype=np.int64)
                    idx = np.arange(base**m, dtype=np.int64)
                    W = (idx[:, None] // digits[None, :]) % base + 1
                    f = eval_batch(W, ind, meta)
                    good = check(f)
                    if good.any():
                        kk = int(np.flatnonzero(good)[0])
                        print("FOUND k=2", list(zip(support, W[kk].tolist())),
                              {n: int(f[n][kk]) for n in PATTERNS})
                        return 0
            print("  k=2 exhausted")
    return 1


if __name__ == "__main__":
    sys.exit(main())
