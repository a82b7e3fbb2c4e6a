#!/usr/bin/env python3
"""Structured seam-widget search: two anti-oriented readout rails + shared hub.

Topology (internal vertices): T1 (reads left top), T2 (right top), B1 (right
bottom), B2 (left bottom), hub m linking all four.  Planar: T1,T2 hug the top
row, B1,B2 the bottom row, m in the middle with cyclic order T1,T2,B1,B2.
"""

import itertools
import sys

import numpy as np

# attachments t1,t2,t3,b1,b2,b3 = 0..5; internals T1=6,T2=7,B1=8,B2=9,m=10
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

EDGES = [
    (6, 0), (6, 1),    # T1 - t1, t2         weights p1, p2
    (7, 1), (7, 2),    # T2 - t2, t3         weights p2, p1 (mirror)
    (8, 4), (8, 5),    # B1 - b2, b3         weights q2, q1
    (9, 3), (9, 4),    # B2 - b1, b2         weights q1, q2
    (10, 6), (10, 7),  # m - T1, T2          weights g, g
    (10, 8), (10, 9),  # m - B1, B2          weights h, h
]

# weight vector = (p1, p2, q1, q2, g, h); per-edge index into it
WIDX = [0, 1, 1, 0, 3, 2, 2, 3, 4, 4, 5, 5]


def main():
    n_internal = 5
    internals = list(itertools.product(range(4), repeat=n_internal))
    ind = {}
    for name, pat in PATTERNS.items():
        rows = []
        for assign in internals:
            lab = list(pat) + list(assign)
            rows.append([1 if lab[u] != lab[v] else 0 for (u, v) in EDGES])
        ind[name] = np.array(rows, dtype=np.int64).T  # (ne, nlab)

    wmax = 6
    grids = np.array(list(itertools.product(range(1, wmax + 1), repeat=6)),
                     dtype=np.int64)  # (m, 6)
    W = grids[:, WIDX]  # (m, 12)
    print(f"{len(grids)} weightings")
    f = {}
    for name in PATTERNS:
        costs = W @ ind[name]
        f[name] = costs.min(axis=1)
    qmax = np.maximum(f["cross1"], f["cross2"])
    good = (
        (f["hyb21"] >= qmax + 1)
        & (f["hyb12"] >= qmax + 1)
        & (f["halfL1"] + f["halfR1"] >= f["cross1"] + f["vpass1"] + 1)
        & (f["halfL2"] + f["halfR2"] >= f["cross2"] + f["vpass2"] + 1)
    )
    print("hyb-only hits:",
          int(((f["hyb21"] >= qmax + 1) & (f["hyb12"] >= qmax + 1)).sum()))
    print("full hits:", int(good.sum()))
    if good.any():
        k = int(np.flatnonzero(good)[0])
        print("weights (p1,p2,q1,q2,g,h):", grids[k].tolist())
        print({n: int(f[n][k]) for n in PATTERNS})
        return 0
    # diagnostics: best margin
    margin = np.minimum(f["hyb21"] - qmax, f["hyb12"] - qmax)
    k = int(margin.argmax())
    print("best hybrid margin:", int(margin[k]), grids[k].tolist(),
          {n: int(f[n][k]) for n in PATTERNS})
    return 1


if __name__ == "__main__":
    sys.exit(main())
