#!/usr/bin/env python3
"""Seam-widget search: top-reader u, bottom-reader v, hub w with own taps.

Mirror-symmetric weights, exhaustive over a small integer grid.  Conditions:
both jog orientations strictly dearer than straight crossings, i-jog pairs
dearer than cross+passage.
"""

import itertools
import sys

import numpy as np

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

# nodes: t1,t2,t3,b1,b2,b3 = 0..5; u=6, v=7, w=8
EDGES = [
    (6, 0), (6, 1), (6, 2),   # u - t1,t2,t3: a1,a2,a1m (mirror a3=a1)
    (7, 3), (7, 4), (7, 5),   # v - b*: b1,b2,b1
    (8, 0), (8, 1), (8, 2),   # w - t*: c1,c2,c1
    (8, 3), (8, 4), (8, 5),   # w - b*: d1,d2,d1
    (6, 8), (8, 7),           # u-w: g, w-v: h
]
# weight-class index per edge: params (a1,a2,b1,b2,c1,c2,d1,d2,g,h)
WIDX = [0, 1, 0, 2, 3, 2, 4, 5, 4, 6, 7, 6, 8, 9]


def main():
    internals = list(itertools.product(range(4), repeat=3))
    ind = {}
    for name, pat in PATTERNS.items():
        rows = []
        for assign in internals:
            lab = list(pat) + list(assign)
            rows.append([1 if lab[u] != lab[v] else 0 for (u, v) in EDGES])
        ind[name] = np.array(rows, dtype=np.int64).T  # (14, 64)

    rng = range(0, 4)
    grids = np.array(list(itertools.product(rng, repeat=10)), dtype=np.int64)
    print(f"{len(grids)} weightings")
    best_margin = -99
    best = None
    chunk = 1 << 17
    hits = []
    for s in range(0, len(grids), chunk):
        G = grids[s:s + chunk]
        W = G[:, WIDX]
        f = {}
        for name in PATTERNS:
            f[name] = (W @ ind[name]).min(axis=1)
        qmax = np.maximum(f["cross1"], f["cross2"])
        m = np.minimum(f["hyb21"], f["hyb12"]) - qmax
        good = (
            (m >= 1)
            & (f["halfL1"] + f["halfR1"] >= f["cross1"] + f["vpass1"] + 1)
            & (f["halfL2"] + f["halfR2"] >= f["cross2"] + f["vpass2"] + 1)
        )
        if good.any():
            k = int(np.flatnonzero(good)[0])
            print("FOUND", G[k].tolist(), {n: int(f[n][k]) for n in PATTERNS})
            return 0
        k = int(m.argmax())
        if m[k] > best_margin:
            best_margin = int(m[k])
            best = (G[k].tolist(), {n: int(f[n][k]) for n in PATTERNS})
    print("no hit; best hybrid margin:", best_margin)
    print(best)
    return 1


if __name__ == "__main__":
    sys.exit(main())
