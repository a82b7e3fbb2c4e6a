#!/usr/bin/env python3
"""Does a universal exchange map exist for the jog-pair inequality?

States = pairs (x,y) in {A,B,C,D}^2 (x = label in an optimal (1,1)-cut,
y = label in an optimal (2,2)-cut).  Seek Phi(state) = (phi, phi') with:
  - Phi(X,X) = (X,X)
  - Phi(B,A) = (A,B), Phi(D,C) = (D,C)   [attachment constraints]
  - on every single-coordinate move, at most one component of Phi changes.
If Phi exists, f(2,1)+f(1,2) <= f(1,1)+f(2,2) for every widget, i.e. no
widget can penalize both jog orientations.
"""

import itertools
import sys

CLS = "ABCD"
STATES = [(x, y) for x in CLS for y in CLS]
IDX = {s: i for i, s in enumerate(STATES)}

FORCED = {
    ("A", "A"): ("A", "A"),
    ("B", "B"): ("B", "B"),
    ("C", "C"): ("C", "C"),
    ("D", "D"): ("D", "D"),
    ("B", "A"): ("A", "B"),
    ("D", "C"): ("D", "C"),
}

MOVES = []
for (x, y) in STATES:
    for x2 in CLS:
        if x2 > x:
            MOVES.append(((x, y), (x2, y)))
    for y2 in CLS:
        if y2 > y:
            MOVES.append(((x, y), (x, y2)))

VALS = [(p, q) for p in CLS for q in CLS]


def ok(assign, s, v):
    for (a, b) in MOVES:
        if a == s and b in assign:
            w = assign[b]
        elif b == s and a in assign:
            w = assign[a]
        else:
            continue
        if (v[0] != w[0]) + (v[1] != w[1]) > 1:
            return False
    return True


def dfs(assign, todo):
    if not todo:
        return dict(assign)
    s = todo[0]
    for v in VALS:
        if ok(assign, s, v):
            assign[s] = v
            r = dfs(assign, todo[1:])
            if r:
                return r
            del assign[s]
    return None


def main():
    assign = dict(FORCED)
    # sanity: forced part consistent
    for s, v in FORCED.items():
        del assign[s]
        if not ok(assign, s, v):
            print("forced part inconsistent")
            return 1
        assign[s] = v
    todo = [s for s in STATES if s not in FORCED]
    r = dfs(assign, todo)
    if r:
        print("EXCHANGE MAP EXISTS -> zero-sum theorem holds:")
        for s in STATES:
            print(f"  ({s[0]},{s[1]}) -> {r[s]}")
        return 0
    print("no exchange map")
    return 2


if __name__ == "__main__":
    sys.exit(main())
