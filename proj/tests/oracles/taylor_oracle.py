#!/usr/bin/env python3
"""Independent brute-force oracle for the frozen fixture values in the C++ tests.

Shares no code with the library. Everything here is computed from first
principles with sympy exact arithmetic: Taylor complexes built from subset
enumeration, homology ranks from sympy's exact matrix rank, power series via
sympy's series expansion.

Run: python3 tests/oracles/taylor_oracle.py
     python3 tests/oracles/taylor_oracle.py --json > fixtures/oracle_values.json
"""
from itertools import combinations
from functools import reduce

import sympy as sp

FIXTURES = {
    "fourgen": [(1, 1, 0, 0), (0, 1, 1, 0), (0, 1, 0, 1), (1, 0, 0, 1)],
    "pentagon": [(1, 0, 1, 0, 0), (1, 0, 0, 1, 0), (0, 1, 0, 1, 0),
                 (0, 1, 0, 0, 1), (0, 0, 1, 0, 1)],
    "avramov": [(2, 0, 0, 0), (1, 1, 0, 0), (0, 1, 1, 0), (0, 0, 1, 1), (0, 0, 0, 2)],
    # vars x1 x2 y1 y2 z
    "katthan": [(1, 2, 0, 0, 0), (0, 0, 1, 2, 0), (0, 0, 0, 0, 3), (1, 1, 1, 1, 0),
                (0, 0, 0, 2, 2), (0, 2, 0, 0, 2), (1, 0, 1, 0, 1), (0, 2, 0, 2, 1)],
}


def lcm(a, b):
    return tuple(max(x, y) for x, y in zip(a, b))


def mdeg(gens, J):
    m = tuple(0 for _ in gens[0])
    for j in J:
        m = lcm(m, gens[j])
    return m


def taylor_tensor_k_ranks(gens, char=0):
    """Betti numbers = homology of T (x) k, with T (x) k having entry +-1
    exactly when the multidegree does not drop."""
    r = len(gens)
    cells = {n: list(combinations(range(r), n)) for n in range(r + 1)}
    ranks = {}
    for n in range(1, r + 1):
        rows = cells[n - 1]
        index = {c: i for i, c in enumerate(rows)}
        M = sp.zeros(len(rows), len(cells[n]))
        for col, J in enumerate(cells[n]):
            mJ = mdeg(gens, J)
            for i, j in enumerate(J):
                face = J[:i] + J[i + 1:]
                if mdeg(gens, face) == mJ:
                    M[index[face], col] = (-1) ** i
        if char:
            M = M.applyfunc(lambda v: v % char)
            ranks[n] = rank_mod_p(M, char)
        else:
            ranks[n] = M.rank()
    betti = []
    for n in range(r + 1):
        dim = len(cells[n])
        b = dim - ranks.get(n, 0) - ranks.get(n + 1, 0)
        betti.append(b)
    while betti and betti[-1] == 0:
        betti.pop()
    return betti


def rank_mod_p(M, p):
    M = [[int(v) % p for v in row] for row in M.tolist()]
    rank = 0
    rows, cols = len(M), len(M[0]) if M else 0
    for c in range(cols):
        piv = next((i for i in range(rank, rows) if M[i][c]), None)
        if piv is None:
            continue
        M[rank], M[piv] = M[piv], M[rank]
        inv = pow(M[rank][c], p - 2, p)
        for i in range(rows):
            if i != rank and M[i][c]:
                f = M[i][c] * inv % p
                M[i] = [(a - f * b) % p for a, b in zip(M[i], M[rank])]
        rank += 1
    return rank


def reduced_homology(faces):
    """faces: set of frozensets, downward closed, includes the empty face."""
    by_dim = {}
    for f in faces:
        by_dim.setdefault(len(f) - 1, []).append(tuple(sorted(f)))
    for k in by_dim:
        by_dim[k].sort()
    top = max(by_dim)
    rk = {}
    for k in range(0, top + 1):
        rows = by_dim.get(k - 1, [])
        cols = by_dim.get(k, [])
        if not rows or not cols:
            rk[k] = 0
            continue
        index = {c: i for i, c in enumerate(rows)}
        M = sp.zeros(len(rows), len(cols))
        for ci, s in enumerate(cols):
            for i in range(len(s)):
                M[index[s[:i] + s[i + 1:]], ci] = (-1) ** i
        rk[k] = M.rank()
    return [len(by_dim.get(k, [])) - rk.get(k, 0) - rk.get(k + 1, 0)
            for k in range(-1, top + 1)]


def serre(ranks, m, order):
    t = sp.symbols("t")
    P = sum(b * t**i for i, b in enumerate(ranks))
    expr = (1 + t) ** m / (1 - t * (P - 1))
    s = sp.series(expr, t, 0, order + 1).removeO()
    return [int(s.coeff(t, k)) for k in range(order + 1)]


def union_find_classes(gens, J):
    parent = {j: j for j in J}

    def find(a):
        while parent[a] != a:
            a = parent[a]
        return a

    for a, b in combinations(J, 2):
        if any(min(x, y) > 0 for x, y in zip(gens[a], gens[b])):
            parent[find(a)] = find(b)
    return len({find(j) for j in J})


def main():
    for name, gens in FIXTURES.items():
        print(f"{name}: betti(QQ) = {taylor_tensor_k_ranks(gens)}"
              f"  betti(F2) = {taylor_tensor_k_ranks(gens, 2)}")
    cycle = {frozenset()} | {frozenset([i]) for i in range(5)} | \
        {frozenset([i, (i + 1) % 5]) for i in range(5)}
    print("5-cycle reduced homology (deg -1..1):", reduced_homology(cycle))
    two_points = {frozenset(), frozenset([0]), frozenset([1])}
    print("two points reduced homology:", reduced_homology(two_points))
    print("serre (1),m=1,T=3:", serre([1], 1, 3))
    print("serre (1,1),m=1,T=3:", serre([1, 1], 1, 3))
    for name, gens in FIXTURES.items():
        b = taylor_tensor_k_ranks(gens)
        print(f"serre {name} T=8:", serre(b, len(gens[0]), 8))
    print("fourgen serre T=4:", serre([1, 4, 4, 1], 4, 4))
    print("avramov cl{1..5}:", union_find_classes(FIXTURES["avramov"], range(5)))
    # minimality scan for katthan: no generator divides another
    g = FIXTURES["katthan"]
    divides = [(i, j) for i in range(8) for j in range(8)
               if i != j and all(a <= b for a, b in zip(g[i], g[j]))]
    print("katthan divisibility pairs:", divides)
    # pentagon multidegree x1..x5 cells
    pg = FIXTURES["pentagon"]
    top = (1, 1, 1, 1, 1)
    cells = [J for n in range(6) for J in combinations(range(5), n)
             if mdeg(pg, J) == top]
    print("pentagon cells of multidegree x1..x5:", len(cells),
          [''.join(str(j + 1) for j in J) for J in cells])
    # coprime pairs of pentagon and gcd-condition scan
    bad = []
    for a, b in combinations(range(5), 2):
        if all(min(x, y) == 0 for x, y in zip(pg[a], pg[b])):
            l = lcm(pg[a], pg[b])
            if not any(all(x <= y for x, y in zip(pg[c], l))
                       for c in range(5) if c not in (a, b)):
                bad.append((a, b))
    print("pentagon gcd-condition failures:", bad)


def frozen_values():
    betti = {name: taylor_tensor_k_ranks(gens) for name, gens in FIXTURES.items()}
    return {
        "tor_ranks": betti,
        "serre_bound_order_8": {name: serre(betti[name], len(gens[0]), 8)
                                for name, gens in FIXTURES.items()},
    }


if __name__ == "__main__":
    import sys
    if "--json" in sys.argv:
        import json
        print(json.dumps(frozen_values(), indent=2))
    else:
        main()
