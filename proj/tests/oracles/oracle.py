"""Brute-force reference computations used to freeze expected values in the
C++ tests. Shares no code with the library: graphs are dicts of edge colors,
distances come from explicit path enumeration.

Run: python3 tests/oracles/oracle.py
"""
import itertools


def partner(v):
    return v ^ 1


def edges(n):
    return [(u, v) for u in range(n) for v in range(u + 1, n) if v != partner(u)]


def coloring_from_code(n, code):
    return {e: (1 if (code >> k) & 1 else 2) for k, e in enumerate(edges(n))}


def sharp(n):
    col = {}
    for (u, v) in edges(n):
        col[(u, v)] = 1 if u % 2 == v % 2 else 2
    return col


def col_of(col, u, v):
    return col.get((min(u, v), max(u, v)))


def nbrs(col, n, c, v):
    return {w for w in range(n) if w != v and col_of(col, v, w) == c}


def dist_le2(col, n, c, u, v, inside=None):
    pool = range(n) if inside is None else inside
    if col_of(col, u, v) == c:
        return True
    return any(col_of(col, u, w) == c and col_of(col, w, v) == c for w in pool if w not in (u, v))


def reach2(col, n, c, s):
    return all(dist_le2(col, n, c, u, v) for u, v in itertools.combinations(sorted(s), 2))


def diam2(col, n, c, s):
    return all(dist_le2(col, n, c, u, v, inside=s) for u, v in itertools.combinations(sorted(s), 2))


def critical(col, n, c):
    return [(u, v) for u, v in itertools.combinations(range(n), 2) if not dist_le2(col, n, c, u, v)]


def brute_max(col, n, c):
    for k in range(n, 0, -1):
        for s in itertools.combinations(range(n), k):
            if reach2(col, n, c, s):
                return k
    return 0


def orbit_count(n):
    """Orbits of the colorings of order n under pair permutations, in-pair
    swaps and color swap, by explicit group action on edge-color dicts."""
    m = n // 2
    es = edges(n)
    seen = set()
    orbits = 0
    for code in range(1 << len(es)):
        if code in seen:
            continue
        orbits += 1
        col = coloring_from_code(n, code)
        for perm in itertools.permutations(range(m)):
            for flips in range(1 << m):
                image = [2 * perm[v // 2] + ((v & 1) ^ ((flips >> (v // 2)) & 1)) for v in range(n)]
                for swap in (False, True):
                    new = 0
                    for k, (u, v) in enumerate(es):
                        a, b = sorted((image[u], image[v]))
                        c = col[(u, v)]
                        if swap:
                            c = 3 - c
                        if c == 1:
                            new |= 1 << es.index((a, b))
                    seen.add(new)
    return orbits


def non_heredity_witness(max_n=6):
    for n in range(4, max_n + 1, 2):
        for code in range(1 << len(edges(n))):
            col = coloring_from_code(n, code)
            for c in (1, 2):
                for k in range(n, 0, -1):
                    for s in itertools.combinations(range(n), k):
                        if not diam2(col, n, c, s):
                            continue
                        for v in s:
                            sub = tuple(w for w in s if w != v)
                            if not diam2(col, n, c, sub):
                                return n, code, c, s, sub


if __name__ == "__main__":
    g = sharp(8)
    print("sharp8 dist_le2 blue (0,1):", dist_le2(g, 8, 2, 0, 1),
          "middles:", [w for w in range(8) if col_of(g, 0, w) == 2 and col_of(g, w, 1) == 2])
    print("sharp8 red critical:", critical(g, 8, 1), len(critical(g, 8, 1)))
    print("sharp8 blue critical:", critical(g, 8, 2))
    print("sharp8 reach2 red {0,2,4,6,1}:", reach2(g, 8, 1, (0, 2, 4, 6, 1)))
    print("sharp8 diam2 blue V:", diam2(g, 8, 2, range(8)))
    print("sharp8 star blue 0:", sorted({0} | nbrs(g, 8, 2, 0)), "star blue 1:", sorted({1} | nbrs(g, 8, 2, 1)))
    for n in (4, 6, 8, 10, 12):
        print("sharp", n, "max red/blue:", brute_max(sharp(n), n, 1), brute_max(sharp(n), n, 2))
    print("n=4 orbits:", orbit_count(4))
    print("n=6 orbits:", orbit_count(6))
    print("non-heredity witness:", non_heredity_witness())
    # Corollary spot check at n=6: max over colors >= 3 for every coloring.
    worst = min(max(brute_max(coloring_from_code(6, k), 6, 1), brute_max(coloring_from_code(6, k), 6, 2))
                for k in range(1 << 12))
    print("n=6 min over colorings of max over colors:", worst)
