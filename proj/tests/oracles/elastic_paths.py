"""Exhaustive path enumeration for the elastic distances on tiny inputs.

Every monotone path through the alignment lattice is listed explicitly and
the cheapest one taken, so no dynamic programming is shared with the C++
code. Prints the frozen values used by the distance unit tests.
"""
import math
from functools import lru_cache


def window_cells(w, n):
    return min(n, max(0, math.ceil(w * n - 1e-9)))


def paths(n, steps, admissible):
    """All step sequences from (0, 0) to (n, n) through admissible nodes."""
    out = []

    def walk(i, j, trail):
        if (i, j) == (n, n):
            out.append(list(trail))
            return
        for di, dj in steps:
            ni, nj = i + di, j + dj
            if ni <= n and nj <= n and admissible(ni, nj):
                trail.append((ni, nj))
                walk(ni, nj, trail)
                trail.pop()

    walk(0, 0, [])
    return out


def dtw(a, b, w):
    n = len(a)
    band = window_cells(w, n)
    best = math.inf
    # DTW cells are 1-based; a path starts at (1,1).
    for p in paths(n, [(1, 0), (0, 1), (1, 1)], lambda i, j: i >= 1 and j >= 1 and abs(i - j) <= band):
        if p[0] != (1, 1):
            continue
        best = min(best, sum((a[i - 1] - b[j - 1]) ** 2 for i, j in p))
    return best


def erp(a, b, g, w):
    n = len(a)
    band = window_cells(w, n)
    best = math.inf
    for p in paths(n, [(1, 0), (0, 1), (1, 1)], lambda i, j: abs(i - j) <= band):
        cost, prev = 0.0, (0, 0)
        for i, j in p:
            if (i - prev[0], j - prev[1]) == (1, 1):
                cost += (a[i - 1] - b[j - 1]) ** 2
            elif i - prev[0] == 1:
                cost += (a[i - 1] - g) ** 2
            else:
                cost += (b[j - 1] - g) ** 2
            prev = (i, j)
        best = min(best, cost)
    return best


def twed(a, b, nu, lam):
    n = len(a)
    A = [0.0] + list(a)
    B = [0.0] + list(b)
    best = math.inf
    for p in paths(n, [(1, 0), (0, 1), (1, 1)], lambda i, j: True):
        cost, (pi, pj) = 0.0, (0, 0)
        ok = True
        for i, j in p:
            if (i - pi, j - pj) == (1, 1):
                cost += (A[i] - B[j]) ** 2 + (A[i - 1] - B[j - 1]) ** 2 + 2 * nu * abs(i - j)
            elif i - pi == 1:
                if j == 0:
                    ok = False
                cost += (A[i] - A[i - 1]) ** 2 + nu + lam
            else:
                if i == 0:
                    ok = False
                cost += (B[j] - B[j - 1]) ** 2 + nu + lam
            pi, pj = i, j
        if ok:
            best = min(best, cost)
    return best


def lcss(a, b, eps, delta):
    n = len(a)
    best = 0
    # every pair of equal-length index subsequences, checked for matching
    from itertools import combinations
    for k in range(n, 0, -1):
        for ia in combinations(range(n), k):
            for ib in combinations(range(n), k):
                if all(abs(a[x] - b[y]) <= eps and abs(x - y) <= delta for x, y in zip(ia, ib)):
                    return 1 - k / n
    return 1.0


def msm(a, b, c):
    # Move-split-merge as the minimum over operation scripts, written as a
    # plain recursion over prefixes (Stefan et al., Eq. 9) without tabulation.
    def cost(x, y, z):
        if y <= x <= z or y >= x >= z:
            return c
        return c + min(abs(x - y), abs(x - z))

    @lru_cache(maxsize=None)
    def d(i, j):
        if i == 0 and j == 0:
            return abs(a[0] - b[0])
        if j == 0:
            return d(i - 1, 0) + cost(a[i], a[i - 1], b[0])
        if i == 0:
            return d(0, j - 1) + cost(b[j], a[0], b[j - 1])
        return min(d(i - 1, j - 1) + abs(a[i] - b[j]),
                   d(i - 1, j) + cost(a[i], a[i - 1], b[j]),
                   d(i, j - 1) + cost(b[j], a[i], b[j - 1]))

    return d(len(a) - 1, len(b) - 1)


if __name__ == "__main__":
    print("dtw([1,2,3],[2,3,4],w=1) =", repr(dtw([1, 2, 3], [2, 3, 4], 1.0)))
    print("erp([1],[2],g=0,w=1) =", repr(erp([1], [2], 0.0, 1.0)))
    print("lcss([1,2,3],[2,2,2],0.5,2) =", repr(lcss([1, 2, 3], [2, 2, 2], 0.5, 2)))
    print("msm([1,2],[1,4],c=0.1) =", repr(msm([1, 2], [1, 4], 0.1)))
    print("msm([1],[3],c=1) =", repr(msm([1], [3], 1.0)))
    print("twed([1,2],[2,3],nu=0.001,lambda=1) =", repr(twed([1, 2], [2, 3], 0.001, 1.0)))
    print("twed([0],[0],nu=1,lambda=1) =", repr(twed([0], [0], 1.0, 1.0)))
    a = [0.3, -1.2, 2.5, 0.7, -0.4]
    b = [1.1, 0.2, -0.9, 1.8, 0.5]
    for w in (0.0, 0.2, 0.5, 1.0):
        print(f"dtw(a,b,w={w}) =", repr(dtw(a, b, w)))
        print(f"erp(a,b,g=0.5,w={w}) =", repr(erp(a, b, 0.5, w)))
    print("twed(a,b,nu=0.01,lambda=0.05) =", repr(twed(a, b, 0.01, 0.05)))
    print("msm(a,b,c=0.5) =", repr(msm(a, b, 0.5)))
