"""Shared complex builders and independent oracles for the test suite.

The oracle functions here deliberately avoid the code paths they are used to
check: components by union-find, missing faces by subset scan, matrix ranks
by field elimination, Euler characteristics by cell counting.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations

from macx.simplicial import Graph, SimplicialComplex


# -- standard complexes -----------------------------------------------------


def cycle(p, labels=None):
    """The boundary of a p-gon, on 1..p by default."""
    verts = list(labels) if labels else list(range(1, p + 1))
    facets = [[verts[i], verts[(i + 1) % p]] for i in range(p)]
    return SimplicialComplex.from_facets(facets, verts)


def simplex(q):
    """The full q-simplex on vertices 1..q+1."""
    return SimplicialComplex.from_facets([list(range(1, q + 2))], q + 1)


def square_partial_cone():
    """4-cycle on 1..4 with an apex 5 joined to 1, 2, 3 only (two filled
    triangles); flag, not chordal, not a cycle join."""
    return SimplicialComplex.from_facets([[1, 2, 5], [2, 3, 5], [1, 4], [3, 4]], 5)


def square_cone():
    """Cone over the 4-cycle: apex 5 joined to everything; equals C_4 * point."""
    return SimplicialComplex.from_facets(
        [[1, 2, 5], [2, 3, 5], [3, 4, 5], [1, 4, 5]], 5
    )


def square_broken_cone():
    """Apex over the 4-cycle with one triangle left unfilled: the edges of
    {1,4,5} are all present but the triangle is not, so this is not flag."""
    return SimplicialComplex.from_facets([[1, 2, 5], [2, 3, 5], [3, 4, 5], [1, 4]], 5)


def projective_plane():
    """The 6-vertex triangulation of the real projective plane."""
    facets = [
        [1, 2, 5], [1, 2, 6], [1, 3, 4], [1, 3, 5], [1, 4, 6],
        [2, 3, 4], [2, 3, 6], [2, 4, 5], [3, 5, 6], [4, 5, 6],
    ]
    return SimplicialComplex.from_facets(facets, 6)


def all_graphs(n):
    """Every labelled graph on vertices 1..n."""
    pairs = list(combinations(range(1, n + 1), 2))
    for mask in range(1 << len(pairs)):
        edges = [pairs[i] for i in range(len(pairs)) if mask >> i & 1]
        yield Graph.from_edges(n, edges)


# -- oracles ----------------------------------------------------------------


def union_find_components(vertices, edges):
    """Connected components as frozensets, by union-find."""
    parent = {v: v for v in vertices}

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for u, v in edges:
        parent[find(u)] = find(v)
    comps = {}
    for v in vertices:
        comps.setdefault(find(v), set()).add(v)
    return [frozenset(c) for c in comps.values()]


def brute_missing_faces(K):
    """All minimal non-faces, by scanning subsets in increasing size."""
    faces = {frozenset(f) for f in K.faces()}
    missing = []
    for size in range(1, K.m + 1):
        for sub in combinations(K.labels, size):
            s = frozenset(sub)
            if s in faces:
                continue
            if all(frozenset(c) in faces for c in combinations(sub, size - 1)):
                missing.append(s)
    return missing


def euler_characteristic_real(K):
    """Euler characteristic of the real moment-angle complex by counting its
    cubical cells: a face I contributes 2^(m-|I|) cells of dimension |I|."""
    m = K.m
    return sum((-1) ** len(f) * 2 ** (m - len(f)) for f in K.faces())


def rank_mod_p(rows, p):
    """Rank of an integer matrix over F_p by Gaussian elimination."""
    mat = [[x % p for x in row] for row in rows]
    rank = 0
    cols = len(mat[0]) if mat else 0
    row = 0
    for col in range(cols):
        piv = next((r for r in range(row, len(mat)) if mat[r][col]), None)
        if piv is None:
            continue
        mat[row], mat[piv] = mat[piv], mat[row]
        inv = pow(mat[row][col], -1, p)
        mat[row] = [(x * inv) % p for x in mat[row]]
        for r in range(len(mat)):
            if r != row and mat[r][col]:
                f = mat[r][col]
                mat[r] = [(a - f * b) % p for a, b in zip(mat[r], mat[row])]
        rank += 1
        row += 1
    return rank


def rank_over_q(rows):
    """Rank over the rationals, by exact fraction elimination."""
    mat = [[Fraction(x) for x in row] for row in rows]
    rank = 0
    cols = len(mat[0]) if mat else 0
    row = 0
    for col in range(cols):
        piv = next((r for r in range(row, len(mat)) if mat[r][col]), None)
        if piv is None:
            continue
        mat[row], mat[piv] = mat[piv], mat[row]
        lead = mat[row][col]
        mat[row] = [x / lead for x in mat[row]]
        for r in range(len(mat)):
            if r != row and mat[r][col]:
                f = mat[r][col]
                mat[r] = [a - f * b for a, b in zip(mat[r], mat[row])]
        rank += 1
        row += 1
    return rank


def series_by_recurrence(d, pair_dims, n):
    """Loop-homology ranks of a sphere-product sum by the linear recurrence
    c_n = sum_i (c_(n-d_i+1) + c_(n-d+d_i+1)) - c_(n-d+2), c_0 = 1."""
    coeffs = [0] * (n + 1)
    coeffs[0] = 1

    def at(idx):
        return coeffs[idx] if 0 <= idx <= n else (1 if idx == 0 else 0)

    for deg in range(1, n + 1):
        total = 0
        for di in pair_dims:
            if deg - di + 1 >= 0:
                total += at(deg - di + 1)
            if deg - d + di + 1 >= 0:
                total += at(deg - d + di + 1)
        if deg - d + 2 >= 0:
            total -= at(deg - d + 2)
        coeffs[deg] = total
    return coeffs


def brute_count_words(weights, forbidden, n):
    """Number of weighted words per degree avoiding one ordered letter pair as
    a consecutive factor, by explicit enumeration."""
    counts = [0] * (n + 1)
    counts[0] = 1
    stack = [((), 0)]
    while stack:
        word, deg = stack.pop()
        for letter, w in enumerate(weights):
            if deg + w > n:
                continue
            if word and (word[-1], letter) == forbidden:
                continue
            counts[deg + w] += 1
            stack.append((word + (letter,), deg + w))
    return counts
