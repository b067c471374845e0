"""Exact integral simplicial homology and the full-subcomplex decompositions.

Homology of a complex is computed from its boundary matrices by Smith normal
form over arbitrary-precision integers (exactness over speed; the complexes
here are tiny). On top of that sit the two sweeps over full subcomplexes:
``homology_R`` assembles H_*(R_K) for the real moment-angle complex from
H~_{k-1}(K_J) over all vertex subsets J, and ``bigraded_homology_Z`` fills the
bigraded table H_{-i,2j}(Z_K) of the moment-angle complex from H~_{j-i-1}(K_J)
over subsets of size j.

Reduced homology of subcomplexes is memoized by their face-mask tuple, which
is what makes exhaustive sweeps over all graphs on six vertices affordable:
distinct complexes share most of their full subcomplexes.
"""

from __future__ import annotations

from dataclasses import dataclass

from .simplicial import _bits


def _factorize(n):
    """Prime factorization by trial division (torsion coefficients are small)."""
    out = {}
    p = 2
    while p * p <= n:
        while n % p == 0:
            out[p] = out.get(p, 0) + 1
            n //= p
        p += 1
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


@dataclass(frozen=True)
class HomologyGroup:
    """A finitely generated abelian group: free rank plus invariant factors.

    Torsion coefficients are kept in Smith normal form, d_1 | d_2 | ... with
    every d >= 2, so structural equality is isomorphism.
    """

    free_rank: int = 0
    torsion: tuple[int, ...] = ()

    def __post_init__(self):
        if self.free_rank < 0:
            raise ValueError("negative free rank")
        prev = 1
        for d in self.torsion:
            if d < 2 or d % prev:
                raise ValueError(f"torsion {self.torsion} not a divisibility chain")
            prev = d

    @classmethod
    def from_divisors(cls, free_rank, divisors):
        """Normalize an arbitrary bag of cyclic orders into invariant factors."""
        exps = {}
        for d in divisors:
            if d < 0:
                d = -d
            if d == 0:
                free_rank += 1
                continue
            for p, e in _factorize(d).items():
                exps.setdefault(p, []).append(e)
        if not exps:
            return cls(free_rank)
        depth = max(len(v) for v in exps.values())
        chain = [1] * depth
        for p, es in exps.items():
            es = sorted(es)
            for k, e in enumerate(es):
                chain[depth - len(es) + k] *= p ** e
        return cls(free_rank, tuple(d for d in chain if d > 1))

    @staticmethod
    def direct_sum(*groups):
        free = sum(g.free_rank for g in groups)
        divisors = [d for g in groups for d in g.torsion]
        return HomologyGroup.from_divisors(free, divisors)

    @property
    def is_zero(self):
        return self.free_rank == 0 and not self.torsion

    @property
    def rank(self):
        return self.free_rank

    def __str__(self):
        parts = []
        if self.free_rank == 1:
            parts.append("Z")
        elif self.free_rank > 1:
            parts.append(f"Z^{self.free_rank}")
        parts.extend(f"Z/{d}" for d in self.torsion)
        return " + ".join(parts) if parts else "0"


ZERO_GROUP = HomologyGroup()
Z_GROUP = HomologyGroup(1)


@dataclass(frozen=True)
class IntMatrix:
    """Dense integer matrix, row-major. Entries may grow during elimination,
    so plain Python integers are used throughout."""

    rows: int
    cols: int
    entries: tuple[tuple[int, ...], ...]

    @classmethod
    def from_rows(cls, rows_list):
        rows = len(rows_list)
        cols = len(rows_list[0]) if rows else 0
        if any(len(r) != cols for r in rows_list):
            raise ValueError("ragged rows")
        return cls(rows, cols, tuple(tuple(r) for r in rows_list))


def smith_normal_form(M):
    """Diagonal (d_1 | d_2 | ...) of the Smith normal form of M and its rank.

    Only the nonzero diagonal entries are returned; transformation matrices
    are not computed.
    """
    mat = [list(r) for r in M.entries]
    diag = _snf_diagonal(mat)
    return tuple(diag), len(diag)


def _snf_diagonal(mat):
    """In-place SNF on a list-of-rows matrix; returns the nonzero diagonal.

    Pivots are chosen with smallest absolute value to limit coefficient
    growth; a +-1 pivot (the usual case for boundary matrices) short-circuits
    the divisibility bookkeeping.
    """
    nr = len(mat)
    nc = len(mat[0]) if mat else 0
    diag = []
    t = 0
    while t < nr and t < nc:
        pivot = _find_pivot(mat, t, nr, nc)
        if pivot is None:
            break
        i0, j0 = pivot
        if i0 != t:
            mat[t], mat[i0] = mat[i0], mat[t]
        if j0 != t:
            for row in mat:
                row[t], row[j0] = row[j0], row[t]
        while True:
            p = mat[t][t]
            dirty = False
            for i in range(t + 1, nr):
                a = mat[i][t]
                if a:
                    q = a // p
                    if q:
                        row_i, row_t = mat[i], mat[t]
                        for j in range(t, nc):
                            row_i[j] -= q * row_t[j]
                    if mat[i][t]:
                        dirty = True
            for j in range(t + 1, nc):
                a = mat[t][j]
                if a:
                    q = a // p
                    if q:
                        for i in range(t, nr):
                            mat[i][j] -= q * mat[i][t]
                    if mat[t][j]:
                        dirty = True
            if dirty:
                # Remainders smaller than |p| remain in the pivot row or
                # column; move the smallest in as the new pivot and repeat.
                best = None
                bv = abs(p)
                for i in range(t + 1, nr):
                    a = mat[i][t]
                    if a and abs(a) < bv:
                        best, bv = (i, t), abs(a)
                for j in range(t + 1, nc):
                    a = mat[t][j]
                    if a and abs(a) < bv:
                        best, bv = (t, j), abs(a)
                if best is None:
                    continue
                i0, j0 = best
                if i0 != t:
                    mat[t], mat[i0] = mat[i0], mat[t]
                if j0 != t:
                    for row in mat:
                        row[t], row[j0] = row[j0], row[t]
                continue
            p = mat[t][t]
            if abs(p) == 1:
                break
            culprit = None
            for i in range(t + 1, nr):
                row_i = mat[i]
                for j in range(t + 1, nc):
                    if row_i[j] % p:
                        culprit = i
                        break
                if culprit is not None:
                    break
            if culprit is None:
                break
            row_t, row_c = mat[t], mat[culprit]
            for j in range(t, nc):
                row_t[j] += row_c[j]
        diag.append(abs(mat[t][t]))
        t += 1
    return diag


def _find_pivot(mat, t, nr, nc):
    best = None
    bv = None
    for i in range(t, nr):
        row = mat[i]
        for j in range(t, nc):
            a = row[j]
            if a:
                a = abs(a)
                if bv is None or a < bv:
                    best, bv = (i, j), a
                    if a == 1:
                        return best
    return best


def sparse_rank_invariants(columns):
    """Rank and SNF diagonal of a matrix given as sparse columns.

    Each column is a dict {row index: coefficient}. All-zero rows and columns
    are projected away before the dense elimination, which keeps the boundary
    matrices of graded algebras tractable: their nonzero part is tiny compared
    to the ambient basis.
    """
    live = [c for c in columns if c]
    if not live:
        return 0, ()
    touched = sorted({r for c in live for r in c})
    index = {r: k for k, r in enumerate(touched)}
    mat = [[0] * len(live) for _ in touched]
    for j, col in enumerate(live):
        for r, a in col.items():
            mat[index[r]][j] = a
    diag = _snf_diagonal(mat)
    return len(diag), tuple(diag)


# -- boundary matrices and reduced homology --------------------------------


def boundary_matrix(K, k):
    """The matrix of the k-th boundary map, oriented by ascending vertex
    order with alternating signs. For k = 0 this is the augmentation row
    (all ones), so that the homology computed downstream is reduced."""
    if k < 0:
        raise ValueError("dimension must be nonnegative")
    sources = sorted(f for f in K.face_masks if f.bit_count() == k + 1)
    if k == 0:
        return IntMatrix.from_rows([[1] * len(sources)])
    targets = sorted(f for f in K.face_masks if f.bit_count() == k)
    index = {f: i for i, f in enumerate(targets)}
    rows = [[0] * len(sources) for _ in targets]
    for j, f in enumerate(sources):
        for r, b in enumerate(_bits(f)):
            rows[index[f & ~(1 << b)]][j] = -1 if r % 2 else 1
    return IntMatrix.from_rows(rows)


_REDUCED_CACHE = {}


def clear_cache():
    """Drop the memoized subcomplex homologies (mainly for benchmarks)."""
    _REDUCED_CACHE.clear()


def _reduced_groups_impl(faces):
    """Reduced integral homology of the complex whose faces are the given
    bitmask tuple (which must include 0 and determine the vertex set through
    its singletons). Returns groups for degrees 0..dim; the empty complex
    returns (), its H~_{-1} = Z being the callers' business."""
    levels = {}
    for f in faces:
        levels.setdefault(f.bit_count() - 1, []).append(f)
    dim = max(levels)
    if dim < 0:
        return ()
    n0 = len(levels[0])
    if dim == 0:
        return (HomologyGroup(n0 - 1),)
    # Component count gives rank of the vertex-edge boundary map directly
    # (its Smith form never has invariant factors > 1).
    adj = {}
    for e in levels[1]:
        a = (e & -e).bit_length() - 1
        b = e.bit_length() - 1
        adj.setdefault(a, []).append(b)
        adj.setdefault(b, []).append(a)
    verts = [f.bit_length() - 1 for f in levels[0]]
    seen = set()
    comps = 0
    for v in verts:
        if v in seen:
            continue
        comps += 1
        stack = [v]
        seen.add(v)
        while stack:
            x = stack.pop()
            for y in adj.get(x, ()):
                if y not in seen:
                    seen.add(y)
                    stack.append(y)
    n1 = len(levels[1])
    if dim == 1:
        return (HomologyGroup(comps - 1), HomologyGroup(n1 - n0 + comps))
    counts = {k: len(v) for k, v in levels.items()}
    ranks = {0: 1, 1: n0 - comps}
    invariants = {}
    for k in range(2, dim + 1):
        targets = sorted(levels[k - 1])
        index = {f: i for i, f in enumerate(targets)}
        cols = []
        for f in sorted(levels[k]):
            col = {}
            for r, b in enumerate(_bits(f)):
                col[index[f & ~(1 << b)]] = -1 if r % 2 else 1
            cols.append(col)
        rank, diag = sparse_rank_invariants(cols)
        ranks[k] = rank
        invariants[k] = diag
    out = []
    for k in range(0, dim + 1):
        rank_up = ranks.get(k + 1, 0)
        free = counts[k] - ranks[k] - rank_up
        torsion = [d for d in invariants.get(k + 1, ()) if d > 1]
        out.append(HomologyGroup.from_divisors(free, torsion))
    return tuple(out)


def _reduced_cached(faces):
    groups = _REDUCED_CACHE.get(faces)
    if groups is None:
        groups = _reduced_groups_impl(faces)
        _REDUCED_CACHE[faces] = groups
    return groups


def reduced_homology(K):
    """H~_n(K; Z) for 0 <= n <= dim K, as a list of HomologyGroup.

    The complex on zero vertices yields the empty list; its single nonzero
    reduced group H~_{-1} = Z is handled explicitly by the subset sweeps.
    """
    return list(_reduced_cached(K.sorted_face_masks))


# -- full-subcomplex decompositions ----------------------------------------


def _per_subset_groups(K):
    """Reduced homology of every full subcomplex, keyed by subset bitmask.

    Only subsets with some nonzero group are returned; the empty subset is
    omitted (its contribution is the fixed H~_{-1} = Z)."""
    faces = K.sorted_face_masks
    out = {}
    for J in range(1, K.full_mask + 1):
        keep = ~J
        sub = tuple(f for f in faces if f & keep == 0)
        groups = _reduced_cached(sub)
        if any(not g.is_zero for g in groups):
            out[J] = groups
    return out


def _assemble_R(K, per_subset):
    size = K.dim + 2
    free = [0] * size
    torsion = [[] for _ in range(size)]
    free[0] = 1  # empty subset: H~_{-1} = Z lands in degree 0
    for groups in per_subset.values():
        for deg, g in enumerate(groups):
            if not g.is_zero:
                free[deg + 1] += g.free_rank
                torsion[deg + 1].extend(g.torsion)
    return [HomologyGroup.from_divisors(f, t) for f, t in zip(free, torsion)]


def homology_R(K):
    """H_k(R_K) for 0 <= k <= dim K + 1 via the subset decomposition
    H_k = direct sum over J of H~_{k-1}(K_J)."""
    return _assemble_R(K, _per_subset_groups(K))


@dataclass
class BigradedTable:
    """Bigraded homology of Z_K: nonzero groups keyed by (i, 2j), the group
    sitting in bidegree (-i, 2j). Total degree k = 2j - i."""

    m: int
    entries: dict

    def entry(self, i, j2):
        return self.entries.get((i, j2), ZERO_GROUP)

    def items_sorted(self):
        return sorted(self.entries.items())

    def betti(self):
        """Total-degree Betti numbers reassembled along k = 2j - i."""
        top = max((j2 - i for i, j2 in self.entries), default=0)
        out = [0] * (top + 1)
        for (i, j2), g in self.entries.items():
            out[j2 - i] += g.free_rank
        return out


def _assemble_Z(K, per_subset):
    acc = {}
    for J, groups in per_subset.items():
        j = J.bit_count()
        for deg, g in enumerate(groups):
            if g.is_zero:
                continue
            i = j - deg - 1
            key = (i, 2 * j)
            slot = acc.get(key)
            if slot is None:
                acc[key] = slot = [0, []]
            slot[0] += g.free_rank
            slot[1].extend(g.torsion)
    entries = {key: HomologyGroup.from_divisors(f, t) for key, (f, t) in acc.items()}
    entries[(0, 0)] = Z_GROUP  # empty subset
    return BigradedTable(K.m, entries)


def bigraded_homology_Z(K):
    """The table H_{-i,2j}(Z_K) = direct sum over |J| = j of H~_{j-i-1}(K_J)."""
    return _assemble_Z(K, _per_subset_groups(K))


def betti_Z(K):
    """Betti numbers of Z_K, from the bigraded table via k = 2j - i."""
    return bigraded_homology_Z(K).betti()


def homology_at(groups, k):
    """Group in degree k of a homology list, zero beyond its length."""
    return groups[k] if 0 <= k < len(groups) else ZERO_GROUP
