"""Finite simplicial complexes on small labelled vertex sets.

Complexes live on at most ``MAX_VERTICES`` vertices so that faces and vertex
subsets fit in machine-word bitmasks; the homology routines elsewhere in the
package walk all 2^m subsets of the vertex set, which is what motivates the
bound. Vertex labels are small nonnegative integers (1-based in the text file
format); internally a label is mapped to a bit position in the complex's
sorted label tuple. Everything here is immutable and all operations are pure,
so complexes and graphs can be shared freely across threads or processes.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

MAX_VERTICES = 24

# Reason codes for a failed star-condition classification.
REASON_NOT_FLAG = "not_flag"
REASON_REMAINDER_NOT_CYCLE = "remainder_not_cycle"
REASON_CYCLE_TOO_SHORT = "cycle_too_short"
REASON_CONE_NOT_UNIVERSAL = "cone_not_universal"


def _bits(mask):
    """Yield the set bit positions of mask, ascending."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def _submasks(mask):
    """Yield every submask of mask, including 0 and mask itself."""
    sub = mask
    while True:
        yield sub
        if sub == 0:
            return
        sub = (sub - 1) & mask


def _normalize_labels(vertices):
    """Turn a vertex spec (count m meaning {1..m}, or an iterable of labels)
    into a sorted tuple of distinct nonnegative integer labels."""
    if isinstance(vertices, int):
        if not 0 <= vertices <= MAX_VERTICES:
            raise ValueError(
                f"vertex count must be between 0 and {MAX_VERTICES}, got {vertices}"
            )
        return tuple(range(1, vertices + 1))
    labels = sorted(vertices)
    if len(labels) != len(set(labels)):
        raise ValueError(f"duplicate vertex labels in {labels}")
    if len(labels) > MAX_VERTICES:
        raise ValueError(f"at most {MAX_VERTICES} vertices supported, got {len(labels)}")
    for v in labels:
        if not isinstance(v, int) or v < 0:
            raise ValueError(f"vertex labels must be nonnegative integers, got {v!r}")
    return tuple(labels)


@dataclass(frozen=True)
class CheckResult:
    """Boolean verdict with an optional witness (a sorted vertex tuple).

    Truthiness follows the verdict, so ``if is_flag(K): ...`` reads naturally.
    """

    ok: bool
    witness: tuple[int, ...] | None = None

    def __bool__(self):
        return self.ok


@dataclass(frozen=True)
class StarClassification:
    """Outcome of testing whether a complex is a cycle joined with a simplex.

    On a match, ``p`` is the cycle length (>= 4) and ``cone_vertices`` are the
    labels of the simplex factor (empty when the complex is a bare cycle).
    On a non-match, ``reason`` carries one of the REASON_* codes.
    """

    matches: bool
    p: int | None = None
    cone_vertices: tuple[int, ...] = ()
    reason: str | None = None

    @classmethod
    def match(cls, p, cone_vertices):
        return cls(True, p, tuple(sorted(cone_vertices)))

    @classmethod
    def no_match(cls, reason):
        return cls(False, reason=reason)

    @property
    def q(self):
        """Dimension of the simplex factor; -1 means no join factor."""
        return len(self.cone_vertices) - 1

    def __bool__(self):
        return self.matches


@dataclass(frozen=True)
class SimplicialComplex:
    """A finite simplicial complex: contains the empty face, all singletons
    of its vertex set, and is closed under taking subsets.

    ``face_masks`` holds every face as a bitmask over positions in ``labels``;
    ``facet_masks`` lists the inclusion-maximal faces.
    """

    labels: tuple[int, ...]
    face_masks: frozenset[int]
    facet_masks: tuple[int, ...]

    # -- construction ------------------------------------------------------

    @classmethod
    def from_facets(cls, facets, vertices):
        """Downward closure of the given facets on a declared vertex set.

        ``vertices`` is either a count m (labels 1..m) or an iterable of
        labels. Singletons of every declared vertex are always included, and
        the facet list is recomputed as the maximal faces of the closure.
        """
        labels = _normalize_labels(vertices)
        pos = {v: i for i, v in enumerate(labels)}
        masks = []
        for facet in facets:
            mask = 0
            for v in set(facet):
                if v not in pos:
                    raise ValueError(f"facet vertex {v} outside declared vertex set")
                mask |= 1 << pos[v]
            masks.append(mask)
        faces = {0}
        faces.update(1 << i for i in range(len(labels)))
        for mask in masks:
            faces.update(_submasks(mask))
        return cls._from_faces(labels, faces)

    @classmethod
    def _from_faces(cls, labels, faces):
        """Internal constructor; assumes faces is already downward closed."""
        face_set = frozenset(faces)
        facets = tuple(sorted(_maximal_masks(face_set, len(labels))))
        return cls(tuple(labels), face_set, facets)

    # -- basic queries -----------------------------------------------------

    @property
    def m(self):
        return len(self.labels)

    @property
    def full_mask(self):
        return (1 << self.m) - 1

    @cached_property
    def dim(self):
        return max(f.bit_count() for f in self.face_masks) - 1

    @cached_property
    def sorted_face_masks(self):
        return tuple(sorted(self.face_masks))

    @cached_property
    def _positions(self):
        return {v: i for i, v in enumerate(self.labels)}

    def mask_of(self, subset):
        """Bitmask of a label subset; raises on labels outside the complex."""
        mask = 0
        for v in subset:
            try:
                mask |= 1 << self._positions[v]
            except KeyError:
                raise ValueError(f"vertex {v} not in complex") from None
        return mask

    def labels_of(self, mask):
        return tuple(self.labels[i] for i in _bits(mask))

    def has_face(self, subset):
        try:
            return self.mask_of(subset) in self.face_masks
        except ValueError:
            return False

    def faces(self):
        """All faces as sorted label tuples, ordered by (size, mask)."""
        for mask in sorted(self.face_masks, key=lambda f: (f.bit_count(), f)):
            yield self.labels_of(mask)

    def facets(self):
        return tuple(self.labels_of(mask) for mask in self.facet_masks)

    @cached_property
    def adjacency(self):
        """Neighbour bitmask per vertex position, read off the 1-faces."""
        adj = [0] * self.m
        for f in self.face_masks:
            if f.bit_count() == 2:
                a = (f & -f).bit_length() - 1
                b = f.bit_length() - 1
                adj[a] |= 1 << b
                adj[b] |= 1 << a
        return tuple(adj)


def _maximal_masks(faces, m):
    """Faces with no proper superset in the family."""
    out = []
    for f in faces:
        cofree = ~f & ((1 << m) - 1)
        if not any((f | (1 << i)) in faces for i in _bits(cofree)):
            out.append(f)
    return out


@dataclass(frozen=True)
class Graph:
    """Undirected simple graph on labelled vertices (adjacency as bitmasks)."""

    labels: tuple[int, ...]
    adj: tuple[int, ...]

    @classmethod
    def from_edges(cls, vertices, edges):
        labels = _normalize_labels(vertices)
        pos = {v: i for i, v in enumerate(labels)}
        adj = [0] * len(labels)
        for u, v in edges:
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            if u not in pos or v not in pos:
                raise ValueError(f"edge ({u},{v}) outside declared vertex set")
            adj[pos[u]] |= 1 << pos[v]
            adj[pos[v]] |= 1 << pos[u]
        return cls(labels, tuple(adj))

    @property
    def m(self):
        return len(self.labels)

    @property
    def full_mask(self):
        return (1 << self.m) - 1

    @cached_property
    def _positions(self):
        return {v: i for i, v in enumerate(self.labels)}

    def has_edge(self, u, v):
        pu, pv = self._positions[u], self._positions[v]
        return bool(self.adj[pu] >> pv & 1)

    def degree(self, v):
        return self.adj[self._positions[v]].bit_count()

    def edges(self):
        out = []
        for i in range(self.m):
            for j in _bits(self.adj[i] >> (i + 1) << (i + 1)):
                out.append((self.labels[i], self.labels[j]))
        return out

    def edge_count(self):
        return sum(a.bit_count() for a in self.adj) // 2

    def component_masks(self, within=None):
        """Connected component bitmasks of the subgraph induced on ``within``
        (a position bitmask; defaults to all vertices), ordered by lowest bit."""
        remaining = self.full_mask if within is None else within
        comps = []
        while remaining:
            comp = remaining & -remaining
            frontier = comp
            while frontier:
                nxt = 0
                for i in _bits(frontier):
                    nxt |= self.adj[i]
                frontier = nxt & remaining & ~comp
                comp |= frontier
            comps.append(comp)
            remaining &= ~comp
        return comps


# -- operations -----------------------------------------------------------


def full_subcomplex(K, subset):
    """The full subcomplex K_J: all faces of K contained in the vertex set J."""
    J = tuple(sorted(set(subset)))
    for v in J:
        if v not in K._positions:
            raise ValueError(f"vertex {v} not in complex")
    jmask = K.mask_of(J)
    remap = {old: new for new, old in enumerate(_bits(jmask))}
    keep = ~jmask
    faces = set()
    for f in K.face_masks:
        if f & keep == 0:
            g = 0
            for b in _bits(f):
                g |= 1 << remap[b]
            faces.add(g)
    return SimplicialComplex._from_faces(J, faces)


def link(K, j):
    """lk_K(j): faces I with j not in I and I + j a face of K."""
    p = K._positions.get(j)
    if p is None:
        raise ValueError(f"vertex {j} not in complex")
    jbit = 1 << p
    member_mask = 0
    kept = set()
    for f in K.face_masks:
        if f & jbit == 0 and (f | jbit) in K.face_masks:
            kept.add(f)
            member_mask |= f
    verts = K.labels_of(member_mask)
    remap = {old: new for new, old in enumerate(_bits(member_mask))}
    faces = set()
    for f in kept:
        g = 0
        for b in _bits(f):
            g |= 1 << remap[b]
        faces.add(g)
    return SimplicialComplex._from_faces(verts, faces)


def star(K, j):
    """st_K(j) = lk_K(j) * j: all faces whose union with j is a face."""
    p = K._positions.get(j)
    if p is None:
        raise ValueError(f"vertex {j} not in complex")
    jbit = 1 << p
    kept = set()
    member_mask = jbit
    for f in K.face_masks:
        if (f | jbit) in K.face_masks:
            kept.add(f)
            kept.add(f | jbit)
            member_mask |= f
    verts = K.labels_of(member_mask)
    remap = {old: new for new, old in enumerate(_bits(member_mask))}
    faces = set()
    for f in kept:
        g = 0
        for b in _bits(f):
            g |= 1 << remap[b]
        faces.add(g)
    return SimplicialComplex._from_faces(verts, faces)


def join(K, L):
    """Join of two complexes on disjoint vertex sets.

    Faces are all unions of a face of K and a face of L. The result is
    relabelled to consecutive integers 1..(mK+mL), K's vertices first.
    """
    if set(K.labels) & set(L.labels):
        raise ValueError("join requires disjoint vertex sets")
    total = K.m + L.m
    if total > MAX_VERTICES:
        raise ValueError(f"join would exceed {MAX_VERTICES} vertices")
    faces = set()
    for f in K.face_masks:
        for g in L.face_masks:
            faces.add(f | (g << K.m))
    return SimplicialComplex._from_faces(range(1, total + 1), faces)


def one_skeleton(K):
    """The graph of vertices and edges of K."""
    return Graph(K.labels, K.adjacency)


def is_flag(K):
    """Whether every missing face of K has exactly two vertices.

    Works level by level: if all cliques of the 1-skeleton with at most k
    vertices are faces, any (k+1)-clique that is not a face is a missing face
    of size >= 3 and is returned as the witness.
    """
    adj = K.adjacency
    current = [f for f in K.face_masks if f.bit_count() == 2]
    while current:
        nxt = []
        for f in current:
            common = K.full_mask
            top = f.bit_length() - 1
            for b in _bits(f):
                common &= adj[b]
            for v in _bits(common >> (top + 1) << (top + 1)):
                cand = f | (1 << v)
                if cand in K.face_masks:
                    nxt.append(cand)
                else:
                    return CheckResult(False, K.labels_of(cand))
        current = nxt
    return CheckResult(True)


def clique_complex(G, max_faces=1 << 20):
    """The complex whose faces are exactly the cliques of G."""
    faces = {0}
    faces.update(1 << i for i in range(G.m))
    current = list(faces - {0})
    while current:
        nxt = []
        for f in current:
            common = G.full_mask
            top = f.bit_length() - 1
            for b in _bits(f):
                common &= G.adj[b]
            for v in _bits(common >> (top + 1) << (top + 1)):
                cand = f | (1 << v)
                nxt.append(cand)
                faces.add(cand)
                if len(faces) > max_faces:
                    raise ValueError(f"clique enumeration exceeds budget of {max_faces} faces")
        current = nxt
    return SimplicialComplex._from_faces(G.labels, faces)


def is_chordal(G):
    """Chordality via maximum cardinality search plus perfect-elimination
    verification; on failure the witness is a chordless cycle of length >= 4.
    """
    n = G.m
    adj = G.adj
    weight = [0] * n
    numbered = 0
    picks = []
    for _ in range(n):
        best = -1
        v = -1
        for i in range(n):
            if not numbered >> i & 1 and weight[i] > best:
                best = weight[i]
                v = i
        picks.append(v)
        numbered |= 1 << v
        for u in _bits(adj[v] & ~numbered):
            weight[u] += 1
    order = picks[::-1]  # candidate perfect elimination ordering
    position = [0] * n
    for idx, v in enumerate(order):
        position[v] = idx
    later = [0] * n
    seen = 0
    for v in order:
        later[v] = adj[v] & ~seen & ~(1 << v)
        seen |= 1 << v
    for v in order:
        nb = later[v]
        if nb:
            u = min(_bits(nb), key=lambda x: position[x])
            rest = nb & ~(1 << u)
            if rest & ~adj[u]:
                return CheckResult(False, _find_hole(G))
    return CheckResult(True)


def _find_hole(G):
    """A chordless cycle of length >= 4 in a non-chordal graph.

    For each vertex v and each non-adjacent pair u, w of its neighbours, a
    shortest u-w path avoiding the rest of N[v] closes up with v to a cycle
    with no chords (shortcuts would contradict path minimality)."""
    adj = G.adj
    for v in range(G.m):
        nv = adj[v]
        nbrs = list(_bits(nv))
        for ai, u in enumerate(nbrs):
            for w in nbrs[ai + 1:]:
                if adj[u] >> w & 1:
                    continue
                allowed = (G.full_mask & ~(nv | (1 << v))) | (1 << u) | (1 << w)
                path = _bfs_path(adj, u, w, allowed)
                if path is not None:
                    cycle = [v] + path
                    return tuple(sorted(G.labels[i] for i in cycle))
    return None


def _bfs_path(adj, src, dst, allowed):
    parent = {src: None}
    frontier = [src]
    while frontier:
        nxt = []
        for x in frontier:
            for y in _bits(adj[x] & allowed):
                if y not in parent:
                    parent[y] = x
                    if y == dst:
                        path = [y]
                        while parent[path[-1]] is not None:
                            path.append(parent[path[-1]])
                        return path[::-1]
                    nxt.append(y)
        frontier = nxt
    return None


def find_induced_cycles(G, min_len=4):
    """All vertex subsets inducing a cycle of length >= min_len (brute force
    over subsets; fine at desk scale)."""
    out = []
    adj = G.adj
    for mask in range(1, G.full_mask + 1):
        if mask.bit_count() < min_len:
            continue
        if _induces_cycle(adj, mask):
            out.append(tuple(sorted(G.labels[i] for i in _bits(mask))))
    return out


def _induces_cycle(adj, mask):
    for i in _bits(mask):
        if (adj[i] & mask).bit_count() != 2:
            return False
    # 2-regular and connected means a single cycle
    start = mask & -mask
    comp = start
    frontier = start
    while frontier:
        nxt = 0
        for i in _bits(frontier):
            nxt |= adj[i]
        frontier = nxt & mask & ~comp
        comp |= frontier
    return comp == mask


def is_cycle(K):
    """Return p if K is exactly the boundary of a p-gon, else None."""
    p = K.m
    if p < 3:
        return None
    if len(K.face_masks) != 1 + 2 * p:
        return None
    return p if _induces_cycle(K.adjacency, K.full_mask) else None


def classify_star_condition(K):
    """Test whether K is a p-cycle (p >= 4), possibly joined with a simplex.

    The simplex factor of such a join is exactly the set of universal
    vertices (each cycle vertex has a non-neighbour since p >= 4), so the
    cone vertices are removed in one step and the remainder must be a cycle.
    Non-flag complexes never match.
    """
    if not is_flag(K):
        return StarClassification.no_match(REASON_NOT_FLAG)
    adj = K.adjacency
    full = K.full_mask
    universal = 0
    for i in range(K.m):
        if adj[i] == full & ~(1 << i):
            universal |= 1 << i
    rest = full & ~universal
    if rest == 0:
        return StarClassification.no_match(REASON_REMAINDER_NOT_CYCLE)
    if not _induces_cycle(adj, rest):
        return StarClassification.no_match(REASON_REMAINDER_NOT_CYCLE)
    p = rest.bit_count()
    if p < 4:
        return StarClassification.no_match(REASON_CYCLE_TOO_SHORT)
    # A flag complex with this skeleton is forced to be the join; verify the
    # face count anyway so a malformed input cannot slip through.
    q_plus_1 = universal.bit_count()
    if len(K.face_masks) != (2 * p + 1) << q_plus_1:
        return StarClassification.no_match(REASON_CONE_NOT_UNIVERSAL)
    return StarClassification.match(p, K.labels_of(universal))
