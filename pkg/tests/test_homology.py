import random

import pytest

from conftest import (
    all_graphs,
    cycle,
    euler_characteristic_real,
    projective_plane,
    rank_mod_p,
    rank_over_q,
    simplex,
    square_broken_cone,
    square_cone,
    square_partial_cone,
)
from macx import homology
from macx.homology import (
    HomologyGroup,
    IntMatrix,
    betti_Z,
    bigraded_homology_Z,
    boundary_matrix,
    homology_R,
    reduced_homology,
    smith_normal_form,
)
from macx.simplicial import SimplicialComplex, clique_complex, full_subcomplex, join

Z = HomologyGroup(1)
ZERO = HomologyGroup()


# -- groups -------------------------------------------------------------------


def test_group_normalisation():
    assert HomologyGroup.from_divisors(0, [2, 3]) == HomologyGroup(0, (6,))
    assert HomologyGroup.from_divisors(0, [4, 6]) == HomologyGroup(0, (2, 12))
    assert HomologyGroup.from_divisors(1, [0, 2]) == HomologyGroup(2, (2,))
    assert HomologyGroup.direct_sum(HomologyGroup(1, (2,)), HomologyGroup(0, (3,))) == \
        HomologyGroup(1, (6,))


def test_group_validation():
    with pytest.raises(ValueError):
        HomologyGroup(-1)
    with pytest.raises(ValueError):
        HomologyGroup(0, (3, 2))   # not a divisibility chain
    with pytest.raises(ValueError):
        HomologyGroup(0, (1,))


def test_group_rendering():
    assert str(ZERO) == "0"
    assert str(Z) == "Z"
    assert str(HomologyGroup(3)) == "Z^3"
    assert str(HomologyGroup(1, (2, 4))) == "Z + Z/2 + Z/4"


# -- boundary matrices and SNF --------------------------------------------------


def test_boundary_of_edge():
    K = SimplicialComplex.from_facets([[1, 2]], 2)
    M = boundary_matrix(K, 1)
    assert (M.rows, M.cols) == (2, 1)
    assert M.entries == ((-1,), (1,))


def test_boundary_of_triangle_cycle():
    M = boundary_matrix(cycle(3), 1)
    assert (M.rows, M.cols) == (3, 3)
    assert smith_normal_form(M)[1] == 2


def test_boundary_of_filled_triangle():
    M = boundary_matrix(simplex(2), 2)
    assert (M.rows, M.cols) == (3, 1)
    assert tuple(row[0] for row in M.entries) == (1, -1, 1)


def test_augmentation_row():
    M = boundary_matrix(cycle(4), 0)
    assert (M.rows, M.cols) == (1, 4)
    assert M.entries == ((1, 1, 1, 1),)


def test_boundary_squares_to_zero():
    for K in [cycle(5), square_partial_cone(), square_cone(), simplex(3), projective_plane()]:
        for k in range(1, K.dim + 1):
            up = boundary_matrix(K, k + 1) if k + 1 <= K.dim else None
            if up is None:
                continue
            down = boundary_matrix(K, k)
            prod = [
                [
                    sum(down.entries[r][x] * up.entries[x][c] for x in range(down.cols))
                    for c in range(up.cols)
                ]
                for r in range(down.rows)
            ]
            assert all(v == 0 for row in prod for v in row)


def test_snf_examples():
    ident = IntMatrix.from_rows([[1, 0, 0], [0, 1, 0], [0, 0, 1]])
    assert smith_normal_form(ident) == ((1, 1, 1), 3)
    diag = IntMatrix.from_rows([[2, 0], [0, 0]])
    assert smith_normal_form(diag) == ((2,), 1)
    known = IntMatrix.from_rows([[2, 4], [6, 8]])
    assert smith_normal_form(known) == ((2, 4), 2)


def test_snf_against_determinantal_divisors():
    # product of the first k invariant factors = gcd of all k x k minors
    from itertools import combinations
    from math import gcd

    rng = random.Random(4242)
    for _ in range(40):
        rows = rng.randrange(1, 5)
        cols = rng.randrange(1, 5)
        mat = [[rng.randrange(-6, 7) for _ in range(cols)] for _ in range(rows)]
        diag, rank = smith_normal_form(IntMatrix.from_rows(mat))
        running = 1
        for k in range(1, min(rows, cols) + 1):
            divisor = 0
            for rsel in combinations(range(rows), k):
                for csel in combinations(range(cols), k):
                    divisor = gcd(divisor, _det([[mat[r][c] for c in csel] for r in rsel]))
            if divisor == 0:
                assert rank < k
                break
            running *= diag[k - 1]
            assert running == divisor


def _det(m):
    if len(m) == 1:
        return m[0][0]
    total = 0
    for j in range(len(m)):
        minor = [row[:j] + row[j + 1:] for row in m[1:]]
        total += (-1) ** j * m[0][j] * _det(minor)
    return total


def test_snf_against_rational_rank_on_random_matrices():
    rng = random.Random(99)
    for _ in range(60):
        rows = rng.randrange(1, 6)
        cols = rng.randrange(1, 6)
        mat = [[rng.randrange(-9, 10) for _ in range(cols)] for _ in range(rows)]
        diag, rank = smith_normal_form(IntMatrix.from_rows(mat))
        assert rank == rank_over_q(mat)
        for a, b in zip(diag, diag[1:]):
            assert b % a == 0
        # determinant of invariant factors detects every prime's rank drop
        for p in (2, 3, 5, 7):
            assert rank_mod_p(mat, p) == sum(1 for d in diag if d % p)


def test_projective_plane_torsion():
    groups = reduced_homology(projective_plane())
    assert groups == [ZERO, HomologyGroup(0, (2,)), ZERO]
    # independent field-rank oracle: betti numbers over Q are (0,0,0) but over
    # F_2 they are (0,1,1), which forces exactly one Z/2 in degree one
    K = projective_plane()
    d1 = [list(r) for r in boundary_matrix(K, 1).entries]
    d2 = [list(r) for r in boundary_matrix(K, 2).entries]
    n1, n2 = len(d1[0]), len(d2[0])
    for p, expect in ((2, (1, 1)), (3, (0, 0))):
        r1 = rank_mod_p(d1, p)
        r2 = rank_mod_p(d2, p)
        b1 = n1 - r1 - r2
        b2 = n2 - r2
        assert (b1, b2) == expect


# -- reduced homology -----------------------------------------------------------


def test_reduced_homology_of_cycles():
    for p in range(4, 8):
        assert reduced_homology(cycle(p)) == [ZERO, Z]


def test_reduced_homology_two_points():
    K = SimplicialComplex.from_facets([], 2)
    assert reduced_homology(K) == [Z]


def test_reduced_homology_cone_is_trivial():
    assert reduced_homology(square_cone()) == [ZERO, ZERO, ZERO]
    for base in [cycle(5), square_partial_cone()]:
        apex = SimplicialComplex.from_facets([[99]], [99])
        cone = join(base, apex)
        assert all(g.is_zero for g in reduced_homology(cone))


def test_reduced_homology_empty_complex():
    K = SimplicialComplex.from_facets([], 0)
    assert reduced_homology(K) == []


# -- subset decompositions -------------------------------------------------------


def test_homology_R_apex_complexes():
    assert homology_R(square_partial_cone()) == [Z, HomologyGroup(4), HomologyGroup(3), ZERO]
    assert homology_R(square_cone()) == [Z, HomologyGroup(2), Z, ZERO]


def test_homology_R_five_cycle():
    groups = homology_R(cycle(5))
    # oracle: closed surface of genus g = (5-4)*2^2 + 1 = 5, so H_1 = Z^10
    assert groups == [Z, HomologyGroup(10), Z]


def test_homology_R_rank2_counts_induced_cycles_with_multiplicity():
    for K in [square_partial_cone(), square_cone(), cycle(6)]:
        total = 0
        for size in range(K.m + 1):
            from itertools import combinations

            for sub in combinations(K.labels, size):
                groups = reduced_homology(full_subcomplex(K, sub))
                if len(groups) > 1:
                    total += groups[1].free_rank
        assert homology_R(K)[2].free_rank == total


def test_bigraded_apex_complexes():
    table = bigraded_homology_Z(square_partial_cone())
    assert table.entry(2, 8) == HomologyGroup(2)
    assert table.entry(3, 10) == Z
    table = bigraded_homology_Z(square_cone())
    assert table.entry(2, 8) == Z
    assert table.entry(0, 0) == Z


def test_bigraded_cycle_row_and_vanishing():
    for p in range(4, 8):
        table = bigraded_homology_Z(cycle(p))
        for j in range(2, p + 1):
            expected = Z if j == p else ZERO
            assert table.entry(j - 2, 2 * j) == expected
        assert all(j2 // 2 - i < 3 for i, j2 in table.entries)


def test_betti_reassembly():
    assert betti_Z(cycle(4)) == [1, 0, 0, 2, 0, 0, 1]
    assert betti_Z(cycle(5)) == [1, 0, 0, 5, 5, 0, 0, 1]


def test_betti_broken_cone():
    # frozen from the bigraded computation; the alternating sum vanishes as it
    # must for any moment-angle complex over a non-simplex
    assert betti_Z(square_broken_cone()) == [1, 0, 0, 2, 0, 1, 3, 1]
    assert sum((-1) ** k * b for k, b in enumerate(betti_Z(square_broken_cone()))) == 0


def test_euler_characteristic_consistency():
    corpus = [clique_complex(g) for g in all_graphs(4)]
    corpus += [square_partial_cone(), square_cone(), square_broken_cone(), cycle(6)]
    for K in corpus:
        groups = homology_R(K)
        alternating = sum((-1) ** k * g.free_rank for k, g in enumerate(groups))
        assert alternating == euler_characteristic_real(K)


def test_chordal_flag_concentrates_in_linear_row():
    # chordal flag complexes have all full subcomplexes homotopy-discrete, so
    # away from (0,0) the table lives on the line i = j - 1; a chordless cycle
    # breaks the line. Both directions exhaustively at five vertices.
    from macx.simplicial import is_chordal, one_skeleton

    for n in range(1, 6):
        for g in all_graphs(n):
            K = clique_complex(g)
            table = bigraded_homology_Z(K)
            on_line = all(
                (i, j2) == (0, 0) or i == j2 // 2 - 1 for i, j2 in table.entries
            )
            assert on_line == bool(is_chordal(one_skeleton(K)))


def test_chordal_flag_concentration_six_vertices():
    # the chordal direction over every chordal flag complex on six vertices
    from macx.simplicial import is_chordal, one_skeleton

    for g in all_graphs(6):
        if not is_chordal(g):
            continue
        table = bigraded_homology_Z(clique_complex(g))
        assert all((i, j2) == (0, 0) or i == j2 // 2 - 1 for i, j2 in table.entries)


def test_reduced_homology_agrees_with_public_boundary_matrices():
    # dual route: the public boundary_matrix + smith_normal_form contract must
    # reproduce what the internal pipeline computes
    corpus = [cycle(5), square_partial_cone(), square_cone(), square_broken_cone(),
              projective_plane(), simplex(3)]
    for K in corpus:
        groups = reduced_homology(K)
        ranks = {}
        diags = {}
        counts = {}
        for k in range(K.dim + 2):
            M = boundary_matrix(K, k)
            counts[k] = M.cols
            diags[k], ranks[k] = smith_normal_form(M)
        for k in range(K.dim + 1):
            free = counts[k] - ranks[k] - ranks.get(k + 1, 0)
            torsion = [d for d in diags.get(k + 1, ()) if d > 1]
            assert groups[k] == HomologyGroup.from_divisors(free, torsion)


def test_total_degree_reassembly_matches_R_grading():
    # sanity: both decompositions see the same subset homology, so the rank of
    # H_(k)(R) and the bigraded table satisfy the same subset sums in degree 2
    K = square_partial_cone()
    table = bigraded_homology_Z(K)
    rank_h2 = homology_R(K)[2].free_rank
    assert rank_h2 == sum(
        g.free_rank for (i, j2), g in table.entries.items() if j2 // 2 - i - 1 == 1
    )


def test_cache_determinism():
    K = square_partial_cone()
    first = homology_R(K)
    homology.clear_cache()
    assert homology_R(K) == first
