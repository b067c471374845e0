"""Acceptance suite: the ten exit criteria, one test each, with a pass/fail
line and elapsed time printed per criterion (run with -s to see them live).

The two n=6 sweeps share the module-level subcomplex-homology memo, so the
second one runs warm; each is still asserted against its own wall-clock
budget.
"""

import time
from contextlib import contextmanager

from conftest import cycle, square_broken_cone, square_cone, square_partial_cone
from macx import cli, loop_algebra, sweep
from macx.classify import surface_genus
from macx.generators import generator_count
from macx.homology import betti_Z, homology_R
from macx.loop_algebra import (
    adams_hilton_model,
    dga_homology_ranks,
    differs_from_single_relation_series,
    mcgavran,
    poincare_series_closed,
    quotient_series,
    rank_oracle_monomials,
)
from macx.sweep import SweepConfig, run_sweep


@contextmanager
def criterion(num, label, budget=None):
    start = time.perf_counter()
    try:
        yield
        elapsed = time.perf_counter() - start
        if budget is not None:
            assert elapsed < budget, f"budget {budget}s exceeded: {elapsed:.1f}s"
    except Exception:
        print(f"criterion {num:2d} FAIL  {label}")
        raise
    print(f"criterion {num:2d} PASS  {label}  ({elapsed:.2f}s)")


def test_criterion_01_generator_counts():
    with criterion(1, "generator counts for the 5- and 6-cycle", budget=1.0):
        assert generator_count(cycle(5)) == 10
        assert generator_count(cycle(6)) == 34


def test_criterion_02_worked_example_reports():
    with criterion(2, "worked examples: homology and generator words", budget=1.0):
        a = cli.analyze(square_partial_cone())
        assert next(e for e in a["H_R"] if e["k"] == 2) == {"k": 2, "rank": 3, "torsion": []}
        assert a["generators_group"] == [
            "(g_3,g_1)", "(g_4,g_2)", "(g_5,g_4)", "(g_2,(g_5,g_4))"
        ]
        big_a = {(e["i"], e["j2"]): (e["rank"], e["torsion"]) for e in a["H_Z_bigraded"]}
        assert big_a[(2, 8)] == (2, [])
        assert big_a[(3, 10)] == (1, [])

        b = cli.analyze(square_cone())
        assert next(e for e in b["H_R"] if e["k"] == 2) == {"k": 2, "rank": 1, "torsion": []}
        assert b["generators_group"] == ["(g_3,g_1)", "(g_4,g_2)"]
        big_b = {(e["i"], e["j2"]): (e["rank"], e["torsion"]) for e in b["H_Z_bigraded"]}
        assert big_b[(2, 8)] == (1, [])
        assert (3, 10) not in big_b


def test_criterion_03_group_theorem_sweep():
    label = "n=6 sweep: H_2(R_K)=Z iff cycle-join, H_k(R_K)=0 for k>=3"
    with criterion(3, label, budget=300.0):
        cfg = SweepConfig(max_vertices=6, checks=frozenset({sweep.CHECK_GROUP,
                                                            sweep.CHECK_VANISHING}))
        report = run_sweep(cfg, workers=1)
        assert report.counterexamples == []
        assert report.complexes_checked == 1 + 2 + 8 + 64 + 1024 + 32768
        assert report.tallies["h2_exactly_Z"] == report.tallies["star_matches"]


def test_criterion_04_algebra_theorem_sweep():
    label = "n=6 sweep: bigraded row condition iff cycle-join, j-i>=3 vanishing"
    with criterion(4, label, budget=900.0):
        cfg = SweepConfig(max_vertices=6, checks=frozenset({sweep.CHECK_ALGEBRA,
                                                            sweep.CHECK_VANISHING}))
        report = run_sweep(cfg, workers=1)
        assert report.counterexamples == []
        assert report.tallies["one_relator_row"] == report.tallies["star_matches"]


def test_criterion_05_series_triple_agreement():
    with criterion(5, "closed form = monomial oracle = dg-algebra ranks", budget=120.0):
        for M, depth in [(mcgavran(4), 10), (mcgavran(5), 10)]:
            closed = poincare_series_closed(M, depth)
            oracle = rank_oracle_monomials(M, depth)
            dga = dga_homology_ranks(adams_hilton_model(M), depth)
            assert closed.coefficients == oracle.coefficients == dga.ranks
            assert dga.torsion == {}
        single = loop_algebra.SphereProductSum(6, (3,))
        closed = poincare_series_closed(single, 14)
        oracle = rank_oracle_monomials(single, 14)
        dga = dga_homology_ranks(adams_hilton_model(single), 14)
        assert closed.coefficients == oracle.coefficients == dga.ranks
        assert poincare_series_closed(mcgavran(5), 5).coefficients == (1, 0, 5, 5, 25, 49)


def test_criterion_06_mcgavran_betti_consistency():
    with criterion(6, "betti(Z_K) of cycles equals the sphere-product sum", budget=60.0):
        for p in range(4, 8):
            assert betti_Z(cycle(p)) == mcgavran(p).betti()
        assert betti_Z(cycle(5))[3:5] == [5, 5]


def test_criterion_07_genus_euler_consistency():
    with criterion(7, "surface genus vs alternating homology ranks", budget=60.0):
        for p in range(4, 9):
            groups = homology_R(cycle(p))
            chi = sum((-1) ** k * g.free_rank for k, g in enumerate(groups))
            assert chi == 2 - 2 * ((p - 4) * 2 ** (p - 3) + 1)
            assert surface_genus(p) == (p - 4) * 2 ** (p - 3) + 1


def test_criterion_08_half_smash_deviation():
    with criterion(8, "half-smash homology rejects every one-relation series", budget=120.0):
        A = adams_hilton_model(loop_algebra.SphereProductSum(6, (3,)), half_smash=True)
        result = dga_homology_ranks(A, 7)
        degrees = [2, 2, 3, 3]
        assert differs_from_single_relation_series(result.series, degrees,
                                                   max_relation_degree=7)
        reference = quotient_series(degrees, 4, 7)
        assert any(result.ranks[k] < reference[k] for k in range(8))


def test_criterion_09_broken_cone_betti():
    with criterion(9, "non-flag broken cone: betti vector of Z_K", budget=1.0):
        betti = betti_Z(square_broken_cone())
        assert (betti[3], betti[5], betti[6], betti[7]) == (2, 1, 3, 1)
        assert betti == [1, 0, 0, 2, 0, 1, 3, 1]


def test_criterion_10_flag_golod_chain():
    label = "n<=6 sweep: minimally non-Golod iff a cycle, Golod iff chordal"
    with criterion(10, label):
        cfg = SweepConfig(max_vertices=6, checks=frozenset({sweep.CHECK_FLAGMNG}))
        report = run_sweep(cfg, workers=1)
        assert report.counterexamples == []
        assert report.tallies["minimally_non_golod"] == report.tallies["cycle_complexes"]
        assert report.tallies["golod"] == report.tallies["chordal"]
