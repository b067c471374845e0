"""macx: homological and combinatorial invariants of moment-angle complexes
over small simplicial complexes."""

from .simplicial import (
    MAX_VERTICES,
    CheckResult,
    Graph,
    SimplicialComplex,
    StarClassification,
    classify_star_condition,
    clique_complex,
    find_induced_cycles,
    full_subcomplex,
    is_chordal,
    is_cycle,
    is_flag,
    join,
    link,
    one_skeleton,
    star,
)
from .homology import (
    BigradedTable,
    HomologyGroup,
    IntMatrix,
    betti_Z,
    bigraded_homology_Z,
    boundary_matrix,
    homology_R,
    reduced_homology,
    smith_normal_form,
)
from .classify import (
    ClassificationReport,
    NonFlagError,
    RelatorWord,
    build_report,
    golod_flag,
    is_free_commutator_group,
    minimally_non_golod_flag,
    one_relator_algebra_homological,
    one_relator_group_combinatorial,
    one_relator_group_homological,
    surface_genus,
    vanishing_check,
    y_space_homology,
)
from .generators import (
    CommutatorWord,
    GeneratorSet,
    enumerate_generators,
    generator_count,
    render_word,
)
from .loop_algebra import (
    FreeDGAlgebra,
    GradedSeries,
    SphereProductSum,
    adams_hilton_model,
    dga_homology_ranks,
    mcgavran,
    poincare_series_closed,
    rank_oracle_monomials,
)
from .sweep import SweepConfig, SweepReport, enumerate_flag_complexes, run_sweep

__version__ = "0.1.0"
