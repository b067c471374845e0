"""Classification of flag complexes: freeness, one-relator conditions, and
Golodness, each decidable by independent combinatorial and homological routes.

The combinatorial route looks only at the 1-skeleton (chordality, the
cycle-join structure); the homological route inspects H_2 of the real
moment-angle complex or the bigraded row H_{2-j,2j} of the moment-angle
complex. The exhaustive sweeps in :mod:`macx.sweep` assert that the two
routes never disagree.

All group/algebra classifiers refuse non-flag input outright, since the
underlying equivalences are stated for flag complexes only.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from . import homology, simplicial
from .homology import HomologyGroup, Z_GROUP, ZERO_GROUP, homology_at
from .simplicial import StarClassification


class NonFlagError(ValueError):
    """Raised when a flag-only classifier is handed a non-flag complex."""


def _require_flag(K):
    check = simplicial.is_flag(K)
    if not check:
        raise NonFlagError(f"complex is not flag; missing face {check.witness}")


def is_free_commutator_group(K):
    """Whether the commutator subgroup of the associated right-angled Coxeter
    group is free: for flag K this is chordality of the 1-skeleton."""
    _require_flag(K)
    return bool(simplicial.is_chordal(simplicial.one_skeleton(K)))


def one_relator_group_combinatorial(K):
    """Combinatorial route: the complex is a p-cycle (p >= 4) possibly joined
    with a simplex."""
    _require_flag(K)
    return bool(simplicial.classify_star_condition(K))


def one_relator_group_homological(K, groups=None):
    """Homological route: H_2(R_K) is exactly Z (rank one, no torsion)."""
    _require_flag(K)
    if groups is None:
        groups = homology.homology_R(K)
    return homology_at(groups, 2) == Z_GROUP


def one_relator_algebra_homological(K, table=None):
    """Homological route for the loop algebra: the row H_{2-j,2j} of the
    bigraded table holds exactly one nonzero group, equal to Z, at some
    4 <= j <= m."""
    _require_flag(K)
    if table is None:
        table = homology.bigraded_homology_Z(K)
    hits = []
    for j in range(2, K.m + 1):
        g = table.entry(j - 2, 2 * j)
        if not g.is_zero:
            hits.append((j, g))
    if len(hits) != 1:
        return False
    j, g = hits[0]
    return 4 <= j <= K.m and g == Z_GROUP


def vanishing_check(K, groups=None, table=None):
    """For a complex satisfying the cycle-join condition, verify both
    vanishing statements: H_k(R_K) = 0 for k >= 3 and H_{-i,2j}(Z_K) = 0
    whenever j - i >= 3."""
    if not simplicial.classify_star_condition(K):
        raise ValueError("vanishing check applies to cycle-join complexes only")
    if groups is None:
        groups = homology.homology_R(K)
    if table is None:
        table = homology.bigraded_homology_Z(K)
    if any(not g.is_zero for g in groups[3:]):
        return False
    return all(j2 // 2 - i < 3 for (i, j2) in table.entries)


def golod_flag(K):
    """Golodness of a flag complex, decided by chordality of the 1-skeleton."""
    _require_flag(K)
    return bool(simplicial.is_chordal(simplicial.one_skeleton(K)))


def minimally_non_golod_flag(K):
    """Not Golod, but Golod after deleting any single vertex."""
    _require_flag(K)
    if golod_flag(K):
        return False
    for v in K.labels:
        rest = [u for u in K.labels if u != v]
        deleted = simplicial.full_subcomplex(K, rest)
        if not simplicial.is_chordal(simplicial.one_skeleton(deleted)):
            return False
    return True


def surface_genus(p):
    """Genus of the closed orientable surface that the real moment-angle
    complex of a p-cycle is homeomorphic to: (p-4) * 2^(p-3) + 1."""
    if p < 4:
        raise ValueError(f"cycle length must be at least 4, got {p}")
    return (p - 4) * (1 << (p - 3)) + 1


@dataclass(frozen=True)
class RelatorWord:
    """A freely reduced word over a free group basis x_1, ..., x_l.

    Letters are (generator index, exponent) pairs with exponent +-1.
    """

    letters: tuple[tuple[int, int], ...]

    def __post_init__(self):
        for idx, exp in self.letters:
            if idx < 1:
                raise ValueError(f"generator index must be >= 1, got {idx}")
            if exp not in (1, -1):
                raise ValueError(f"exponent must be +-1, got {exp}")
        for (i1, e1), (i2, e2) in zip(self.letters, self.letters[1:]):
            if i1 == i2 and e1 == -e2:
                raise ValueError("word is not freely reduced")

    @classmethod
    def from_ints(cls, ints):
        """Build from signed indices, e.g. [1, 2, -1, -2] for x1 x2 x1^-1 x2^-1."""
        letters = []
        for n in ints:
            if n == 0:
                raise ValueError("letter 0 is not a generator")
            letters.append((abs(n), 1 if n > 0 else -1))
        return cls(tuple(letters))

    def max_index(self):
        return max((idx for idx, _ in self.letters), default=0)

    def exponent_sums(self, l):
        sums = [0] * l
        for idx, exp in self.letters:
            sums[idx - 1] += exp
        return sums

    def __str__(self):
        return " ".join(
            f"x{idx}" if exp == 1 else f"x{idx}^-1" for idx, exp in self.letters
        )


def y_space_homology(l, relator):
    """Homology of the 2-complex with l circles and one 2-cell attached along
    the relator: H_0 = Z, H_2 = Z exactly when all exponent sums vanish, and
    H_1 the abelianisation cokernel computed by Smith normal form of the
    1 x l exponent matrix. Everything above degree 2 is zero.
    """
    if l < 1:
        raise ValueError("need at least one generator")
    if not relator.letters:
        raise ValueError("relator must be nonempty")
    if relator.max_index() > l:
        raise ValueError("relator uses a generator beyond the basis")
    sums = relator.exponent_sums(l)
    matrix = homology.IntMatrix.from_rows([sums])
    diag, rank = homology.smith_normal_form(matrix)
    if rank == 0:
        h1 = HomologyGroup(l)
        h2 = Z_GROUP
    else:
        h1 = HomologyGroup.from_divisors(l - 1, [d for d in diag if d > 1])
        h2 = ZERO_GROUP
    return [Z_GROUP, h1, h2]


@dataclass
class ClassificationReport:
    """Aggregate verdicts for one complex. Group/algebra/Golod fields are None
    when the complex is not flag (those classifiers refuse non-flag input)."""

    flag: bool
    chordal: bool
    star_condition: StarClassification
    free_group: bool | None = None
    one_relator_group: bool | None = None
    one_relator_algebra: bool | None = None
    golod: bool | None = None
    minimally_non_golod: bool | None = None
    genus: int | None = None
    witnesses: dict = field(default_factory=dict)


def build_report(K, groups=None, table=None):
    """Run every classifier on one complex, reusing precomputed homology when
    supplied. Both one-relator routes are evaluated; the report stores the
    combinatorial verdict and files the homological ones under witnesses."""
    flag_check = simplicial.is_flag(K)
    chordal_check = simplicial.is_chordal(simplicial.one_skeleton(K))
    star = simplicial.classify_star_condition(K)
    witnesses = {}
    if flag_check.witness:
        witnesses["missing_face"] = flag_check.witness
    if chordal_check.witness:
        witnesses["chordless_cycle"] = chordal_check.witness
    report = ClassificationReport(
        flag=bool(flag_check),
        chordal=bool(chordal_check),
        star_condition=star,
        witnesses=witnesses,
    )
    if not flag_check:
        return report
    if groups is None:
        groups = homology.homology_R(K)
    if table is None:
        table = homology.bigraded_homology_Z(K)
    report.free_group = bool(chordal_check)
    report.one_relator_group = bool(star)
    report.one_relator_algebra = bool(star)
    report.golod = bool(chordal_check)
    report.minimally_non_golod = minimally_non_golod_flag(K)
    witnesses["h2_R"] = str(homology_at(groups, 2))
    witnesses["one_relator_group_homological"] = one_relator_group_homological(K, groups)
    witnesses["one_relator_algebra_homological"] = one_relator_algebra_homological(K, table)
    if star:
        report.genus = surface_genus(star.p)
    return report
