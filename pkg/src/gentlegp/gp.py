"""Gorenstein-projective classification and the singularity-category
descriptor, with an independent homological oracle as a cross-check.

The classifier is purely combinatorial and never consults the oracle;
agreement between the two routes is the point of the library.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .gentle import (CriticalCycle, GentleAlgebra, critical_cycles,
                     radical_summand_word)
from .linalg import QQ
from .reps import (Representation, ext_profile, embedding_obstruction,
                   is_projective, module_signature, projective_rep,
                   radical_summand_rep, stable_hom_dim, syzygy)


class ClassificationMismatchError(AssertionError):
    """Computed homological data contradicts the combinatorial
    classification; indicates a bug, never silently ignored."""


@dataclass(frozen=True)
class GPClassification:
    projectives: tuple[str, ...]  # vertex ids
    nonprojective: tuple  # (cycle, arrow name) pairs, cycle order

    def nonprojective_arrows(self):
        return [arrow for _, arrow in self.nonprojective]


def classify_gp(a: GentleAlgebra) -> GPClassification:
    """Indecomposable GPs: all projectives plus one radical summand per
    arrow on a critical cycle."""
    nonproj = []
    for c in critical_cycles(a):
        for arrow in c.arrows:
            nonproj.append((c, arrow))
    return GPClassification(tuple(a.vertices), tuple(nonproj))


@dataclass(frozen=True)
class SingularityDescriptor:
    cycle_lengths: tuple[int, ...]  # sorted multiset

    def factor_labels(self):
        return [f"{n - 1}-cluster category of type A1"
                for n in self.cycle_lengths]

    @property
    def object_count(self):
        return sum(self.cycle_lengths)


def singularity_descriptor(a: GentleAlgebra) -> SingularityDescriptor:
    return SingularityDescriptor(
        tuple(sorted(c.length for c in critical_cycles(a))))


@dataclass
class OracleCertificate:
    module_label: str
    verdict: str  # GP | not-GP | inconclusive-to-bound
    ext_dims: list
    period: int | None
    status: str
    obstruction: int
    reason: str


def default_ext_bound(a: GentleAlgebra) -> int:
    return 2 * len(a.arrows) + 4


def gp_oracle(a: GentleAlgebra, m: Representation, bound: int | None = None,
              label: str = "") -> OracleCertificate:
    """Brute-force Gorenstein-projectivity check: Ext vanishing against
    the regular module plus the submodule-of-projective test."""
    if bound is None:
        bound = default_ext_bound(a)
    obstruction = embedding_obstruction(m)
    if obstruction > 0:
        return OracleCertificate(label, "not-GP", [], None, "embedding",
                                 obstruction,
                                 "does not embed into a projective module")
    profile = ext_profile(m, bound)
    if not profile.all_zero:
        first = next(i + 1 for i, d in enumerate(profile.dims) if d)
        return OracleCertificate(label, "not-GP", profile.dims,
                                 profile.period, profile.status, obstruction,
                                 f"Ext^{first} against the algebra is nonzero")
    if profile.status == "terminated":
        if is_projective(m):
            return OracleCertificate(label, "GP", profile.dims, None,
                                     profile.status, obstruction, "projective")
        # finite projective dimension and not projective: not GP
        return OracleCertificate(label, "not-GP", profile.dims, None,
                                 profile.status, obstruction,
                                 "finite projective dimension, not projective")
    if profile.status == "periodic":
        return OracleCertificate(label, "GP", profile.dims, profile.period,
                                 profile.status, obstruction,
                                 "Ext vanishing certified by syzygy periodicity")
    return OracleCertificate(label, "inconclusive-to-bound", profile.dims,
                             None, profile.status, obstruction,
                             f"all Ext dims zero up to bound {bound}, "
                             "no periodicity certificate")


@lru_cache(maxsize=None)
def gp_signatures(a: GentleAlgebra, fld=QQ):
    """Signatures of every classified indecomposable GP module."""
    cls = classify_gp(a)
    sigs = []
    for v in cls.projectives:
        sigs.append(("P", v, module_signature(projective_rep(a, v, fld))))
    for cycle, arrow in cls.nonprojective:
        sigs.append(("R", arrow,
                     module_signature(radical_summand_rep(a, arrow, fld))))
    return tuple(sigs)


def classifier_membership(a: GentleAlgebra, m: Representation) -> bool:
    """Does M match (by signature) a module on the classified GP list?"""
    sig = module_signature(m)
    return any(s == sig for _, _, s in gp_signatures(a, m.field))


@dataclass
class StableCategoryTable:
    objects: list  # (cycle name, arrow) in cycle order
    orbits: list   # lists of arrow names, shift orbit order
    matrix: list   # stable hom dims, row = source object

    @property
    def is_identity(self):
        n = len(self.objects)
        return all(self.matrix[i][j] == (1 if i == j else 0)
                   for i in range(n) for j in range(n))


def stable_category_table(a: GentleAlgebra, fld=QQ) -> StableCategoryTable:
    """Objects, shift orbits, and the stable-hom matrix of the
    non-projective GPs; verifies the cyclic syzygy action and the
    delta-shaped stable homs, raising ClassificationMismatchError otherwise."""
    cycles = critical_cycles(a)
    objects = []
    orbits = []
    for c in cycles:
        orbits.append(list(c.arrows))
        for arrow in c.arrows:
            objects.append((c.name, arrow))

    # shift orbit: the syzygy of R(alpha_i) is R(alpha_{i+1}) along the cycle
    for c in cycles:
        n = c.length
        for i, arrow in enumerate(c.arrows):
            nxt = c.arrows[(i + 1) % n]
            omega = syzygy(radical_summand_rep(a, arrow, fld))
            expected = module_signature(radical_summand_rep(a, nxt, fld))
            if module_signature(omega) != expected:
                raise ClassificationMismatchError(
                    f"syzygy of the radical summand at {arrow!r} does not "
                    f"match the next summand {nxt!r} on its cycle")

    reps = [radical_summand_rep(a, arrow, fld) for _, arrow in objects]
    matrix = [[stable_hom_dim(m, n) for n in reps] for m in reps]
    table = StableCategoryTable(objects, orbits, matrix)
    if objects and not table.is_identity:
        raise ClassificationMismatchError(
            "stable-hom matrix of the non-projective GPs is not the identity")
    return table


@dataclass(frozen=True)
class ComparisonReport:
    compatible: bool
    left: tuple[int, ...]
    right: tuple[int, ...]
    witness_length: int | None  # first length with differing multiplicity


def compare_derived_invariant(a: GentleAlgebra,
                              b: GentleAlgebra) -> ComparisonReport:
    """Necessary condition for derived equivalence: equal multisets of
    critical-cycle lengths."""
    da = singularity_descriptor(a).cycle_lengths
    db = singularity_descriptor(b).cycle_lengths
    if da == db:
        return ComparisonReport(True, da, db, None)
    lengths = sorted(set(da) | set(db))
    witness = next(l for l in lengths if da.count(l) != db.count(l))
    return ComparisonReport(False, da, db, witness)
