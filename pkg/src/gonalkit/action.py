"""Group actions on the surface seen through a generating vector.

A generating vector ``(g_1, ..., g_r)`` for a signature ``(0; m_1, ..., m_r)``
describes a branched G-cover of the sphere. Points over the i-th branch value
are the left cosets ``x<g_i>``, with stabilizer ``x<g_i>x^-1``. Branch values
are indexed positionally: 0, 1, 2 are the three period-2 values and 3.. are
the period-p values.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from typing import Optional

from gonalkit.errors import InconsistencyError, InvalidParameterError, UnsupportedCaseError
from gonalkit.group_engine import (
    FiniteGroup,
    GroupElement,
    Subgroup,
    are_conjugate,
    build_dihedral_product,
    conjugate_subgroup,
    cyclic_subgroup,
    element_order,
    format_element,
    generated_subgroup,
    is_prime,
    is_subgroup,
    subgroups_of_prime_order,
)
from gonalkit.signature_rh import (
    Signature,
    TheoremParams,
    cs_unique_pn,
    reduced_area,
    rh_genus,
    teichmuller_dimension,
    theorem_params,
)

AUTOMORPHISM_GROUP_NOTE = (
    "only the action of D_p x D_p is verified; maximality of the automorphism group "
    "and gonal groups outside D_p x D_p are not checked"
)


@dataclass(frozen=True)
class GeneratingVector:
    group: FiniteGroup
    sig: Signature
    images: tuple[GroupElement, ...]

    def __post_init__(self):
        object.__setattr__(self, "images", tuple(self.images))
        if self.sig.h != 0:
            raise UnsupportedCaseError("generating vectors are supported for orbit genus 0 only")
        if len(self.images) != self.sig.r:
            raise InvalidParameterError(
                f"{len(self.images)} images given for {self.sig.r} periods"
            )

    def words(self) -> list[str]:
        return [format_element(x) for x in self.images]


@dataclass(frozen=True)
class ValidationReport:
    orders_ok: bool
    product_ok: bool
    surjective_ok: bool
    closure_order: int
    failures: tuple[str, ...] = ()

    @property
    def ok(self) -> bool:
        return self.orders_ok and self.product_ok and self.surjective_ok

    def to_dict(self) -> dict:
        return {
            "orders_ok": self.orders_ok,
            "product_ok": self.product_ok,
            "surjective_ok": self.surjective_ok,
            "closure_order": self.closure_order,
            "failures": list(self.failures),
            "ok": self.ok,
        }


@dataclass(frozen=True)
class FiberReport:
    branch_index: int
    fiber_size: int
    isotropy_counts: dict[Subgroup, int] = field(hash=False)


@dataclass(frozen=True)
class QuotientReport:
    subgroup: Subgroup
    quotient_genus: int
    induced_sig: Optional[Signature]
    method_crosscheck: bool
    fixed_point_genus: int


@dataclass(frozen=True)
class ConjugacyClass:
    representative: Subgroup
    members: tuple[tuple[Subgroup, GroupElement], ...]  # (subgroup, g with g rep g^-1 = subgroup)


@dataclass(frozen=True)
class CensusReport:
    p: int
    n: int
    all_groups: tuple[tuple[Subgroup, int], ...]
    gonal_groups: tuple[tuple[Subgroup, int], ...]
    conjugacy_classes: tuple[ConjugacyClass, ...]

    @property
    def all_conjugate(self) -> bool:
        return len(self.conjugacy_classes) == 1

    def to_dict(self) -> dict:
        return {
            "p": self.p,
            "n": self.n,
            "subgroups": [_subgroup_dict(H, genus) for H, genus in self.all_groups],
            "gonal_groups": [_subgroup_dict(H, genus) for H, genus in self.gonal_groups],
            "conjugacy_classes": [
                {
                    "representative": str(cls.representative),
                    "members": [
                        {"subgroup": str(H), "witness": format_element(w)} for H, w in cls.members
                    ],
                }
                for cls in self.conjugacy_classes
            ],
            "limitation": AUTOMORPHISM_GROUP_NOTE,
        }


def _subgroup_dict(H: Subgroup, genus: int) -> dict:
    return {
        "label": str(H),
        "generator": format_element(H.generator),
        "members": [format_element(x) for x in H.members],
        "quotient_genus": genus,
    }


@dataclass(frozen=True)
class TheoremReport:
    params: TheoremParams
    vector: GeneratingVector
    validation: ValidationReport
    computed_genus: int
    genus_ok: bool
    dimension: int
    dimension_ok: bool
    census: CensusReport
    census_ok: bool
    conjugate: bool
    conjugacy_ok: bool
    cs_sharp_ok: bool

    @property
    def checks(self) -> dict[str, bool]:
        return {
            "surface_kernel": self.validation.ok,
            "genus": self.genus_ok,
            "dimension": self.dimension_ok,
            "census": self.census_ok,
            "conjugacy_parity": self.conjugacy_ok,
            "cs_sharpness": self.cs_sharp_ok,
        }

    @property
    def passed(self) -> bool:
        return all(self.checks.values())

    def to_dict(self) -> dict:
        return {
            "params": self.params.to_dict(),
            "vector": self.vector.words(),
            "validation": self.validation.to_dict(),
            "computed_genus": self.computed_genus,
            "dimension": self.dimension,
            "census": self.census.to_dict(),
            "conjugate": self.conjugate,
            "checks": self.checks,
            "passed": self.passed,
            "automorphism_group_order_claim": "unverified",
        }


def paper_epimorphism(params: TheoremParams) -> GeneratingVector:
    """The family's explicit vector; which construction is used depends on the parity of d.

    Images of the period-p generators are listed for i = 4, ..., d+3.
    """
    p, d = params.p, params.d
    G = build_dihedral_product(p)
    rot = G.element(b=1, e=1)  # r1 r2
    if d % 2:
        third = G.element(a=1, b=1, c=1, e=1)
        tail = [G.inv(rot) if i % 2 == 0 else rot for i in range(4, d + 4)]
    else:
        third = G.mul(G.element(a=1, c=1), G.power(rot, -(d // 2)))
        tail = [G.r1 if i % 2 == 0 else G.r2 for i in range(4, d + 4)]
    gv = GeneratingVector(G, params.sig, (G.s1, G.s2, third, *tail))
    report = validate_surface_kernel(gv)
    if not report.ok:
        raise InconsistencyError(f"construction failed for p={p}, n={params.n}: {report.failures}")
    return gv


def validate_surface_kernel(gv: GeneratingVector) -> ValidationReport:
    G = gv.group
    failures = []
    orders_ok = True
    for i, (x, m) in enumerate(zip(gv.images, gv.sig.periods)):
        got = element_order(G, x)
        if got != m:
            orders_ok = False
            failures.append(f"order mismatch at index {i} (got {got}, need {m})")
    prod = G.product(gv.images)
    product_ok = prod.is_identity()
    if not product_ok:
        failures.append(f"product of images is {format_element(prod)}, not 1")
    closure = generated_subgroup(G, gv.images).order
    surjective_ok = closure == G.order
    if not surjective_ok:
        failures.append(f"images generate a subgroup of order {closure} < {G.order}")
    return ValidationReport(orders_ok, product_ok, surjective_ok, closure, tuple(failures))


@lru_cache(maxsize=None)
def _fiber_points(gv: GeneratingVector, branch_index: int) -> tuple[Subgroup, ...]:
    """Stabilizer of each point over a branch value, one entry per left coset x<g_i>."""
    G = gv.group
    C = cyclic_subgroup(G, gv.images[branch_index])
    seen: set[frozenset] = set()
    stabilizers = []
    for x in G.elements:
        coset = frozenset(G.mul(x, c) for c in C.members)
        if coset in seen:
            continue
        seen.add(coset)
        stabilizers.append(conjugate_subgroup(G, x, C))
    return tuple(stabilizers)


def fiber_isotropy(gv: GeneratingVector, branch_index: int) -> FiberReport:
    if not 0 <= branch_index < gv.sig.r:
        raise IndexError(f"branch index {branch_index} out of range 0..{gv.sig.r - 1}")
    counts: dict[Subgroup, int] = {}
    stabilizers = _fiber_points(gv, branch_index)
    for K in stabilizers:
        counts[K] = counts.get(K, 0) + 1
    return FiberReport(branch_index, len(stabilizers), dict(sorted(counts.items())))


def _coset_orbit_genus(gv: GeneratingVector, H: Subgroup) -> int:
    """Genus of S/H from the permutation action of each g_i on right cosets Hx."""
    G = gv.group
    cosets: dict[GroupElement, int] = {}
    reps = []
    for x in G.elements:
        if x in cosets:
            continue
        label = len(reps)
        reps.append(x)
        for h in H.members:
            cosets[G.mul(h, x)] = label
    N = len(reps)
    total = N * (2 * gv.sig.h - 2)
    for g in gv.images:
        perm = [cosets[G.mul(x, g)] for x in reps]
        total += N - _cycle_count(perm)
    if total % 2:
        raise InconsistencyError(f"odd Euler characteristic for {H}")
    return total // 2 + 1


def _cycle_count(perm: list[int]) -> int:
    seen = [False] * len(perm)
    cycles = 0
    for start in range(len(perm)):
        if seen[start]:
            continue
        cycles += 1
        j = start
        while not seen[j]:
            seen[j] = True
            j = perm[j]
    return cycles


def _ramification_sum(gv: GeneratingVector, H: Subgroup) -> int:
    """sum over surface points x of (|H ∩ Stab(x)| - 1); only branch fibers contribute."""
    total = 0
    for i in range(gv.sig.r):
        for K in _fiber_points(gv, i):
            total += len(H.member_set & K.member_set) - 1
    return total


def _fixed_point_count(gv: GeneratingVector, H: Subgroup) -> int:
    return sum(1 for i in range(gv.sig.r) for K in _fiber_points(gv, i) if H.issubset(K))


def _total_genus(gv: GeneratingVector) -> int:
    return rh_genus(gv.group.order, gv.sig)


def quotient_genus(gv: GeneratingVector, H: Subgroup) -> QuotientReport:
    """Genus of S/H, computed twice: by coset monodromy and by counting stabilizers."""
    G = gv.group
    if not is_subgroup(G, H):
        raise InvalidParameterError(f"{H} is not a subgroup of D_{G.p} x D_{G.p}")
    g = _total_genus(gv)
    genus = _coset_orbit_genus(gv, H)
    # 2g - 2 = |H| (2 n_H - 2) + sum_x (|H_x| - 1)
    rest = 2 * g - 2 - _ramification_sum(gv, H)
    if rest % (2 * H.order):
        raise InconsistencyError(f"fixed-point count for {H} gives a non-integral genus")
    fp_genus = rest // (2 * H.order) + 1
    if fp_genus != genus:
        raise InconsistencyError(
            f"quotient genus of {H}: coset orbits give {genus}, fixed points give {fp_genus}"
        )
    induced = None
    if is_prime(H.order):
        induced = Signature(genus, (H.order,) * _fixed_point_count(gv, H))
        if 2 * (g - 1) != H.order * reduced_area(induced):
            raise InconsistencyError(f"induced signature {induced} violates Riemann-Hurwitz")
    return QuotientReport(H, genus, induced, True, fp_genus)


def induced_signature(gv: GeneratingVector, H: Subgroup) -> Signature:
    if not is_prime(H.order):
        raise UnsupportedCaseError(f"induced signature needs a subgroup of prime order, got |H| = {H.order}")
    sig = quotient_genus(gv, H).induced_sig
    assert sig is not None
    return sig


def classify_subgroups(G: FiniteGroup, groups: list[Subgroup]) -> tuple[ConjugacyClass, ...]:
    classes: list[list] = []
    for H in groups:
        for cls in classes:
            w = are_conjugate(G, cls[0], H)
            if w is not None:
                cls[1].append((H, w))
                break
        else:
            classes.append([H, [(H, G.identity)]])
    return tuple(ConjugacyClass(rep, tuple(members)) for rep, members in classes)


def gonal_census(gv: GeneratingVector, p: int, n: int) -> CensusReport:
    G = gv.group
    rows = tuple((H, quotient_genus(gv, H).quotient_genus) for H in subgroups_of_prime_order(G, p))
    gonal = tuple(row for row in rows if row[1] == n)
    classes = classify_subgroups(G, [H for H, _ in gonal])
    return CensusReport(p, n, rows, gonal, classes)


def verify_theorem(p: int, n: int) -> TheoremReport:
    params = theorem_params(p, n)
    gv = paper_epimorphism(params)
    validation = validate_surface_kernel(gv)
    genus = rh_genus(gv.group.order, gv.sig)
    dim = teichmuller_dimension(gv.sig)
    census = gonal_census(gv, p, n)
    conjugate = census.all_conjugate
    return TheoremReport(
        params=params,
        vector=gv,
        validation=validation,
        computed_genus=genus,
        genus_ok=genus == 2 * n * p + (p - 1) ** 2,
        dimension=dim,
        dimension_ok=dim == params.d,
        census=census,
        census_ok=len(census.gonal_groups) >= 2 and all(k == n for _, k in census.gonal_groups),
        conjugate=conjugate,
        conjugacy_ok=len(census.gonal_groups) >= 2 and conjugate == (params.d % 2 == 1),
        cs_sharp_ok=not cs_unique_pn(p, n, params.g) and cs_unique_pn(p, n, params.g + 1),
    )
