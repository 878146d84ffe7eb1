"""Multiplicity tables and equivalence verdicts.

A table maps (class id, irreducible index) to the multiplicity of the
corresponding simple summand.  Two routes compute it: the pair route sums
fixed-point dimensions over the normalizer images of the class members,
and the fusion route sums them over triple-orbit stabilizers; they must
agree on every class with nontrivial subgroup.  Rows are stored sparsely:
a class appears with all its irreducible indices or not at all, and
absent rows read as zero.
"""

from __future__ import annotations

from dataclasses import dataclass

from .chartab import fixed_point_dim
from .ddelta import PairClassRegistry, image_of_normalizer
from .errors import DomainError, InternalCheckError
from .fusion import FusionData, triple_orbits
from .permgroup import (
    PermGroup,
    Subgroup,
    direct_product,
    is_prime,
    sylow_subgroup,
)
from .autos import find_group_isomorphism


def invariants_kl(G: PermGroup, p: int):
    """(k, l, k - l): class count, p-regular class count, difference."""
    if not is_prime(p):
        raise DomainError(f"{p} is not prime")
    classes = G.conjugacy_data()
    k = len(classes)
    l = sum(1 for c in classes if c.rep.order() % p != 0)
    return k, l, k - l


def defect_order(G: PermGroup, p: int) -> int:
    """Order of a Sylow p-subgroup."""
    out = 1
    n = G.order
    while n % p == 0:
        out *= p
        n //= p
    return out


@dataclass
class MultiplicityTable:
    """Multiplicities of simple summands, with block-style invariants."""

    group_name: str
    group: PermGroup
    p: int
    k: int
    l: int
    defect_order: int
    rows: dict  # (class_id, irr_index) -> multiplicity
    registry: PairClassRegistry
    sylow: Subgroup
    includes_trivial: bool

    def class_ids(self):
        return sorted({cid for cid, _ in self.rows})

    def row_items(self):
        return sorted(self.rows.items())


def mult_table_pairs(
    G: PermGroup, p: int, registry: PairClassRegistry, name: str = "group"
) -> MultiplicityTable:
    """Multiplicity table through the pair route.

    m(class, chi) is the sum over the class members (P, s) of the fixed
    point dimension of chi on the image of N_G(P, s) in the out group.
    """
    assignments = registry.classify_group(G, p)
    rows = {}
    for cls, member in assignments:
        cls.ensure_aut()
        image = image_of_normalizer(
            cls,
            member.pair.ambient,
            member.pair.subgroup,
            member.pair.element,
            member.phi,
        )
        for irr in range(cls.out_table.n_classes):
            key = (cls.class_id, irr)
            rows[key] = rows.get(key, 0) + fixed_point_dim(cls.out_table, irr, image)
    k, l, _ = invariants_kl(G, p)
    table = MultiplicityTable(
        group_name=name,
        group=G,
        p=p,
        k=k,
        l=l,
        defect_order=defect_order(G, p),
        rows=rows,
        registry=registry,
        sylow=sylow_subgroup(G, p),
        includes_trivial=True,
    )
    trivial = registry.trivial_class()
    if trivial is None or table.rows.get((trivial.class_id, 0)) != l:
        raise InternalCheckError(
            "multiplicity at the trivial class does not equal the "
            "p-regular class count"
        )
    return table


def mult_table_fusion(
    F: FusionData, registry: PairClassRegistry, name: str = "group"
) -> MultiplicityTable:
    """Multiplicity table through the fusion route (nontrivial classes only).

    m(class, chi) is the sum over the triple orbits of the fixed point
    dimension of chi on the orbit stabilizer.
    """
    G = F.group
    rows = {}
    for cls in registry.classes:
        if cls.subgroup_order == 1:
            continue
        if all(obj.subgroup.order != cls.subgroup_order for obj in F.objects):
            continue
        orbits = triple_orbits(F, cls)
        if not orbits:
            continue
        for orbit in orbits:
            for irr in range(cls.out_table.n_classes):
                key = (cls.class_id, irr)
                rows[key] = rows.get(key, 0) + fixed_point_dim(
                    cls.out_table, irr, orbit.stabilizer
                )
    k, l, _ = invariants_kl(G, F.p)
    return MultiplicityTable(
        group_name=name,
        group=G,
        p=F.p,
        k=k,
        l=l,
        defect_order=defect_order(G, F.p),
        rows=rows,
        registry=registry,
        sylow=sylow_subgroup(G, F.p),
        includes_trivial=False,
    )


def nontrivial_rows(table: MultiplicityTable) -> dict:
    """Rows of classes with nontrivial subgroup; absent rows read as zero."""
    out = {}
    for (cid, irr), value in table.rows.items():
        if table.registry.classes[cid].subgroup_order > 1:
            out[(cid, irr)] = value
    return out


def cross_check_formulas(pairs_table: MultiplicityTable, fusion_table: MultiplicityTable):
    """Exact row-by-row equality of the two routes on nontrivial classes."""
    if pairs_table.registry is not fusion_table.registry:
        raise DomainError("tables were built against different registries")
    left = nontrivial_rows(pairs_table)
    right = nontrivial_rows(fusion_table)
    for key in sorted(set(left) | set(right)):
        a = left.get(key, 0)
        b = right.get(key, 0)
        if a != b:
            raise InternalCheckError(
                f"formula mismatch at class {key[0]}, character {key[1]}: "
                f"pair route {a} vs fusion route {b}"
            )


def l_multiplicativity_check(G: PermGroup, H: PermGroup, p: int) -> bool:
    """Whether l(G x H) equals l(G) * l(H)."""
    product = direct_product(G, H)
    _, l_product, _ = invariants_kl(product, p)
    _, l_g, _ = invariants_kl(G, p)
    _, l_h, _ = invariants_kl(H, p)
    return l_product == l_g * l_h


@dataclass(frozen=True)
class EquivalenceVerdict:
    """Outcome of comparing two multiplicity tables."""

    stable: bool
    functorial: bool
    defect_isomorphic: bool
    diff: tuple  # (class_id, irr_index, left, right) rows that disagree

    def __post_init__(self):
        if self.functorial and not self.stable:
            raise InternalCheckError("functorial verdict without stability")


def compare(left: MultiplicityTable, right: MultiplicityTable) -> EquivalenceVerdict:
    """Compare two tables built against the same registry.

    Stability means equality on all rows with nontrivial subgroup; the
    functorial upgrade additionally needs equal p-regular class counts.
    A stable verdict with diverging k - l is a hard internal error.
    """
    if left.registry is not right.registry:
        raise DomainError("tables were built against different registries")
    lrows = nontrivial_rows(left)
    rrows = nontrivial_rows(right)
    diff = []
    for key in sorted(set(lrows) | set(rrows)):
        a = lrows.get(key, 0)
        b = rrows.get(key, 0)
        if a != b:
            diff.append((key[0], key[1], a, b))
    stable = not diff
    functorial = stable and left.l == right.l
    defect_isomorphic = (
        find_group_isomorphism(left.sylow.group, right.sylow.group) is not None
    )
    if stable and (left.k - left.l) != (right.k - right.l):
        raise InternalCheckError(
            "stable tables with different k - l: "
            f"{left.k - left.l} vs {right.k - right.l}"
        )
    return EquivalenceVerdict(
        stable=stable,
        functorial=functorial,
        defect_isomorphic=defect_isomorphic,
        diff=tuple(diff),
    )
