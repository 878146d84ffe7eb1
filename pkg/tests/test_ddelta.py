import pytest

import oracles
from blockfunctor.autos import find_pair_isomorphism
from blockfunctor.battery import a4, c3, f20, f21, g56, g72, s3, s4
from blockfunctor.chartab import fixed_point_dim
from blockfunctor.ddelta import (
    NormalizerPair,
    PairClassRegistry,
    faithful_quotient,
    image_of_normalizer,
    pair_orbit_reps,
)
from blockfunctor.errors import DomainError
from blockfunctor.multiplicity import invariants_kl
from blockfunctor.permgroup import GroupHom, normalizer
from blockfunctor.permutation import Permutation, conjugate


def perm(degree, text):
    return Permutation.parse(degree, text)


FIXTURES = [(s3, 3), (a4, 2), (f20, 5), (f21, 7), (c3, 3), (s4, 2), (g72, 3), (g56, 2)]


def test_pair_orbit_reps_examples():
    shapes = [
        (pair.subgroup.order, pair.element.order())
        for pair in pair_orbit_reps(s3(), 3)
    ]
    assert shapes == [(1, 1), (1, 2), (3, 1), (3, 2)]

    shapes = [
        (pair.subgroup.order, pair.element.order())
        for pair in pair_orbit_reps(a4(), 2)
    ]
    assert shapes == [(1, 1), (1, 3), (1, 3), (2, 1), (4, 1), (4, 3), (4, 3)]

    shapes = [
        (pair.subgroup.order, pair.element.order())
        for pair in pair_orbit_reps(c3(), 3)
    ]
    assert shapes == [(1, 1), (3, 1)]


@pytest.mark.parametrize("builder,p", [(s3, 3), (a4, 2), (s4, 2)])
def test_pair_orbit_count_against_exhaustive_oracle(builder, p):
    G = builder()
    expected = oracles.orbit_count(G.degree, [g.images for g in G.generators], p)
    assert len(pair_orbit_reps(G, p)) == expected


def test_pairs_for_prime_not_dividing_order():
    reps = pair_orbit_reps(s3(), 5)
    assert len(reps) == 3  # one pair (1, s) per conjugacy class
    registry = PairClassRegistry()
    assignments = registry.classify_group(s3(), 5)
    classes = {cls.class_id for cls, _ in assignments}
    assert len(classes) == 1
    k, l, _ = invariants_kl(s3(), 5)
    assert k == l == len(assignments)


def test_faithful_quotient_shapes():
    pairs = pair_orbit_reps(s3(), 3)
    quotients = [faithful_quotient(pair) for pair in pairs]
    orders = [(q.marked.group.order, q.marked.element.order()) for q in quotients]
    assert orders == [(1, 1), (1, 1), (3, 1), (6, 2)]


def test_faithful_quotient_has_trivial_cyclic_centralizer():
    for builder, p in FIXTURES:
        for pair in pair_orbit_reps(builder(), p):
            q = faithful_quotient(pair)
            u = q.marked.element
            translations = q.marked.subgroup.group
            for j in range(1, u.order()):
                power = u ** j
                assert any(
                    power * t != t * power for t in translations.generators
                )


def test_classification_counts():
    registry = PairClassRegistry()
    registry.classify_group(s3(), 3)
    assert [
        (c.subgroup_order, c.element_order, len(c.members)) for c in registry.classes
    ] == [(1, 1, 2), (3, 1, 1), (3, 2, 1)]

    registry = PairClassRegistry()
    registry.classify_group(a4(), 2)
    assert [
        (c.subgroup_order, c.element_order, len(c.members)) for c in registry.classes
    ] == [(1, 1, 3), (2, 1, 1), (4, 1, 1), (4, 3, 2)]


def test_classification_is_an_equivalence():
    # same class if and only if the faithful quotients admit a pair isomorphism
    registry = PairClassRegistry()
    for builder, p in [(s3, 3), (a4, 2)]:
        registry.classify_group(builder(), p)
    entries = []
    for cls in registry.classes:
        for member in cls.members:
            entries.append((cls.class_id, faithful_quotient(member.pair).marked))
    for i, (cid_a, marked_a) in enumerate(entries):
        for cid_b, marked_b in entries[i:]:
            related = find_pair_isomorphism(marked_a, marked_b) is not None
            assert related == (cid_a == cid_b)


def test_registry_is_shared_across_groups():
    registry = PairClassRegistry()
    registry.classify_group(a4(), 2)
    before = len(registry.classes)
    assignments = registry.classify_group(s4(), 2)
    v4_by_a4 = next(
        c for c in registry.classes
        if c.subgroup_order == 4 and c.element_order == 3
    )
    v4_members_s4 = [
        m for c, m in assignments if c.class_id == v4_by_a4.class_id
    ]
    assert v4_members_s4  # the (V4, 3-element) pair of S4 joins A4's class
    assert registry.members_for(a4(), v4_by_a4)
    assert registry.members_for(s4(), v4_by_a4)
    assert before < len(registry.classes)  # S4 also brings new classes (C4, D8)


def test_trivial_class_member_count_equals_l():
    for builder, p in FIXTURES:
        registry = PairClassRegistry()
        registry.classify_group(builder(), p)
        trivial = registry.trivial_class()
        members = registry.members_for(builder(), trivial)
        _, l, _ = invariants_kl(builder(), p)
        assert len(members) == l


def test_out_group_examples():
    registry = PairClassRegistry()
    registry.classify_group(s3(), 3)
    registry.classify_group(a4(), 2)
    by_shape = {
        (c.subgroup_order, c.element_order): c for c in registry.classes
    }
    trivial = by_shape[(1, 1)]
    trivial.ensure_aut()
    assert trivial.out_group.order == 1
    assert trivial.out_table.degrees == (1,)

    c3_class = by_shape[(3, 1)]
    c3_class.ensure_aut()
    assert c3_class.out_group.order == 2
    assert c3_class.out_table.degrees == (1, 1)

    klein_moved = by_shape[(4, 3)]
    klein_moved.ensure_aut()
    assert klein_moved.aut_action.group.order == 12
    assert klein_moved.out_group.order == 1


def test_witness_intertwining_for_all_members():
    registry = PairClassRegistry()
    for builder, p in FIXTURES:
        registry.classify_group(builder(), p)
    for cls in registry.classes:
        u = cls.realization.element
        for member in cls.members:
            phi = member.phi.mapping()
            s = member.pair.element
            for tau in cls.realization.subgroup.generators:
                assert phi[conjugate(u, tau)] == conjugate(s, phi[tau])


def test_image_of_normalizer_examples():
    registry = PairClassRegistry()
    assignments = registry.classify_group(s3(), 3)
    for cls, member in assignments:
        cls.ensure_aut()
        image = image_of_normalizer(
            cls, s3(), member.pair.subgroup, member.pair.element, member.phi
        )
        if (cls.subgroup_order, cls.element_order) == (3, 1):
            assert image.order == 2  # the full out group
        if (cls.subgroup_order, cls.element_order) == (3, 2):
            assert image.order == 1

    registry = PairClassRegistry()
    assignments = registry.classify_group(a4(), 2)
    klein_fixed = next(
        (cls, m) for cls, m in assignments
        if cls.subgroup_order == 4 and cls.element_order == 1
    )
    cls, member = klein_fixed
    image = image_of_normalizer(
        cls, a4(), member.pair.subgroup, member.pair.element, member.phi
    )
    assert image.order == 3
    assert cls.out_group.order == 6


def test_fixed_dims_are_witness_independent():
    # i_n . phi is another valid witness for any n in N_G(P, s)
    registry = PairClassRegistry()
    assignments = registry.classify_group(s3(), 3)
    cls, member = next(
        (c, m) for c, m in assignments
        if c.subgroup_order == 3 and c.element_order == 1
    )
    cls.ensure_aut()
    pair = member.pair
    n_ps = [
        g
        for g in normalizer(s3(), pair.subgroup).elements()
        if g * pair.element == pair.element * g
    ]
    base = image_of_normalizer(cls, s3(), pair.subgroup, pair.element, member.phi)
    base_dims = [
        fixed_point_dim(cls.out_table, row, base)
        for row in range(cls.out_table.n_classes)
    ]
    source = cls.realization.subgroup.group
    seen_alternative = False
    for n in n_ps:
        pairs = [
            (tau, conjugate(n, member.phi(tau))) for tau in source.generators
        ]
        alt_phi = GroupHom(source, pair.subgroup.group, pairs)
        if alt_phi.mapping() == member.phi.mapping():
            continue
        seen_alternative = True
        alt = image_of_normalizer(cls, s3(), pair.subgroup, pair.element, alt_phi)
        alt_dims = [
            fixed_point_dim(cls.out_table, row, alt)
            for row in range(cls.out_table.n_classes)
        ]
        assert alt_dims == base_dims
    assert seen_alternative


def test_normalizer_pair_validation():
    with pytest.raises(DomainError):
        NormalizerPair(s3(), 3, s3().subgroup([perm(3, "(1,2,3)")]), perm(3, "(1,2,3)"))
