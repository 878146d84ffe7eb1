import pytest

from blockfunctor.battery import a4, c3, f20, f21, g56, g72, s3, s4
from blockfunctor.chartab import character_prime, character_table, fixed_point_dim
from blockfunctor.ddelta import PairClassRegistry
from blockfunctor.errors import DomainError
from blockfunctor.permgroup import group_from_generators, sylow_subgroup
from blockfunctor.permutation import Permutation


def perm(degree, text):
    return Permutation.parse(degree, text)


ALL_FIXTURES = [s3, c3, a4, s4, f20, f21, g72, g56]


def test_degree_examples():
    c2 = group_from_generators(2, [perm(2, "(1,2)")])
    assert character_table(c2).degrees == (1, 1)
    assert character_table(s3()).degrees == (1, 1, 2)
    assert character_table(a4()).degrees == (1, 1, 1, 3)
    assert character_table(s4()).degrees == (1, 1, 2, 3, 3)


def test_prime_selection():
    table = character_table(s3())
    assert table.modulus == 13  # smallest q = 1 (mod 6) above 12
    assert character_prime(6, 6) == 13
    with pytest.raises(DomainError):
        character_prime(6, 6, cap=12)


def test_out_group_table_of_klein_pair():
    # the out group of the (V4, 1) class is the symmetric group on the
    # three involutions; its sign character shows on the transposition class
    registry = PairClassRegistry()
    registry.classify_group(a4(), 2)
    cls = next(
        c for c in registry.classes
        if c.subgroup_order == 4 and c.element_order == 1
    )
    cls.ensure_aut()
    table = cls.out_table
    assert table.degrees == (1, 1, 2)
    q = table.modulus
    transposition_cols = [
        j for j, rep in enumerate(table.class_reps) if rep.order() == 2
    ]
    assert len(transposition_cols) == 1
    col = transposition_cols[0]
    assert table.values[0][col] == 1
    assert table.values[1][col] == q - 1


def test_sum_of_degree_squares():
    for builder in ALL_FIXTURES:
        G = builder()
        table = character_table(G)
        assert sum(d * d for d in table.degrees) == G.order


def test_column_orthogonality():
    for builder in [s3, c3, a4, s4, f20]:
        G = builder()
        table = character_table(G)
        q = table.modulus
        k = table.n_classes
        for i in range(k):
            for j in range(k):
                total = 0
                for row in range(k):
                    inv_col = G.class_index_of(table.class_reps[j].inverse())
                    total = (
                        total + table.values[row][i] * table.values[row][inv_col]
                    ) % q
                expected = (G.order // table.class_sizes[i]) % q if i == j else 0
                assert total == expected


def test_fixed_point_dim_examples():
    G = s3()
    table = character_table(G)
    trivial = G.trivial_subgroup()
    for row in range(3):
        assert fixed_point_dim(table, row, trivial) == table.degrees[row]
    A3 = G.subgroup([perm(3, "(1,2,3)")])
    assert fixed_point_dim(table, 1, A3) == 1  # sign restricted to A3
    assert fixed_point_dim(table, 2, A3) == 0  # two-dimensional character


def test_fixed_point_dim_on_whole_group_detects_trivial_character():
    for builder in [s3, a4, s4, f20, f21]:
        G = builder()
        table = character_table(G)
        full = G.full_subgroup()
        dims = [fixed_point_dim(table, row, full) for row in range(table.n_classes)]
        assert dims.count(1) == 1
        assert set(dims) <= {0, 1}
        assert dims[0] == 1 and table.degrees[0] == 1


def test_fixed_point_dim_monotone_under_enlargement():
    chains = [
        (s3(), [perm(3, "(1,2,3)")]),
        (a4(), [perm(4, "(1,2)(3,4)"), perm(4, "(1,3)(2,4)")]),
        (s4(), [perm(4, "(1,2,3,4)")]),
    ]
    for G, gens in chains:
        table = character_table(G)
        smaller = G.subgroup(gens[:1])
        bigger = G.subgroup(gens)
        full = G.full_subgroup()
        for row in range(table.n_classes):
            d_small = fixed_point_dim(table, row, smaller)
            d_big = fixed_point_dim(table, row, bigger)
            d_full = fixed_point_dim(table, row, full)
            assert d_full <= d_big <= d_small <= table.degrees[row]


def test_permutation_module_dimension_identity():
    for builder in [s3, a4, s4, f20]:
        G = builder()
        table = character_table(G)
        subgroups = [
            G.trivial_subgroup(),
            G.subgroup([G.generators[0]]),
            sylow_subgroup(G, 2),
            G.full_subgroup(),
        ]
        for H in subgroups:
            total = sum(
                table.degrees[row] * fixed_point_dim(table, row, H)
                for row in range(table.n_classes)
            )
            assert total == G.order // H.order


def test_determinism_of_fresh_builds():
    first = character_table(g72())
    second = character_table(
        group_from_generators(g72().degree, list(g72().generators))
    )
    assert first.modulus == second.modulus
    assert first.degrees == second.degrees
    assert first.values == second.values


def test_rejects_foreign_subgroup():
    table = character_table(s3())
    with pytest.raises(DomainError):
        fixed_point_dim(table, 0, s4().subgroup([perm(4, "(1,2,3,4)")]))
