from math import factorial

import pytest

from kronlab.characters import (
    character_table,
    character_value,
    h_kron_oracle,
    kron_coefficient,
    kron_power_oracle,
    kron_product_via_characters,
    permutation_character,
)
from kronlab.partitions import class_size, partitions_of, standard_tableaux_count
from kronlab.symfunc import SchurSum, h_inner_s

S4_TABLE = (
    (1, 1, 1, 1, 1),
    (-1, 0, -1, 1, 3),
    (0, -1, 2, 0, 2),
    (1, 0, -1, -1, 3),
    (-1, 1, 1, -1, 1),
)


def test_character_table_s4():
    table = character_table(4)
    assert table.partitions == ((4,), (3, 1), (2, 2), (2, 1, 1), (1, 1, 1, 1))
    assert table.values == S4_TABLE


def test_character_values_spot():
    assert character_value((3, 1), (2, 2)) == -1
    assert character_value((2, 2), (2, 2)) == 2
    for n in range(1, 7):
        for mu in partitions_of(n):
            assert character_value((n,), mu) == 1


def test_character_table_small():
    assert character_table(1).values == ((1,),)
    row5 = character_table(5).values[0]
    assert all(v == 1 for v in row5)


def test_dimension_column():
    for n in range(1, 8):
        for lam in partitions_of(n):
            assert character_value(lam, (1,) * n) == standard_tableaux_count(lam)


@pytest.mark.parametrize("n", range(1, 8))
def test_row_and_column_orthogonality(n):
    table = character_table(n)
    ps = table.partitions
    sizes = [class_size(mu) for mu in ps]
    nf = factorial(n)
    for i in range(len(ps)):
        for j in range(len(ps)):
            row = sum(sizes[k] * table.values[i][k] * table.values[j][k] for k in range(len(ps)))
            assert row == (nf if i == j else 0)
            col = sum(table.values[k][i] * table.values[k][j] for k in range(len(ps)))
            assert col == (nf // sizes[i] if i == j else 0)


def test_character_weight_mismatch_rejected():
    with pytest.raises(ValueError):
        character_value((2, 1), (2,))


def test_kron_coefficient_square_of_31():
    for alpha, want in [
        ((4,), 1),
        ((3, 1), 1),
        ((2, 2), 1),
        ((2, 1, 1), 1),
        ((1, 1, 1, 1), 0),
    ]:
        assert kron_coefficient((3, 1), (3, 1), alpha) == want


def test_kron_with_trivial_is_identity():
    for n in range(1, 7):
        for mu in partitions_of(n):
            for alpha in partitions_of(n):
                want = 1 if alpha == mu else 0
                assert kron_coefficient((n,), mu, alpha) == want


def test_kron_coefficient_direct_table_evaluation():
    # recompute one value straight from the n=6 table
    table = character_table(6)
    total = sum(
        class_size(gamma)
        * table.value((4, 2), gamma)
        * table.value((4, 2), gamma)
        * table.value((3, 3), gamma)
        for gamma in table.partitions
    )
    assert total % factorial(6) == 0
    assert kron_coefficient((4, 2), (4, 2), (3, 3)) == total // factorial(6)


@pytest.mark.parametrize("n", range(1, 6))
def test_kron_coefficient_s3_symmetry(n):
    ps = partitions_of(n)
    for lam in ps:
        for mu in ps:
            for alpha in ps:
                t = kron_coefficient(lam, mu, alpha)
                assert t == kron_coefficient(mu, lam, alpha)
                assert t == kron_coefficient(alpha, mu, lam)
                assert t == kron_coefficient(lam, alpha, mu)


def test_kron_power_oracle_examples():
    assert kron_power_oracle(4, 2) == SchurSum(
        4, {(4,): 1, (3, 1): 1, (2, 2): 1, (2, 1, 1): 1}
    )
    for n in range(2, 7):
        assert kron_power_oracle(n, 0) == SchurSum.schur((n,))
        assert kron_power_oracle(n, 1) == SchurSum.schur((n - 1, 1))


def test_kron_power_oracle_is_iterated_product():
    for n in range(2, 6):
        acc = SchurSum.schur((n,))
        for k in range(1, 5):
            nxt = SchurSum.zero(n)
            for lam, c in acc.terms.items():
                nxt = nxt + kron_product_via_characters((n - 1, 1), lam).scale(c)
            acc = nxt
            assert kron_power_oracle(n, k) == acc


def test_permutation_character_full_row():
    for n in range(1, 7):
        for gamma in partitions_of(n):
            assert permutation_character((n,), gamma) == 1


def test_permutation_character_all_ones_shape():
    for n in range(1, 6):
        for gamma in partitions_of(n):
            want = factorial(n) if gamma == (1,) * n else 0
            assert permutation_character((1,) * n, gamma) == want


def test_h_kron_oracle_trivial():
    for n in range(1, 6):
        for mu in partitions_of(n):
            assert h_kron_oracle((n,), mu) == SchurSum.schur(mu)


def test_h_kron_oracle_column_shape():
    # pointwise product with the regular character scales by the dimension
    for n in range(2, 5):
        for mu in partitions_of(n):
            f = h_kron_oracle((1,) * n, mu)
            dim = standard_tableaux_count(mu)
            for alpha in partitions_of(n):
                assert f.coefficient(alpha) == dim * standard_tableaux_count(alpha)


@pytest.mark.parametrize("n", range(1, 7))
def test_h_kron_oracle_matches_operator_expansion(n):
    for lam in partitions_of(n):
        for mu in partitions_of(n):
            assert h_kron_oracle(lam, mu) == h_inner_s(lam, mu), (lam, mu)
