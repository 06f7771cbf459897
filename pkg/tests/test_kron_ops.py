import pytest

from kronlab.characters import kron_coefficient, kron_power_oracle
from kronlab.kron_ops import (
    KroneckerOperator,
    apply,
    build_operator,
    kron_power_nm1,
    kron_product_via_operator,
)
from kronlab.partitions import partitions_of
from kronlab.symfunc import SchurSum


def test_operator_single_cell():
    got = build_operator((1,)).normalize()
    assert got == KroneckerOperator(((-1, ()), (1, ((1,),))))


def test_operator_two_cells_row():
    got = build_operator((2,)).normalize()
    assert got == KroneckerOperator(
        ((-1, ((1,),)), (1, ((1, 1),)), (1, ((2,),)))
    )


def test_operator_empty_is_identity():
    assert build_operator(()).normalize() == KroneckerOperator(((1, ()),))
    f = SchurSum(3, {(2, 1): 4, (3,): -2})
    assert apply(build_operator(()), f) == f


def test_apply_single_cell_to_331():
    got = apply(build_operator((1,)), SchurSum.schur((3, 3, 1)))
    assert got == SchurSum(
        7,
        {(3, 3, 1): 1, (4, 2, 1): 1, (3, 2, 1, 1): 1, (3, 2, 2): 1, (4, 3): 1},
    )


def test_apply_single_cell_to_row():
    for n in range(2, 8):
        got = apply(build_operator((1,)), SchurSum.schur((n,)))
        assert got == SchurSum.schur((n - 1, 1))


def test_product_square_of_31():
    got = kron_product_via_operator((3, 1), (3, 1))
    assert got == SchurSum(4, {(4,): 1, (3, 1): 1, (2, 2): 1, (2, 1, 1): 1})


def test_product_with_trivial():
    for n in range(1, 7):
        for mu in partitions_of(n):
            assert kron_product_via_operator((n,), mu) == SchurSum.schur(mu)


def test_product_cross_checked_42_33():
    got = kron_product_via_operator((4, 2), (3, 3))
    for alpha in partitions_of(6):
        assert got.coefficient(alpha) == kron_coefficient((4, 2), (3, 3), alpha)


@pytest.mark.parametrize("n", range(1, 7))
def test_operator_equals_character_route(n):
    ps = partitions_of(n)
    for lam in ps:
        for mu in ps:
            got = kron_product_via_operator(lam, mu)
            for alpha in ps:
                assert got.coefficient(alpha) == kron_coefficient(lam, mu, alpha)


@pytest.mark.parametrize("n", range(1, 6))
def test_product_commutes(n):
    ps = partitions_of(n)
    for lam in ps:
        for mu in ps:
            assert kron_product_via_operator(lam, mu) == kron_product_via_operator(mu, lam)


def test_coefficients_nonnegative_on_schur_inputs():
    for n in range(1, 6):
        for lam in partitions_of(n):
            for mu in partitions_of(n):
                got = kron_product_via_operator(lam, mu)
                assert all(c >= 0 for c in got.terms.values())


def test_largest_part_independence():
    # one operator serves every weight: U_(2,1) applied at two different n
    lb = (2, 1)
    op = build_operator(lb)
    for n in (6, 7):
        lam = (n - sum(lb),) + lb
        for mu in partitions_of(n):
            got = apply(op, SchurSum.schur(mu))
            for alpha in partitions_of(n):
                assert got.coefficient(alpha) == kron_coefficient(lam, mu, alpha)


def test_power_examples():
    assert kron_power_nm1(4, 2) == SchurSum(
        4, {(4,): 1, (3, 1): 1, (2, 2): 1, (2, 1, 1): 1}
    )
    for n in range(2, 7):
        assert kron_power_nm1(n, 0) == SchurSum.schur((n,))
    assert kron_power_nm1(6, 3) == kron_power_oracle(6, 3)


@pytest.mark.parametrize("n", range(2, 7))
def test_powers_match_character_oracle(n):
    for k in range(0, 6):
        assert kron_power_nm1(n, k) == kron_power_oracle(n, k)


def test_normalize_merges_duplicate_terms():
    op = KroneckerOperator(((1, ((2,), (1, 1))), (1, ((1, 1), (2,))), (2, ())))
    norm = op.normalize()
    assert norm == KroneckerOperator(((2, ()), (2, ((2,), (1, 1)))))
    f = SchurSum.schur((3, 2))
    assert apply(op, f) == apply(norm, f)


def test_weight_mismatch_rejected():
    with pytest.raises(ValueError):
        kron_product_via_operator((3, 1), (3,))
