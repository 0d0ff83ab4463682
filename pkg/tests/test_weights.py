import pytest

from grflop.weights import (
    InputError, arrangements, composition_count, format_partition,
    glweight, lr_coefficient, lr_coefficients, parse_partition, partition,
    partitions_in_box, sym_power_compositions, weight_from_partition,
    weyl_dimension,
)

import oracles


def test_partition_normalization():
    assert partition((3, 2, 0, 0)) == (3, 2)
    assert partition([]) == ()
    with pytest.raises(InputError):
        partition((1, 2))
    with pytest.raises(InputError):
        partition((1, -1))


def test_glweight_validation():
    assert glweight((2, 0, -1)) == (2, 0, -1)
    with pytest.raises(InputError):
        glweight((1, 2))
    with pytest.raises(InputError):
        glweight((1, 0), length=3)


def test_serialization():
    assert parse_partition("2,1") == (2, 1)
    assert parse_partition("0") == ()
    assert parse_partition("") == ()
    assert format_partition(()) == "0"
    assert format_partition((2, 1)) == "2,1"
    assert parse_partition(format_partition((5, 3, 3))) == (5, 3, 3)


def test_lr_single_box_pieri():
    assert lr_coefficients((1,), (1,), 2) == {(2,): 1, (1, 1): 1}


def test_lr_two_one():
    # frozen from the Jacobi-Trudi oracle
    assert oracles.lr_via_jacobi_trudi((2,), (1,), 3) == {(3,): 1, (2, 1): 1}
    assert lr_coefficients((2,), (1,), 3) == {(3,): 1, (2, 1): 1}


def test_lr_size_mismatch_is_zero():
    assert lr_coefficient((1,), (1,), (2, 2)) == 0


def test_lr_row_bound():
    full = lr_coefficients((1, 1), (1, 1), 4)
    assert full == {(2, 2): 1, (2, 1, 1): 1, (1, 1, 1, 1): 1}
    assert lr_coefficients((1, 1), (1, 1), 2) == {(2, 2): 1}


def test_lr_symmetry_small():
    shapes = [(), (1,), (2,), (1, 1), (2, 1), (3,), (2, 2), (3, 1)]
    for lam in shapes:
        for mu in shapes:
            if sum(lam) + sum(mu) <= 8:
                assert lr_coefficients(lam, mu, 4) == lr_coefficients(mu, lam, 4)


def test_lr_against_jacobi_trudi():
    shapes = [(1,), (2,), (1, 1), (2, 1), (3, 1), (2, 2)]
    for lam in shapes:
        for mu in shapes:
            for rows in (2, 3):
                assert (lr_coefficients(lam, mu, rows)
                        == oracles.lr_via_jacobi_trudi(lam, mu, rows)), (lam, mu, rows)


def test_lr_dimension_identity():
    # sum_nu c^nu dim(nu) = dim(lam) * dim(mu) over GL(n), n >= |lam|+|mu|
    for lam, mu in [((2, 1), (1, 1)), ((2,), (2,)), ((3, 1), (2, 1))]:
        n = sum(lam) + sum(mu)
        lhs = sum(c * weyl_dimension(weight_from_partition(nu, n), n)
                  for nu, c in lr_coefficients(lam, mu, n).items())
        rhs = (weyl_dimension(weight_from_partition(lam, n), n)
               * weyl_dimension(weight_from_partition(mu, n), n))
        assert lhs == rhs


def test_lr_pieri_special_case():
    # adding a row shape: every coefficient 1, results are horizontal strips
    lam = (3, 2)
    for k in range(1, 4):
        res = lr_coefficients(lam, (k,), 3)
        assert all(c == 1 for c in res.values())
        for nu in res:
            padded = nu + (0,) * (3 - len(nu))
            lam_p = lam + (0,) * (3 - len(lam))
            assert sum(padded) == sum(lam) + k
            assert all(padded[i] >= lam_p[i] for i in range(3))
            # no two added boxes in a column
            assert all(padded[i + 1] <= lam_p[i] for i in range(2))


def test_weyl_dimension_anchors():
    assert weyl_dimension((0, 0), 2) == 1
    assert weyl_dimension((1, 0), 2) == 2
    assert weyl_dimension((1, 1, 0, 0), 4) == oracles.ssyt_count((1, 1), 4) == 6


def test_weyl_dimension_ssyt_sweep():
    for shape in [(2, 1), (3,), (2, 2), (3, 1, 1)]:
        for n in (3, 4):
            assert (weyl_dimension(weight_from_partition(shape, n), n)
                    == oracles.ssyt_count(shape, n))


def test_weyl_dimension_twist_invariance():
    for mu in [(1, 0), (3, 1, -2), (2, 2, 0, -1)]:
        n = len(mu)
        base = weyl_dimension(mu, n)
        for c in (-3, -1, 1, 5):
            assert weyl_dimension(tuple(x + c for x in mu), n) == base


def test_weyl_dimension_length_mismatch():
    with pytest.raises(InputError):
        weyl_dimension((1, 0), 3)


def test_sym_power_compositions():
    assert sym_power_compositions(0, 3) == [(0, 0, 0)]
    assert sym_power_compositions(2, 2) == [(2, 0), (1, 1), (0, 2)]
    comps = sym_power_compositions(4, 3)
    assert len(comps) == len(set(comps)) == 15 == composition_count(4, 3)
    assert all(sum(c) == 4 for c in comps)


def test_arrangements():
    assert arrangements((2,), 3) == 3
    assert arrangements((1, 1), 3) == 3
    assert arrangements((2, 1), 3) == 6
    assert arrangements((1, 1, 1, 1), 3) == 0


def test_partitions_in_box():
    box = partitions_in_box(2, 2)
    assert box == [(), (1,), (1, 1), (2,), (2, 1), (2, 2)]
    assert len(partitions_in_box(2, 3)) == 10
    assert len(partitions_in_box(3, 3)) == 20


def test_lr_cache_consistency():
    # cached and fresh-argument calls agree (memoization is contract-neutral)
    a = lr_coefficients((2, 1), (2, 1), 3)
    b = lr_coefficients([2, 1, 0], (2, 1), 3)
    assert a == b
