import math
from itertools import permutations

import pytest

from fidmod.partitions import (
    compositions,
    contains,
    dim_irreducible,
    multinomial,
    partitions_of,
)
from fidmod.pieri import (
    Decomposition,
    add_horizontal_strip,
    bounded_chain_count,
    chain_multiplicity,
    pieri_product,
    remove_horizontal_strip,
    skew_filling_count,
)


def test_add_horizontal_strip_examples():
    assert set(add_horizontal_strip((1,), 1)) == {(2,), (1, 1)}
    assert set(add_horizontal_strip((2,), 2)) == {(4,), (3, 1), (2, 2)}
    assert add_horizontal_strip((3, 1), 0) == ((3, 1),)
    assert set(add_horizontal_strip((), 3)) == {(3,)}


def test_add_horizontal_strip_is_multiplicity_free_and_sorted():
    for musize in range(5):
        for mu in partitions_of(musize):
            for a in range(4):
                out = add_horizontal_strip(mu, a)
                assert len(set(out)) == len(out)
                assert list(out) == sorted(out, reverse=True)
                for lam in out:
                    assert sum(lam) == musize + a
                    assert contains(lam, mu)
                    # at most one new box per column
                    assert all(
                        lam[i + 1] <= mu[i] for i in range(len(lam) - 1) if i < len(mu)
                    )
                    assert len(lam) <= len(mu) + 1


def test_remove_is_inverse_of_add():
    for musize in range(5):
        for mu in partitions_of(musize):
            for a in range(4):
                for lam in add_horizontal_strip(mu, a):
                    assert mu in remove_horizontal_strip(lam, a)
    for lamsize in range(1, 6):
        for lam in partitions_of(lamsize):
            for a in range(lamsize + 1):
                for mu in remove_horizontal_strip(lam, a):
                    assert lam in add_horizontal_strip(mu, a)


def test_pieri_product_examples():
    dec = pieri_product((1,), (1, 1))
    assert dec.multiplicity((3,)) == 1
    assert dec.multiplicity((2, 1)) == 2
    assert dec.multiplicity((1, 1, 1)) == 1
    assert pieri_product((), (7,)).items() == (((7,), 1),)
    dec = pieri_product((2,), (1, 0))
    assert dec.multiplicity((3,)) == 1 and dec.multiplicity((2, 1)) == 1 and len(dec) == 2


def test_chain_multiplicity_examples():
    assert chain_multiplicity((1,), (1, 1), (2, 1)) == 2
    assert chain_multiplicity((1,), (2, 1), (2, 1)) == 0  # size mismatch
    assert chain_multiplicity((), (1, 1), (2,)) == 1
    assert chain_multiplicity((2, 2), (1,), (2, 1, 1, 1)) == 0  # not containing


def _all_test_cases(max_total, max_len):
    for musize in range(max_total + 1):
        for mu in partitions_of(musize):
            for total in range(max_total - musize + 1):
                for length in range(1, max_len + 1):
                    yield mu, total, length


def test_chain_multiplicity_agrees_with_product():
    for mu, total, length in _all_test_cases(5, 2):
        for a in compositions(total, length):
            dec = pieri_product(mu, a)
            for lam in partitions_of(sum(mu) + total):
                assert chain_multiplicity(mu, a, lam) == dec.multiplicity(lam)


def test_dimension_conservation():
    for mu, total, length in _all_test_cases(6, 3):
        for a in compositions(total, length):
            dec = pieri_product(mu, a)
            expected = dim_irreducible(mu) * multinomial((sum(mu), *a))
            assert dec.total_dimension() == expected, (mu, a)


def test_symmetry_under_permuting_composition():
    cases = [((1,), (2, 0, 1)), ((2, 1), (1, 2)), ((), (3, 1)), ((3,), (0, 2, 2))]
    for mu, a in cases:
        reference = pieri_product(mu, a)
        for perm in set(permutations(a)):
            assert pieri_product(mu, perm) == reference


def test_zero_padding_neutrality():
    for mu, a in [((2,), (1,)), ((1, 1), (2, 1)), ((), (4,))]:
        base = pieri_product(mu, a)
        assert pieri_product(mu, a + (0, 0)) == base
        assert pieri_product(mu, (0,) + a) == base


def test_single_step_is_multiplicity_free():
    for musize in range(6):
        for mu in partitions_of(musize):
            for a in range(5):
                dec = pieri_product(mu, (a,))
                assert all(mult == 1 for _, mult in dec.items())


def test_skew_filling_count_matches_chains():
    for mu, total, length in _all_test_cases(5, 3):
        for a in compositions(total, length):
            for lam in partitions_of(sum(mu) + total):
                assert skew_filling_count(lam, mu, a) == chain_multiplicity(mu, a, lam)


def test_bounded_chain_count_sums_compositions():
    for mu, total, length in _all_test_cases(5, 3):
        for lam in partitions_of(sum(mu) + total):
            expected = sum(
                chain_multiplicity(mu, a, lam) for a in compositions(total, length)
            )
            assert bounded_chain_count(mu, lam, length) == expected


def test_decomposition_validation():
    with pytest.raises(ValueError):
        Decomposition(3, {(2, 1): -1})
    with pytest.raises(ValueError):
        Decomposition(3, {(2, 2): 1})
    dec = Decomposition(3, {(2, 1): 2, (3,): 0})
    assert dec.multiplicity((3,)) == 0 and len(dec) == 1


def test_decomposition_canonical_order_and_json():
    dec = Decomposition(4, {(2, 2): 2, (4,): 1, (2, 1, 1): 5})
    assert dec.support() == ((4,), (2, 2), (2, 1, 1))
    payload = dec.to_json_dict()
    assert payload == {
        "n": 4,
        "terms": [
            {"partition": [4], "multiplicity": "1"},
            {"partition": [2, 2], "multiplicity": "2"},
            {"partition": [2, 1, 1], "multiplicity": "5"},
        ],
    }


def test_total_dimension():
    dec = Decomposition(3, {(3,): 1, (2, 1): 2, (1, 1, 1): 1})
    assert dec.total_dimension() == math.factorial(3)
