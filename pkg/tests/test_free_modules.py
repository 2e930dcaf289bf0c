import math

import pytest

from fidmod.free_modules import (
    FreeModuleSpec,
    NoStabilization,
    NotContained,
    constituent_multiplicity,
    d_weight,
    decompose_at,
    dim_at,
    greedy_step,
    hom_count,
    is_constituent,
    padded_multiplicity,
    stabilized_padded_multiplicity,
)
from fidmod.partitions import (
    PaddedLabel,
    UnsortedPads,
    contains,
    pad,
    partitions_in_box,
    partitions_of,
    unpad,
)
from fidmod.pieri import bounded_chain_count


def test_spec_validation():
    with pytest.raises(ValueError):
        FreeModuleSpec.regular(0, 1)
    with pytest.raises(ValueError):
        FreeModuleSpec(2, 1, FreeModuleSpec.regular(2, 2).generator)
    spec = FreeModuleSpec.of_irreducible(2, (2, 1))
    assert spec.m == 3 and spec.generator.multiplicity((2, 1)) == 1


def test_describe():
    assert FreeModuleSpec.regular(2, 0).describe() == "M(0)"
    assert FreeModuleSpec.regular(3, 2).describe() == "M(2)"
    assert FreeModuleSpec.of_irreducible(2, (2, 1)).describe() == "M(S[2, 1])"
    # the regular generator of S_1 is the single irreducible
    assert FreeModuleSpec.of_irreducible(2, (1,)).describe() == "M(1)"


def test_hom_count():
    for d in (1, 2, 3):
        for m in range(4):
            assert hom_count(d, m, m) == math.factorial(m)
    assert hom_count(2, 0, 3) == 8
    assert hom_count(2, 1, 2) == 4
    assert hom_count(3, 2, 1) == 0


def test_hom_count_equals_dim_of_regular_module():
    for d in (1, 2, 3):
        spec = FreeModuleSpec.regular(d, 2)
        for n in range(7):
            assert dim_at(spec, n) == hom_count(d, 2, n)


def test_dim_at_examples():
    assert dim_at(FreeModuleSpec.regular(2, 0), 3) == 8
    assert dim_at(FreeModuleSpec.of_irreducible(2, (1,)), 3) == 12
    assert dim_at(FreeModuleSpec.of_irreducible(3, (2, 2)), 2) == 0


def test_decompose_at_examples():
    dec = decompose_at(FreeModuleSpec.regular(2, 0), 2)
    assert dec.multiplicity((2,)) == 3 and dec.multiplicity((1, 1)) == 1
    dec = decompose_at(FreeModuleSpec.of_irreducible(2, (1,)), 2)
    assert dec.multiplicity((2,)) == 2 and dec.multiplicity((1, 1)) == 2
    for n in range(6):
        dec = decompose_at(FreeModuleSpec.regular(1, 0), n)
        assert dec.items() == (((n,) if n else (), 1),)


def test_decompose_below_generator_degree_is_zero():
    dec = decompose_at(FreeModuleSpec.regular(2, 3), 1)
    assert len(dec) == 0 and dec.total_dimension() == 0


def test_dimension_conservation_small():
    for d in (1, 2, 3):
        for m in range(3):
            for spec in [FreeModuleSpec.regular(d, m)] + [
                FreeModuleSpec.of_irreducible(d, lam) for lam in partitions_of(m)
            ]:
                for n in range(7):
                    assert decompose_at(spec, n).total_dimension() == dim_at(spec, n)


def test_d1_decompositions_are_multiplicity_free():
    for lam in [(1,), (2,), (2, 1), (3, 1)]:
        spec = FreeModuleSpec.of_irreducible(1, lam)
        for n in range(sum(lam), sum(lam) + 5):
            assert all(mult == 1 for _, mult in decompose_at(spec, n).items())


def _greedy_step_by_boxes(mu, lam):
    """Literal simulation: drop the bottom box of every column unless it
    belongs to lam, then read row lengths back off the column heights."""
    width = mu[0] if mu else 0
    heights = [sum(1 for p in mu if p >= j) for j in range(1, width + 1)]
    protected = [sum(1 for p in lam if p >= j) for j in range(1, width + 1)]
    new_heights = [
        h - 1 if h > protected[j] else h for j, h in enumerate(heights)
    ]
    rows = []
    for i in range(1, max(new_heights, default=0) + 1):
        rows.append(sum(1 for h in new_heights if h >= i))
    return tuple(rows)


def test_greedy_step_examples():
    assert greedy_step((3, 1), ()) == (1,)
    assert greedy_step((2, 2), (1,)) == (2,)
    assert greedy_step((3, 2, 1), (3, 2, 1)) == (3, 2, 1)
    assert greedy_step((5, 5, 2, 1), ()) == (5, 2, 1)


def test_greedy_step_requires_containment():
    with pytest.raises(NotContained):
        greedy_step((2, 1), (3,))


def test_greedy_step_matches_box_simulation():
    for mu in partitions_in_box(5, 5):
        for lam in partitions_in_box(5, 5):
            if not contains(mu, lam):
                continue
            closed = greedy_step(mu, lam)
            assert closed == _greedy_step_by_boxes(mu, lam), (mu, lam)
            assert contains(mu, closed) and contains(closed, lam)


def test_is_constituent_examples():
    assert is_constituent((2, 2), (1,), 2)
    assert not is_constituent((1, 1, 1), (), 2)
    assert is_constituent((4, 2), (4, 2), 0)
    assert not is_constituent((2,), (1, 1), 1)


def test_greedy_matches_positive_chain_count_small_box():
    for mu in partitions_in_box(4, 4):
        for lam in partitions_in_box(4, 4):
            if not contains(mu, lam):
                continue
            for d in (1, 2, 3):
                greedy = is_constituent(mu, lam, d)
                chains = bounded_chain_count(lam, mu, d) > 0
                assert greedy == chains, (mu, lam, d)


def test_d_weight():
    assert d_weight(FreeModuleSpec.of_irreducible(1, (2,))) == 2
    assert d_weight(FreeModuleSpec.of_irreducible(2, (2,))) == 2
    assert d_weight(FreeModuleSpec.of_irreducible(3, (2,))) == 2
    assert d_weight(FreeModuleSpec.regular(2, 0)) == 0
    assert d_weight(FreeModuleSpec.regular(2, 2)) == 2
    assert d_weight(FreeModuleSpec.regular(3, 3)) == 3


@pytest.mark.parametrize("d", [1, 2, 3])
@pytest.mark.parametrize("lam", [(), (1,), (2,), (1, 1), (2, 1)])
def test_weight_bound_on_constituents(d, lam):
    spec = FreeModuleSpec.of_irreducible(d, lam)
    m = sum(lam)
    for n in range(m, m + 2 * d + 1):
        for mu, _ in decompose_at(spec, n).items():
            if len(mu) >= d:
                assert sum(unpad(mu, d).core) <= m


def test_padded_multiplicity_examples():
    spec = FreeModuleSpec.of_irreducible(2, (1,))
    assert padded_multiplicity(spec, PaddedLabel((), (2, 2))) == 2
    m0 = FreeModuleSpec.regular(2, 0)
    # shortest pad below |core| + core_1: the label names the zero representation
    assert padded_multiplicity(m0, PaddedLabel((1,), (4, 1))) == 0
    assert padded_multiplicity(m0, PaddedLabel((), (1, 3))) == 0  # unsorted pads
    m0d1 = FreeModuleSpec.regular(1, 0)
    assert padded_multiplicity(m0d1, PaddedLabel((1,), (9,))) == 0


def test_padded_multiplicity_matches_decompose():
    spec = FreeModuleSpec.regular(2, 1)
    for core in [(), (1,), (2,)]:
        base = sum(core) + (core[0] if core else 0)
        for n2 in range(base, base + 3):
            for n1 in range(n2, n2 + 3):
                label = PaddedLabel(core, (n1, n2))
                level = n1 + n2 - sum(core)
                shape = pad(core, (n1, n2))
                mult = padded_multiplicity(spec, label)
                assert mult == decompose_at(spec, level).multiplicity(shape)


def test_padded_multiplicity_wrong_pad_count():
    spec = FreeModuleSpec.regular(2, 0)
    with pytest.raises(ValueError):
        padded_multiplicity(spec, PaddedLabel((), (3,)))


def test_stabilized_examples():
    spec = FreeModuleSpec.of_irreducible(2, (1,))
    assert stabilized_padded_multiplicity(spec, (), (2, 2)) == (2, 0)
    m0 = FreeModuleSpec.regular(2, 0)
    value, onset = stabilized_padded_multiplicity(m0, (), (1, 1))
    assert value == 1
    m0d1 = FreeModuleSpec.regular(1, 0)
    assert stabilized_padded_multiplicity(m0d1, (), (0,)) == (1, 0)


def test_stabilized_onset_and_value_for_delayed_case():
    # M(S^(2)) at d = 1 with base pad 0: levels 0 and 1 vanish, then the
    # trivial representation appears once forever.
    spec = FreeModuleSpec.of_irreducible(1, (2,))
    value, onset = stabilized_padded_multiplicity(spec, (), (0,))
    assert value == 1 and onset == 2


def test_stabilized_respects_horizon():
    spec = FreeModuleSpec.of_irreducible(1, (2,))
    with pytest.raises(NoStabilization):
        stabilized_padded_multiplicity(spec, (), (0,), horizon=1)


def test_stabilized_rejects_unsorted_base():
    spec = FreeModuleSpec.regular(2, 0)
    with pytest.raises(UnsortedPads):
        stabilized_padded_multiplicity(spec, (), (1, 2))


@pytest.mark.parametrize("d", [1, 2, 3])
def test_onset_respects_proof_bound_pure_generators(d):
    for m in range(5):
        for gen in partitions_of(m):
            spec = FreeModuleSpec.of_irreducible(d, gen)
            bound = (gen[0] if gen else 0) + m
            for core in [(), (1,)]:
                for nd in range(0, bound + 2):
                    pads = (nd,) * d
                    value, onset = stabilized_padded_multiplicity(spec, core, pads)
                    assert onset <= max(0, bound - nd), (gen, core, pads, onset)


def test_constituent_multiplicity_below_degree():
    spec = FreeModuleSpec.regular(2, 3)
    assert constituent_multiplicity(spec, (2,)) == 0
