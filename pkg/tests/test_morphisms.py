import itertools

import pytest

from heyde import (
    PAdicUnit,
    enumerate_subgroups,
    identity,
    kappa_of,
    make_endo,
    minus_identity,
    scalar_endo,
    validate_spec,
)
from heyde.morphisms import Endomorphism

import oracles

Z5 = validate_spec([(5, 1)])
Z9 = validate_spec([(3, 2)])
Z9xZ5 = validate_spec([(3, 2), (5, 1)])


def all_endos(spec):
    return [
        Endomorphism(spec, vec)
        for vec in itertools.product(*(range(q) for q in spec.orders))
    ]


def test_automorphism_detection():
    assert make_endo(Z9, [2]).is_automorphism()
    assert not make_endo(Z9, [3]).is_automorphism()
    assert make_endo(Z9xZ5, [1, 1]).is_identity()


def test_apply_and_compose():
    phi = make_endo(Z9xZ5, [2, 3])
    assert phi.apply((4, 3)) == (8, 4)
    psi = make_endo(Z9xZ5, [5, 2])
    assert phi.compose(psi).apply((1, 1)) == phi.apply(psi.apply((1, 1)))


def test_invert():
    assert make_endo(Z5, [2]).invert().multipliers == (3,)
    with pytest.raises(ValueError, match="not invertible"):
        make_endo(Z9, [3]).invert()
    for spec in (Z9, Z9xZ5):
        for endo in all_endos(spec):
            if endo.is_automorphism():
                assert endo.compose(endo.invert()).is_identity()


def test_add_endos():
    alpha = make_endo(Z5, [4])
    total = identity(Z5).add(alpha)
    assert total.multipliers == (0,)
    assert minus_identity(Z5).multipliers == (4,)


def test_kappa_example():
    # beta = 2 on Z(9): I - beta = 8, (I - beta)^-2 = 1, so kappa = -8 = 1
    assert kappa_of(make_endo(Z9, [2])).multipliers == (1,)
    # brute cross-check on the product group
    beta = make_endo(Z9xZ5, [2, 3])
    kappa = kappa_of(beta)
    for q, m, got in zip(Z9xZ5.orders, beta.multipliers, kappa.multipliers):
        assert got == (-4 * m * pow((1 - m) % q, -2, q)) % q


def test_adjoint_pairing_identity_exhaustive():
    for spec, multipliers in ((Z9, (2,)), (Z9xZ5, (2, 3))):
        phi = make_endo(spec, multipliers)
        adj = phi.adjoint()
        for x in spec.element_list:
            for y in spec.element_list:
                assert spec.pair_exponent(phi.apply(x), y) == spec.pair_exponent(
                    x, adj.apply(y)
                )
    assert identity(Z9).adjoint() == identity(Z9)


def test_kernel_image_closed_forms():
    phi = make_endo(Z9, [3])
    assert set(phi.kernel().elements()) == {(0,), (3,), (6,)}
    assert set(phi.image().elements()) == {(0,), (3,), (6,)}
    zero_map = identity(Z9).add(make_endo(Z9, [8]))  # I + (-I)
    assert zero_map.kernel().is_full
    assert zero_map.image().is_trivial
    unit = make_endo(Z5, [2])
    assert unit.kernel().is_trivial
    assert unit.image().order == 5


def test_kernel_image_match_bruteforce():
    for endo in all_endos(Z9xZ5):
        image = {endo.apply(x) for x in Z9xZ5.element_list}
        kernel = {x for x in Z9xZ5.element_list if endo.apply(x) == Z9xZ5.zero()}
        assert set(endo.image().elements()) == image
        assert set(endo.kernel().elements()) == kernel
        assert endo.kernel().order * endo.image().order == Z9xZ5.size


def test_image_equals_annihilator_of_adjoint_kernel():
    for endo in all_endos(Z9xZ5):
        ann = oracles.brute_annihilator(
            Z9xZ5.orders, list(endo.adjoint().kernel().elements())
        )
        assert set(endo.image().elements()) == ann


def test_image_of_subgroup():
    for endo in all_endos(Z9):
        for sub in enumerate_subgroups(Z9):
            expected = {endo.apply(x) for x in sub.elements()}
            assert set(endo.image_of(sub).elements()) == expected


def test_every_subgroup_characteristic():
    for endo in all_endos(Z9xZ5):
        for sub in enumerate_subgroups(Z9xZ5):
            assert all(sub.contains(endo.apply(x)) for x in sub.elements())


def test_truncated_unit_sums():
    unit = PAdicUnit(3, (2, 1))
    assert unit.truncation(1) == 2
    assert unit.truncation(2) == 5
    z125 = validate_spec([(5, 3, "padic")])
    assert PAdicUnit(5, (1, 0, 0)).to_endo(z125).is_identity()
    z27 = validate_spec([(3, 3, "padic")])
    endo = PAdicUnit(3, (2, 2, 2)).to_endo(z27)
    assert endo.multipliers == (26,)
    assert endo.is_minus_identity()


def test_unit_validation():
    with pytest.raises(ValueError, match="unit"):
        PAdicUnit(3, (0, 1))
    with pytest.raises(ValueError, match="digits"):
        PAdicUnit(3, (1, 5))
    with pytest.raises(ValueError, match="level exceeded"):
        PAdicUnit(3, (1,)).truncation(2)
    with pytest.raises(ValueError, match="single"):
        PAdicUnit(3, (1, 1)).to_endo(Z9xZ5)


def test_scalar_endo_is_multiplication():
    double = scalar_endo(Z9xZ5, 2)
    for x in Z9xZ5.element_list:
        assert double.apply(x) == Z9xZ5.scalar_mul(2, x)
