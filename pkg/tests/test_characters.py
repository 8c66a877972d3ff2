import itertools
from fractions import Fraction as F
from math import factorial

import pytest

from alphadet.adet import adet_poly
from alphadet.characters import (
    alpha_power_expansion,
    character,
    class_size,
    convolve_characters,
    immanant,
    perm_of_cycle_type,
    subgroup_averaged_character,
)
from alphadet.errors import ShapeWeightMismatch
from alphadet.matrices import RatMatrix, block_ones
from alphadet.partitions import (
    content_poly,
    kostka_ssyt,
    num_standard_tableaux,
    partitions_of,
)
from alphadet.perms import Perm, enumerate_perms, young_subgroup, young_subgroup_order
from alphadet.polynomials import QPoly
from alphadet.randmat import SplitMix64, random_matrix, random_perm


def test_trivial_and_sign_characters():
    for n in range(1, 7):
        for rho in partitions_of(n):
            assert character((n,), rho) == 1
            assert character((1,) * n, rho) == (-1) ** (n - len(rho))


def test_character_known_value():
    assert character((2, 2), (2, 2)) == 2


def test_character_is_dimension_at_identity():
    for n in range(1, 8):
        for shape in partitions_of(n):
            assert character(shape, (1,) * n) == num_standard_tableaux(shape)


def test_character_shape_mismatch():
    with pytest.raises(ShapeWeightMismatch):
        character((2, 2), (3,))


def test_first_orthogonality():
    for n in range(1, 6):
        shapes = partitions_of(n)
        for a in shapes:
            for b in shapes:
                total = sum(
                    class_size(rho) * character(a, rho) * character(b, rho)
                    for rho in partitions_of(n)
                )
                assert total == (factorial(n) if a == b else 0)


def test_class_sizes_sum_to_group_order():
    for n in range(1, 9):
        assert sum(class_size(rho) for rho in partitions_of(n)) == factorial(n)


def test_averaged_character_trivial_subgroup():
    g = Perm.from_cycles(4, [(1, 3, 2)])
    for shape in partitions_of(4):
        assert subgroup_averaged_character(shape, (1, 1, 1, 1), g) == character(
            shape, g.cycle_type()
        )


def test_averaged_character_at_identity_is_kostka():
    for n in range(1, 7):
        for shape in partitions_of(n):
            for mu in partitions_of(n):
                avg = subgroup_averaged_character(shape, mu, Perm.identity(n))
                assert avg == kostka_ssyt(shape, mu)


def test_averaged_character_worked_value():
    g = Perm.from_cycles(4, [(2, 3)])
    assert subgroup_averaged_character((2, 2), (2, 2), g) == F(-1, 2)


def test_averaged_character_biinvariance():
    mu = (3, 2, 1)
    subgroup = list(young_subgroup(mu))
    rng = SplitMix64(15)
    for _ in range(6):
        g = random_perm(6, rng)
        base = subgroup_averaged_character((3, 2, 1), mu, g)
        left = subgroup[rng.below(len(subgroup))]
        right = subgroup[rng.below(len(subgroup))]
        assert subgroup_averaged_character((3, 2, 1), mu, left * g * right) == base


def _det_cofactor(m: RatMatrix) -> F:
    n = m.rows
    if n == 0:
        return F(1)
    if n == 1:
        return m[0, 0]
    total = F(0)
    for j in range(n):
        minor = RatMatrix(
            [[m[i, c] for c in range(n) if c != j] for i in range(1, n)]
        )
        term = m[0, j] * _det_cofactor(minor)
        total += term if j % 2 == 0 else -term
    return total


def _per_enumeration(m: RatMatrix) -> F:
    n = m.rows
    total = F(0)
    for p in itertools.permutations(range(n)):
        prod = F(1)
        for i in range(n):
            prod *= m[p[i], i]
        total += prod
    return total


def test_immanant_sign_and_trivial_cases():
    for seed in (1, 2, 3):
        a = random_matrix(4, 4, seed)
        assert immanant((1, 1, 1, 1), a) == _det_cofactor(a)
        assert immanant((4,), a) == _per_enumeration(a)


def test_immanant_of_identity_is_tableau_count():
    for n in range(1, 6):
        for shape in partitions_of(n):
            assert immanant(shape, RatMatrix.identity(n)) == num_standard_tableaux(shape)


def test_immanant_of_permuted_block_ones_is_scaled_average():
    for n, mu in [(4, (2, 2)), (4, (2, 1, 1)), (5, (3, 2))]:
        rng = SplitMix64(n)
        for _ in range(5):
            g = random_perm(n, rng)
            m = block_ones(mu).permute_rows(g)
            for shape in partitions_of(n):
                assert immanant(shape, m) == young_subgroup_order(
                    mu
                ) * subgroup_averaged_character(shape, mu, g)


def test_convolution_identities():
    conv = convolve_characters((2, 1), (2, 1))
    f = num_standard_tableaux((2, 1))
    for rho, value in conv.items():
        assert value == F(factorial(3), f) * character((2, 1), rho)

    conv = convolve_characters((3,), (1, 1, 1))
    assert all(v == 0 for v in conv.values())

    for n in (2, 3, 4):
        conv = convolve_characters((n,), (n,))
        assert all(v == factorial(n) for v in conv.values())


def test_convolution_orthogonality_full():
    n = 4
    shapes = partitions_of(n)
    for a in shapes:
        for b in shapes:
            conv = convolve_characters(a, b)
            for rho, value in conv.items():
                if a == b:
                    expected = F(factorial(n), num_standard_tableaux(a)) * character(a, rho)
                else:
                    expected = 0
                assert value == expected


def test_alpha_power_expansion_small_cases():
    table = alpha_power_expansion(2)
    assert table[(1, 1)] == QPoly.one()
    assert table[(2,)] == QPoly([0, 1])
    alpha_power_expansion(5)


def test_character_weighted_average_has_no_extra_factor():
    # the correct constant is content_poly(shape); an extra tableau-count
    # factor would be off by exactly that factor whenever it exceeds 1
    n = 3
    a = random_matrix(n, n, 31)
    polys = {g: adet_poly(a.permute_columns(g)) for g in enumerate_perms(n)}
    for shape in partitions_of(n):
        lhs = QPoly.zero()
        for g, q in polys.items():
            lhs = lhs + character(shape, g.cycle_type()) * q
        rhs = immanant(shape, a) * content_poly(shape)
        assert lhs == rhs
        f = num_standard_tableaux(shape)
        if f > 1 and rhs:
            assert lhs != f * rhs


def test_character_weighted_average_all_shapes():
    for n in (3, 4):
        for seed in (5, 6):
            a = random_matrix(n, n, seed)
            polys = {g: adet_poly(a.permute_columns(g)) for g in enumerate_perms(n)}
            for shape in partitions_of(n):
                lhs = QPoly.zero()
                for g, q in polys.items():
                    lhs = lhs + character(shape, g.cycle_type()) * q
                assert lhs == immanant(shape, a) * content_poly(shape)


def test_perm_of_cycle_type():
    p = perm_of_cycle_type((3, 2, 1), 6)
    assert p.cycle_type() == (3, 2, 1)
    assert perm_of_cycle_type((1, 1), 2).is_identity()
