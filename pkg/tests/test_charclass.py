"""Total classes and characteristic numbers of the rank-one duals."""

from math import comb

import pytest

from _oracles import char_number_plain, poly_mul, sw_number_plain
from symchar.charclass import (
    BOUNDS,
    CharNumberTable,
    DOES_NOT_BOUND,
    INSUFFICIENT_DATA,
    PONTRJAGIN,
    SW,
    bounds_orientably,
    cayley_plane,
    complex_projective,
    pontrjagin_numbers,
    quaternionic_projective,
    sphere,
    stiefel_whitney_numbers,
    total_pontrjagin,
    total_stiefel_whitney,
)
from symchar.errors import DimensionMismatchError, SymcharError, UnsupportedClassError
from symchar.partitions import format_partition, partitions_of, sw_monomials_of


def test_sphere_class_is_trivial():
    for n in [1, 2, 3, 4, 7, 12]:
        total = total_pontrjagin(sphere(n))
        assert total.coefficients == (1, 0)
        assert total.ring.generator_degree == n
        assert total.ring.truncation_top == 1


def test_cp_class_binomial_coefficients():
    # (1 + a^2)^(n+1): slot 2j carries C(n+1, j), odd slots vanish
    for n in range(1, 9):
        total = total_pontrjagin(complex_projective(n))
        assert total.ring.generator_degree == 2
        for j in range(n + 1):
            expected = comb(n + 1, j // 2) if j % 2 == 0 else 0
            assert total.coefficient(j) == expected


def test_hp2_class_frozen_and_derived():
    total = total_pontrjagin(quaternionic_projective(2))
    assert total.coefficients == (1, 2, 7)
    # independent route: (1+u)^6 times the geometric series for (1+4u)^(-1)
    binomial = [comb(6, k) for k in range(7)]
    geometric = [(-4) ** k for k in range(3)]
    plain = poly_mul(binomial, geometric)[:3]
    assert tuple(plain) == total.coefficients


def test_hp3_class():
    total = total_pontrjagin(quaternionic_projective(3))
    assert total.coefficients == (1, 4, 12, 8)
    assert total.coefficient(1) == 4


def test_hp_linear_coefficient_is_2n_minus_2():
    for n in range(1, 9):
        total = total_pontrjagin(quaternionic_projective(n))
        assert total.coefficient(1) == 2 * n - 2


def test_cayley_class_frozen():
    total = total_pontrjagin(cayley_plane())
    assert total.coefficients == (1, 6, 39)
    assert total.ring.generator_degree == 8
    assert total.coefficient(1) > 0  # sign convention on the degree-8 term


def test_cayley_numbers_golden_table():
    table = pontrjagin_numbers(cayley_plane())
    assert table.kind == PONTRJAGIN
    assert table.dimension == 16
    assert table.entries == {
        "4": 39,
        "3,1": 0,
        "2,2": 36,
        "2,1,1": 0,
        "1,1,1,1": 0,
    }
    assert table.entries["2,2"] == table.entries["4"] - 3


def test_cp2_number():
    assert pontrjagin_numbers(complex_projective(2)).entries == {"1": 3}


def test_cp4_numbers():
    table = pontrjagin_numbers(complex_projective(4)).entries
    # p_1 = 5a^2, p_2 = 10a^4 on CP^4
    assert table == {"2": 10, "1,1": 25}


def test_hp_top_power_number():
    for n in range(1, 7):
        table = pontrjagin_numbers(quaternionic_projective(n))
        ones = format_partition((1,) * n)
        assert table.entries[ones] == (2 * n - 2) ** n


def test_sphere_numbers_all_zero():
    for n in [4, 8, 12, 16]:
        table = pontrjagin_numbers(sphere(n))
        assert set(table.entries) == {
            format_partition(p) for p in partitions_of(n // 4)
        }
        assert table.all_zero()
        assert table.reason is None


def test_dimension_not_multiple_of_four_is_vacuous():
    for space in [sphere(3), sphere(6), complex_projective(3)]:
        table = pontrjagin_numbers(space)
        assert table.entries == {}
        assert table.reason == "dimension-not-multiple-of-4"
        assert table.all_zero()


def test_numbers_match_untruncated_convolution_oracle():
    spaces = [sphere(n) for n in range(4, 33, 4)]
    spaces += [complex_projective(n) for n in range(2, 17, 2)]
    spaces += [quaternionic_projective(n) for n in range(1, 9)]
    spaces += [cayley_plane()]
    for space in spaces:
        dim = space.real_dimension
        table = pontrjagin_numbers(space)
        total = total_pontrjagin(space)
        for partition in partitions_of(dim // 4):
            expected = char_number_plain(
                list(total.coefficients),
                total.ring.generator_degree,
                dim,
                partition,
            )
            assert table.entries[format_partition(partition)] == expected


def test_sw_class_cp_binomial_mod_2():
    for n in range(1, 9):
        total = total_stiefel_whitney(complex_projective(n))
        for j in range(n + 1):
            assert total.coefficient(j) == comb(n + 1, j) % 2


def test_sw_numbers_cp2():
    table = stiefel_whitney_numbers(complex_projective(2))
    assert table.kind == SW
    assert table.dimension == 4
    assert table.entries == {
        "w4": 1,
        "w1 w3": 0,
        "w2^2": 1,
        "w1^2 w2": 0,
        "w1^4": 0,
    }


def test_sw_numbers_cp3_all_zero():
    # (1 + a)^4 = 1 mod 2 after truncation at a^4
    table = stiefel_whitney_numbers(complex_projective(3))
    assert set(table.entries) == {m.format() for m in sw_monomials_of(6)}
    assert table.all_zero()


def test_sw_numbers_cp5_all_zero_despite_nonzero_classes():
    # w(CP^5) = 1 + a^2 + a^4 mod 2: nonzero classes, vanishing numbers
    total = total_stiefel_whitney(complex_projective(5))
    assert total.coefficient(2) == 1 and total.coefficient(4) == 1
    assert stiefel_whitney_numbers(complex_projective(5)).all_zero()


def test_sw_numbers_spheres_all_zero():
    for n in [1, 2, 3, 4, 7]:
        table = stiefel_whitney_numbers(sphere(n))
        assert len(table.entries) == len(sw_monomials_of(n))
        assert table.all_zero()


def test_sw_numbers_match_untruncated_convolution_oracle():
    for n in range(1, 9):
        space = complex_projective(n)
        table = stiefel_whitney_numbers(space)
        total = total_stiefel_whitney(space)
        for monomial in sw_monomials_of(2 * n):
            expected = sw_number_plain(
                list(total.coefficients), 2, 2 * n, monomial
            )
            assert table.entries[monomial.format()] == expected


def test_sw_unsupported_spaces():
    with pytest.raises(UnsupportedClassError):
        stiefel_whitney_numbers(quaternionic_projective(2))
    with pytest.raises(UnsupportedClassError):
        total_stiefel_whitney(cayley_plane())


def test_wall_verdicts():
    cp2 = complex_projective(2)
    assert bounds_orientably(
        pontrjagin_numbers(cp2), stiefel_whitney_numbers(cp2)
    ) == DOES_NOT_BOUND

    cp3 = complex_projective(3)
    assert bounds_orientably(
        pontrjagin_numbers(cp3), stiefel_whitney_numbers(cp3)
    ) == BOUNDS

    # nonzero Pontrjagin side decides even without SW data
    assert bounds_orientably(pontrjagin_numbers(cayley_plane()), None) == DOES_NOT_BOUND

    # all-zero Pontrjagin side alone is not enough
    assert bounds_orientably(
        pontrjagin_numbers(quaternionic_projective(1)), None
    ) == INSUFFICIENT_DATA

    s4 = sphere(4)
    assert bounds_orientably(
        pontrjagin_numbers(s4), stiefel_whitney_numbers(s4)
    ) == BOUNDS


def test_wall_validates_inputs():
    p4 = pontrjagin_numbers(sphere(4))
    sw8 = stiefel_whitney_numbers(sphere(8))
    with pytest.raises(DimensionMismatchError):
        bounds_orientably(p4, sw8)
    with pytest.raises(SymcharError):
        bounds_orientably(sw8, None)
    with pytest.raises(SymcharError):
        bounds_orientably(p4, p4)


def test_table_json_shape():
    table = pontrjagin_numbers(cayley_plane())
    payload = table.to_json_dict()
    assert payload == {
        "dim": 16,
        "kind": "pontrjagin",
        "entries": table.entries,
    }
    vacuous = pontrjagin_numbers(sphere(3)).to_json_dict()
    assert vacuous["reason"] == "dimension-not-multiple-of-4"


def test_construction_validators():
    with pytest.raises(SymcharError):
        sphere(0)
    with pytest.raises(SymcharError):
        complex_projective(0)
    with pytest.raises(SymcharError):
        quaternionic_projective(-1)
