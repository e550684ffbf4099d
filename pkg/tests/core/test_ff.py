"""
Tests for prime and quadratic extension field arithmetic.
"""

import random
from collections import Counter

import pytest
import numpy as np

from superspecial_survey.core.ff import (
    ExtField,
    PrimeModulus,
    cube_root_count,
    ext_pow,
    make_ext_field,
    smallest_nonresidue,
)
from superspecial_survey.errors import InvalidModulusError, ModulusMismatchError


class TestPrimeModulus:
    """Tests for PrimeModulus validation."""

    @pytest.mark.unit
    @pytest.mark.parametrize("p", [3, 5, 7, 11, 13, 269, 997])
    def test_accepts_odd_primes(self, p):
        """Test that odd primes are accepted."""
        assert PrimeModulus(p).p == p
        assert PrimeModulus(p).q == p * p

    @pytest.mark.unit
    @pytest.mark.parametrize("p", [-5, 0, 1, 2, 4, 9, 15, 91, 561])
    def test_rejects_non_primes_and_two(self, p):
        """Test that non-primes and 2 are rejected."""
        with pytest.raises(InvalidModulusError):
            PrimeModulus(p)

    @pytest.mark.unit
    @pytest.mark.parametrize("p", [True, 7.0, "7", None])
    def test_rejects_non_integers(self, p):
        """Test that non-integer moduli are rejected."""
        with pytest.raises(InvalidModulusError):
            PrimeModulus(p)

    @pytest.mark.unit
    def test_invalid_modulus_is_a_value_error(self):
        """Test that an invalid modulus is also a ValueError."""
        with pytest.raises(ValueError):
            PrimeModulus(4)

    @pytest.mark.unit
    def test_checked_enforces_bound(self):
        """Test the max_prime bound."""
        assert PrimeModulus.checked(101, max_prime=101).p == 101
        with pytest.raises(InvalidModulusError, match="SUPERSPECIAL_MAX_PRIME"):
            PrimeModulus.checked(103, max_prime=101)


class TestFieldElement:
    """Tests for F_p arithmetic."""

    @pytest.mark.unit
    def test_representative_is_normalized(self):
        """Test that representatives are reduced mod p."""
        m = PrimeModulus(7)
        assert m(10).value == 3
        assert m(-1).value == 6

    @pytest.mark.unit
    def test_basic_operations(self):
        """Test F_p arithmetic operators."""
        m = PrimeModulus(7)
        assert m(3) + m(5) == 1
        assert m(3) - m(5) == 5
        assert m(3) * m(5) == 1
        assert m(3) / m(5) == 2
        assert -m(3) == 4
        assert m(3) ** 6 == 1
        assert 2 + m(6) == 1
        assert 1 - m(3) == 5

    @pytest.mark.unit
    def test_inverse(self):
        """Test inverses of every unit mod 7."""
        m = PrimeModulus(7)
        assert m(3).inverse() == 5
        assert m(3) ** -1 == 5
        for a in range(1, 7):
            assert m(a) * m(a).inverse() == 1

    @pytest.mark.unit
    def test_zero_has_no_inverse(self):
        """Test that zero has no inverse."""
        with pytest.raises(ZeroDivisionError):
            PrimeModulus(5).zero.inverse()

    @pytest.mark.unit
    def test_mixing_fields_raises(self):
        """Test that elements of different fields do not mix."""
        with pytest.raises(ModulusMismatchError):
            PrimeModulus(5)(1) + PrimeModulus(7)(1)

    @pytest.mark.unit
    @pytest.mark.parametrize("p", [5, 7, 11, 13])
    def test_half_the_units_are_squares(self, p):
        """Test that half the units are squares."""
        m = PrimeModulus(p)
        squares = {(a * a) % p for a in range(1, p)}
        assert {a for a in range(1, p) if m(a).is_square()} == squares
        assert len(squares) == (p - 1) // 2

    @pytest.mark.unit
    def test_hash_matches_equality(self):
        """Test that equal elements hash equally."""
        m = PrimeModulus(11)
        assert len({m(1), m(12), m(23)}) == 1


class TestExtField:
    """Tests for F_{p^2} = F_p[t]/(t^2 - n)."""

    @pytest.mark.unit
    @pytest.mark.parametrize("p,n", [(3, 2), (5, 2), (7, 3), (11, 2), (13, 2), (17, 3), (23, 5)])
    def test_smallest_nonresidue(self, p, n):
        """Test the smallest quadratic nonresidue."""
        assert smallest_nonresidue(p) == n
        assert make_ext_field(p).nonresidue == n

    @pytest.mark.unit
    def test_t_squared_is_the_nonresidue(self):
        """Test that t^2 equals the nonresidue."""
        field = make_ext_field(7)
        t = field(0, 1)
        assert t * t == 3
        assert (field(1, 1) * field(1, -1)) == field(5)

    @pytest.mark.unit
    def test_index_round_trip_covers_field(self):
        """Test that indices enumerate the field once."""
        field = make_ext_field(5)
        elements = list(field.elements())
        assert len(elements) == 25
        assert len(set(elements)) == 25
        assert [field.index(v) for v in elements] == list(range(25))

    @pytest.mark.unit
    @pytest.mark.parametrize("p", [3, 5, 7])
    def test_multiplicative_group_order(self, p):
        """Test that every unit has order dividing q - 1."""
        field = make_ext_field(p)
        for v in field.elements():
            if v.is_zero():
                continue
            assert v ** (field.q - 1) == field.one
            assert v * v.inverse() == field.one

    @pytest.mark.unit
    @pytest.mark.parametrize("p", [5, 7])
    def test_frobenius_is_pth_power(self, p):
        """Test that frobenius is the p-th power."""
        field = make_ext_field(p)
        for v in field.elements():
            assert v.frobenius() == v ** p
            assert v.norm() == (v * v.conjugate()).a0

    @pytest.mark.unit
    def test_ext_pow_edge_cases(self):
        """Test ext_pow with exponents 0, 1 and -1."""
        field = make_ext_field(5)
        assert ext_pow(field.zero, 0) == field.one
        assert ext_pow(field(2, 3), 1) == field(2, 3)
        with pytest.raises(ValueError):
            ext_pow(field(2, 3), -1)

    @pytest.mark.unit
    def test_zero_inverse_raises(self):
        """Test that zero has no inverse in F_{p^2}."""
        with pytest.raises(ZeroDivisionError):
            make_ext_field(7).zero.inverse()

    @pytest.mark.unit
    def test_mixing_extension_fields_raises(self):
        """Test that elements of different extension fields do not mix."""
        with pytest.raises(ModulusMismatchError):
            make_ext_field(5).one + make_ext_field(7).one


def assert_field_axioms(a, b, c, zero, one):
    assert a + b == b + a
    assert a * b == b * a
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a + zero == a
    assert a * one == a
    assert a + (-a) == zero
    if a != zero:
        assert a * a.inverse() == one


class TestFieldAxioms:
    """Field axioms on random triples."""

    @pytest.mark.unit
    @pytest.mark.parametrize("p", [3, 5, 7, 11, 13])
    def test_prime_field(self, p):
        """Test the field axioms in F_p."""
        rng = random.Random(p)
        m = PrimeModulus(p)
        for _ in range(200):
            a, b, c = (m(rng.randrange(p)) for _ in range(3))
            assert_field_axioms(a, b, c, m.zero, m.one)

    @pytest.mark.unit
    @pytest.mark.parametrize("p", [3, 5, 7, 11, 13])
    def test_extension_field(self, p):
        """Test the field axioms in F_{p^2}."""
        rng = random.Random(100 + p)
        field = make_ext_field(p)
        for _ in range(200):
            a, b, c = (field(rng.randrange(p), rng.randrange(p)) for _ in range(3))
            assert_field_axioms(a, b, c, field.zero, field.one)


class TestCubeRoots:
    """Tests for counting cube roots in F_{p^2}."""

    @pytest.mark.unit
    @pytest.mark.parametrize("p", [3, 5, 7, 11])
    def test_cube_root_counts_partition_the_field(self, p):
        """Test that cube-root counts sum to q."""
        field = make_ext_field(p)
        counts = [cube_root_count(a) for a in field.elements()]
        # every x is the cube root of exactly one a
        assert sum(counts) == field.q
        assert set(counts) <= {0, 1, 3}

    @pytest.mark.unit
    def test_characteristic_three_cubing_is_bijective(self):
        """Test that cubing is a bijection in characteristic 3."""
        field = make_ext_field(3)
        assert all(cube_root_count(a) == 1 for a in field.elements())

    @pytest.mark.unit
    def test_cube_root_count_of_zero(self):
        """Test that zero has one cube root."""
        assert cube_root_count(make_ext_field(7).zero) == 1

    @pytest.mark.unit
    @pytest.mark.parametrize("p", [3, 5, 7, 13])
    def test_vectorized_counts_match_scalar(self, p):
        """Test vectorized cube-root counts against the scalar version."""
        field = make_ext_field(p)
        arrays = field.index_arrays()
        expected = np.array([cube_root_count(a) for a in field.elements()])
        assert np.array_equal(field.vcube_root_count(arrays), expected)
        if (field.q - 1) % 3 == 0:
            table = field.cube_table()
            assert np.array_equal(field.vcube_root_count(arrays, table), expected)

    @pytest.mark.unit
    def test_vectorized_multiplication_matches_scalar(self):
        """Test vectorized multiplication against the scalar version."""
        field = make_ext_field(7)
        a = field.index_arrays()
        b = (a[1], a[0])
        c0, c1 = field.vmul(a, b)
        for index in range(field.q):
            u = field.from_index(index)
            v = field(u.a1.value, u.a0.value)
            product = u * v
            assert (c0[index], c1[index]) == (product.a0.value, product.a1.value)

    @pytest.mark.unit
    def test_ext_field_is_hashable_value(self):
        """Test that ExtField compares by value."""
        assert make_ext_field(5) == ExtField(PrimeModulus(5), 2)

    @pytest.mark.unit
    @pytest.mark.parametrize("p", [5, 7, 11, 13])
    def test_counts_match_exhaustive_cubing(self, p):
        """Test each cube_root_count(a) against #{x : x^3 = a} over the whole field."""
        field = make_ext_field(p)
        tally = Counter(x * x * x for x in field.elements())
        for a in field.elements():
            assert cube_root_count(a) == tally.get(a, 0), a

    @pytest.mark.unit
    def test_generator_of_f25_is_not_a_cube(self):
        """Test that a generator of the unit group of F_25 has no cube root."""
        field = make_ext_field(5)
        g = next(
            v for v in field.elements()
            if not v.is_zero() and v ** 12 != field.one and v ** 8 != field.one
        )
        assert len({g ** k for k in range(24)}) == 24
        assert cube_root_count(g) == 0
