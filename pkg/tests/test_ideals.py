"""Core monomial ideal arithmetic, counting, and prime structure."""

import random

import pytest
from hypothesis import given, settings, strategies as st

from gideal import AmbientMismatch, CoordinatePrime, MonomialIdeal
from gideal.ideals import (
    hilbert_function_incl_excl,
    localize_power,
    monomials_of_degree,
    reg_dim1_saturated,
)

from samplers import random_finite_ideal, random_small_ideal


def I3(*gens):
    return MonomialIdeal.of(3, gens)


class TestConstruction:
    def test_minimal_generators_drop_multiples(self):
        I = MonomialIdeal.of(2, [(2, 0), (3, 0), (2, 1), (0, 1)])
        assert I.gens == ((0, 1), (2, 0))

    def test_duplicates_collapse(self):
        I = MonomialIdeal.of(2, [(1, 1), (1, 1)])
        assert I.gens == ((1, 1),)

    def test_sorted_by_degree_then_lex(self):
        I = MonomialIdeal.of(3, [(3, 0, 0), (1, 1, 0), (0, 0, 3), (0, 1, 1)])
        assert I.gens == ((0, 1, 1), (1, 1, 0), (0, 0, 3), (3, 0, 0))

    def test_zero_and_unit(self):
        Z = MonomialIdeal.zero(2)
        U = MonomialIdeal.unit(2)
        assert Z.is_zero() and not Z.is_unit()
        assert U.is_unit() and not U.is_proper()
        assert U.gens == ((0, 0),)
        assert MonomialIdeal.of(2, [(0, 0), (1, 0)]) == U

    def test_negative_exponent_rejected(self):
        with pytest.raises(ValueError):
            MonomialIdeal.of(2, [(1, -1)])

    def test_wrong_arity_rejected(self):
        with pytest.raises(ValueError):
            MonomialIdeal.of(2, [(1, 1, 1)])

    def test_huge_exponent_rejected(self):
        with pytest.raises(OverflowError):
            MonomialIdeal.of(2, [(1 << 40, 0)])

    def test_ambient_mismatch(self):
        with pytest.raises(AmbientMismatch):
            MonomialIdeal.maximal(2) + MonomialIdeal.maximal(3)

    def test_maximal_and_powers(self):
        M = MonomialIdeal.maximal(2)
        assert M.gens == ((0, 1), (1, 0))
        assert MonomialIdeal.max_power(2, 3) == M**3
        assert M**0 == MonomialIdeal.unit(2)


class TestArithmetic:
    def test_product_of_variables(self):
        assert I3((1, 0, 0)) * I3((0, 1, 0)) == I3((1, 1, 0))

    def test_square_of_two_variables(self):
        M = MonomialIdeal.of(2, [(1, 0), (0, 1)])
        assert (M * M).gens == ((0, 2), (1, 1), (2, 0))

    def test_intersection_is_pairwise_lcm(self):
        left = I3((1, 0, 0), (0, 1, 0))
        right = I3((0, 1, 0), (0, 0, 1))
        assert (left & right) == I3((0, 1, 0), (1, 0, 1))

    def test_sum_with_unit_is_unit(self):
        assert I3((1, 0, 0)) + MonomialIdeal.unit(3) == MonomialIdeal.unit(3)

    def test_product_with_zero(self):
        assert I3((1, 0, 0)) * MonomialIdeal.zero(3) == MonomialIdeal.zero(3)

    def test_containment(self):
        I = I3((2, 0, 0), (0, 1, 0))
        assert I <= I3((1, 0, 0), (0, 1, 0))
        assert not I3((1, 0, 0)) <= I
        assert I.contains_monomial((2, 3, 1))
        assert not I.contains_monomial((1, 0, 2))

    def test_component_of_max_power(self):
        M2 = MonomialIdeal.max_power(3, 2)
        assert M2.component(3) == MonomialIdeal.max_power(3, 3)

    def test_component_keeps_only_divisible(self):
        I = I3((2, 0, 0), (0, 1, 1))
        C2 = I.component(2)
        assert C2.gens == ((0, 1, 1), (2, 0, 0))
        assert I.component(3).mu == 6


class TestSaturation:
    def test_saturate_var_zeroes_exponents(self):
        I = I3((2, 0, 1), (0, 1, 2))
        assert I.saturate_var(2) == I3((2, 0, 0), (0, 1, 0))

    def test_saturation_of_finite_colength_is_unit(self):
        I = I3((2, 0, 0), (0, 2, 0), (0, 0, 2))
        assert I.saturate() == MonomialIdeal.unit(3)

    def test_mixed_ideal_already_saturated(self):
        I = I3((1, 1, 0), (2, 0, 0))
        assert I.saturate() == I

    def test_saturation_monotone_and_idempotent(self):
        rng = random.Random(7)
        for _ in range(25):
            I = random_small_ideal(rng, 3)
            S = I.saturate()
            assert I <= S
            assert S.saturate() == S


class TestCounting:
    def test_monomials_of_degree_count(self):
        from math import comb

        for n in (1, 2, 3, 4):
            for d in range(5):
                assert len(monomials_of_degree(n, d)) == comb(d + n - 1, n - 1)

    def test_colength_of_max_power(self):
        from math import comb

        for d in range(1, 5):
            assert MonomialIdeal.max_power(3, d).colength() == comb(d + 2, 3)

    def test_colength_infinite_is_none(self):
        assert I3((1, 0, 0), (0, 1, 0)).colength() is None

    def test_colength_small(self):
        assert MonomialIdeal.of(2, [(2, 0), (0, 2)]).colength() == 4

    def test_hilbert_function_against_inclusion_exclusion(self):
        rng = random.Random(11)
        for _ in range(20):
            I = random_small_ideal(rng, 3)
            for t in range(7):
                assert I.hilbert_function(t) == hilbert_function_incl_excl(I, t)

    def test_colength_against_inclusion_exclusion(self):
        rng = random.Random(13)
        for _ in range(12):
            I = random_finite_ideal(rng, 3)
            total = 0
            t = 0
            while True:
                step = hilbert_function_incl_excl(I, t)
                if step == 0:
                    break
                total += step
                t += 1
            assert I.colength() == total

    def test_hilbert_function_of_unit_and_zero(self):
        from math import comb

        assert MonomialIdeal.unit(3).hilbert_function(4) == 0
        assert MonomialIdeal.zero(3).hilbert_function(4) == comb(6, 2)


class TestPrimes:
    def test_minimal_primes_of_pairwise_products(self):
        I = I3((1, 1, 0), (0, 1, 1), (1, 0, 1))
        covers = I.minimal_primes()
        assert sorted(sorted(c) for c in covers) == [[0, 1], [0, 2], [1, 2]]
        assert I.dimension() == 1

    def test_minimal_primes_of_two_pure_powers(self):
        I = I3((2, 0, 0), (0, 3, 0))
        assert I.minimal_primes() == (frozenset({0, 1}),)
        assert I.dimension() == 1

    def test_dimension_of_finite_colength_is_zero(self):
        assert I3((1, 0, 0), (0, 1, 0), (0, 0, 1)).dimension() == 0

    def test_dimension_of_principal(self):
        assert I3((2, 1, 0)).dimension() == 2

    def test_minimal_primes_reject_trivial(self):
        with pytest.raises(ValueError):
            MonomialIdeal.unit(2).minimal_primes()
        with pytest.raises(ValueError):
            MonomialIdeal.zero(2).minimal_primes()

    def test_coordinate_prime_ideal_and_power(self):
        P = CoordinatePrime(1)
        assert P.ideal(3) == I3((1, 0, 0), (0, 0, 1))
        assert P.power(3, 2) == I3((2, 0, 0), (1, 0, 1), (0, 0, 2))


class TestLocalization:
    def test_power_detected(self):
        Q = I3((1, 1, 0), (0, 1, 1), (1, 0, 1))
        assert localize_power(Q, CoordinatePrime(0)) == 1
        P2 = CoordinatePrime(2).power(3, 2)
        assert localize_power(P2, CoordinatePrime(2)) == 2

    def test_dropped_prime_gives_zero(self):
        Q = CoordinatePrime(0).ideal(3)
        assert localize_power(Q, CoordinatePrime(1)) == 0

    def test_non_power_gives_none(self):
        from samplers import embed_pairs

        Q = MonomialIdeal.of(3, embed_pairs(2, [(2, 0), (0, 1)]))
        assert localize_power(Q, CoordinatePrime(2)) is None

    def test_regularity_of_prime_is_one(self):
        Q = CoordinatePrime(2).ideal(3)
        assert reg_dim1_saturated(Q) == (1, 1)

    def test_regularity_of_pairwise_products(self):
        Q = I3((1, 1, 0), (0, 1, 1), (1, 0, 1))
        assert reg_dim1_saturated(Q) == (2, 3)

    def test_regularity_of_planar_squares(self):
        from samplers import embed_pairs

        Q = MonomialIdeal.of(3, embed_pairs(2, [(2, 0), (0, 2)]))
        assert reg_dim1_saturated(Q) == (3, 4)

    def test_regularity_rejects_bad_input(self):
        with pytest.raises(ValueError):
            reg_dim1_saturated(I3((1, 0, 0), (0, 1, 0), (0, 0, 1)))


small_exps = st.tuples(*(st.integers(0, 4) for _ in range(3))).filter(
    lambda t: sum(t) > 0
)
gen_lists = st.lists(small_exps, min_size=1, max_size=5)


class TestAlgebraLaws:
    @settings(max_examples=60, derandomize=True)
    @given(gen_lists, gen_lists)
    def test_product_inside_intersection(self, a, b):
        I, J = MonomialIdeal.of(3, a), MonomialIdeal.of(3, b)
        assert I * J <= (I & J)

    @settings(max_examples=60, derandomize=True)
    @given(gen_lists, gen_lists)
    def test_sum_is_least_upper_bound(self, a, b):
        I, J = MonomialIdeal.of(3, a), MonomialIdeal.of(3, b)
        S = I + J
        assert I <= S and J <= S
        assert S <= MonomialIdeal.of(3, list(a) + list(b))

    @settings(max_examples=40, derandomize=True)
    @given(gen_lists)
    def test_minimalization_idempotent(self, a):
        I = MonomialIdeal.of(3, a)
        assert MonomialIdeal.of(3, I.gens) == I

    @settings(max_examples=40, derandomize=True)
    @given(gen_lists)
    def test_square_consistent_with_product(self, a):
        I = MonomialIdeal.of(3, a)
        assert I**2 == I * I
        assert I**3 == I * I * I

    @settings(max_examples=40, derandomize=True)
    @given(gen_lists, st.integers(0, 6))
    def test_hilbert_function_counts_complement(self, a, t):
        from math import comb

        I = MonomialIdeal.of(3, a)
        inside = sum(1 for m in monomials_of_degree(3, t) if I.contains_monomial(m))
        assert I.hilbert_function(t) == comb(t + 2, 2) - inside
