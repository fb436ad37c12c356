"""Tests for factored numbers, their conventions, and base-set resolution."""

from __future__ import annotations

import pytest
from hypothesis import given
from hypothesis import strategies as st

from borderings.factored import BaseSet, BaseSetError, FactoredNumber, group_digits, parse_base_spec
from borderings.intsets import AllIntegers, ArithmeticProgression, Primes
from borderings.numerics import INF, ExtNat, omega, totient


class TestConventions:
    def test_empty_product_is_one(self):
        assert FactoredNumber.one().value() == 1
        assert FactoredNumber({}).format_factored() == "1"
        assert FactoredNumber({5: 0}).format_factored() == "1"  # exponent 0 elided

    def test_zero_conventions(self):
        assert FactoredNumber({0: INF}).value() == 0
        assert FactoredNumber({2: INF}).value() == 0
        assert FactoredNumber({0: 3}).value() == 0  # 0^3 = 0
        assert FactoredNumber({0: 0}).value() == 1  # 0^0 = 1
        assert FactoredNumber({2: INF}) == FactoredNumber.zero()  # normalised marker

    def test_one_to_infinity_is_one(self):
        F = FactoredNumber({1: INF})
        assert F.value() == 1
        assert not F.is_zero
        assert F.format_factored() == "1^inf"

    def test_plain_product(self):
        F = FactoredNumber({2: 7, 3: 3})
        assert F.value() == 3456
        assert F.format_factored() == "2^7 * 3^3"


class TestArithmetic:
    def test_multiplication_merges(self):
        a = FactoredNumber({2: 3, 5: 1})
        b = FactoredNumber({2: 1, 3: 2})
        assert (a * b).value() == a.value() * b.value()
        assert (a * FactoredNumber.zero()).is_zero

    def test_refine_to_primes(self):
        assert FactoredNumber({6: 2}).refine_to_primes() == FactoredNumber({2: 2, 3: 2})
        mixed = FactoredNumber({2: 1, 4: 2, 12: 1})
        assert mixed.refine_to_primes() == FactoredNumber({2: 7, 3: 1})
        prime_only = FactoredNumber({2: 5, 7: 1})
        assert prime_only.refine_to_primes() == prime_only
        assert FactoredNumber.zero().refine_to_primes().is_zero
        assert FactoredNumber({1: INF}).refine_to_primes() == FactoredNumber.one()

    def test_divisibility(self):
        a = FactoredNumber({2: 3, 3: 1})
        b = FactoredNumber({2: 4, 3: 1, 5: 2})
        assert a.exponentwise_divides(b)
        assert not b.exponentwise_divides(a)
        assert a.integer_divides(b)
        # exponentwise is strictly stronger: 8 divides 36*? no -- pick a case
        c = FactoredNumber({6: 1})  # 6
        d = FactoredNumber({2: 1, 3: 1})  # also 6, different bases
        assert c.integer_divides(d) and d.integer_divides(c)
        assert not c.exponentwise_divides(d)


factored_numbers = st.dictionaries(
    st.sampled_from([0, 1, 2, 3, 4, 5, 6, 7, 9, 10, 12, 15]),
    st.one_of(st.integers(min_value=0, max_value=40).map(ExtNat), st.just(INF)),
    max_size=5,
).map(FactoredNumber)


class TestTextFormat:
    def test_examples(self):
        assert FactoredNumber({2: 24, 3: 10, 5: 3, 7: 1, 11: 1}).format_factored() == (
            "2^24 * 3^10 * 5^3 * 7 * 11"
        )
        assert FactoredNumber.zero().format_factored() == "0"
        assert FactoredNumber.parse("2^24 * 3^10 * 5^3 * 7 * 11").value() == 9535274090496000
        assert FactoredNumber.parse("0").is_zero
        assert FactoredNumber.parse("1") == FactoredNumber.one()

    @given(factored_numbers)
    def test_round_trip(self, F):
        assert FactoredNumber.parse(F.format_factored()) == F

    def test_parse_errors(self):
        with pytest.raises(ValueError):
            FactoredNumber.parse("2^3 * 2")
        with pytest.raises(ValueError):
            FactoredNumber.parse("2^3 * * 5")

    def test_group_digits(self):
        assert group_digits(9535274090496000) == "9,535,274,090,496,000"
        assert group_digits(7) == "7"


class TestBaseSets:
    def test_explicit_and_range(self):
        assert BaseSet.explicit([5, 2, 2, 0]).resolve() == (0, 2, 5)
        assert BaseSet.range(2, 6).resolve() == (2, 3, 4, 5, 6)
        assert BaseSet.primes_up_to(12).resolve() == (2, 3, 5, 7, 11)
        assert BaseSet.all_up_to(5).resolve() == (2, 3, 4, 5)

    def test_auto_for_integers(self):
        Z = AllIntegers()
        assert BaseSet.auto().resolve(Z, 6) == (2, 3, 4, 5, 6)
        assert BaseSet.auto().resolve(Z, 1) == ()

    def test_auto_for_primes_cutoff(self):
        P = Primes()
        for k in (3, 5, 8, 12):
            bases = BaseSet.auto().resolve(P, k)
            assert all(totient(b) + omega(b) <= k for b in bases)
            # nothing above the resolved list can still qualify
            top = max(bases)
            for b in range(top + 1, 2 * k * k + 2):
                assert totient(b) + omega(b) > k
        assert BaseSet.auto().resolve(P, 3) == (2, 3, 4)

    def test_auto_needs_known_set(self):
        with pytest.raises(BaseSetError):
            BaseSet.auto().resolve(ArithmeticProgression(1, 4), 5)
        with pytest.raises(BaseSetError):
            BaseSet.auto().resolve(AllIntegers(), None)

    def test_parse_base_spec(self):
        assert parse_base_spec("auto").kind == "auto"
        assert parse_base_spec("upto:9").resolve() == tuple(range(2, 10))
        assert parse_base_spec("primes:7").resolve() == (2, 3, 5, 7)
        assert parse_base_spec("list:0,1,6").resolve() == (0, 1, 6)
        assert parse_base_spec("range:3..5").resolve() == (3, 4, 5)
        for bad in ("nope", "upto:x", "range:4", "list:a"):
            with pytest.raises(BaseSetError):
                parse_base_spec(bad)
