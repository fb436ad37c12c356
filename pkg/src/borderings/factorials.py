"""Generalized factorials, integers, binomial coefficients and row products over (S, T).

The k-th factorial for (S, T) is the product over bases b in T of
b^alpha_k(S, b), kept in factored form; generalized integers and
binomials are the telescoped exponent differences, which the underlying
theory guarantees are nonnegative.  Degenerate bases 0 and 1 follow the
conventions of the factored-number module.
"""

from __future__ import annotations

from typing import Sequence

from .factored import BaseSet, BaseSetError, FactoredNumber, group_digits  # noqa: F401
from .intsets import IntegerSet
from .numerics import INF, ExtNat, ZERO, cumulative_digit_sum, digit_sum
from .ordering import (
    DEFAULT_CONFIG,
    EngineConfig,
    exponent_sequence,
    pairwise_valuation_sum,
)


class WindowLimitedError(RuntimeError):
    """A product would silently absorb uncertified (window-limited) exponents."""


def _alpha_values(
    S: IntegerSet,
    b: int,
    k: int,
    config: EngineConfig,
    allow_uncertified: bool,
) -> list[ExtNat]:
    seq = exponent_sequence(S, b, k, config=config)
    if seq.window_limited and not allow_uncertified:
        raise WindowLimitedError(
            f"exponents for (S={S.spec}, b={b}) are window-limited; "
            "pass allow_uncertified=True to accept them"
        )
    return seq.values


def factorial(
    S: IntegerSet,
    T: BaseSet,
    k: int,
    config: EngineConfig = DEFAULT_CONFIG,
    allow_uncertified: bool = False,
) -> FactoredNumber:
    """The k-th generalized factorial for (S, T) in factored form."""
    if k < 0:
        raise ValueError(f"k must be >= 0, got {k}")
    bases = T.resolve(S, k)
    card = S.cardinality
    exps: dict[int, ExtNat] = {}
    for b in bases:
        if b == 0:
            exps[0] = ZERO if (not card.is_finite or k < card.value) else INF
        elif b == 1:
            exps[1] = ZERO if k == 0 else INF
        else:
            exps[b] = _alpha_values(S, b, k, config, allow_uncertified)[k]
    return FactoredNumber(exps)


def gen_integer(
    S: IntegerSet,
    T: BaseSet,
    n: int,
    config: EngineConfig = DEFAULT_CONFIG,
    allow_uncertified: bool = False,
) -> FactoredNumber:
    """The n-th generalized integer: the exponentwise ratio of consecutive factorials.

    Zero for n >= |S| (except for T = {1}, where every factorial is 1).
    """
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    bases = T.resolve(S, n)
    card = S.cardinality
    if card.is_finite and n >= card.value:
        if set(bases) == {1}:
            return FactoredNumber({1: INF})
        return FactoredNumber.zero()
    exps: dict[int, ExtNat] = {}
    for b in bases:
        if b == 0:
            continue  # alpha stays 0 below |S|
        if b == 1:
            exps[1] = INF  # ratio of 1^inf factors is still the unit
            continue
        values = _alpha_values(S, b, n, config, allow_uncertified)
        exps[b] = values[n].minus(values[n - 1])
    return FactoredNumber(exps)


def gen_binomial(
    S: IntegerSet,
    T: BaseSet,
    k: int,
    ell: int,
    config: EngineConfig = DEFAULT_CONFIG,
    allow_uncertified: bool = False,
) -> FactoredNumber:
    """The generalized binomial coefficient (k over ell) for (S, T)."""
    if not 0 <= ell <= k:
        raise ValueError(f"need 0 <= ell <= k, got ell={ell}, k={k}")
    card = S.cardinality
    if card.is_finite and k >= card.value:
        raise ValueError(f"k = {k} is not below |S| = {card.value}")
    bases = T.resolve(S, k)
    exps: dict[int, ExtNat] = {}
    for b in bases:
        if b == 0:
            continue
        if b == 1:
            if k >= 1:
                exps[1] = INF
            continue
        values = _alpha_values(S, b, k, config, allow_uncertified)
        diff = values[k].minus(values[ell]).minus(values[k - ell])
        exps[b] = diff
    return FactoredNumber(exps)


def to_decimal(F: FactoredNumber) -> int:
    """Exact integer value of a factored number."""
    return F.value()


def refine_to_primes(F: FactoredNumber) -> FactoredNumber:
    """Value-preserving rewrite onto prime bases only."""
    return F.refine_to_primes()


def exponentwise_divides(F1: FactoredNumber, F2: FactoredNumber) -> bool:
    return F1.exponentwise_divides(F2)


def integer_divides(F1: FactoredNumber, F2: FactoredNumber) -> bool:
    return F1.integer_divides(F2)


def pairwise_multiple_check(
    S: IntegerSet,
    T: BaseSet,
    seq: Sequence[int],
    config: EngineConfig = DEFAULT_CONFIG,
    allow_uncertified: bool = False,
) -> bool:
    """Check that the pairwise-difference product over T is a multiple of 0!..n!.

    Per base this is exactly prefix-sum dominance of the sequence's
    exponent values over the invariants, checked exponentwise.
    """
    elements = list(seq.elements) if hasattr(seq, "elements") else list(seq)
    n = len(elements) - 1
    if n < 0:
        raise ValueError("sequence must be nonempty")
    bases = T.resolve(S, n)
    card = S.cardinality
    for b in bases:
        gamma = pairwise_valuation_sum(elements, b)
        if b == 0:
            need = ZERO if (not card.is_finite or n < card.value) else INF
        elif b == 1:
            need = ZERO if n == 0 else INF
        else:
            values = _alpha_values(S, b, n, config, allow_uncertified)
            total: ExtNat = ZERO
            for v in values:
                total = total + v
            need = total
        if gamma < need:
            return False
    return True


def nu_bar(n: int, b: int) -> int:
    """Total exponent of b in the n-th row product, by the digit-sum formula.

    The formula is exact; a non-integer here would mean an implementation
    bug, so the division is checked.
    """
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    if b < 2:
        raise ValueError(f"b must be >= 2, got {b}")
    num = 2 * cumulative_digit_sum(n, b) - (n - 1) * digit_sum(n, b)
    if num % (b - 1) != 0:
        raise ArithmeticError(f"row exponent numerator {num} not divisible by {b - 1}")
    return num // (b - 1)


def row_product(n: int) -> FactoredNumber:
    """Product of the generalized binomial coefficients in row n for (Z, N)."""
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    return FactoredNumber({b: nu_bar(n, b) for b in range(2, n + 1)})


def row_product_direct(n: int) -> FactoredNumber:
    """Oracle for row_product: multiply the row binomials directly."""
    from .intsets import AllIntegers

    S = AllIntegers()
    out = FactoredNumber.one()
    for k in range(n + 1):
        out = out * gen_binomial(S, BaseSet.auto(), n, k)
    return out


def partial_row_product(n: int, x: int) -> FactoredNumber:
    """Truncation of the row product to bases <= x."""
    if not 2 <= x <= n:
        raise ValueError(f"need 2 <= x <= n, got x={x}, n={n}")
    return FactoredNumber({b: nu_bar(n, b) for b in range(2, x + 1)})
