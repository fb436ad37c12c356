"""Closed-form exponent formulas for S = Z and S = P, with their combinatorial backing.

These serve both as fast paths and as independent oracles against the
greedy engine: the Z formula is the geometric floor sum, the P formula
is driven by Euler's totient and the distinct-prime count, and the
partition bound ties the P lower bound to the floor sums.
"""

from __future__ import annotations

import math

from .factored import FactoredNumber
from .numerics import digit_sum, floor_sum, omega, prime_factors, totient


def alpha_Z(k: int, b: int) -> int:
    """Exponent of b in the k-th invariant for the integers: sum of floor(k/b^i)."""
    if b < 2:
        raise ValueError(f"alpha_Z needs b >= 2, got {b}")
    if k < 0:
        raise ValueError(f"alpha_Z needs k >= 0, got {k}")
    total, m = 0, b
    while m <= k:
        total += k // m
        m *= b
    return total


def beta(k: int, ell: int, b: int) -> int:
    """Binomial exponent of b for (Z, N), floor-sum form."""
    if not 0 <= ell <= k:
        raise ValueError(f"need 0 <= ell <= k, got ell={ell}, k={k}")
    return alpha_Z(k, b) - alpha_Z(ell, b) - alpha_Z(k - ell, b)


def beta_digit(k: int, ell: int, b: int) -> int:
    """Binomial exponent of b via carries: (d_b(l) + d_b(k-l) - d_b(k)) / (b-1)."""
    if not 0 <= ell <= k:
        raise ValueError(f"need 0 <= ell <= k, got ell={ell}, k={k}")
    num = digit_sum(ell, b) + digit_sum(k - ell, b) - digit_sum(k, b)
    if num % (b - 1) != 0:
        raise ArithmeticError(f"carry count {num} not divisible by b-1={b - 1}")
    return num // (b - 1)


def alpha_P(k: int, b: int) -> int:
    """Exponent of b in the k-th invariant for the primes.

    Zero whenever totient(b) + omega(b) > k; otherwise the floor sum of
    (k - omega(b)) over totient(b), b*totient(b), b^2*totient(b), ...
    """
    if b < 2:
        raise ValueError(f"alpha_P needs b >= 2, got {b}")
    if k < 0:
        raise ValueError(f"alpha_P needs k >= 0, got {k}")
    n = k - omega(b)
    if n < 0:
        return 0
    total, m = 0, totient(b)
    while m <= n:
        total += n // m
        m *= b
    return total


def factorial_P(k: int, bases) -> FactoredNumber:
    """Generalized factorial over the primes for an explicit base list (0 excluded)."""
    exps = {}
    for b in bases:
        if b == 0:
            raise ValueError("base 0 is not allowed in the primes fast path")
        if b == 1:
            continue  # 1^anything contributes 1
        e = alpha_P(k, b)
        if e:
            exps[b] = e
    return FactoredNumber(exps)


def lemma82_min(k: int, m: int) -> int:
    """Minimum of sum C(n_i, 2) over partitions of k into m nonnegative parts.

    Equals floor_sum(k, m); the brute-force partition oracle in the tests
    confirms both the value and the uniqueness of the equality profile.
    """
    if m < 1:
        raise ValueError(f"need m >= 1, got {m}")
    if k < 0:
        raise ValueError(f"need k >= 0, got {k}")
    return floor_sum(k, m)


def equality_profile(k: int, m: int) -> tuple[int, ...]:
    """The unique (up to order) minimising partition: parts q+1 and q, q = floor(k/m)."""
    if m < 1:
        raise ValueError(f"need m >= 1, got {m}")
    q = k // m
    big = k - m * q
    return tuple([q + 1] * big + [q] * (m - big))


def p_test_lower_bound(k: int, b: int) -> int:
    """Lower bound for summed exponent values of any primes test sequence up to k."""
    w = omega(b)
    if k < w:
        raise ValueError(f"need k >= omega(b) = {w}, got k = {k}")
    return sum(alpha_P(j, b) for j in range(w, k + 1))


def prime_witness_sequence(b: int, e: int, search_cap: int = 10**7) -> list[int]:
    """An explicit initial b-ordering of the primes, independent of the greedy engine.

    Starts with the distinct prime divisors of b in increasing order, then
    for each residue class mod b^e coprime to b (classes ascending) the
    smallest prime in that class.  Valid as a b-ordering for indices up to
    omega(b) + totient(b^e) - 1.
    """
    if b < 2 or e < 1:
        raise ValueError(f"need b >= 2 and e >= 1, got b={b}, e={e}")
    from .intsets import Primes

    primes = Primes()
    seq = sorted(prime_factors(b))
    mod = b**e
    for r in range(1, mod):
        if math.gcd(r, b) == 1:
            p = primes.pick_in_class(r, mod, cap=search_cap)
            seq.append(p)
    return seq
