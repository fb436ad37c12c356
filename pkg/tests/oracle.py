"""Independent brute-force oracles shared by the test modules.

These deliberately avoid the library's greedy engine and closed forms:
valuations are recomputed by repeated division, minima by exhaustive
scans, and orderings by exploring every greedy branch.
"""

from __future__ import annotations

from itertools import combinations_with_replacement

INFINITY = None  # oracle-side marker for an infinite valuation


def ord_oracle(b: int, a: int):
    """Valuation by repeated division; None encodes infinity."""
    if b == 0:
        return INFINITY if a == 0 else 0
    if b == 1:
        return INFINITY
    if a == 0:
        return INFINITY
    k = 0
    while a % b == 0:
        a //= b
        k += 1
    return k


def step_value(prefix, b, a):
    """Sum of valuations of differences, or None for infinity."""
    total = 0
    for p in prefix:
        o = ord_oracle(b, a - p)
        if o is INFINITY:
            return INFINITY
        total += o
    return total


def all_greedy_exponent_tuples(values, b, k):
    """Exponent tuples over every greedy ordering of a finite set.

    Explores every start element and every minimizer branch; the result
    set having size one is exactly the well-definedness statement.
    """
    results: set[tuple] = set()

    def rec(prefix, exps):
        if len(prefix) == k + 1:
            results.add(tuple(exps))
            return
        vals = {a: step_value(prefix, b, a) for a in values}
        finite = {a: v for a, v in vals.items() if v is not INFINITY}
        if finite:
            m = min(finite.values())
            for a, v in finite.items():
                if v == m:
                    rec(prefix + [a], exps + [m])
        else:
            rec(prefix + [values[0]], exps + [INFINITY])

    for a0 in values:
        rec([a0], [0])
    return results


def windowed_min(prefix, b, candidates):
    """Exhaustive minimum of the step value over an explicit window."""
    best = INFINITY
    minimizers = []
    for a in candidates:
        v = step_value(prefix, b, a)
        if v is INFINITY:
            continue
        if best is INFINITY or v < best:
            best, minimizers = v, [a]
        elif v == best:
            minimizers.append(a)
    return best, minimizers


def partition_minimum(k: int, m: int):
    """Minimum of sum C(n_i, 2) over m-part partitions of k, with minimizers."""
    best, best_parts = None, []
    for parts in combinations_with_replacement(range(k + 1), m):
        if sum(parts) != k:
            continue
        s = sum(p * (p - 1) // 2 for p in parts)
        if best is None or s < best:
            best, best_parts = s, [parts]
        elif s == best:
            best_parts.append(parts)
    return best, best_parts
