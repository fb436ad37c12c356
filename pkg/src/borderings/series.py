"""Truncated formal power series over exact rationals, t-orderings, and digit maps.

Everything is truncated at a degree cap; a vanishing truncation never
pretends to be exact.  Orders below the cap are reported exactly, orders
at or beyond it only as lower bounds, and any comparison whose outcome
truncation cannot justify raises CapError instead of guessing.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

from .numerics import ExtNat, ord_b
from .numerics import digits as base_digits


class CapError(ArithmeticError):
    """A comparison or equality check needed exactness beyond the cap."""


@dataclass(frozen=True)
class TOrderValue:
    """An ord_t result (or sum of them) under truncation.

    exact=True means the value is exactly `floor`; otherwise only
    `floor` <= value is known (the coefficients below the cap vanished).
    """

    floor: int
    exact: bool

    @classmethod
    def of(cls, v: int) -> "TOrderValue":
        return cls(v, True)

    @classmethod
    def at_least(cls, v: int) -> "TOrderValue":
        return cls(v, False)

    def __add__(self, other: "TOrderValue") -> "TOrderValue":
        return TOrderValue(self.floor + other.floor, self.exact and other.exact)

    def must_equal(self, v: int) -> bool:
        """Exact equality with an integer; raises if truncation hides the answer."""
        if self.exact:
            return self.floor == v
        if v < self.floor:
            return False
        raise CapError(f"order known only as >= {self.floor}; cannot compare with {v}")

    def must_le(self, v: int) -> bool:
        if self.exact:
            return self.floor <= v
        if self.floor > v:
            return False
        raise CapError(f"order known only as >= {self.floor}; cannot bound by {v}")

    def render(self) -> str:
        return str(self.floor) if self.exact else f">={self.floor}"


class TruncatedSeries:
    """A power series known exactly up to (not including) degree cap."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Sequence):
        cs = tuple(Fraction(c) for c in coeffs)
        if not cs:
            raise ValueError("a truncated series needs a positive cap")
        object.__setattr__(self, "coeffs", cs)

    @classmethod
    def zero(cls, cap: int) -> "TruncatedSeries":
        return cls([Fraction(0)] * cap)

    @classmethod
    def constant(cls, c, cap: int) -> "TruncatedSeries":
        return cls([Fraction(c)] + [Fraction(0)] * (cap - 1))

    @property
    def cap(self) -> int:
        return len(self.coeffs)

    def truncate(self, cap: int) -> "TruncatedSeries":
        if cap > self.cap:
            raise ValueError(f"cannot extend cap {self.cap} to {cap}")
        return TruncatedSeries(self.coeffs[:cap])

    def _align(self, other: "TruncatedSeries") -> int:
        return min(self.cap, other.cap)

    def __add__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        n = self._align(other)
        return TruncatedSeries([self.coeffs[i] + other.coeffs[i] for i in range(n)])

    def __sub__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        n = self._align(other)
        return TruncatedSeries([self.coeffs[i] - other.coeffs[i] for i in range(n)])

    def __neg__(self) -> "TruncatedSeries":
        return TruncatedSeries([-c for c in self.coeffs])

    def __mul__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        n = self._align(other)
        out = [Fraction(0)] * n
        for i, a in enumerate(self.coeffs[:n]):
            if a == 0:
                continue
            for j in range(n - i):
                b = other.coeffs[j]
                if b != 0:
                    out[i + j] += a * b
        return TruncatedSeries(out)

    def scale(self, c) -> "TruncatedSeries":
        c = Fraction(c)
        return TruncatedSeries([c * a for a in self.coeffs])

    def __eq__(self, other) -> bool:
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def ord_t(self) -> TOrderValue:
        for i, c in enumerate(self.coeffs):
            if c != 0:
                return TOrderValue.of(i)
        return TOrderValue.at_least(self.cap)

    def __repr__(self) -> str:
        terms = [f"{c}*t^{i}" for i, c in enumerate(self.coeffs) if c != 0]
        body = " + ".join(terms) if terms else "0"
        return f"TruncatedSeries({body}; cap={self.cap})"


def ord_t(f: TruncatedSeries) -> TOrderValue:
    """Index of the first nonzero coefficient, or an at-least-cap marker."""
    return f.ord_t()


def phi_b(a: int, b: int, cap: int) -> TruncatedSeries:
    """The base-b digit map: a -> sum of d_k t^k with d_k the digits of a.

    Preserves congruences: ord_t(phi_b(a1) - phi_b(a2)) = ord_b(a1 - a2).
    Not a ring map, but it carries b-orderings to t-orderings.
    """
    return TruncatedSeries(base_digits(a, b, cap).digits)


def congruence_check(b: int, a1: int, a2: int, cap: int) -> bool:
    """Verify ord_t(phi_b(a1) - phi_b(a2)) == ord_b(a1 - a2) at this cap."""
    lhs = (phi_b(a1, b, cap) - phi_b(a2, b, cap)).ord_t()
    rhs: ExtNat = ord_b(b, a1 - a2)
    if not rhs.is_finite or rhs.value >= cap:
        return not lhs.exact  # both sides capped-infinite
    return lhs.exact and lhs.floor == rhs.value


@dataclass(frozen=True)
class SeriesPolynomial:
    """A polynomial in x with truncated-series coefficients (index = x power)."""

    coeffs: tuple[TruncatedSeries, ...]

    @property
    def degree(self) -> int:
        for i in range(len(self.coeffs) - 1, -1, -1):
            if self.coeffs[i].ord_t().exact:
                return i
        return 0

    def is_t_primitive(self) -> bool:
        return any(c.ord_t() == TOrderValue.of(0) for c in self.coeffs)


def build_qk(prefix: Sequence[TruncatedSeries], cap: Optional[int] = None) -> SeriesPolynomial:
    """The monic product of (x - f_j) over the prefix; the empty product is 1."""
    if cap is None:
        cap = min((f.cap for f in prefix), default=8)
    one = TruncatedSeries.constant(1, cap)
    coeffs: list[TruncatedSeries] = [one]
    for f in prefix:
        f = f.truncate(cap)
        nxt = [TruncatedSeries.zero(cap) for _ in range(len(coeffs) + 1)]
        for i, c in enumerate(coeffs):
            nxt[i + 1] = nxt[i + 1] + c
            nxt[i] = nxt[i] - c * f
        coeffs = nxt
    return SeriesPolynomial(tuple(coeffs))


def eval_poly(p: SeriesPolynomial, f: TruncatedSeries) -> TruncatedSeries:
    """Exact truncated evaluation by Horner's rule."""
    cap = min(f.cap, min(c.cap for c in p.coeffs))
    f = f.truncate(cap)
    acc = TruncatedSeries.zero(cap)
    for c in reversed(p.coeffs):
        acc = acc * f + c.truncate(cap)
    return acc


def is_t_primitive(p: SeriesPolynomial) -> bool:
    """True iff some x-coefficient has a nonzero constant term."""
    return p.is_t_primitive()


class SeriesTieBreak:
    """Tie-break over candidate indices into U (deterministic default: lowest)."""

    name = "first"

    def choose(self, indices: Sequence[int]) -> int:
        return min(indices)


class RandomSeriesTieBreak(SeriesTieBreak):
    def __init__(self, seed: int):
        self.name = f"random[seed={seed}]"
        self._rng = random.Random(seed)

    def choose(self, indices: Sequence[int]) -> int:
        return self._rng.choice(sorted(indices))


FIRST = SeriesTieBreak()


@dataclass
class TOrdering:
    """A greedy t-ordering of a finite set of series with its exponent values."""

    indices: list[int]
    elements: list[TruncatedSeries]
    exponents: list[TOrderValue]
    strategy: str


def t_ordering(
    U: Sequence[TruncatedSeries],
    k: int,
    policy: SeriesTieBreak = FIRST,
    start: Optional[int] = None,
) -> TOrdering:
    """Greedy ordering of U minimising summed ord_t of differences at each step.

    Raises CapError if truncation leaves a minimisation ambiguous; choose
    the cap above the largest exponent the run can attain.
    """
    if not U:
        raise ValueError("U must be nonempty")
    if k < 0:
        raise ValueError(f"k must be >= 0, got {k}")
    indices: list[int] = []
    exponents: list[TOrderValue] = []
    for step in range(k + 1):
        if step == 0:
            idx = start if start is not None else policy.choose(range(len(U)))
            if not 0 <= idx < len(U):
                raise ValueError(f"start index {idx} out of range")
            indices.append(idx)
            exponents.append(TOrderValue.of(0))
            continue
        sums: list[TOrderValue] = []
        for cand in range(len(U)):
            total = TOrderValue.of(0)
            for j in indices:
                total = total + (U[cand] - U[j]).ord_t()
            sums.append(total)
        exact_vals = [s.floor for s in sums if s.exact]
        if exact_vals:
            vmin = min(exact_vals)
            for s in sums:
                if not s.exact and s.floor < vmin:
                    raise CapError(
                        f"candidate order >= {s.floor} is unresolved below exact minimum {vmin}"
                    )
            minimizers = [i for i, s in enumerate(sums) if s.exact and s.floor == vmin]
            chosen = policy.choose(minimizers)
            indices.append(chosen)
            exponents.append(sums[chosen])
        else:
            # every candidate is capped: record the chosen at-least marker
            chosen = policy.choose(range(len(U)))
            indices.append(chosen)
            exponents.append(sums[chosen])
    return TOrdering(indices, [U[i] for i in indices], exponents, policy.name)


def random_primitive_polynomial(
    rng: random.Random,
    degree: int,
    cap: int,
    coeff_bound: int = 3,
    t_degree: int = 3,
) -> SeriesPolynomial:
    """A random t-primitive polynomial of exact x-degree `degree`.

    Coefficients are integer polynomials in t with entries in
    [-coeff_bound, coeff_bound] and t-degree <= t_degree, rejection
    sampled until the result is primitive with a nonzero leading
    coefficient.
    """
    while True:
        coeffs = []
        for _ in range(degree + 1):
            cs = [rng.randint(-coeff_bound, coeff_bound) for _ in range(t_degree + 1)]
            cs = cs[:cap] + [0] * max(0, cap - len(cs))
            coeffs.append(TruncatedSeries(cs))
        p = SeriesPolynomial(tuple(coeffs))
        if coeffs[degree].ord_t().exact and p.is_t_primitive():
            return p


@dataclass
class MaxMinReport:
    """Both checkable directions of the max-min characterisation at index k."""

    k: int
    alpha_k: int
    witness_min: int
    witness_equal: bool
    samples: int
    sample_bounds: list[int]
    sample_violations: int

    @property
    def ok(self) -> bool:
        return self.witness_equal and self.sample_violations == 0


def _min_order_over(U: Sequence[TruncatedSeries], p: SeriesPolynomial) -> TOrderValue:
    best: Optional[TOrderValue] = None
    floors_unresolved: list[int] = []
    for f in U:
        o = eval_poly(p, f).ord_t()
        if o.exact:
            if best is None or o.floor < best.floor:
                best = o
        else:
            floors_unresolved.append(o.floor)
    if best is None:
        return TOrderValue.at_least(min(floors_unresolved))
    if any(fl < best.floor for fl in floors_unresolved):
        raise CapError(f"minimum ambiguous: unresolved order below exact {best.floor}")
    return best


def maxmin_check(
    U: Sequence[TruncatedSeries],
    k: int,
    samples: int = 20,
    seed: int = 0,
) -> MaxMinReport:
    """Verify the witness equality and sampled upper bounds for alpha_k(U).

    (a) the monic product over a t-ordering prefix attains alpha_k(U) as
    its minimum order over U; (b) every sampled primitive polynomial of
    degree k has minimum order <= alpha_k(U).  The full maximisation over
    all primitive polynomials is not machine-checkable and not attempted.
    """
    run = t_ordering(U, k)
    alpha = run.exponents[k]
    if not alpha.exact:
        raise CapError(f"alpha_{k}(U) not resolved below the cap (>= {alpha.floor})")
    qk = build_qk(run.elements[:k])
    witness = _min_order_over(U, qk)
    witness_equal = witness.must_equal(alpha.floor)

    rng = random.Random(seed)
    cap = min(f.cap for f in U)
    bounds: list[int] = []
    violations = 0
    for _ in range(samples):
        p = random_primitive_polynomial(rng, k, cap)
        m = _min_order_over(U, p)
        if not m.must_le(alpha.floor):
            violations += 1
        bounds.append(m.floor)
    return MaxMinReport(
        k=k,
        alpha_k=alpha.floor,
        witness_min=witness.floor,
        witness_equal=witness_equal,
        samples=samples,
        sample_bounds=bounds,
        sample_violations=violations,
    )
