"""Greedy b-ordering engine: exponent sequences, certification, majorization checks.

A b-ordering of S picks each next element to minimise the sum of base-b
valuations of its differences to all predecessors.  Over finite sets the
minimum is found by exhaustive scan.  Over the built-in infinite sets it
is certified by branch and bound on residue classes mod b^l: the number
of prefix elements congruent to a class (summed over levels) lower-bounds
the value of every member of that class, and any member of a subclass
avoiding all prefix residues at the next level attains its class bound
exactly.  Sets with unknown residue structure fall back to a windowed
scan whose results are marked window-limited rather than certified.
"""

from __future__ import annotations

import heapq
import random
from dataclasses import dataclass, field
from typing import Optional, Sequence

from .numerics import INF, ZERO, ExtNat, extnat_sum, ord_b
from .intsets import (
    IntegerSet,
    ResidueKind,
    canonical_key,
)


@dataclass(frozen=True)
class EngineConfig:
    """Knobs for the greedy engine and harness; defaults suit desk-scale runs."""

    level_max: int = 12       # residue branch-and-bound depth cap
    window: int = 1000        # |a| bound for uncertified windowed scans
    search_cap: int = 10**7   # cap for in-class element searches
    start_pool: int = 32      # candidate pool size for randomised starts
    series_cap: int = 16      # truncation cap for random series families


DEFAULT_CONFIG = EngineConfig()


class TieBreakPolicy:
    name = "abstract"

    def choose(self, candidates: Sequence[int]) -> int:
        raise NotImplementedError


class CanonicalTieBreak(TieBreakPolicy):
    """Deterministic default: smallest (|a|, nonnegative-first) minimizer."""

    name = "canonical"

    def choose(self, candidates: Sequence[int]) -> int:
        return min(candidates, key=canonical_key)


class RandomTieBreak(TieBreakPolicy):
    """Seeded random choice among minimizers; for well-definedness stress only."""

    def __init__(self, seed: int):
        self.name = f"random[seed={seed}]"
        self._rng = random.Random(seed)

    def choose(self, candidates: Sequence[int]) -> int:
        return self._rng.choice(sorted(candidates))


CANONICAL = CanonicalTieBreak()


@dataclass(frozen=True)
class TestSequence:
    """A finite sequence of elements drawn from S (repetitions allowed)."""

    __test__ = False  # domain type, despite the pytest-like name

    elements: tuple[int, ...]
    source_set: IntegerSet

    def __post_init__(self):
        for a in self.elements:
            if not self.source_set.contains(a):
                raise ValueError(f"{a} is not an element of {self.source_set.spec}")

    def __len__(self) -> int:
        return len(self.elements)


@dataclass(frozen=True)
class StepResult:
    element: int
    value: ExtNat
    certified: bool


@dataclass
class BOrdering:
    """A computed b-ordering with its exponent sequence and certification."""

    base: int
    elements: list[int]
    exponents: list[ExtNat]
    certified: list[bool]
    strategy: str

    @property
    def all_certified(self) -> bool:
        return all(self.certified)

    def recomputed_exponents(self) -> list[ExtNat]:
        """Exponents recomputed from the element list alone."""
        return evaluate_test_sequence(self.elements, self.base)


def _elems(seq) -> Sequence[int]:
    return seq.elements if isinstance(seq, TestSequence) else seq


def evaluate_test_sequence(seq, b: int) -> list[ExtNat]:
    """Additive exponent values of a test sequence: a_i -> sum_j ord_b(a_i - a_j)."""
    elements = _elems(seq)
    out = []
    for i, a in enumerate(elements):
        out.append(extnat_sum(ord_b(b, a - elements[j]) for j in range(i)))
    return out


def evaluate_multiplicative(seq, b: int) -> list[ExtNat]:
    """Multiplicative variant: ord_b of the product of differences.

    Always >= the additive value, with equality for prime b; the gap is
    what makes product-minimising orderings ill-defined for composite b.
    """
    if b < 2:
        raise ValueError(f"multiplicative evaluation needs b >= 2, got {b}")
    elements = _elems(seq)
    out = []
    for i, a in enumerate(elements):
        prod = 1
        for j in range(i):
            prod *= a - elements[j]
        out.append(ord_b(b, prod) if i else ZERO)
    return out


def pairwise_valuation_sum(seq, b: int) -> ExtNat:
    """Sum of ord_b over all pairwise differences; equals the sum of the exponents."""
    elements = _elems(seq)
    return extnat_sum(
        ord_b(b, elements[j] - elements[i])
        for i in range(len(elements))
        for j in range(i + 1, len(elements))
    )


def _exact_value(prefix: Sequence[int], b: int, a: int) -> ExtNat:
    return extnat_sum(ord_b(b, a - p) for p in prefix)


def _initial_element(S: IntegerSet, policy: TieBreakPolicy, config: EngineConfig) -> int:
    if isinstance(policy, RandomTieBreak):
        pool = []
        for a in S.iter_canonical():
            pool.append(a)
            if len(pool) >= config.start_pool:
                break
        return policy.choose(pool)
    return next(iter(S.iter_canonical()))


def _first_unused(S: IntegerSet, used: set[int]) -> Optional[int]:
    if S.cardinality.is_finite and len(used) >= S.cardinality.value:
        return None
    for a in S.iter_canonical():
        if a not in used:
            return a
    return None


def _scan_step(
    prefix: Sequence[int], b: int, S: IntegerSet, policy: TieBreakPolicy, candidates, certified: bool
) -> StepResult:
    """Exhaustive minimisation over an explicit candidate list."""
    best: ExtNat | None = None
    minimizers: list[int] = []
    for a in candidates:
        v = _exact_value(prefix, b, a)
        if best is None or v < best:
            best, minimizers = v, [a]
        elif v == best:
            minimizers.append(a)
    if best is None:
        raise ValueError("no candidates to minimise over")
    if not best.is_finite:
        # set exhausted: by convention later elements repeat the canonical first
        return StepResult(min(candidates, key=canonical_key), INF, certified)
    return StepResult(policy.choose(minimizers), best, certified or best == ZERO)


def _residue_branch_and_bound(prefix: Sequence[int], b: int, S: IntegerSet, config: EngineConfig):
    """Certified minimum of sum_j ord_b(a' - a_j) over infinite structured S.

    Returns (best_val, realized, finite_hits, value_certain, ties_complete):
    `realized` holds (value, modulus, residue) subclasses whose S-members
    all attain exactly `value`; `finite_hits` holds (value, element) pairs
    from residue classes meeting S in finitely many elements.
    """
    heap: list[tuple[int, int, int]] = [(0, 0, 0)]  # (bound, depth, residue mod b**depth)
    counts_cache: dict[int, dict[int, int]] = {}
    best_val: Optional[int] = None
    realized: list[tuple[int, int, int]] = []
    finite_hits: list[tuple[int, int]] = []
    value_certain = True
    ties_complete = True

    while heap:
        bound, depth, r = heapq.heappop(heap)
        if best_val is not None and bound > best_val:
            break
        if depth >= config.level_max:
            if best_val is not None and bound == best_val:
                # min value is settled; only the tie set may be incomplete
                ties_complete = False
                continue
            value_certain = False
            ties_complete = False
            break
        mod1 = b ** (depth + 1)
        if depth + 1 not in counts_cache:
            cnt: dict[int, int] = {}
            for a in prefix:
                x = a % mod1
                cnt[x] = cnt.get(x, 0) + 1
            counts_cache[depth + 1] = cnt
        counts = counts_cache[depth + 1]
        base_mod = b**depth
        for i in range(b):
            r1 = r + i * base_mod
            status = S.residue_status(r1, mod1)
            if not status.nonempty:
                continue
            c1 = counts.get(r1, 0)
            if status.kind is ResidueKind.FINITE_ONLY:
                for a in status.members:
                    v = _exact_value(prefix, b, a)
                    if v.is_finite:
                        finite_hits.append((v.value, a))
                        if best_val is None or v.value < best_val:
                            best_val = v.value
                continue
            if c1 == 0:
                # no prefix element shares this subclass, so every S-member
                # of it attains the parent bound exactly
                realized.append((bound, mod1, r1))
                if best_val is None or bound < best_val:
                    best_val = bound
            else:
                heapq.heappush(heap, (bound + c1, depth + 1, r1))

    return best_val, realized, finite_hits, value_certain, ties_complete


def _choose_minimizer(
    S: IntegerSet,
    best_val: int,
    realized,
    finite_hits,
    policy: TieBreakPolicy,
    config: EngineConfig,
) -> int:
    pool = [a for v, a in finite_hits if v == best_val]
    for v, mod, r in realized:
        if v == best_val:
            pick = S.pick_in_class(r, mod, cap=config.search_cap)
            if pick is not None:
                pool.append(pick)
    if not pool:
        raise RuntimeError("internal error: certified minimum without a witness")
    return policy.choose(pool)


def greedy_step(
    prefix: Sequence[int],
    b: int,
    S: IntegerSet,
    policy: TieBreakPolicy = CANONICAL,
    config: EngineConfig = DEFAULT_CONFIG,
) -> StepResult:
    """One greedy extension step; certified means provably minimal over all of S."""
    if b < 0:
        raise ValueError(f"base must be >= 0, got {b}")
    prefix = list(_elems(prefix))
    if not prefix:
        return StepResult(_initial_element(S, policy, config), ZERO, True)

    if b == 0:
        nxt = _first_unused(S, set(prefix))
        if nxt is None:
            return StepResult(next(iter(S.iter_canonical())), INF, True)
        return StepResult(nxt, ZERO, True)
    if b == 1:
        return StepResult(next(iter(S.iter_canonical())), INF, True)

    if S.cardinality.is_finite:
        return _scan_step(prefix, b, S, policy, list(S.iter_canonical()), certified=True)

    probe = S.residue_status(0, b)
    if probe.kind is ResidueKind.UNKNOWN:
        # no residue knowledge: scan the set's declared window; certified
        # only on an exact zero
        window = getattr(S, "enumeration_cap", config.window)
        candidates = S.elements_up_to(window)
        if not candidates:
            raise ValueError(f"set {S.spec} has no elements within the scan window")
        return _scan_step(prefix, b, S, policy, candidates, certified=False)

    best_val, realized, finite_hits, value_certain, ties_complete = _residue_branch_and_bound(
        prefix, b, S, config
    )
    if best_val is None or not value_certain:
        candidates = S.elements_up_to(config.window)
        return _scan_step(prefix, b, S, policy, candidates, certified=False)
    if not ties_complete and isinstance(policy, CanonicalTieBreak):
        # value is certified but the tie set may be incomplete at the level
        # cap; the choice below is still a true minimizer
        pass
    element = _choose_minimizer(S, best_val, realized, finite_hits, policy, config)
    return StepResult(element, ExtNat(best_val), True)


def b_ordering(
    S: IntegerSet,
    b: int,
    k: int,
    policy: TieBreakPolicy = CANONICAL,
    start: Optional[int] = None,
    config: EngineConfig = DEFAULT_CONFIG,
) -> BOrdering:
    """A b-ordering of S of length k+1 with exponents and step certificates."""
    if k < 0:
        raise ValueError(f"k must be >= 0, got {k}")
    elements: list[int] = []
    exponents: list[ExtNat] = []
    certified: list[bool] = []
    for i in range(k + 1):
        if i == 0 and start is not None:
            if not S.contains(start):
                raise ValueError(f"start element {start} is not in {S.spec}")
            step = StepResult(start, ZERO, True)
        else:
            step = greedy_step(elements, b, S, policy, config)
        elements.append(step.element)
        exponents.append(step.value)
        certified.append(step.certified)
    return BOrdering(b, elements, exponents, certified, policy.name)


@dataclass
class ExponentSequence:
    """The well-defined invariants alpha_0..alpha_k of (S, b).

    `window_limited` flags values produced by an uncertified windowed
    scan; such values are never silently passed off as invariants.
    """

    set_spec: str
    base: int
    values: list[ExtNat]
    certified_steps: list[bool]
    source: str

    @property
    def certified(self) -> bool:
        return all(self.certified_steps)

    @property
    def window_limited(self) -> bool:
        return not self.certified


def exponent_sequence(
    S: IntegerSet,
    b: int,
    k: int,
    force_greedy: bool = False,
    config: EngineConfig = DEFAULT_CONFIG,
) -> ExponentSequence:
    """Invariant exponents for (S, b), via closed forms where available."""
    if b < 0:
        raise ValueError(f"base must be >= 0, got {b}")
    if k < 0:
        raise ValueError(f"k must be >= 0, got {k}")

    all_ok = [True] * (k + 1)
    if b == 0:
        card = S.cardinality
        values = [ZERO if (not card.is_finite or i < card.value) else INF for i in range(k + 1)]
        return ExponentSequence(S.spec, b, values, all_ok, "degenerate-base")
    if b == 1:
        values = [ZERO] + [INF] * k
        return ExponentSequence(S.spec, b, values, all_ok, "degenerate-base")

    if not force_greedy:
        from . import closedforms
        from .intsets import AllIntegers, NonnegativeIntegers, Primes

        if isinstance(S, (AllIntegers, NonnegativeIntegers)):
            values = [ExtNat(closedforms.alpha_Z(i, b)) for i in range(k + 1)]
            return ExponentSequence(S.spec, b, values, all_ok, "closed-form")
        if isinstance(S, Primes):
            values = [ExtNat(closedforms.alpha_P(i, b)) for i in range(k + 1)]
            return ExponentSequence(S.spec, b, values, all_ok, "closed-form")

    run = b_ordering(S, b, k, CANONICAL, config=config)
    return ExponentSequence(S.spec, b, run.exponents, run.certified, "greedy")


def _partial_sums(values: Sequence[ExtNat]) -> list[ExtNat]:
    sums: list[ExtNat] = []
    acc: ExtNat = ZERO
    for v in values:
        acc = acc + v
        sums.append(acc)
    return sums


@dataclass
class MajorizationReport:
    """Prefix-sum dominance of a test sequence over the set invariants."""

    set_spec: str
    base: int
    sequence: tuple[int, ...]
    sequence_values: list[ExtNat]
    invariant_values: list[ExtNat]
    equality_positions: list[int] = field(default_factory=list)
    violations: list[int] = field(default_factory=list)
    window_limited: bool = False

    @property
    def ok(self) -> bool:
        return not self.violations


def check_majorization(
    S: IntegerSet,
    b: int,
    seq,
    config: EngineConfig = DEFAULT_CONFIG,
) -> MajorizationReport:
    """Check that prefix sums of seq's exponents dominate the invariants'.

    A violation would falsify the implementation, not the theorem, so the
    report carries the offending prefix lengths explicitly.
    """
    if b < 2:
        raise ValueError(f"majorization check needs b >= 2, got {b}")
    elements = tuple(_elems(seq))
    for a in elements:
        if not S.contains(a):
            raise ValueError(f"sequence element {a} is not in {S.spec}")
    seq_values = evaluate_test_sequence(elements, b)
    inv = exponent_sequence(S, b, max(len(elements) - 1, 0), config=config)
    report = MajorizationReport(
        S.spec, b, elements, seq_values, inv.values, window_limited=inv.window_limited
    )
    seq_sums = _partial_sums(seq_values)
    inv_sums = _partial_sums(inv.values)
    for m in range(len(elements)):
        if seq_sums[m] == inv_sums[m]:
            report.equality_positions.append(m)
        elif seq_sums[m] < inv_sums[m]:
            report.violations.append(m)
    return report
