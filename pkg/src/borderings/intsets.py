"""Subsets of Z with membership, canonical enumeration and residue-class knowledge.

The canonical element order used everywhere downstream is (|a|, nonnegative
before negative).  Residue-class answers are exact for the built-in set
variants; custom predicate sets answer Unknown and force windowed (and
therefore uncertified) greedy searches.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from typing import Callable, Iterator, Optional

from .numerics import INF, ExtNat, is_prime, primes_up_to


class SetSpecError(ValueError):
    """Raised for malformed set-spec strings or invalid set parameters."""


class SearchExhausted(RuntimeError):
    """An element search hit its configured cap without an answer."""


def canonical_key(a: int) -> tuple[int, int]:
    """Sort key for the canonical order: by |a|, nonnegative first."""
    return (abs(a), 0 if a >= 0 else 1)


class ResidueKind(Enum):
    EMPTY = "empty"
    FINITE_ONLY = "finite_only"
    INFINITE = "infinite"
    UNKNOWN = "unknown"


@dataclass(frozen=True)
class ResidueStatus:
    """What a set knows about its intersection with a residue class r mod m."""

    kind: ResidueKind
    members: tuple[int, ...] = ()

    @classmethod
    def empty(cls) -> "ResidueStatus":
        return cls(ResidueKind.EMPTY)

    @classmethod
    def finite(cls, members) -> "ResidueStatus":
        members = tuple(sorted(members, key=canonical_key))
        return cls(ResidueKind.FINITE_ONLY, members) if members else cls(ResidueKind.EMPTY)

    @classmethod
    def infinite(cls) -> "ResidueStatus":
        return cls(ResidueKind.INFINITE)

    @classmethod
    def unknown(cls) -> "ResidueStatus":
        return cls(ResidueKind.UNKNOWN)

    @property
    def nonempty(self) -> bool:
        return self.kind in (ResidueKind.FINITE_ONLY, ResidueKind.INFINITE)


class IntegerSet:
    """Base class for subsets of Z.

    Subclasses provide exact membership, bounded enumeration in canonical
    order, residue-class status for any modulus m >= 2, and a smallest-
    element search within a residue class.
    """

    spec: str  # the set-spec string this set round-trips to

    @property
    def cardinality(self) -> ExtNat:
        return INF

    def contains(self, a: int) -> bool:
        raise NotImplementedError

    def elements_up_to(self, bound: int) -> list[int]:
        """All members with |a| <= bound, in canonical order."""
        raise NotImplementedError

    def iter_canonical(self) -> Iterator[int]:
        """Members in canonical order; unbounded for infinite sets."""
        bound, seen = 16, 0
        while True:
            elems = self.elements_up_to(bound)
            yield from elems[seen:]
            if not self.cardinality.is_finite or len(elems) < int(self.cardinality.value):
                seen = len(elems)
                bound *= 2
            else:
                return

    def residue_status(self, r: int, m: int) -> ResidueStatus:
        raise NotImplementedError

    def pick_in_class(self, r: int, m: int, exclude=frozenset(), cap: int = 10**7) -> Optional[int]:
        """Smallest member (canonical order) congruent to r mod m, skipping `exclude`.

        Returns None when the class is provably exhausted; raises
        SearchExhausted if an infinite class exceeds the search cap.
        """
        raise NotImplementedError

    def __repr__(self) -> str:
        return f"{type(self).__name__}({self.spec!r})"


def _check_modulus(r: int, m: int) -> int:
    if m < 2:
        raise ValueError(f"residue modulus must be >= 2, got {m}")
    return r % m


class ExplicitFinite(IntegerSet):
    def __init__(self, values, spec: str | None = None):
        vals = sorted(set(int(v) for v in values))
        if not vals:
            raise SetSpecError("explicit set must be nonempty")
        self.values = tuple(vals)
        self._members = frozenset(vals)
        self._canonical = tuple(sorted(vals, key=canonical_key))
        self.spec = spec if spec is not None else "list:" + ",".join(map(str, vals))

    @property
    def cardinality(self) -> ExtNat:
        return ExtNat(len(self.values))

    def contains(self, a: int) -> bool:
        return a in self._members

    def elements_up_to(self, bound: int) -> list[int]:
        return [a for a in self._canonical if abs(a) <= bound]

    def iter_canonical(self) -> Iterator[int]:
        return iter(self._canonical)

    def residue_status(self, r: int, m: int) -> ResidueStatus:
        r = _check_modulus(r, m)
        return ResidueStatus.finite(a for a in self.values if a % m == r)

    def pick_in_class(self, r, m, exclude=frozenset(), cap=10**7):
        r = _check_modulus(r, m)
        for a in self._canonical:
            if a % m == r and a not in exclude:
                return a
        return None


class AllIntegers(IntegerSet):
    spec = "Z"

    def contains(self, a: int) -> bool:
        return True

    def elements_up_to(self, bound: int) -> list[int]:
        out = [0]
        for n in range(1, bound + 1):
            out.extend((n, -n))
        return out if bound >= 0 else []

    def iter_canonical(self) -> Iterator[int]:
        yield 0
        n = 1
        while True:
            yield n
            yield -n
            n += 1

    def residue_status(self, r: int, m: int) -> ResidueStatus:
        _check_modulus(r, m)
        return ResidueStatus.infinite()

    def pick_in_class(self, r, m, exclude=frozenset(), cap=10**7):
        r = _check_modulus(r, m)
        pos, neg = r, r - m  # the two arms of the class, merged by canonical key
        while True:
            if canonical_key(pos) <= canonical_key(neg):
                cand, pos = pos, pos + m
            else:
                cand, neg = neg, neg - m
            if cand not in exclude:
                return cand
            if abs(cand) > cap:
                raise SearchExhausted(f"no element of Z in class {r} mod {m} below cap {cap}")


class NonnegativeIntegers(IntegerSet):
    spec = "N"

    def contains(self, a: int) -> bool:
        return a >= 0

    def elements_up_to(self, bound: int) -> list[int]:
        return list(range(0, bound + 1))

    def iter_canonical(self) -> Iterator[int]:
        n = 0
        while True:
            yield n
            n += 1

    def residue_status(self, r: int, m: int) -> ResidueStatus:
        _check_modulus(r, m)
        return ResidueStatus.infinite()

    def pick_in_class(self, r, m, exclude=frozenset(), cap=10**7):
        r = _check_modulus(r, m)
        x = r
        while x <= cap:
            if x not in exclude:
                return x
            x += m
        raise SearchExhausted(f"no element of N in class {r} mod {m} below cap {cap}")


class _PrimeCache:
    """Grow-only sieve shared by all Primes instances."""

    def __init__(self):
        self.limit = 1 << 10
        self.primes = primes_up_to(self.limit)

    def extend_to(self, limit: int) -> None:
        if limit > self.limit:
            self.limit = max(limit, self.limit * 2)
            self.primes = primes_up_to(self.limit)

    def iter_primes(self) -> Iterator[int]:
        i = 0
        while True:
            if i >= len(self.primes):
                self.extend_to(self.limit * 2)
            yield self.primes[i]
            i += 1


class Primes(IntegerSet):
    spec = "P"
    _cache = _PrimeCache()

    def contains(self, a: int) -> bool:
        return is_prime(a)

    def elements_up_to(self, bound: int) -> list[int]:
        if bound < 2:
            return []
        self._cache.extend_to(bound)
        ps = self._cache.primes
        lo, hi = 0, len(ps)
        while lo < hi:
            mid = (lo + hi) // 2
            if ps[mid] <= bound:
                lo = mid + 1
            else:
                hi = mid
        return ps[:lo]

    def iter_canonical(self) -> Iterator[int]:
        return self._cache.iter_primes()

    def residue_status(self, r: int, m: int) -> ResidueStatus:
        r = _check_modulus(r, m)
        g = math.gcd(r, m)
        if g == 1:
            # Dirichlet: infinitely many primes in every class coprime to m
            return ResidueStatus.infinite()
        # a prime p = r (mod m) must divide g, hence equal g
        if is_prime(g) and g % m == r:
            return ResidueStatus.finite([g])
        return ResidueStatus.empty()

    def pick_in_class(self, r, m, exclude=frozenset(), cap=10**7):
        r = _check_modulus(r, m)
        status = self.residue_status(r, m)
        if status.kind is ResidueKind.EMPTY:
            return None
        if status.kind is ResidueKind.FINITE_ONLY:
            for p in status.members:
                if p not in exclude:
                    return p
            return None
        x = r if r > 1 else r + m
        while x <= cap:
            if x not in exclude and is_prime(x):
                return x
            x += m
        raise SearchExhausted(f"no prime in class {r} mod {m} below cap {cap}")


class ArithmeticProgression(IntegerSet):
    """The one-sided progression first, first+step, first+2*step, ..."""

    def __init__(self, first: int, step: int):
        if step < 1:
            raise SetSpecError(f"progression step must be positive, got {step}")
        self.first = first
        self.step = step
        self.spec = f"ap:{first},{step}"

    def contains(self, a: int) -> bool:
        return a >= self.first and (a - self.first) % self.step == 0

    def elements_up_to(self, bound: int) -> list[int]:
        out = []
        x = self.first
        while x <= bound:
            if abs(x) <= bound:
                out.append(x)
            x += self.step
        return sorted(out, key=canonical_key)

    def iter_canonical(self) -> Iterator[int]:
        if self.first >= 0:
            x = self.first
            while True:
                yield x
                x += self.step
        else:
            yield from super().iter_canonical()

    def residue_status(self, r: int, m: int) -> ResidueStatus:
        r = _check_modulus(r, m)
        g = math.gcd(self.step, m)
        return ResidueStatus.infinite() if (r - self.first) % g == 0 else ResidueStatus.empty()

    def pick_in_class(self, r, m, exclude=frozenset(), cap=10**7):
        r = _check_modulus(r, m)
        g = math.gcd(self.step, m)
        if (r - self.first) % g != 0:
            return None
        # first + i*step = r (mod m)  <=>  i = i0 (mod m/g)
        mg = m // g
        i0 = ((r - self.first) // g * pow(self.step // g, -1, mg)) % mg if mg > 1 else 0
        best = None
        i = i0
        while True:
            x = self.first + i * self.step
            if x not in exclude:
                if best is None or canonical_key(x) < canonical_key(best):
                    best = x
                if x > 0:
                    # canonical key only improves for negatives beyond here
                    return best
            i += mg
            if abs(self.first + i * self.step) > cap:
                if best is not None:
                    return best
                raise SearchExhausted(
                    f"no element of {self.spec} in class {r} mod {m} below cap {cap}"
                )


class CustomPredicate(IntegerSet):
    """A user-supplied membership test with a declared enumeration cap.

    Residue-class structure is unknown, so greedy searches over this set
    are window-limited and never certified.
    """

    def __init__(
        self,
        predicate: Callable[[int], bool],
        enumeration_cap: int,
        name: str = "custom",
        cardinality: ExtNat = INF,
    ):
        self.predicate = predicate
        self.enumeration_cap = enumeration_cap
        self.spec = name
        self._cardinality = cardinality

    @property
    def cardinality(self) -> ExtNat:
        return self._cardinality

    def contains(self, a: int) -> bool:
        return bool(self.predicate(a))

    def elements_up_to(self, bound: int) -> list[int]:
        if bound > self.enumeration_cap:
            raise SetSpecError(
                f"bound {bound} exceeds declared enumeration cap {self.enumeration_cap}"
            )
        out = [a for a in range(-bound, bound + 1) if self.predicate(a)]
        return sorted(out, key=canonical_key)

    def iter_canonical(self) -> Iterator[int]:
        yield from self.elements_up_to(self.enumeration_cap)

    def residue_status(self, r: int, m: int) -> ResidueStatus:
        _check_modulus(r, m)
        return ResidueStatus.unknown()

    def pick_in_class(self, r, m, exclude=frozenset(), cap=10**7):
        r = _check_modulus(r, m)
        for a in self.elements_up_to(self.enumeration_cap):
            if a % m == r and a not in exclude:
                return a
        return None


def parse_set_spec(spec: str) -> IntegerSet:
    """Parse the set-spec grammar used by the CLI and config files.

    Grammar: ``Z`` | ``N`` | ``P`` | ``ap:<first>,<step>`` |
    ``list:<c1>,<c2>,...`` | ``file:<path>`` | ``range:<lo>..<hi>``.
    """
    spec = spec.strip()
    if spec == "Z":
        return AllIntegers()
    if spec == "N":
        return NonnegativeIntegers()
    if spec == "P":
        return Primes()
    if spec.startswith("ap:"):
        body = spec[3:]
        try:
            first_s, step_s = body.split(",")
            return ArithmeticProgression(int(first_s), int(step_s))
        except (ValueError, TypeError) as e:
            raise SetSpecError(f"bad progression spec {spec!r}: {e}") from None
    if spec.startswith("list:"):
        body = spec[5:]
        try:
            values = [int(tok) for tok in body.split(",") if tok.strip() != ""]
        except ValueError as e:
            raise SetSpecError(f"bad list spec {spec!r}: {e}") from None
        if not values:
            raise SetSpecError(f"empty list spec {spec!r}")
        return ExplicitFinite(values)
    if spec.startswith("file:"):
        path = spec[5:]
        try:
            with open(path) as fh:
                values = [int(line) for line in fh if line.strip()]
        except OSError as e:
            raise SetSpecError(f"cannot read set file {path!r}: {e}") from None
        except ValueError as e:
            raise SetSpecError(f"bad integer in set file {path!r}: {e}") from None
        if not values:
            raise SetSpecError(f"set file {path!r} is empty")
        return ExplicitFinite(values, spec=spec)
    if spec.startswith("range:"):
        body = spec[6:]
        if ".." not in body:
            raise SetSpecError(f"bad range spec {spec!r}: expected lo..hi")
        lo_s, hi_s = body.split("..", 1)
        try:
            lo, hi = int(lo_s), int(hi_s)
        except ValueError as e:
            raise SetSpecError(f"bad range spec {spec!r}: {e}") from None
        if hi < lo:
            raise SetSpecError(f"bad range spec {spec!r}: hi < lo")
        return ExplicitFinite(range(lo, hi + 1), spec=spec)
    raise SetSpecError(f"unrecognised set spec {spec!r}")
