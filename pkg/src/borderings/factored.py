"""Factored numbers: formal products of bases b >= 0 with extended-natural exponents.

The value semantics follow the conventions for degenerate bases:
b^inf = 0 for b >= 2 and for b = 0, while 1^inf = 1, and b^0 = 1 for
every b including 0^0 = 1.  Zero-valued numbers normalise to the single
marker 0^inf so that formatting and parsing round-trip.
"""

from __future__ import annotations

from dataclasses import dataclass

from .numerics import INF, ExtNat, is_prime, prime_factors, primes_up_to, totient, omega


class BaseSetError(ValueError):
    """Raised when a base-set spec cannot be resolved to a finite list."""


class FactoredNumber:
    """An immutable map base -> exponent, normalised on construction."""

    __slots__ = ("_exp",)

    def __init__(self, exponents=None):
        norm: dict[int, ExtNat] = {}
        zero = False
        for b, e in (exponents or {}).items():
            if not isinstance(b, int) or b < 0:
                raise ValueError(f"base must be an integer >= 0, got {b!r}")
            e = e if isinstance(e, ExtNat) else ExtNat(e)
            if e == 0:
                continue
            if b == 0 or (b >= 2 and not e.is_finite):
                # 0^e = 0 for e >= 1 (finite or not), b^inf = 0 for b >= 2
                zero = True
                break
            norm[b] = e
        self._exp = {0: INF} if zero else norm

    @classmethod
    def one(cls) -> "FactoredNumber":
        return cls({})

    @classmethod
    def zero(cls) -> "FactoredNumber":
        return cls({0: INF})

    @property
    def is_zero(self) -> bool:
        return 0 in self._exp

    def bases(self) -> list[int]:
        return sorted(self._exp)

    def exponent(self, b: int) -> ExtNat:
        return self._exp.get(b, ExtNat(0))

    def items(self):
        return ((b, self._exp[b]) for b in sorted(self._exp))

    def value(self) -> int:
        """Exact integer value of the product."""
        if self.is_zero:
            return 0
        result = 1
        for b, e in self._exp.items():
            if b == 1:
                continue  # 1^e = 1 even for e = inf
            result *= b**e.value
        return result

    def __mul__(self, other: "FactoredNumber") -> "FactoredNumber":
        if self.is_zero or other.is_zero:
            return FactoredNumber.zero()
        merged = dict(self._exp)
        for b, e in other._exp.items():
            merged[b] = merged.get(b, ExtNat(0)) + e
        return FactoredNumber(merged)

    def refine_to_primes(self) -> "FactoredNumber":
        """Value-preserving rewrite onto prime bases only."""
        if self.is_zero:
            return FactoredNumber.zero()
        out: dict[int, ExtNat] = {}
        for b, e in self._exp.items():
            if b == 1:
                continue
            if is_prime(b):
                out[b] = out.get(b, ExtNat(0)) + e
                continue
            for p, f in prime_factors(b).items():
                add = INF if not e.is_finite else ExtNat(f * e.value)
                out[p] = out.get(p, ExtNat(0)) + add
        return FactoredNumber(out)

    def exponentwise_divides(self, other: "FactoredNumber") -> bool:
        """True when every base exponent of self is <= the one in other."""
        return all(e <= other.exponent(b) for b, e in self._exp.items())

    def integer_divides(self, other: "FactoredNumber") -> bool:
        """Plain integer divisibility of the values."""
        v1, v2 = self.value(), other.value()
        if v1 == 0:
            return v2 == 0
        return v2 % v1 == 0

    def __eq__(self, other) -> bool:
        if not isinstance(other, FactoredNumber):
            return NotImplemented
        return self._exp == other._exp

    def __hash__(self) -> int:
        return hash(tuple(sorted((b, e) for b, e in self._exp.items())))

    def format_factored(self, infinity: str = "inf") -> str:
        """Canonical factored-form text: bases ascending, exponent 1 elided."""
        if self.is_zero:
            return "0"
        if not self._exp:
            return "1"
        parts = []
        for b in sorted(self._exp):
            e = self._exp[b]
            if e == 1:
                parts.append(str(b))
            elif e.is_finite:
                parts.append(f"{b}^{e.value}")
            else:
                parts.append(f"{b}^{infinity}")
        return " * ".join(parts)

    @classmethod
    def parse(cls, text: str) -> "FactoredNumber":
        """Inverse of format_factored."""
        text = text.strip()
        if text == "0":
            return cls.zero()
        if text == "1":
            return cls.one()
        exps: dict[int, ExtNat] = {}
        for part in text.split("*"):
            part = part.strip()
            if not part:
                raise ValueError(f"empty factor in {text!r}")
            if "^" in part:
                b_s, e_s = part.split("^", 1)
                e = INF if e_s.strip() in ("inf", "∞") else ExtNat(int(e_s))
            else:
                b_s, e = part, ExtNat(1)
            b = int(b_s)
            if b in exps:
                raise ValueError(f"repeated base {b} in {text!r}")
            exps[b] = e
        return cls(exps)

    def __repr__(self) -> str:
        return f"FactoredNumber({self.format_factored()!r})"


def group_digits(n: int) -> str:
    """Decimal rendering with thousands separators, matching the table style."""
    return f"{n:,}"


@dataclass(frozen=True)
class BaseSet:
    """A finite set of allowed bases, or the `auto` marker resolved per (S, k).

    Auto resolution uses the proven cutoffs: bases above k contribute
    exponent 0 for S = Z, and bases with totient(b) + omega(b) > k
    contribute 0 for S = P.  Other sets need an explicit cutoff.
    """

    kind: str  # "explicit" | "range" | "primes_upto" | "bases_upto" | "auto"
    values: tuple[int, ...] = ()
    lo: int = 0
    hi: int = 0
    cutoff: int = 0

    @classmethod
    def explicit(cls, values) -> "BaseSet":
        vals = tuple(sorted(set(int(v) for v in values)))
        for v in vals:
            if v < 0:
                raise BaseSetError(f"bases must be >= 0, got {v}")
        return cls("explicit", values=vals)

    @classmethod
    def range(cls, lo: int, hi: int) -> "BaseSet":
        if lo < 0 or hi < lo:
            raise BaseSetError(f"bad base range {lo}..{hi}")
        return cls("range", lo=lo, hi=hi)

    @classmethod
    def primes_up_to(cls, cutoff: int) -> "BaseSet":
        return cls("primes_upto", cutoff=cutoff)

    @classmethod
    def all_up_to(cls, cutoff: int) -> "BaseSet":
        if cutoff < 2:
            raise BaseSetError(f"base cutoff must be >= 2, got {cutoff}")
        return cls("bases_upto", cutoff=cutoff)

    @classmethod
    def auto(cls) -> "BaseSet":
        return cls("auto")

    def resolve(self, S=None, k: int | None = None) -> tuple[int, ...]:
        """The concrete ascending list of bases."""
        if self.kind == "explicit":
            return self.values
        if self.kind == "range":
            return tuple(range(self.lo, self.hi + 1))
        if self.kind == "primes_upto":
            return tuple(primes_up_to(self.cutoff))
        if self.kind == "bases_upto":
            return tuple(range(2, self.cutoff + 1))
        if self.kind == "auto":
            from .intsets import AllIntegers, NonnegativeIntegers, Primes

            if k is None:
                raise BaseSetError("auto bases need the index k to resolve")
            if isinstance(S, (AllIntegers, NonnegativeIntegers)):
                return tuple(range(2, k + 1))
            if isinstance(S, Primes):
                # totient(b) >= sqrt(b/2), so the scan range covers all
                # bases that can still satisfy totient(b) + omega(b) <= k
                return tuple(
                    b for b in range(2, 2 * k * k + 2) if totient(b) + omega(b) <= k
                )
            raise BaseSetError(
                "auto bases are only defined for S in {Z, N, P}; give an explicit cutoff"
            )
        raise BaseSetError(f"unknown base-set kind {self.kind!r}")

    def describe(self) -> str:
        if self.kind == "explicit":
            return "list:" + ",".join(map(str, self.values))
        if self.kind == "range":
            return f"range:{self.lo}..{self.hi}"
        if self.kind == "primes_upto":
            return f"primes:{self.cutoff}"
        if self.kind == "bases_upto":
            return f"upto:{self.cutoff}"
        return "auto"


def parse_base_spec(spec: str) -> BaseSet:
    """Parse the base-set grammar: auto | upto:<n> | primes:<n> | list:... | range:lo..hi."""
    spec = spec.strip()
    if spec == "auto":
        return BaseSet.auto()
    if spec.startswith("upto:"):
        try:
            return BaseSet.all_up_to(int(spec[5:]))
        except ValueError as e:
            raise BaseSetError(f"bad base spec {spec!r}: {e}") from None
    if spec.startswith("primes:"):
        try:
            return BaseSet.primes_up_to(int(spec[7:]))
        except ValueError as e:
            raise BaseSetError(f"bad base spec {spec!r}: {e}") from None
    if spec.startswith("list:"):
        try:
            return BaseSet.explicit(int(t) for t in spec[5:].split(",") if t.strip())
        except ValueError as e:
            raise BaseSetError(f"bad base spec {spec!r}: {e}") from None
    if spec.startswith("range:"):
        body = spec[6:]
        if ".." not in body:
            raise BaseSetError(f"bad base spec {spec!r}: expected range:lo..hi")
        lo_s, hi_s = body.split("..", 1)
        try:
            return BaseSet.range(int(lo_s), int(hi_s))
        except ValueError as e:
            raise BaseSetError(f"bad base spec {spec!r}: {e}") from None
    raise BaseSetError(f"unrecognised base spec {spec!r}")
