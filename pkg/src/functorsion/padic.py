"""Prime-power combinatorics of multinomial coefficients.

Everything here is exact integer arithmetic: base-p digit sums, p-adic
valuations, carry counts for base-p addition, the valuation of factorials
and multinomials, enumeration of integer compositions, and the gcd of all
multinomial coefficients over the compositions of s into n parts.

The central quantity is that gcd, written ``multinomial_gcd(s, n)``.  Its
p-adic valuation has a closed form: it vanishes while n stays below the
base-p digit sum of s, and then grows by one for every further p-1 parts,

    0                                   if n <= digit_sum(p, s),
    ceil((n - digit_sum(p, s))/(p-1))   otherwise.

The companion object ``torsion_interval(p, s)`` is the arithmetic
progression of step p-1 from digit_sum(p, s) up to s; an integer d lies in
it exactly when s can be written as a sum of d powers of p
(``decomposition_exists``).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator, Sequence


def is_prime(p: int) -> bool:
    """Deterministic primality by trial division (desk scale only)."""
    if p < 2:
        return False
    if p < 4:
        return True
    if p % 2 == 0:
        return False
    f = 3
    while f * f <= p:
        if p % f == 0:
            return False
        f += 2
    return True


def primes_upto(n: int) -> list[int]:
    """All primes p <= n, ascending."""
    return [p for p in range(2, n + 1) if is_prime(p)]


def _require_prime(p: int) -> None:
    if not is_prime(p):
        raise ValueError(f"p must be prime, got {p}")


@dataclass(frozen=True)
class Composition:
    """An ordered tuple of positive integers; ``total`` is their sum."""

    parts: tuple[int, ...]

    def __post_init__(self) -> None:
        if not self.parts:
            raise ValueError("a composition has at least one part")
        if any(part < 1 for part in self.parts):
            raise ValueError(f"parts must be >= 1, got {self.parts}")

    @property
    def total(self) -> int:
        return sum(self.parts)

    def __len__(self) -> int:
        return len(self.parts)

    def __iter__(self) -> Iterator[int]:
        return iter(self.parts)


@dataclass(frozen=True)
class ValuationResult:
    """The exponent of a prime in some integer's factorization."""

    prime: int
    exponent: int

    def __post_init__(self) -> None:
        _require_prime(self.prime)
        if self.exponent < 0:
            raise ValueError("exponent must be >= 0")


@dataclass(frozen=True)
class TorsionInterval:
    """Arithmetic progression of step p-1 from digit_sum(p, s) up to s."""

    prime: int
    weight: int
    members: tuple[int, ...]

    def __contains__(self, d: int) -> bool:
        return d in self.members

    def __iter__(self) -> Iterator[int]:
        return iter(self.members)


def digit_sum(p: int, s: int) -> int:
    """Sum of the digits of s written in base p.

    >>> digit_sum(2, 6)   # 6 = 110 in base 2
    2
    >>> digit_sum(3, 5)   # 5 = 12 in base 3
    3
    """
    _require_prime(p)
    if s < 0:
        raise ValueError("s must be >= 0")
    total = 0
    while s:
        s, digit = divmod(s, p)
        total += digit
    return total


def valuation(p: int, x: int) -> int:
    """Largest e with p**e dividing x; x = 0 is rejected (infinite)."""
    _require_prime(p)
    if x < 1:
        raise ValueError(f"valuation requires x >= 1, got {x}")
    e = 0
    while x % p == 0:
        x //= p
        e += 1
    return e


def carries(p: int, a: int, b: int) -> int:
    """Number of carries when adding a and b in base p.

    Equals the p-adic valuation of the binomial coefficient C(a+b, a).
    """
    _require_prime(p)
    if a < 0 or b < 0:
        raise ValueError("a and b must be >= 0")
    count = 0
    carry = 0
    while a or b or carry:
        a, da = divmod(a, p)
        b, db = divmod(b, p)
        carry = 1 if da + db + carry >= p else 0
        count += carry
    return count


def factorial_valuation(p: int, s: int) -> int:
    """p-adic valuation of s!, computed as (s - digit_sum(p, s))/(p-1).

    The division is exact; the equivalent floor-sum formula
    sum(s // p**i for i >= 1) is kept in the test suite as the
    independent cross-check.
    """
    quotient, remainder = divmod(s - digit_sum(p, s), p - 1)
    assert remainder == 0
    return quotient


def multinomial(s: int, parts: Composition | Sequence[int]) -> int:
    """The multinomial coefficient s! / prod(part!).

    ``parts`` may be a Composition or any sequence of nonnegative integers
    (zero parts contribute a factor 1); their sum must equal s.

    >>> multinomial(4, (2, 1, 1))
    12
    """
    tup = tuple(parts)
    if any(part < 0 for part in tup):
        raise ValueError(f"parts must be >= 0, got {tup}")
    if sum(tup) != s:
        raise ValueError(f"parts {tup} do not sum to {s}")
    result = 1
    placed = 0
    for part in tup:
        placed += part
        result *= math.comb(placed, part)
    return result


def compositions(s: int, n: int) -> list[Composition]:
    """All compositions of s into exactly n positive parts.

    Enumerated in descending lexicographic order on the part tuples, the
    project-wide monomial order; empty exactly when n > s, and of size
    C(s-1, n-1) otherwise.
    """
    if s < 1 or n < 1:
        raise ValueError("s and n must be >= 1")
    return [Composition(parts) for parts in _composition_tuples(s, n)]


@lru_cache(maxsize=None)
def _composition_tuples(s: int, n: int) -> tuple[tuple[int, ...], ...]:
    if n > s:
        return ()
    if n == 1:
        return ((s,),)
    out = []
    for first in range(s - n + 1, 0, -1):
        for rest in _composition_tuples(s - first, n - 1):
            out.append((first,) + rest)
    return tuple(out)


def multinomial_gcd(s: int, n: int) -> int:
    """gcd of multinomial(s, c) over all compositions c of s into n parts."""
    if not 1 <= n <= s:
        raise ValueError(f"need 1 <= n <= s, got n={n}, s={s}")
    g = 0
    for comp in compositions(s, n):
        g = math.gcd(g, multinomial(s, comp))
        if g == 1:
            break
    return g


def multinomial_gcd_valuation(p: int, s: int, n: int) -> int:
    """Closed form for the p-adic valuation of multinomial_gcd(s, n)."""
    if not 1 <= n <= s:
        raise ValueError(f"need 1 <= n <= s, got n={n}, s={s}")
    dig = digit_sum(p, s)
    if n <= dig:
        return 0
    return -((dig - n) // (p - 1))  # ceil((n - dig)/(p - 1))


def multinomial_gcd_valuations(s: int, n: int) -> list[ValuationResult]:
    """Closed-form valuations of multinomial_gcd(s, n) at every prime <= s."""
    return [
        ValuationResult(p, multinomial_gcd_valuation(p, s, n))
        for p in primes_upto(s)
    ]


def torsion_interval(p: int, s: int) -> TorsionInterval:
    """Integers n with n = s mod (p-1) and digit_sum(p, s) <= n <= s."""
    _require_prime(p)
    if s < 1:
        raise ValueError("s must be >= 1")
    lo = digit_sum(p, s)
    members = tuple(range(lo, s + 1, p - 1))
    return TorsionInterval(p, s, members)


def decomposition_exists(p: int, s: int, d: int) -> bool:
    """True iff s is a sum of exactly d (repeatable) powers of p.

    Memoized dynamic programming on (remaining sum, remaining terms); the
    raw enumeration over multisets of powers is kept in the test suite as
    the independent oracle.
    """
    _require_prime(p)
    if s < 1 or d < 1:
        raise ValueError("s and d must be >= 1")
    return _sum_of_powers(p, s, d)


@lru_cache(maxsize=None)
def _sum_of_powers(p: int, s: int, d: int) -> bool:
    if d == 0:
        return s == 0
    if s < d:  # every power is >= 1
        return False
    power = 1
    while power <= s - (d - 1):
        if _sum_of_powers(p, s - power, d - 1):
            return True
        power *= p
    return False
