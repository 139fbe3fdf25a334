"""Exact integer and rational helpers underneath the base-60 pipeline.

Everything here is exact: rationals are `fractions.Fraction`, square roots
are integer square roots with a re-multiplication check, and "regular"
means 5-smooth (no prime factor outside {2, 3, 5}) -- exactly the
integers whose reciprocals terminate in base 60.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable


class NotRegular(ValueError):
    """A value has a prime factor outside {2, 3, 5}."""


class NotPerfectSquare(ValueError):
    """An exact square root was requested of a non-square."""


@dataclass(frozen=True)
class RegularFactorization:
    """Exponents of 2, 3 and 5 for a regular integer."""

    e2: int
    e3: int
    e5: int

    @property
    def value(self) -> int:
        return 2**self.e2 * 3**self.e3 * 5**self.e5


def _strip_regular(n: int) -> tuple[int, int, int, int]:
    """Divide out all factors 2, 3, 5; return (e2, e3, e5, leftover)."""
    exponents = []
    for p in (2, 3, 5):
        e = 0
        while n % p == 0:
            n //= p
            e += 1
        exponents.append(e)
    return exponents[0], exponents[1], exponents[2], n


def is_regular(n: int) -> bool:
    """True iff n = 2^a * 3^b * 5^c for non-negative a, b, c."""
    if n < 1:
        raise ValueError(f"expected a positive integer, got {n}")
    return _strip_regular(n)[3] == 1


def factor_regular(n: int) -> RegularFactorization:
    """Exponent triple of a regular integer; NotRegular otherwise."""
    if n < 1:
        raise ValueError(f"expected a positive integer, got {n}")
    e2, e3, e5, rest = _strip_regular(n)
    if rest != 1:
        raise NotRegular(f"{n} has the non-regular factor {rest}")
    return RegularFactorization(e2, e3, e5)


def regular_numbers(limit: int) -> list[int]:
    """All regular integers <= limit, ascending."""
    out = []
    p2 = 1
    while p2 <= limit:
        p3 = p2
        while p3 <= limit:
            p5 = p3
            while p5 <= limit:
                out.append(p5)
                p5 *= 5
            p3 *= 3
        p2 *= 2
    out.sort()
    return out


def isqrt_exact(n: int) -> int:
    """Integer square root of a perfect square.

    Uses math.isqrt plus an exact re-multiplication check, so there are
    no false positives no matter how large n gets.
    """
    if n < 0:
        raise NotPerfectSquare(f"{n} is negative")
    root = math.isqrt(n)
    if root * root != n:
        raise NotPerfectSquare(f"{n} is not a perfect square")
    return root


def rational_sqrt_exact(r: Fraction) -> Fraction:
    """Exact square root of a non-negative rational with square parts.

    The result squared equals r with no tolerance; NotPerfectSquare if
    either the reduced numerator or denominator is not a square.
    """
    if r < 0:
        raise NotPerfectSquare(f"{r} is negative")
    return Fraction(isqrt_exact(r.numerator), isqrt_exact(r.denominator))


def least_integer_multiplier(values: Iterable[Fraction]) -> int:
    """Smallest positive X with X*v integral for every v.

    This is the lcm of the reduced denominators.  Denominators must be
    regular; a non-regular denominator would mean a non-terminating
    sexagesimal value, which has no place in the system.
    """
    values = list(values)
    if not values:
        raise ValueError("need at least one value")
    for v in values:
        if v < 0:
            raise ValueError(f"expected non-negative values, got {v}")
        if not is_regular(v.denominator):
            raise NotRegular(f"denominator of {v} is not regular")
    return math.lcm(*(v.denominator for v in values))
