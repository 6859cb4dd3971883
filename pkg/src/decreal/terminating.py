"""Exact arithmetic on terminating decimals.

A terminating decimal is stored as a pair (units, scale) with value
units / 10**scale.  All operations are exact integer arithmetic after
rescaling to a common scale, so the field laws hold with no rounding.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction

from .errors import MalformedLiteral


class Comparison(Enum):
    """Outcome of an order comparison.

    UNDECIDED is never produced for terminating decimals; it exists for
    the budgeted comparisons on digit-stream reals built on top of them.
    """

    LT = "<"
    EQ = "="
    GT = ">"
    UNDECIDED = "undecided"


# integer part must not carry leading zeros ("051.43" is malformed),
# except for the single digit 0 itself
_LITERAL = re.compile(r"(-?)(0|[1-9][0-9]*)(?:\.([0-9]+))?")


@dataclass(frozen=True)
class TerminatingDecimal:
    """A signed decimal with finitely many fractional digits.

    Canonical form: if scale > 0 then units is not divisible by 10, and
    zero is always (0, 0).  Equality and hashing therefore coincide with
    numeric equality.  Instances are immutable and safe to share.
    """

    units: int
    scale: int = 0

    def __post_init__(self):
        units, scale = self.units, self.scale
        if scale < 0:
            raise ValueError("scale must be non-negative")
        if units == 0:
            scale = 0
        else:
            while scale > 0 and units % 10 == 0:
                units //= 10
                scale -= 1
        object.__setattr__(self, "units", units)
        object.__setattr__(self, "scale", scale)

    # -- structure ---------------------------------------------------

    @property
    def sign(self) -> int:
        """-1, 0 or +1."""
        return (self.units > 0) - (self.units < 0)

    @property
    def mantissa(self) -> int:
        """The digit string with the decimal point removed, as an integer."""
        return abs(self.units)

    def is_zero(self) -> bool:
        return self.units == 0

    def as_fraction(self) -> Fraction:
        return Fraction(self.units, 10 ** self.scale)

    @classmethod
    def from_fraction(cls, value: Fraction) -> "TerminatingDecimal":
        """Exact conversion; the denominator must factor as 2^a * 5^b."""
        den = value.denominator
        twos = fives = 0
        while den % 2 == 0:
            den //= 2
            twos += 1
        while den % 5 == 0:
            den //= 5
            fives += 1
        if den != 1:
            raise ValueError(f"{value} is not a terminating decimal")
        scale = max(twos, fives)
        units = value.numerator * 2 ** (scale - twos) * 5 ** (scale - fives)
        return cls(units, scale)

    def floor(self) -> int:
        """The unique integer n with n <= self < n + 1."""
        return self.units // 10 ** self.scale

    def digit(self, i: int) -> int:
        """i-th fractional digit (i >= 1) of the magnitude; 0 past scale."""
        if i < 1:
            raise ValueError("digit positions start at 1")
        if i > self.scale:
            return 0
        return (self.mantissa // 10 ** (self.scale - i)) % 10

    # -- arithmetic --------------------------------------------------

    def __neg__(self) -> "TerminatingDecimal":
        return TerminatingDecimal(-self.units, self.scale)

    def __abs__(self) -> "TerminatingDecimal":
        return TerminatingDecimal(abs(self.units), self.scale)

    def __add__(self, other: "TerminatingDecimal") -> "TerminatingDecimal":
        if not isinstance(other, TerminatingDecimal):
            return NotImplemented
        s = max(self.scale, other.scale)
        units = (self.units * 10 ** (s - self.scale)
                 + other.units * 10 ** (s - other.scale))
        return TerminatingDecimal(units, s)

    def __sub__(self, other: "TerminatingDecimal") -> "TerminatingDecimal":
        if not isinstance(other, TerminatingDecimal):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other: "TerminatingDecimal") -> "TerminatingDecimal":
        if not isinstance(other, TerminatingDecimal):
            return NotImplemented
        return TerminatingDecimal(self.units * other.units,
                                  self.scale + other.scale)

    def _cmp(self, other: "TerminatingDecimal") -> int:
        s = max(self.scale, other.scale)
        a = self.units * 10 ** (s - self.scale)
        b = other.units * 10 ** (s - other.scale)
        return (a > b) - (a < b)

    def __lt__(self, other):
        return self._cmp(other) < 0

    def __le__(self, other):
        return self._cmp(other) <= 0

    def __gt__(self, other):
        return self._cmp(other) > 0

    def __ge__(self, other):
        return self._cmp(other) >= 0

    # -- rendering ---------------------------------------------------

    def __str__(self) -> str:
        body = str(self.mantissa).rjust(self.scale + 1, "0")
        if self.scale:
            body = body[:-self.scale] + "." + body[-self.scale:]
        return ("-" if self.units < 0 else "") + body

    def __repr__(self) -> str:
        return f"TerminatingDecimal({self!s})"


ZERO = TerminatingDecimal(0)
ONE = TerminatingDecimal(1)


def pow10(k: int) -> TerminatingDecimal:
    """10**k as an exact terminating decimal; k may be negative."""
    if k >= 0:
        return TerminatingDecimal(10 ** k)
    return TerminatingDecimal(1, -k)


def int_from_digits(digits: str) -> int:
    """Decode a decimal digit string of any length.

    ``int()`` on a string is capped at a few thousand digits by the
    interpreter (CVE-2020-10735 guard); repeating groups routinely exceed
    that — a denominator q can have a period as long as the multiplicative
    order of 10 modulo q — so decode in bounded chunks instead.
    """
    value = 0
    for i in range(0, len(digits), 4000):
        chunk = digits[i:i + 4000]
        value = value * 10 ** len(chunk) + int(chunk)
    return value


def parse_terminating(text: str) -> TerminatingDecimal:
    """Parse a terminating-decimal literal.

    Accepts an optional leading minus, an integer part without leading
    zeros, and an optional fractional part.  Trailing fractional zeros
    and "-0" are normalised away.
    """
    m = _LITERAL.fullmatch(text)
    if m is None:
        raise MalformedLiteral(f"malformed terminating decimal: {text!r}")
    sign, int_part, frac = m.groups()
    frac = frac or ""
    units = int_from_digits(int_part + frac)
    if sign == "-":
        units = -units
    return TerminatingDecimal(units, len(frac))


def compare(a: TerminatingDecimal, b: TerminatingDecimal) -> Comparison:
    c = a._cmp(b)
    if c < 0:
        return Comparison.LT
    if c > 0:
        return Comparison.GT
    return Comparison.EQ


def add(a: TerminatingDecimal, b: TerminatingDecimal) -> TerminatingDecimal:
    return a + b


def mul(a: TerminatingDecimal, b: TerminatingDecimal) -> TerminatingDecimal:
    return a * b


def neg(a: TerminatingDecimal) -> TerminatingDecimal:
    return -a
