"""Shared fixtures and independent test oracles.

The oracles here deliberately avoid the production code paths: digits
come from grade-school sequential long division (production uses modular
exponentiation), square roots from ``math.isqrt`` on scaled integers
(production uses interval bisection), and period structure from the
multiplicative order of 10 (production finds the first repeated
remainder).  Expected values in the tests are frozen from these routes,
never from the code under test.
"""

from __future__ import annotations

import math
import random
from fractions import Fraction

import pytest

from decreal import OracleReal

SEED = 20260819


@pytest.fixture
def rng() -> random.Random:
    return random.Random(SEED)


# ---------------------------------------------------------------------------
# independent digit oracles


def long_division_digits(p: int, q: int, n: int) -> str:
    """First n fractional digits of p/q (p >= 0, q > 0), sequentially."""
    assert p >= 0 and q > 0
    r = p % q
    out = []
    for _ in range(n):
        r *= 10
        out.append(str(r // q))
        r %= q
    return "".join(out)


def fraction_digit(f: Fraction, i: int) -> int:
    """i-th fractional digit (i >= 1) of |f|'s canonical expansion."""
    mag = abs(f)
    return int(mag * 10**i) % 10


def fraction_prefix(f: Fraction, n: int) -> str:
    """Canonical rendering of f truncated to n fractional digits."""
    sign = "-" if f < 0 else ""
    mag = abs(f)
    ip = int(mag)
    return sign + str(ip) + "." + long_division_digits(
        mag.numerator, mag.denominator, n)


def sqrt_truncation(r: Fraction, n: int) -> Fraction:
    """floor(sqrt(r) * 10^n) / 10^n via integer square root."""
    assert r >= 0
    scaled = r.numerator * 10 ** (2 * n) // r.denominator
    return Fraction(math.isqrt(scaled), 10**n)


def multiplicative_order(a: int, n: int) -> int:
    """Least k >= 1 with a^k = 1 (mod n); requires gcd(a, n) = 1."""
    assert math.gcd(a, n) == 1 and n > 1
    k, power = 1, a % n
    while power != 1:
        power = power * a % n
        k += 1
    return k


def expected_period_structure(q: int) -> tuple[int, int]:
    """(preperiod length, period length) of p/q in lowest terms.

    Number-theoretic route: strip factors of 2 and 5 from q; the
    preperiod is the larger multiplicity and the period length is the
    multiplicative order of 10 modulo the stripped denominator.
    """
    assert q > 0
    two = five = 0
    while q % 2 == 0:
        q //= 2
        two += 1
    while q % 5 == 0:
        q //= 5
        five += 1
    if q == 1:
        return max(two, five), 0
    return max(two, five), multiplicative_order(10, q)


def nine_tail_value(prefix_value: Fraction, onset: int) -> Fraction:
    """Exact value of an expansion all of whose digits >= onset are 9.

    Geometric series: sum of 9 * 10^-k for k >= onset is 10^(1-onset).
    ``prefix_value`` is the value of the digits before the onset.
    """
    return prefix_value + Fraction(1, 10 ** (onset - 1))


# ---------------------------------------------------------------------------
# opaque wrappers: hide exactness so production code must use intervals


def opaque(f: Fraction) -> OracleReal:
    """A rational presented only as a digit stream.

    Digits come from this module's long division, not from production
    code, so arithmetic tests exercising the oracle paths are checked
    end to end against an independent route.
    """
    mag = abs(f)
    q = mag.denominator
    state = {"digits": [], "remainder": mag.numerator % q}

    def digit(i: int) -> int:
        digits, r = state["digits"], state["remainder"]
        while len(digits) < i:
            r *= 10
            digits.append(r // q)
            r %= q
        state["remainder"] = r
        return digits[i - 1]

    return OracleReal(digit_fn=digit, negative=f < 0, int_part=int(mag))


# ---------------------------------------------------------------------------
# random value generators (seeded by callers)


def rand_fraction(rng: random.Random, max_num: int = 10_000,
                  max_den: int = 10_000, signed: bool = True) -> Fraction:
    lo = -max_num if signed else 0
    return Fraction(rng.randint(lo, max_num), rng.randint(1, max_den))


def rand_nonzero_fraction(rng: random.Random, max_num: int = 10_000,
                          max_den: int = 10_000) -> Fraction:
    while True:
        f = rand_fraction(rng, max_num, max_den)
        if f != 0:
            return f
