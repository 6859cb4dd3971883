"""Field operations on decimal reals, realized as rigorous enclosures.

Whenever both operands are exactly representable the operations go
through rational arithmetic and stay exact.  Otherwise the result is a
:class:`~decreal.realnum.ComputedReal` whose enclosures are derived from
the operands' enclosures by outward-safe interval arithmetic; digits of
the result are pinned from those enclosures on demand, and a value that
sits on an exact decimal boundary surfaces as ``DigitsUnstable`` at
digit-query time while its enclosures stay available through
:func:`evaluate`.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .errors import DigitsUnstable, NegativeRadicand, SignUndecided
from .realnum import (
    DEFAULT_BUDGET,
    Classification,
    ComputedReal,
    RealNumber,
    TerminatingReal,
    ZERO_REAL,
    classify,
    real_from_fraction,
)
from .terminating import TerminatingDecimal, pow10


@dataclass(frozen=True)
class Enclosure:
    """A closed interval [lo, hi] of terminating decimals containing a
    real value, with exactly representable width."""

    lo: TerminatingDecimal
    hi: TerminatingDecimal

    def __post_init__(self):
        if self.hi < self.lo:
            raise ValueError("enclosure bounds are reversed")

    def width(self) -> TerminatingDecimal:
        return self.hi + (-self.lo)

    def contains(self, value: Fraction) -> bool:
        return self.lo.as_fraction() <= value <= self.hi.as_fraction()

    def __str__(self) -> str:
        return f"[{self.lo}, {self.hi}]"


def _outward(lo: Fraction, hi: Fraction, scale: int) -> Enclosure:
    """Round a rational interval outward to terminating decimals with
    the given number of fractional digits."""
    step = 10 ** scale
    lo_units = (lo * step).__floor__()
    hi_units = -((-hi * step).__floor__())
    return Enclosure(TerminatingDecimal(lo_units, scale),
                     TerminatingDecimal(hi_units, scale))


def evaluate(x: RealNumber, n: int) -> Enclosure:
    """Enclosure of x with width at most 10**-n.

    For a terminating value the enclosure is degenerate.  Otherwise lo
    is the n-digit truncation of the canonical expansion of |x| (sign
    reattached) and hi = lo + 10**-n; when digits refuse to stabilise
    the enclosure falls back to outward rounding of the raw interval
    at one extra digit, which still meets the width contract.
    """
    if n < 0:
        raise ValueError("precision must be non-negative")
    if isinstance(x, TerminatingReal):
        return Enclosure(x.value, x.value)
    if isinstance(x, ComputedReal):
        try:
            p = x.prefix(n)
        except DigitsUnstable:
            return _outward(*x.bounds(n + 1), n + 1)
    else:
        p = x.prefix(n)
    t = p.as_terminating()
    ulp = pow10(-n)
    if p.negative:
        return Enclosure(t + (-ulp), t)
    return Enclosure(t, t + ulp)


def _is_exact_zero(x: RealNumber) -> bool:
    return isinstance(x, TerminatingReal) and x.value.is_zero()


def add(x: RealNumber, y: RealNumber) -> RealNumber:
    """x + y; exact when both operands are, interval-backed otherwise.

    A zero operand returns the other operand itself: the sum of a value
    with zero is that value, not a new approximation of it.
    """
    if _is_exact_zero(x):
        return y
    if _is_exact_zero(y):
        return x
    if x.is_exact and y.is_exact:
        return real_from_fraction(x.as_fraction() + y.as_fraction())

    def refine(m: int) -> tuple[Fraction, Fraction]:
        lx, hx = x.bounds(m + 1)
        ly, hy = y.bounds(m + 1)
        return lx + ly, hx + hy

    return ComputedReal(refine, f"({_describe(x)} + {_describe(y)})")


def neg(x: RealNumber) -> RealNumber:
    """Structural negation."""
    return x.negated()


def _describe(x: RealNumber) -> str:
    if isinstance(x, ComputedReal):
        return x.description or "?"
    return str(x) if x.is_exact else repr(x)


def _decimal_digits(bound: Fraction) -> int:
    """Smallest d >= 0 with bound <= 10**d."""
    d = 0
    while bound > 10 ** d:
        d += 1
    return d


def mul(x: RealNumber, y: RealNumber) -> RealNumber:
    """x * y with the sign handled by negation identities.

    A provably zero operand gives exact zero; provably negative operands
    are factored out through neg so the core interval path multiplies
    non-negative-leaning enclosures; operands whose sign cannot be
    settled cheaply fall through to the same interval product, which is
    sound for any signs.
    """
    if _is_exact_zero(x) or _is_exact_zero(y):
        return ZERO_REAL
    if x.is_exact and x.as_fraction() == 1:
        return y
    if y.is_exact and y.as_fraction() == 1:
        return x
    if x.is_exact and y.is_exact:
        return real_from_fraction(x.as_fraction() * y.as_fraction())

    def cheap_sign(v: RealNumber) -> Classification | None:
        try:
            return classify(v, 64)
        except SignUndecided:
            return None

    sx, sy = cheap_sign(x), cheap_sign(y)
    if sx is Classification.ZERO or sy is Classification.ZERO:
        return ZERO_REAL
    if sx is Classification.NEGATIVE:
        return neg(mul(neg(x), y))
    if sy is Classification.NEGATIVE:
        return neg(mul(x, neg(y)))

    # magnitude headroom for choosing the working precision
    mx = max(abs(b) for b in x.bounds(0))
    my = max(abs(b) for b in y.bounds(0))
    extra = _decimal_digits(mx + my + 1) + 1

    def refine(m: int) -> tuple[Fraction, Fraction]:
        work = m + extra
        while True:
            lx, hx = x.bounds(work)
            ly, hy = y.bounds(work)
            corners = (lx * ly, lx * hy, hx * ly, hx * hy)
            lo, hi = min(corners), max(corners)
            if hi - lo <= Fraction(1, 10 ** m):
                return lo, hi
            work += 8

    return ComputedReal(refine, f"({_describe(x)} * {_describe(y)})")


def reciprocal(x: RealNumber, budget: int = DEFAULT_BUDGET) -> RealNumber:
    """1 / x for x provably nonzero.

    The bracket is seeded by the decimal size of x: a value below 10**k
    has reciprocal above 10**-(k+1), and a value above 10**-(m+1) has
    reciprocal below 10**(m+1), with seed 1 on the easy side when
    |x| >= 1.  Refinement then inverts ever-tighter enclosures of x.
    Raises ZeroDivisionError for exact zero and SignUndecided when the
    sign of x cannot be established within the budget.
    """
    if x.is_exact:
        f = x.as_fraction()
        if f == 0:
            raise ZeroDivisionError("reciprocal of zero")
        return real_from_fraction(1 / f)
    sign = classify(x, budget)  # raises SignUndecided on boundary values
    if sign is Classification.ZERO:
        raise ZeroDivisionError("reciprocal of zero")
    if sign is Classification.NEGATIVE:
        return neg(reciprocal(neg(x), budget))

    # a positive rational floor for x: classify succeeded, so some
    # enclosure has lo > 0
    m = 1
    while True:
        lo0, hi0 = x.bounds(m)
        if lo0 > 0:
            break
        m += max(4, m)
    k = _decimal_digits(hi0)
    seed_lo = Fraction(1, 10 ** (k + 1))
    if lo0 >= 1:
        seed_hi = Fraction(1)
    else:
        d = _decimal_digits(1 / lo0)  # lo0 > 10**-d
        seed_hi = Fraction(10 ** d)
    assert seed_lo * hi0 < 1, "lower seed must multiply below one"
    assert seed_hi * lo0 >= 1, "upper seed must multiply to at least one"
    # width of 1/[lx, hx] is (hx - lx) / (lx * hx) <= 10**-work / lo0**2
    head = 2 * _decimal_digits(1 / lo0) + 1

    def refine(q: int) -> tuple[Fraction, Fraction]:
        work = q + head
        while True:
            lx, hx = x.bounds(work)
            lo, hi = max(seed_lo, 1 / hx), min(seed_hi, 1 / lx)
            if hi - lo <= Fraction(1, 10 ** q):
                return lo, hi
            work += 8

    return ComputedReal(refine, f"1/({_describe(x)})")


def _exact_sqrt(f: Fraction) -> Fraction | None:
    """The exact rational square root, if one exists."""
    sp, sq = math.isqrt(f.numerator), math.isqrt(f.denominator)
    if sp * sp == f.numerator and sq * sq == f.denominator:
        return Fraction(sp, sq)
    return None


def sqrt(r: RealNumber, budget: int = DEFAULT_BUDGET) -> RealNumber:
    """The unique non-negative s with s*s = r.

    The bracket [lo, hi] always satisfies lo**2 <= r <= hi**2 and is
    halved each step; it is seeded across the r = 1 boundary (for
    r >= 1, s lies in [1, r]; for r < 1, in [r, 1]).  For a radicand
    known only by enclosures, a midpoint whose square falls inside the
    radicand's enclosure cannot be ordered against r, but it is then
    provably within the target tolerance of s and the bracket collapses
    onto it.  Rational perfect squares come back exact.
    """
    if r.is_exact:
        f = r.as_fraction()
        if f == 0:
            return ZERO_REAL
        if f < 0:
            raise NegativeRadicand(f"square root of {f}")
        exact = _exact_sqrt(f)
        if exact is not None:
            return real_from_fraction(exact)
        state = [min(f, Fraction(1)), max(f, Fraction(1))]

        def refine_exact(q: int) -> tuple[Fraction, Fraction]:
            lo, hi = state
            tol = Fraction(1, 10 ** q)
            while hi - lo > tol:
                mid = (lo + hi) / 2
                if mid * mid <= f:
                    lo = mid
                else:
                    hi = mid
                assert lo * lo <= f <= hi * hi
            state[0], state[1] = lo, hi
            return lo, hi

        return ComputedReal(refine_exact, f"sqrt({_describe(r)})")

    sign = classify(r, budget)
    if sign is Classification.NEGATIVE:
        raise NegativeRadicand("square root of a provably negative value")
    if sign is Classification.ZERO:
        return ZERO_REAL

    m = 1
    while True:
        lr0, hr0 = r.bounds(m)
        if lr0 > 0:
            break
        m += max(4, m)
    # lo0**2 <= lr0 <= r and hi0**2 >= hr0 >= r on both sides of 1
    lo0, hi0 = min(lr0, Fraction(1)), max(hr0, Fraction(1))
    state = [lo0, hi0]
    # ambiguity exit: |mid**2 - r| <= width(r-enclosure) and mid >= lo0
    # give |mid - s| <= width / lo0
    head = _decimal_digits(1 / lo0)

    def refine(q: int) -> tuple[Fraction, Fraction]:
        lo, hi = state
        tol = Fraction(1, 10 ** q)
        lr, hr = r.bounds(2 * q + 2 * head + 1)
        while hi - lo > tol:
            mid = (lo + hi) / 2
            square = mid * mid
            if square < lr:
                lo = mid
            elif square > hr:
                hi = mid
            else:
                lo = max(lo, mid - tol / 2)
                hi = min(hi, mid + tol / 2)
                break
            assert lo * lo <= hr and lr <= hi * hi
        state[0], state[1] = lo, hi
        return lo, hi

    return ComputedReal(refine, f"sqrt({_describe(r)})")


def archimedean_witness(x: RealNumber, y: RealNumber,
                        budget: int = DEFAULT_BUDGET) -> int:
    """A positive integer n with n*x > y, for provably positive x.

    For exact operands the witness is minimal: the first integer above
    y/x.  Otherwise it is the first integer above hi(y)/lo(x) at the
    first precision where lo(x) is positive, which is provable but not
    necessarily minimal; the refinement schedule is fixed, so the result
    is deterministic.
    """
    sign = classify(x, budget)  # raises SignUndecided near zero
    if sign is not Classification.POSITIVE:
        raise ValueError("the witness requires a provably positive x")
    if x.is_exact and y.is_exact:
        ratio = y.as_fraction() / x.as_fraction()
        return max(1, ratio.__floor__() + 1)
    m = 1
    while True:
        lx, _ = x.bounds(m)
        if lx > 0:
            break
        m += max(4, m)
    _, hy = y.bounds(m)
    return max(1, (hy / lx).__floor__() + 1)
