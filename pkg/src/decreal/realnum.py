"""Real numbers as canonical decimal expansions.

A real is one of four variants:

* ``TerminatingReal``  -- exact terminating decimal;
* ``PeriodicReal``     -- exact eventually-periodic expansion, backed by a
  rational in lowest terms, with the minimal (preperiod, period) pair
  materialised on demand;
* ``OracleReal``       -- a digit stream supplied by a callback, promised
  canonical (no trailing all-nines tail);
* ``ComputedReal``     -- a value known only through refinable rational
  enclosures (results of arithmetic on digit streams); digits are pinned
  from enclosures on demand and may be refused with ``DigitsUnstable``
  when the value sits on an exact decimal boundary.

Canonical form is sign-magnitude: ``-a.d1 d2 ...`` with a non-negative
integer part and fractional digits of the magnitude.  Expansions never
end in all nines, so lexicographic order on (sign, integer part, digits)
coincides with numeric order; budgeted comparisons walk digits and
answer ``UNDECIDED`` when every examined position agrees.
"""

from __future__ import annotations

import threading
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from functools import cached_property
from typing import Callable, Optional

from .errors import (
    CanonicalViolation,
    DigitsUnstable,
    MalformedLiteral,
    NotLess,
    OrderUndecided,
    SignUndecided,
)
from .terminating import (
    Comparison,
    TerminatingDecimal,
    int_from_digits,
    pow10,
)

import re

DEFAULT_BUDGET = 1000
# extra refinement digits allowed before digit pinning gives up
PIN_WINDOW = 64
# window scanned past a run of nines by the canonical-form checker
NINE_CHECK_WINDOW = 64


class Classification(Enum):
    NEGATIVE = -1
    ZERO = 0
    POSITIVE = 1


@dataclass(frozen=True)
class DigitPrefix:
    """A confirmed finite prefix of a canonical expansion.

    ``int_part`` is the (non-negative) integer part of the magnitude;
    ``digits`` are fractional digits of the magnitude.  Unlike a
    terminating decimal, a prefix keeps trailing zeros: it records how
    many positions were confirmed.
    """

    negative: bool
    int_part: int
    digits: str

    def __post_init__(self):
        if self.int_part < 0:
            raise ValueError("int_part must be non-negative")
        if self.digits and not self.digits.isdigit():
            raise ValueError("digits must be characters 0-9")

    def __len__(self) -> int:
        return len(self.digits)

    def value(self) -> Fraction:
        mag = Fraction(int(self.digits or "0"), 10 ** len(self.digits))
        mag += self.int_part
        return -mag if self.negative else mag

    def as_terminating(self) -> TerminatingDecimal:
        units = self.int_part * 10 ** len(self.digits) + int(self.digits or "0")
        if self.negative:
            units = -units
        return TerminatingDecimal(units, len(self.digits))

    def extend(self, digit: int) -> "DigitPrefix":
        return DigitPrefix(self.negative, self.int_part, self.digits + str(digit))

    def render(self) -> str:
        body = str(self.int_part)
        if self.digits:
            body += "." + self.digits
        return ("-" if self.negative else "") + body


class RealNumber:
    """Base class; see the module docstring for the variants."""

    is_exact = False

    def digit_at(self, i: int) -> int:
        """i-th fractional digit (i >= 1) of the canonical expansion of |x|."""
        raise NotImplementedError

    @property
    def int_part(self) -> int:
        """Integer part of the magnitude (digits before the point)."""
        raise NotImplementedError

    def integral_part(self) -> int:
        """The unique integer n with n <= x < n + 1."""
        raise NotImplementedError

    def bounds(self, m: int) -> tuple[Fraction, Fraction]:
        """A rational enclosure [lo, hi] of the value with hi - lo <= 10**-m."""
        raise NotImplementedError

    def negated(self) -> "RealNumber":
        """Structural negation (no arithmetic, no loss of exactness)."""
        raise NotImplementedError

    def as_fraction(self) -> Fraction:
        raise TypeError(f"{type(self).__name__} has no exact rational value")

    def prefix(self, n: int) -> DigitPrefix:
        """First n fractional digits as a confirmed prefix."""
        if n < 0:
            raise ValueError("prefix length must be non-negative")
        negative = getattr(self, "negative", False)
        digits = "".join(str(self.digit_at(i)) for i in range(1, n + 1))
        return DigitPrefix(bool(negative), self.int_part, digits)


@dataclass(frozen=True)
class TerminatingReal(RealNumber):
    """A terminating decimal viewed as a real number."""

    value: TerminatingDecimal

    is_exact = True

    def digit_at(self, i: int) -> int:
        return self.value.digit(i)

    @property
    def negative(self) -> bool:
        return self.value.units < 0

    @property
    def int_part(self) -> int:
        return abs(self.value.units) // 10 ** self.value.scale

    def integral_part(self) -> int:
        return self.value.floor()

    def bounds(self, m: int) -> tuple[Fraction, Fraction]:
        f = self.value.as_fraction()
        return f, f

    def negated(self) -> "TerminatingReal":
        return TerminatingReal(-self.value)

    def as_fraction(self) -> Fraction:
        return self.value.as_fraction()

    def __str__(self) -> str:
        return str(self.value)


@dataclass(frozen=True)
class PeriodicReal(RealNumber):
    """An eventually-periodic expansion, exactly a non-terminating rational.

    The structural fields (int_part, preperiod, period) are materialised
    lazily by long division, which yields the minimal period, so two
    instances are structurally equal exactly when their values are equal.
    """

    fraction: Fraction

    is_exact = True

    def __post_init__(self):
        den = self.fraction.denominator
        while den % 2 == 0:
            den //= 2
        while den % 5 == 0:
            den //= 5
        if den == 1:
            raise ValueError("value terminates; use TerminatingReal")

    @cached_property
    def _expansion(self) -> tuple[str, str]:
        """(preperiod, period) of the magnitude by long division.

        The cycle closes at the first repeated remainder, which gives the
        shortest period and shortest preperiod.
        """
        mag = abs(self.fraction)
        rem = mag - (mag.numerator // mag.denominator)
        p, q = rem.numerator, rem.denominator
        seen: dict[int, int] = {}
        digits: list[str] = []
        r = p
        while r not in seen:
            seen[r] = len(digits)
            r *= 10
            digits.append(str(r // q))
            r %= q
        start = seen[r]
        return "".join(digits[:start]), "".join(digits[start:])

    @property
    def negative(self) -> bool:
        return self.fraction < 0

    @property
    def int_part(self) -> int:
        mag = abs(self.fraction)
        return mag.numerator // mag.denominator

    @property
    def preperiod(self) -> str:
        return self._expansion[0]

    @property
    def period(self) -> str:
        return self._expansion[1]

    def digit_at(self, i: int) -> int:
        if i < 1:
            raise ValueError("digit positions start at 1")
        # floor(frac * 10**i) mod 10 without materialising the expansion
        mag = abs(self.fraction)
        rem = mag - self.int_part
        p, q = rem.numerator, rem.denominator
        return (p * pow(10, i, 10 * q)) % (10 * q) // q

    def integral_part(self) -> int:
        return self.fraction.numerator // self.fraction.denominator

    def bounds(self, m: int) -> tuple[Fraction, Fraction]:
        return self.fraction, self.fraction

    def negated(self) -> "PeriodicReal":
        return PeriodicReal(-self.fraction)

    def as_fraction(self) -> Fraction:
        return self.fraction

    @classmethod
    def from_parts(cls, negative: bool, int_part: int,
                   preperiod: str, period: str) -> "PeriodicReal":
        if not period:
            raise ValueError("period must be nonempty")
        k, p = len(preperiod), len(period)
        mag = Fraction(int_part)
        mag += Fraction(int_from_digits(preperiod or "0"), 10 ** k)
        mag += Fraction(int_from_digits(period), 10 ** k * (10 ** p - 1))
        return cls(-mag if negative else mag)

    def __str__(self) -> str:
        pre, per = self._expansion
        return ("-" if self.negative else "") + f"{self.int_part}.{pre}({per})"


def real_from_fraction(value: Fraction) -> RealNumber:
    """Exact real for a rational: terminating when the denominator is
    2^a * 5^b, periodic otherwise."""
    den = value.denominator
    while den % 2 == 0:
        den //= 2
    while den % 5 == 0:
        den //= 5
    if den == 1:
        return TerminatingReal(TerminatingDecimal.from_fraction(value))
    return PeriodicReal(value)


def real_from_terminating(value: TerminatingDecimal) -> TerminatingReal:
    return TerminatingReal(value)


ZERO_REAL = TerminatingReal(TerminatingDecimal(0))


class OracleReal(RealNumber):
    """A real given by an explicit digit stream.

    value = sign * (int_part + 0.d1 d2 ...) where ``digit_fn(i)`` yields
    the i-th fractional digit of the magnitude.  The constructor's
    ``promise`` documents why the stream is canonical (never ends in all
    nines, and is not a disguised zero when the sign is set); the library
    trusts it.  Wrap ``digit_fn`` with :func:`with_nine_run_check` to
    bolt on a runtime check.  Digits are memoised; memoisation is
    internally synchronised, so instances may be shared across threads.
    """

    def __init__(self, digit_fn: Callable[[int], int], *,
                 negative: bool = False, int_part: int = 0,
                 promise: str = "", caveat: Optional[str] = None):
        if int_part < 0:
            raise ValueError("int_part must be non-negative")
        self._digit_fn = digit_fn
        self.negative = negative
        self._int_part = int_part
        self.promise = promise
        self.caveat = caveat
        self._memo: list[int] = []
        self._lock = threading.Lock()

    @property
    def int_part(self) -> int:
        return self._int_part

    def digit_at(self, i: int) -> int:
        if i < 1:
            raise ValueError("digit positions start at 1")
        with self._lock:
            while len(self._memo) < i:
                d = self._digit_fn(len(self._memo) + 1)
                if not 0 <= d <= 9:
                    raise ValueError(f"digit stream produced {d!r}")
                self._memo.append(d)
            return self._memo[i - 1]

    def integral_part(self, scan_budget: int = DEFAULT_BUDGET) -> int:
        if not self.negative:
            return self._int_part
        # floor(-(n + 0.ddd...)) is -n for an all-zero tail, else -n - 1;
        # an all-zero tail can only be confirmed up to the scan budget
        for i in range(1, scan_budget + 1):
            if self.digit_at(i) != 0:
                return -self._int_part - 1
        raise DigitsUnstable(0, scan_budget)

    def bounds(self, m: int) -> tuple[Fraction, Fraction]:
        t = Fraction(int("0" + "".join(str(self.digit_at(i))
                                       for i in range(1, m + 1))), 10 ** m)
        lo = self._int_part + t
        hi = lo + Fraction(1, 10 ** m)
        if self.negative:
            return -hi, -lo
        return lo, hi

    def negated(self) -> "OracleReal":
        other = OracleReal(self._digit_fn, negative=not self.negative,
                           int_part=self._int_part, promise=self.promise,
                           caveat=self.caveat)
        # share the memo so the two directions never disagree
        other._memo = self._memo
        other._lock = self._lock
        return other

    def __repr__(self) -> str:
        return (f"OracleReal({'-' if self.negative else ''}{self._int_part}."
                f"..., promise={self.promise!r})")


def with_nine_run_check(digit_fn: Callable[[int], int],
                        window: int = NINE_CHECK_WINDOW) -> Callable[[int], int]:
    """Wrap a digit stream with a conservative canonical-form check.

    Before a 9 is emitted, up to ``window`` following digits are scanned
    for a non-nine.  A run longer than the window cannot be told apart
    from a forbidden all-nines tail, so it raises
    :class:`CanonicalViolation` even though a long legal run would too.
    """

    def checked(i: int) -> int:
        d = digit_fn(i)
        if d == 9:
            for j in range(i + 1, i + window + 1):
                if digit_fn(j) != 9:
                    return d
            raise CanonicalViolation(
                f"run of nines from digit {i} exceeds the "
                f"{window}-digit verification window")
        return d

    return checked


class ComputedReal(RealNumber):
    """A real known through a refinable rational enclosure.

    ``refine(m)`` must return (lo, hi) with lo <= value <= hi and
    hi - lo <= 10**-m.  Enclosures are cached and intersected so they
    only ever tighten.  Digits are pinned from enclosures: the prefix of
    length n is committed once an enclosure fits strictly inside one
    10**-n cell, and ``DigitsUnstable`` is raised if that fails with
    ``PIN_WINDOW`` extra refinement digits (the 0.999/1.000 boundary).
    """

    def __init__(self, refine: Callable[[int], tuple[Fraction, Fraction]],
                 description: str = ""):
        self._refine = refine
        self.description = description
        self._best: Optional[tuple[Fraction, Fraction]] = None
        self._pinned: Optional[tuple[bool, int, str]] = None
        self._lock = threading.RLock()

    def bounds(self, m: int) -> tuple[Fraction, Fraction]:
        with self._lock:
            tol = Fraction(1, 10 ** m)
            if self._best is not None and self._best[1] - self._best[0] <= tol:
                return self._best
            lo, hi = self._refine(m)
            if self._best is not None:
                lo = max(lo, self._best[0])
                hi = min(hi, self._best[1])
            if lo > hi:
                raise AssertionError("enclosure refinement became inconsistent")
            self._best = (lo, hi)
            return self._best

    def _pin(self, n: int, window: int = PIN_WINDOW) -> tuple[bool, int, str]:
        """Pin the canonical sign-magnitude prefix of length n."""
        with self._lock:
            if self._pinned is not None and len(self._pinned[2]) >= n:
                neg, ip, ds = self._pinned
                return neg, ip, ds[:n]
            step = 2
            m = n
            while True:
                lo, hi = self.bounds(m)
                if lo >= 0:
                    neg, mag_lo, mag_hi = False, lo, hi
                elif hi <= 0:
                    neg, mag_lo, mag_hi = True, -hi, -lo
                else:
                    neg = None  # sign unresolved; refine further
                if neg is not None:
                    a = (mag_lo * 10 ** n).__floor__()
                    b = (mag_hi * 10 ** n).__floor__()
                    if a == b:
                        break
                if m >= n + window:
                    raise DigitsUnstable(n, window)
                m = min(m + step, n + window)
                step *= 2
            s = str(a).rjust(n + 1, "0")
            ip, ds = (int(s[:-n]), s[-n:]) if n else (a, "")
            pinned = (neg, ip, ds)
            if self._pinned is None or len(ds) > len(self._pinned[2]):
                self._pinned = pinned
            return pinned

    def digit_at(self, i: int) -> int:
        if i < 1:
            raise ValueError("digit positions start at 1")
        return int(self._pin(i)[2][i - 1])

    @property
    def int_part(self) -> int:
        return self._pin(0)[1]

    @property
    def negative(self) -> bool:
        return self._pin(0)[0]

    def integral_part(self) -> int:
        # pin floor(value) directly in value space
        step = 2
        m = 0
        while True:
            lo, hi = self.bounds(m)
            a = lo.numerator // lo.denominator
            b = hi.numerator // hi.denominator
            if a == b:
                return a
            if m >= PIN_WINDOW:
                raise DigitsUnstable(0, PIN_WINDOW)
            m = min(m + step, PIN_WINDOW)
            step *= 2

    def prefix(self, n: int) -> DigitPrefix:
        neg, ip, ds = self._pin(n)
        return DigitPrefix(neg, ip, ds)

    def negated(self) -> "ComputedReal":
        parent = self

        def refine(m: int) -> tuple[Fraction, Fraction]:
            lo, hi = parent.bounds(m)
            return -hi, -lo

        return ComputedReal(refine, f"-({self.description})")

    def __repr__(self) -> str:
        return f"ComputedReal({self.description})"


# ---------------------------------------------------------------------------
# parsing


_REAL = re.compile(
    r"(-?)(0|[1-9][0-9]*)"      # sign, integer part without leading zeros
    r"(?:\.([0-9]*)"            # optional fractional digits
    r"(?:\(([0-9]+)\))?)?"      # optional repeating group
)


def parse_real(text: str) -> RealNumber:
    """Parse ``-? digits ('.' digits ('(' digits ')')?)?``.

    Examples: ``51.43``, ``-0.36``, ``0.1(6)``, ``0.(142857)``.  The
    repeating group must not be all nines (such an expansion is not in
    canonical form; the intended value is the terminating neighbour).
    An all-zero group is dropped.  Values are normalised, so the minimal
    period and preperiod come out regardless of how they were written.
    """
    m = _REAL.fullmatch(text)
    if m is None:
        raise MalformedLiteral(f"malformed real literal: {text!r}")
    sign, int_part, frac, period = m.groups()
    if "." in text and not frac and period is None:
        raise MalformedLiteral(f"malformed real literal: {text!r}")
    if period is not None and set(period) == {"9"}:
        raise MalformedLiteral(
            f"{text!r}: an all-nines tail is not canonical; "
            f"write the terminating value instead")
    value = Fraction(int_from_digits(int_part))
    if frac:
        value += Fraction(int_from_digits(frac), 10 ** len(frac))
    if period is not None and set(period) != {"0"}:
        k, p = len(frac or ""), len(period)
        value += Fraction(int_from_digits(period), 10 ** k * (10 ** p - 1))
    if sign == "-":
        value = -value
    return real_from_fraction(value)


# ---------------------------------------------------------------------------
# digit views and comparison


class _View:
    """Sign-magnitude digit view used by lexicographic walks."""

    __slots__ = ("flag", "int_part", "digit", "known_nonzero")

    def __init__(self, flag: int, int_part: int,
                 digit: Callable[[int], int], known_nonzero: bool):
        self.flag = flag
        self.int_part = int_part
        self.digit = digit
        self.known_nonzero = known_nonzero

    def nonzero_within(self, budget: int) -> bool:
        if self.known_nonzero or self.int_part > 0:
            return True
        for i in range(1, budget + 1):
            if self.digit(i) != 0:
                return True
        return False


def _view(x: RealNumber) -> _View:
    """May raise DigitsUnstable for a ComputedReal near a boundary."""
    if isinstance(x, TerminatingReal):
        td = x.value
        return _View(td.sign, x.int_part, td.digit, td.sign != 0)
    if isinstance(x, PeriodicReal):
        flag = -1 if x.negative else 1
        return _View(flag, x.int_part, x.digit_at, True)
    if isinstance(x, OracleReal):
        flag = -1 if x.negative else 1
        return _View(flag, x.int_part, x.digit_at, x.int_part > 0)
    if isinstance(x, ComputedReal):
        neg, ip, _ = x._pin(0)
        flag = -1 if neg else 1
        return _View(flag, ip, x.digit_at, ip > 0)
    raise TypeError(f"not a RealNumber: {x!r}")


def _walk(vx: _View, vy: _View, budget: int) -> Comparison:
    if vx.flag != vy.flag:
        if vx.flag > vy.flag:
            r = _walk(vy, vx, budget)
            if r is Comparison.LT:
                return Comparison.GT
            if r is Comparison.GT:
                return Comparison.LT
            return r
        # vx.flag < vy.flag: x <= y, strict unless both are zero
        if vx.flag == -1 and vy.flag == 1:
            decided = vx.nonzero_within(budget) or vy.nonzero_within(budget)
        elif vx.flag == -1:
            decided = vx.nonzero_within(budget)
        else:
            decided = vy.nonzero_within(budget)
        return Comparison.LT if decided else Comparison.UNDECIDED
    if vx.flag == 0:
        return Comparison.EQ
    # same sign: compare magnitudes, flip for negatives
    def verdict(c: Comparison) -> Comparison:
        if vx.flag > 0 or c is Comparison.UNDECIDED:
            return c
        return Comparison.GT if c is Comparison.LT else Comparison.LT

    if vx.int_part != vy.int_part:
        return verdict(Comparison.LT if vx.int_part < vy.int_part
                       else Comparison.GT)
    for i in range(1, budget + 1):
        dx, dy = vx.digit(i), vy.digit(i)
        if dx != dy:
            return verdict(Comparison.LT if dx < dy else Comparison.GT)
    return Comparison.UNDECIDED


def _digit_compare(x: RealNumber, y: RealNumber, budget: int) -> Comparison:
    """Pure lexicographic comparison on canonical expansions (no rational
    shortcut).  Used as a differential check against the exact order."""
    try:
        return _walk(_view(x), _view(y), budget)
    except DigitsUnstable:
        return Comparison.UNDECIDED


def compare(x: RealNumber, y: RealNumber,
            budget: int = DEFAULT_BUDGET) -> Comparison:
    """Budgeted order comparison.

    Exactly-representable pairs are compared through their rational
    values and never come back UNDECIDED.  Otherwise enclosures are
    tested for separation and the canonical digit streams are walked up
    to ``budget`` fractional digits; UNDECIDED means every examined
    position agreed.  A verdict reached at some budget is returned for
    every larger budget as well.
    """
    if x is y:
        return Comparison.EQ
    if x.is_exact and y.is_exact:
        fx, fy = x.as_fraction(), y.as_fraction()
        if fx < fy:
            return Comparison.LT
        if fx > fy:
            return Comparison.GT
        return Comparison.EQ
    for m in sorted({min(8, budget), min(64, budget), budget}):
        lx, hx = x.bounds(m)
        ly, hy = y.bounds(m)
        if hx < ly:
            return Comparison.LT
        if hy < lx:
            return Comparison.GT
        if lx == hx and ly == hy:
            # both enclosures collapsed to exact rationals
            return (Comparison.EQ if lx == ly
                    else Comparison.LT if lx < ly else Comparison.GT)
    return _digit_compare(x, y, budget)


def classify(x: RealNumber, budget: int = DEFAULT_BUDGET) -> Classification:
    """Sign of x, or raise SignUndecided when x cannot be told from zero
    within the budget."""
    if isinstance(x, TerminatingReal):
        return Classification(x.value.sign)
    if isinstance(x, PeriodicReal):
        return Classification(-1 if x.negative else 1)
    if isinstance(x, OracleReal):
        flag = -1 if x.negative else 1
        if x.int_part > 0:
            return Classification(flag)
        for i in range(1, budget + 1):
            if x.digit_at(i) != 0:
                return Classification(flag)
        raise SignUndecided(
            f"oracle stream is zero through {budget} digits")
    if isinstance(x, ComputedReal):
        step = 2
        m = min(2, budget)
        while True:
            lo, hi = x.bounds(m)
            if lo > 0:
                return Classification.POSITIVE
            if hi < 0:
                return Classification.NEGATIVE
            if lo == hi:
                return Classification.ZERO
            if m >= budget:
                raise SignUndecided(
                    f"value within 10^-{budget} of zero; sign unknown")
            m = min(m + step, budget)
            step *= 2
    raise TypeError(f"not a RealNumber: {x!r}")


def digit_at(x: RealNumber, i: int) -> int:
    return x.digit_at(i)


def integral_part(x: RealNumber) -> int:
    return x.integral_part()


# ---------------------------------------------------------------------------
# trailing-nines repair and betweenness


def canonicalize_trailing_nines(prefix: DigitPrefix,
                                nine_onset: int) -> TerminatingDecimal:
    """Exact value of the expansion that continues ``prefix`` with nines
    forever, starting at fractional position ``nine_onset``.

    Such an expansion is identified with a terminating decimal: drop the
    digits from the onset and add one unit in the previous place.
    """
    if not 1 <= nine_onset <= len(prefix) + 1:
        raise ValueError("nine_onset out of range for the prefix")
    if any(c != "9" for c in prefix.digits[nine_onset - 1:]):
        raise ValueError("prefix digits from the onset must all be 9")
    head = DigitPrefix(False, prefix.int_part, prefix.digits[:nine_onset - 1])
    result = head.as_terminating() + pow10(1 - nine_onset)
    return -result if prefix.negative else result


def _is_exact_zero(x: RealNumber) -> bool:
    return isinstance(x, TerminatingReal) and x.value.is_zero()


def _try_classify(x: RealNumber, budget: int) -> Optional[Classification]:
    try:
        return classify(x, budget)
    except SignUndecided:
        return None


def _above_zero_witness(b: RealNumber, budget: int) -> TerminatingDecimal:
    """A terminating decimal strictly between 0 and positive b."""
    try:
        vb = _view(b)
    except DigitsUnstable as exc:
        raise OrderUndecided("digits of the upper endpoint are unstable") from exc
    if vb.int_part >= 1:
        return TerminatingDecimal(1, 1)  # 0.1
    for m in range(1, budget + 1):
        if vb.digit(m) != 0:
            return pow10(-(m + 1))
    raise OrderUndecided(
        f"no nonzero digit of the upper endpoint within {budget} digits")


def _between_positive(a: RealNumber, b: RealNumber,
                      budget: int) -> TerminatingDecimal:
    """Witness for 0 < a < b, both signs proven."""
    try:
        va, vb = _view(a), _view(b)
    except DigitsUnstable as exc:
        raise OrderUndecided("endpoint digits are unstable") from exc

    def bump(last: int) -> TerminatingDecimal:
        # truncate a before position `last` and write a 9 there
        head = "".join(str(va.digit(i)) for i in range(1, last))
        units = va.int_part * 10 ** last + int(head + "9")
        return TerminatingDecimal(units, last)

    try:
        if va.int_part < vb.int_part:
            # raise some digit of a to 9: still below the next integer,
            # hence below b
            for k in range(1, budget + 1):
                if va.digit(k) < 9:
                    return bump(k)
        else:
            # equal integer parts: find the divergence, then raise the
            # first later sub-nine digit of a
            split = None
            for j in range(1, budget + 1):
                da, db = va.digit(j), vb.digit(j)
                if da != db:
                    if da > db:
                        raise OrderUndecided(
                            "digit streams contradict the established order")
                    split = j
                    break
            if split is None:
                raise OrderUndecided(
                    f"no divergence found within {budget} digits")
            for t in range(split + 1, budget + 1):
                if va.digit(t) < 9:
                    return bump(t)
    except DigitsUnstable as exc:
        raise OrderUndecided("endpoint digits are unstable") from exc
    # the examined prefix of a was all nines: fall back to the next integer
    candidate = TerminatingDecimal(a.integral_part() + 1)
    if compare(TerminatingReal(candidate), b, budget) is Comparison.LT:
        return candidate
    raise OrderUndecided(
        f"prefix of the lower endpoint is all nines through {budget} digits")


def between(a: RealNumber, b: RealNumber,
            budget: int = DEFAULT_BUDGET) -> TerminatingDecimal:
    """A terminating decimal strictly between a and b.

    Requires a < b to be decidable within the budget (NotLess if a >= b
    is proven, OrderUndecided if the comparison or the construction runs
    out of budget).  The result needs at most a handful of digits beyond
    the point where the endpoints diverge.
    """
    order = compare(a, b, budget)
    if order is Comparison.UNDECIDED:
        raise OrderUndecided("could not establish a < b within the budget")
    if order is not Comparison.LT:
        raise NotLess(f"expected a < b, found {order.value}")
    if _is_exact_zero(a):
        return _above_zero_witness(b, budget)
    if _is_exact_zero(b):
        return -_above_zero_witness(a.negated(), budget)
    ca = _try_classify(a, budget)
    cb = _try_classify(b, budget)
    if ca is Classification.NEGATIVE and cb is Classification.POSITIVE:
        return TerminatingDecimal(0)
    if ca is Classification.POSITIVE:
        return _between_positive(a, b, budget)
    if cb is Classification.NEGATIVE:
        return -_between_positive(b.negated(), a.negated(), budget)
    if ca is None and cb is Classification.POSITIVE:
        # a is within 10**-budget of zero; any witness 0 < c < b with
        # fewer digits than that is also provably above a
        c = _above_zero_witness(b, budget)
        if c.scale < budget:
            return c
    raise OrderUndecided("endpoint signs could not be resolved")


# ---------------------------------------------------------------------------
# rendering


def render_digits(x: RealNumber, n: int) -> str:
    """Canonical text for x: exact form when terminating, otherwise the
    first n fractional digits of the expansion."""
    if isinstance(x, TerminatingReal):
        return str(x.value)
    return x.prefix(n).render()
