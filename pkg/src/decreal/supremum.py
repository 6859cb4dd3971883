"""Digit-by-digit suprema of bounded sets of reals.

A bounded set is presented either as a finite list of members or as a
*prefix-max oracle*: a description of an infinite family by the largest
next digit any member achieves beyond a confirmed digit prefix.  The
supremum procedure selects the maximal integer part, then repeatedly the
maximal next digit; a selection stream that falls into an all-nines tail
is not canonical, so the oracle is required to volunteer such tails
through a hint, and the procedure repairs them by truncating and adding
one unit in the last confirmed place.  Families of negative values are
handled by the mirror procedure (minimal magnitude digits, negated at
the end), where the analogous volunteered tail is all zeros and the
repair is plain truncation.

Certification runs the other way: ``is_upper_bound`` and
``check_sup_certificate`` test a claimed supremum against members and
against sampled smaller bounds, never trusting the selection procedure
that produced it.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Iterable, Iterator, Optional

from .errors import CanonicalViolation, MalformedLiteral, OrderUndecided
from .realnum import (
    DEFAULT_BUDGET,
    DigitPrefix,
    OracleReal,
    RealNumber,
    TerminatingReal,
    between,
    canonicalize_trailing_nines,
    compare,
    parse_real,
    real_from_fraction,
)
from .terminating import Comparison, TerminatingDecimal, add as td_add, mul as td_mul

# digits confirmed eagerly before sup falls back to a lazy stream
HINT_WINDOW = 64
# members scanned when an enumerable family searches for a witness
ENUMERATION_SCAN = 200


# ---------------------------------------------------------------------------
# tail hints


@dataclass(frozen=True)
class Unknown:
    """The oracle has no information about the tail of the stream."""


@dataclass(frozen=True)
class AllNinesFrom:
    """Every selected digit from this fractional position on will be 9."""

    index: int

    def __post_init__(self):
        if self.index < 1:
            raise ValueError("tail positions start at 1")


@dataclass(frozen=True)
class AllZerosFrom:
    """Every selected digit from this fractional position on will be 0."""

    index: int

    def __post_init__(self):
        if self.index < 1:
            raise ValueError("tail positions start at 1")


TailHint = Unknown | AllNinesFrom | AllZerosFrom
UNKNOWN = Unknown()


# ---------------------------------------------------------------------------
# bounded sets


@dataclass(frozen=True)
class PrefixMaxOracle:
    """Presentation of an infinite bounded family by digit selection.

    For a family with a non-negative supremum, ``max_integral`` is the
    largest integer part attained by members and ``max_next_digit(p)``
    the largest next digit among members extending the confirmed prefix
    p.  For an all-negative family (``negative`` set), the same two
    callbacks instead report the smallest magnitude integer part and the
    smallest next magnitude digit: the procedure minimises and negates.

    Soundness contract (trusted, spot-checked for built-ins): every
    digit returned is achieved by some member extending the prefix, and
    ``tail_hint`` only announces a tail that the selection truly has
    from the given position on.

    ``member_above(b, budget)`` optionally produces a member strictly
    above b (or None when it cannot); ``bound_hint(b, budget)``
    optionally decides "b bounds every member" directly.  Both exist
    because those questions are only semi-decidable through digits.
    """

    max_integral: Callable[[], int]
    max_next_digit: Callable[[DigitPrefix], int]
    tail_hint: Callable[[DigitPrefix], TailHint]
    negative: bool = False
    member_above: Optional[
        Callable[[RealNumber, int], Optional[RealNumber]]] = None
    bound_hint: Optional[Callable[[RealNumber, int], Optional[bool]]] = None
    description: str = ""


@dataclass(frozen=True)
class FiniteSet:
    """A nonempty finite set of reals."""

    members: tuple[RealNumber, ...]

    def __post_init__(self):
        if not self.members:
            raise ValueError("a bounded set must be nonempty")


@dataclass(frozen=True)
class Family:
    """An infinite family given by an oracle, with an explicit bound."""

    oracle: PrefixMaxOracle
    upper_bound: TerminatingDecimal


BoundedSet = FiniteSet | Family


# ---------------------------------------------------------------------------
# finite set algebra


def set_sum(a: Iterable[TerminatingDecimal],
            b: Iterable[TerminatingDecimal]) -> set[TerminatingDecimal]:
    """Pairwise sums, duplicates collapsed."""
    a, b = list(a), list(b)
    if not a or not b:
        raise ValueError("set_sum requires nonempty operands")
    return {td_add(x, y) for x in a for y in b}


def set_product(a: Iterable[TerminatingDecimal],
                b: Iterable[TerminatingDecimal]) -> set[TerminatingDecimal]:
    """Pairwise products, duplicates collapsed."""
    a, b = list(a), list(b)
    if not a or not b:
        raise ValueError("set_product requires nonempty operands")
    return {td_mul(x, y) for x in a for y in b}


# ---------------------------------------------------------------------------
# the supremum procedure


def _max_member(members: Iterable[RealNumber],
                budget: int = DEFAULT_BUDGET) -> RealNumber:
    best = None
    for m in members:
        if best is None:
            best = m
            continue
        c = compare(m, best, budget)
        if c is Comparison.UNDECIDED:
            raise OrderUndecided(
                "finite-set members could not be ordered within the budget")
        if c is Comparison.GT:
            best = m
    return best


def _select(oracle: PrefixMaxOracle, prefix: DigitPrefix) -> DigitPrefix:
    d = oracle.max_next_digit(prefix)
    if not 0 <= d <= 9:
        raise ValueError(f"oracle selected a non-digit: {d!r}")
    return prefix.extend(d)


def _family_sup(family: Family, hint_window: int) -> RealNumber:
    oracle = family.oracle
    int_part = oracle.max_integral()
    if int_part < 0:
        raise ValueError("oracles report magnitude integer parts (>= 0)")
    prefix = DigitPrefix(oracle.negative, int_part, "")
    for _ in range(hint_window + 1):
        hint = oracle.tail_hint(prefix)
        if isinstance(hint, AllNinesFrom) and hint.index <= len(prefix) + 1:
            return TerminatingReal(
                canonicalize_trailing_nines(prefix, hint.index))
        if isinstance(hint, AllZerosFrom) and hint.index <= len(prefix) + 1:
            dropped = prefix.digits[hint.index - 1:]
            if any(c != "0" for c in dropped):
                raise CanonicalViolation(
                    "oracle announced an all-zeros tail over nonzero digits")
            head = DigitPrefix(prefix.negative, prefix.int_part,
                               prefix.digits[:hint.index - 1])
            return TerminatingReal(head.as_terminating())
        if len(prefix) >= hint_window:
            break
        prefix = _select(oracle, prefix)
    # no resolvable tail within the window: hand out the stream lazily
    run = min(hint_window, len(prefix))
    caveat = None
    if run and all(c == "9" for c in prefix.digits[-run:]):
        caveat = (
            f"the final {run} confirmed digits are all 9 and the oracle "
            f"gave no tail hint; if the true selection tail is all nines "
            f"this stream is the non-canonical spelling of its repair")
    state = {"prefix": prefix}

    def digit_fn(i: int) -> int:
        while len(state["prefix"]) < i:
            state["prefix"] = _select(oracle, state["prefix"])
        return int(state["prefix"].digits[i - 1])

    return OracleReal(digit_fn, negative=oracle.negative, int_part=int_part,
                      promise="digit-selection stream of a bounded family",
                      caveat=caveat)


def sup(S: BoundedSet, *, hint_window: int = HINT_WINDOW,
        cross_check: bool = False,
        budget: int = DEFAULT_BUDGET) -> RealNumber:
    """Least upper bound of a bounded set.

    Finite sets return their maximal member directly; with
    ``cross_check`` the digit-selection procedure is run as well and any
    disagreement in the first ``hint_window`` digits raises.  Families
    run the selection procedure; the result is exact when a tail hint
    resolves, otherwise a lazy digit stream (with a caveat flag if the
    confirmed digits end in a long unexplained run of nines).
    """
    if isinstance(S, FiniteSet):
        best = _max_member(S.members, budget)
        if cross_check:
            mirror = _family_sup(finite_family(S.members), hint_window)
            depth = min(hint_window, 40)
            got = mirror.prefix(depth)
            want = best.prefix(depth)
            if got != want:
                raise AssertionError(
                    f"digit procedure disagrees with the maximum: "
                    f"{got.render()} vs {want.render()}")
        return best
    return _family_sup(S, hint_window)


# ---------------------------------------------------------------------------
# upper-bound and certificate checks


@dataclass(frozen=True)
class Yes:
    pass


@dataclass(frozen=True)
class No:
    witness: RealNumber


@dataclass(frozen=True)
class Undecided:
    reason: str = ""


@dataclass(frozen=True)
class Pass:
    pass


@dataclass(frozen=True)
class FailBound:
    witness: RealNumber


@dataclass(frozen=True)
class FailLeastness:
    witness: RealNumber


def _as_real(x: RealNumber | TerminatingDecimal) -> RealNumber:
    return TerminatingReal(x) if isinstance(x, TerminatingDecimal) else x


def is_upper_bound(b: RealNumber | TerminatingDecimal, S: BoundedSet,
                   budget: int = DEFAULT_BUDGET) -> Yes | No | Undecided:
    """Is every member of S at most b?

    No always carries a member witness.  Undecided reports budget
    exhaustion, or a family that exceeds the bound only beyond anything
    its witness search can name.
    """
    b = _as_real(b)
    if isinstance(S, FiniteSet):
        undecided = None
        for m in S.members:
            c = compare(m, b, budget)
            if c is Comparison.GT:
                return No(m)
            if c is Comparison.UNDECIDED:
                undecided = m
        if undecided is not None:
            return Undecided(
                "a member could not be ordered against the bound")
        return Yes()
    oracle = S.oracle
    if oracle.bound_hint is not None:
        verdict = oracle.bound_hint(b, budget)
        if verdict is True:
            return Yes()
        if verdict is False:
            w = (oracle.member_above(b, budget)
                 if oracle.member_above else None)
            if w is not None:
                return No(w)
            return Undecided("bound fails but no member witness was found")
    s = _family_sup(S, HINT_WINDOW)
    c = compare(s, b, budget)
    if c in (Comparison.LT, Comparison.EQ):
        return Yes()
    if c is Comparison.GT:
        w = oracle.member_above(b, budget) if oracle.member_above else None
        if w is not None:
            return No(w)
        return Undecided(
            "the supremum stream exceeds the bound but the family "
            "exposes no member witness")
    if oracle.member_above is not None:
        w = oracle.member_above(b, budget)
        if w is not None:
            return No(w)
    return Undecided("comparison against the supremum ran out of budget")


def _member_above(S: BoundedSet, p: RealNumber,
                  budget: int) -> Optional[RealNumber]:
    if isinstance(S, FiniteSet):
        for m in S.members:
            if compare(m, p, budget) is Comparison.GT:
                return m
        return None
    if S.oracle.member_above is not None:
        return S.oracle.member_above(p, budget)
    return None


def _sub_delta(s: RealNumber, delta: TerminatingDecimal) -> RealNumber:
    if s.is_exact:
        return real_from_fraction(s.as_fraction() - delta.as_fraction())
    from .arithmetic import add
    return add(s, TerminatingReal(-delta))


def _add_delta(s: RealNumber, delta: TerminatingDecimal) -> RealNumber:
    if s.is_exact:
        return real_from_fraction(s.as_fraction() + delta.as_fraction())
    from .arithmetic import add
    return add(s, TerminatingReal(delta))


def check_sup_certificate(s: RealNumber | TerminatingDecimal, S: BoundedSet,
                          samples: int = 50,
                          budget: int = DEFAULT_BUDGET
                          ) -> Pass | FailBound | FailLeastness:
    """Sampled certification that s is the least upper bound of S.

    Two obligations: s bounds every member (FailBound with a member
    witness otherwise), and nothing below s does — probed at the dyadic
    offsets p = s - 2^-k for k = 1..samples, plus a betweenness probe
    tightening each offset toward s.  A probe p refutes leastness when
    no member exceeds it and p itself checks out as an upper bound
    (FailLeastness with witness p).  Sanity samples above s must stay
    upper bounds.  Raises OrderUndecided if a probe can settle neither
    way within the budget.
    """
    if samples < 1:
        raise ValueError("at least one sample is required")
    s = _as_real(s)
    if isinstance(S, FiniteSet):
        verdict = is_upper_bound(s, S, budget)
        if isinstance(verdict, No):
            return FailBound(verdict.witness)
        if isinstance(verdict, Undecided):
            raise OrderUndecided(
                f"bound side of the certificate is undecided: "
                f"{verdict.reason}")
    else:
        # family bound side by member sampling: comparing s against the
        # selection stream it may have come from is never decidable, so
        # the obligation is refuted by a member witness or stands
        w = (S.oracle.member_above(s, budget)
             if S.oracle.member_above is not None else None)
        if w is not None:
            return FailBound(w)

    def leastness_probe(p: RealNumber) -> Optional[FailBound | FailLeastness]:
        q = _member_above(S, p, budget)
        if q is not None:
            if compare(q, s, budget) is Comparison.GT:
                return FailBound(q)
            return None
        inner = is_upper_bound(p, S, budget)
        if isinstance(inner, Yes):
            if compare(p, s, budget) is Comparison.LT:
                return FailLeastness(p)
            return None
        if isinstance(inner, No):
            return None
        raise OrderUndecided(
            "a leastness probe could settle neither way within the budget")

    for k in range(1, samples + 1):
        # 2^-k, exactly: 5^k / 10^k
        delta = TerminatingDecimal(5 ** k, k)
        p = _sub_delta(s, delta)
        outcome = leastness_probe(p)
        if outcome is not None:
            return outcome
        try:
            tighter = between(p, s, budget)
        except OrderUndecided:
            continue
        outcome = leastness_probe(TerminatingReal(tighter))
        if outcome is not None:
            return outcome
    for k in range(1, min(3, samples) + 1):
        above = _add_delta(s, TerminatingDecimal(5 ** k, k))
        verdict = is_upper_bound(above, S, budget)
        if isinstance(verdict, No):
            return FailBound(verdict.witness)
    return Pass()


# ---------------------------------------------------------------------------
# families backed by explicit member lists


def _signum(x: RealNumber) -> int:
    f = x.as_fraction()
    return -1 if f < 0 else (1 if f > 0 else 0)


def _matches(member: RealNumber, prefix: DigitPrefix) -> bool:
    if member.int_part != prefix.int_part:
        return False
    return all(member.digit_at(i + 1) == int(prefix.digits[i])
               for i in range(len(prefix)))


def finite_family(members: Iterable[RealNumber]) -> Family:
    """A prefix-max oracle over an explicit finite set of exact reals.

    The selection stream provably follows the digits of the maximal
    member (lexicographic and numeric order agree on canonical
    expansions), so the tail hint comes straight from that member when
    it terminates.  Exists for cross-checking sup against plain max.
    """
    members = tuple(members)
    if not members:
        raise ValueError("a bounded set must be nonempty")
    if not all(m.is_exact for m in members):
        raise ValueError("member-backed families require exact members")
    negative = all(_signum(m) < 0 for m in members)
    if negative:
        pool = members
        best = min(pool, key=lambda m: abs(m.as_fraction()))
        pick = min
    else:
        pool = tuple(m for m in members if _signum(m) >= 0)
        best = max(pool, key=lambda m: m.as_fraction())
        pick = max

    def max_integral() -> int:
        return pick(m.int_part for m in pool)

    def max_next_digit(prefix: DigitPrefix) -> int:
        survivors = [m for m in pool if _matches(m, prefix)]
        return pick(m.digit_at(len(prefix) + 1) for m in survivors)

    def tail_hint(prefix: DigitPrefix) -> TailHint:
        if isinstance(best, TerminatingReal):
            return AllZerosFrom(best.value.scale + 1)
        return UNKNOWN

    def member_above(b: RealNumber, budget: int) -> Optional[RealNumber]:
        for m in members:
            if compare(m, b, budget) is Comparison.GT:
                return m
        return None

    bound = TerminatingDecimal(best.as_fraction().__floor__() + 1)
    return Family(PrefixMaxOracle(
        max_integral, max_next_digit, tail_hint, negative=negative,
        member_above=member_above,
        description=f"finite family of {len(members)} members"), bound)


# ---------------------------------------------------------------------------
# built-in families


def _scan_above(enumerate_members: Callable[[], Iterator[TerminatingDecimal]],
                b: RealNumber, budget: int,
                scan: int = ENUMERATION_SCAN) -> Optional[RealNumber]:
    for i, m in enumerate(enumerate_members()):
        if i >= scan:
            return None
        if compare(TerminatingReal(m), b, budget) is Comparison.GT:
            return TerminatingReal(m)
    return None


def _nine_family() -> Family:
    """0.9, 0.99, 0.19, 0.991, 0.9991, ... — supremum 1, never attained."""

    def enumerate_members() -> Iterator[TerminatingDecimal]:
        yield TerminatingDecimal(9, 1)
        yield TerminatingDecimal(99, 2)
        yield TerminatingDecimal(19, 2)
        j = 2
        while True:
            # j nines then a one: 0.99...91
            yield TerminatingDecimal(10 ** (j + 1) - 9, j + 1)
            j += 1

    oracle = PrefixMaxOracle(
        max_integral=lambda: 0,
        max_next_digit=lambda prefix: 9,
        tail_hint=lambda prefix: AllNinesFrom(1),
        member_above=lambda b, budget: _scan_above(enumerate_members, b,
                                                   budget),
        description="terminating decimals crowding up to 1")
    return Family(oracle, TerminatingDecimal(1))


def _negated_nine_family() -> Family:
    """-1, -0.9, -0.99, -0.19, -0.991, ... — supremum -0.19, attained."""

    def enumerate_members() -> Iterator[TerminatingDecimal]:
        yield TerminatingDecimal(-1)
        yield TerminatingDecimal(-9, 1)
        yield TerminatingDecimal(-99, 2)
        yield TerminatingDecimal(-19, 2)
        j = 2
        while True:
            yield TerminatingDecimal(-(10 ** (j + 1) - 9), j + 1)
            j += 1

    def min_next_digit(prefix: DigitPrefix) -> int:
        # minimal magnitudes: 0.19 wins the first digit, then stays
        return {0: 1, 1: 9}.get(len(prefix), 0)

    oracle = PrefixMaxOracle(
        max_integral=lambda: 0,
        max_next_digit=min_next_digit,
        tail_hint=lambda prefix: AllZerosFrom(3),
        negative=True,
        member_above=lambda b, budget: _scan_above(enumerate_members, b,
                                                   budget),
        description="negated crowding family plus -1")
    return Family(oracle, TerminatingDecimal(0))


def _vanishing_family() -> Family:
    """-0.1, -0.01, -0.001, ... — supremum 0, never attained."""

    def enumerate_members() -> Iterator[TerminatingDecimal]:
        j = 1
        while True:
            yield TerminatingDecimal(-1, j)
            j += 1

    oracle = PrefixMaxOracle(
        max_integral=lambda: 0,
        max_next_digit=lambda prefix: 0,
        tail_hint=lambda prefix: AllZerosFrom(1),
        negative=True,
        member_above=lambda b, budget: _scan_above(enumerate_members, b,
                                                   budget),
        description="negative powers of ten approaching zero")
    return Family(oracle, TerminatingDecimal(0))


def _worked_example_family() -> Family:
    return finite_family((
        parse_real("1"),
        parse_real("2.12"),
        parse_real("1.(1)"),
        parse_real("2.120(1)"),
        parse_real("1.120101(1)"),
    ))


def lower_cut(c: RealNumber) -> Family:
    """The family of all terminating decimals strictly below an exact c.

    The selection stream reproduces the digits of c itself; its sup is
    exactly c (for terminating c via the tail repair, otherwise as the
    identical digit stream).  Witnesses come from betweenness: any
    bound b < c is exceeded by a member strictly between b and c.
    """
    if not c.is_exact:
        raise ValueError("lower cuts are supported for exact reals")
    f = c.as_fraction()
    mag = abs(f)
    negative = f <= 0

    if not negative:
        # integer parts of members below c reach exactly ceil(c) - 1
        top = -((-f).__floor__())  # ceil
        start = top - 1

        def max_next_digit(prefix: DigitPrefix) -> int:
            base = prefix.value()
            step = Fraction(1, 10 ** (len(prefix) + 1))
            for d in range(9, -1, -1):
                if base + d * step < f:
                    return d
            raise AssertionError("no digit keeps the prefix below the cut")
    else:
        start = mag.numerator // mag.denominator  # floor(|c|)

        def max_next_digit(prefix: DigitPrefix) -> int:
            base = abs(prefix.value())
            step = Fraction(1, 10 ** (len(prefix) + 1))
            for d in range(10):
                if base + (d + 1) * step > mag:
                    return d
            raise AssertionError("no digit pushes the magnitude past the cut")

    def tail_hint(prefix: DigitPrefix) -> TailHint:
        if isinstance(c, TerminatingReal):
            scale = c.value.scale
            return (AllZerosFrom(scale + 1) if negative
                    else AllNinesFrom(scale + 1))
        return UNKNOWN

    def member_above(b: RealNumber, budget: int) -> Optional[RealNumber]:
        if compare(b, c, budget) is Comparison.LT:
            try:
                return TerminatingReal(between(b, c, budget))
            except OrderUndecided:
                return None
        return None

    def bound_hint(b: RealNumber, budget: int) -> Optional[bool]:
        verdict = compare(b, c, budget)
        if verdict is Comparison.UNDECIDED:
            return None
        return verdict is not Comparison.LT

    bound = TerminatingDecimal(-((-f).__floor__()))  # ceil(c)
    return Family(PrefixMaxOracle(
        lambda: start, max_next_digit, tail_hint, negative=negative,
        member_above=member_above, bound_hint=bound_hint,
        description=f"terminating decimals below {c}"), bound)


_BUILTINS: dict[str, Callable[[], Family]] = {
    "paper-A": _worked_example_family,
    "paper-B": _nine_family,
    "paper-C": _negated_nine_family,
    "paper-D": _vanishing_family,
}


def builtin_family(name: str) -> Family:
    """Resolve a set-file family directive: one of the bundled example
    families, or ``lower-cut <literal>``."""
    name = name.strip()
    if name in _BUILTINS:
        return _BUILTINS[name]()
    if name.startswith("lower-cut"):
        literal = name[len("lower-cut"):].strip()
        if not literal:
            raise MalformedLiteral("lower-cut requires a literal argument")
        return lower_cut(parse_real(literal))
    raise MalformedLiteral(f"unknown family: {name!r}")


def load_set_file(path: str) -> BoundedSet:
    """Read a bounded set: one real literal per line, or a single
    ``# family: <name>`` header selecting a built-in family.  Other
    ``#`` lines and blank lines are ignored."""
    family: Optional[str] = None
    literals: list[str] = []
    with open(path, encoding="utf-8") as fh:
        for raw in fh:
            line = raw.strip()
            if not line:
                continue
            if line.startswith("#"):
                body = line[1:].strip()
                if body.startswith("family:"):
                    if family is not None:
                        raise MalformedLiteral(
                            "set file declares more than one family")
                    family = body[len("family:"):].strip()
                continue
            literals.append(line)
    if family is not None:
        if literals:
            raise MalformedLiteral(
                "a family set file must not also list members")
        return builtin_family(family)
    if not literals:
        raise MalformedLiteral("set file is empty")
    return FiniteSet(tuple(parse_real(text) for text in literals))
