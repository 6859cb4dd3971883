"""Command-line surface.

Subcommands: ``eval`` (expression to canonical text or enclosure),
``cmp`` (budgeted comparison), ``between`` (terminating witness strictly
between two values), ``sup`` (supremum of a set file), and ``rep``
(digit prefix of a fraction).

Expression grammar::

    expr   := term (('+' | '-') term)*
    term   := factor (('*' | '/') factor)*
    factor := '-'? (literal | 'sqrt(' expr ')' | '(' expr ')')

Literals are decimal reals, optionally with a repeating group, for
example ``51.43``, ``0.(142857)``, ``2.120(1)``.  Fractions like
``22/7`` need no special casing: ``/`` is division and the exact paths
make the quotient exact.

Exit codes: 0 success; 1 malformed input or I/O failure; 2 digits could
not stabilise (the enclosure is still printed); 3 a comparison or
construction was undecided within its budget.
"""

from __future__ import annotations

import argparse
import re
import sys
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Union

from .arithmetic import add, evaluate, mul, neg, reciprocal, sqrt
from .errors import (
    DecrealError,
    DigitsUnstable,
    MalformedLiteral,
    NotLess,
    OrderUndecided,
    SignUndecided,
)
from .rationals import decimal_representation, to_decimal
from .realnum import RealNumber, between, compare, parse_real, render_digits
from .supremum import load_set_file, sup
from .terminating import Comparison, int_from_digits

DEFAULT_DIGITS = 30
DEFAULT_CMP_BUDGET = 1000


# ---------------------------------------------------------------------------
# expressions


@dataclass(frozen=True)
class Literal:
    value: RealNumber


@dataclass(frozen=True)
class Negate:
    operand: "Expression"


@dataclass(frozen=True)
class Binary:
    op: str  # one of + - * /
    left: "Expression"
    right: "Expression"


@dataclass(frozen=True)
class SquareRoot:
    operand: "Expression"


Expression = Union[Literal, Negate, Binary, SquareRoot]

_TOKEN = re.compile(
    r"\s*(?:"
    r"(?P<lit>[0-9]+(?:\.[0-9]*(?:\([0-9]+\))?)?)"
    r"|(?P<name>sqrt)"
    r"|(?P<op>[()+\-*/])"
    r")")


def _tokenize(text: str) -> list[str]:
    tokens = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None:
            if text[pos:].strip() == "":
                break
            raise MalformedLiteral(
                f"unexpected character {text[pos:].lstrip()[0]!r} "
                f"in expression")
        tokens.append(m.group("lit") or m.group("name") or m.group("op"))
        pos = m.end()
    return tokens


class _Parser:
    def __init__(self, tokens: list[str]):
        self.tokens = tokens
        self.pos = 0

    def peek(self) -> Optional[str]:
        return self.tokens[self.pos] if self.pos < len(self.tokens) else None

    def take(self) -> str:
        tok = self.peek()
        if tok is None:
            raise MalformedLiteral("unexpected end of expression")
        self.pos += 1
        return tok

    def expect(self, tok: str) -> None:
        got = self.take()
        if got != tok:
            raise MalformedLiteral(f"expected {tok!r}, found {got!r}")

    def expr(self) -> Expression:
        node = self.term()
        while self.peek() in ("+", "-"):
            op = self.take()
            node = Binary(op, node, self.term())
        return node

    def term(self) -> Expression:
        node = self.factor()
        while self.peek() in ("*", "/"):
            op = self.take()
            node = Binary(op, node, self.factor())
        return node

    def factor(self) -> Expression:
        if self.peek() == "-":
            self.take()
            return Negate(self.factor_tail())
        return self.factor_tail()

    def factor_tail(self) -> Expression:
        tok = self.take()
        if tok == "sqrt":
            self.expect("(")
            inner = self.expr()
            self.expect(")")
            return SquareRoot(inner)
        if tok == "(":
            inner = self.expr()
            self.expect(")")
            return inner
        if tok in ("+", "-", "*", "/", ")"):
            raise MalformedLiteral(f"expected a value, found {tok!r}")
        return Literal(parse_real(tok))


def parse_expression(text: str) -> Expression:
    parser = _Parser(_tokenize(text))
    node = parser.expr()
    if parser.peek() is not None:
        raise MalformedLiteral(
            f"trailing input after expression: {parser.peek()!r}")
    return node


def evaluate_expression(node: Expression) -> RealNumber:
    if isinstance(node, Literal):
        return node.value
    if isinstance(node, Negate):
        return neg(evaluate_expression(node.operand))
    if isinstance(node, SquareRoot):
        return sqrt(evaluate_expression(node.operand))
    left = evaluate_expression(node.left)
    right = evaluate_expression(node.right)
    if node.op == "+":
        return add(left, right)
    if node.op == "-":
        return add(left, neg(right))
    if node.op == "*":
        return mul(left, right)
    return mul(left, reciprocal(right))


# ---------------------------------------------------------------------------
# subcommands


def _print_value(x: RealNumber, digits: int) -> None:
    # exact values print in their canonical literal form and re-parse to
    # themselves; streams print as a digit prefix
    if x.is_exact:
        print(str(x))
    else:
        print(render_digits(x, digits))


def _cmd_eval(args: argparse.Namespace) -> int:
    x = evaluate_expression(parse_expression(args.expr))
    if args.enclosure:
        print(str(evaluate(x, args.digits)))
        return 0
    try:
        _print_value(x, args.digits)
    except DigitsUnstable as exc:
        print(str(evaluate(x, args.digits)))
        print(f"digits unstable: {exc}", file=sys.stderr)
        return 2
    return 0


def _cmd_cmp(args: argparse.Namespace) -> int:
    x = evaluate_expression(parse_expression(args.left))
    y = evaluate_expression(parse_expression(args.right))
    verdict = compare(x, y, args.budget)
    print(verdict.value)
    return 3 if verdict is Comparison.UNDECIDED else 0


def _cmd_between(args: argparse.Namespace) -> int:
    a = evaluate_expression(parse_expression(args.lower))
    b = evaluate_expression(parse_expression(args.upper))
    print(str(between(a, b)))
    return 0


def _cmd_sup(args: argparse.Namespace) -> int:
    bounded = load_set_file(args.file)
    _print_value(sup(bounded), args.digits)
    return 0


_FRACTION = re.compile(r"(-?[0-9]+)(?:/([1-9][0-9]*))?")


def _cmd_rep(args: argparse.Namespace) -> int:
    m = _FRACTION.fullmatch(args.fraction.strip())
    if m is None:
        raise MalformedLiteral(
            f"expected a fraction like 22/7, found {args.fraction!r}")
    numerator = int_from_digits(m.group(1).lstrip("-"))
    if m.group(1).startswith("-"):
        numerator = -numerator
    value = Fraction(numerator, int_from_digits(m.group(2) or "1"))
    print(decimal_representation(to_decimal(value), args.digits).render())
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="decreal",
        description="exact decimal arithmetic on canonical expansions")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("eval", help="evaluate an expression")
    p.add_argument("expr")
    p.add_argument("--digits", type=int, default=DEFAULT_DIGITS)
    p.add_argument("--enclosure", action="store_true",
                   help="print a certified interval instead of digits")
    p.set_defaults(handler=_cmd_eval)

    p = sub.add_parser("cmp", help="compare two expressions")
    p.add_argument("left")
    p.add_argument("right")
    p.add_argument("--budget", type=int, default=DEFAULT_CMP_BUDGET)
    p.set_defaults(handler=_cmd_cmp)

    p = sub.add_parser("between",
                       help="terminating decimal strictly between two values")
    p.add_argument("lower")
    p.add_argument("upper")
    p.set_defaults(handler=_cmd_between)

    p = sub.add_parser("sup", help="supremum of a set file")
    p.add_argument("file")
    p.add_argument("--digits", type=int, default=DEFAULT_DIGITS)
    p.set_defaults(handler=_cmd_sup)

    p = sub.add_parser("rep", help="decimal digits of a fraction")
    p.add_argument("fraction", metavar="P/Q")
    p.add_argument("--digits", type=int, default=DEFAULT_DIGITS)
    p.set_defaults(handler=_cmd_rep)

    return parser


def _shield_operands(argv: list[str]) -> list[str]:
    """Keep argparse from reading ``-1/4`` or ``-2+3`` as option flags.

    A token that starts with ``-`` followed by a digit, ``.`` or ``(`` can
    only be operand text, never an option; a leading space makes argparse
    treat it as positional, and the expression tokenizer and fraction
    parser both skip surrounding whitespace.  ``--`` still works as the
    conventional end-of-options marker.
    """
    def is_negative_operand(tok: str) -> bool:
        return (tok.startswith("-") and len(tok) > 1
                and (tok[1].isdigit() or tok[1] in ".("))

    out: list[str] = []
    shielding = True
    for tok in argv:
        if tok == "--":
            shielding = False
        out.append(" " + tok if shielding and is_negative_operand(tok)
                   else tok)
    return out


def run(argv: Optional[list[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(
        _shield_operands(sys.argv[1:] if argv is None else argv))
    try:
        return args.handler(args)
    except (OrderUndecided, SignUndecided) as exc:
        print(f"undecided: {exc}", file=sys.stderr)
        return 3
    except DigitsUnstable as exc:
        print(f"digits unstable: {exc}", file=sys.stderr)
        return 2
    except (MalformedLiteral, NotLess, DecrealError, ZeroDivisionError,
            ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


def main() -> None:
    sys.exit(run())
