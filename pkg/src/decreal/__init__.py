"""Exact real arithmetic on canonical decimal expansions.

Every value is a signed decimal expansion with no tail of nines, so
distinct expansions denote distinct reals and the usual order on reals
is the lexicographic order on expansions.  The package provides exact
terminating and repeating decimals, lazily refined computed reals,
budgeted comparison, strict-betweenness witnesses, digit-by-digit
suprema of bounded sets, certified interval evaluation of arithmetic
expressions, and a command-line calculator over all of it.
"""

from .arithmetic import (
    Enclosure,
    add,
    archimedean_witness,
    evaluate,
    mul,
    neg,
    reciprocal,
    sqrt,
)
from .errors import (
    CanonicalViolation,
    DecrealError,
    DigitsUnstable,
    MalformedLiteral,
    NegativeRadicand,
    NotLess,
    OrderUndecided,
    SignUndecided,
)
from .rationals import (
    NoPeriodFound,
    PeriodFound,
    PhiOk,
    PhiViolation,
    assert_no_period,
    decimal_representation,
    from_periodic,
    phi_check,
    to_decimal,
)
from .realnum import (
    Classification,
    ComputedReal,
    DigitPrefix,
    OracleReal,
    PeriodicReal,
    RealNumber,
    TerminatingReal,
    between,
    canonicalize_trailing_nines,
    classify,
    compare,
    digit_at,
    integral_part,
    parse_real,
    real_from_fraction,
    render_digits,
)
from .supremum import (
    AllNinesFrom,
    AllZerosFrom,
    Family,
    FiniteSet,
    PrefixMaxOracle,
    builtin_family,
    check_sup_certificate,
    finite_family,
    is_upper_bound,
    load_set_file,
    lower_cut,
    set_product,
    set_sum,
    sup,
)
from .terminating import Comparison, TerminatingDecimal, parse_terminating

__version__ = "0.1.0"

__all__ = [
    "AllNinesFrom",
    "AllZerosFrom",
    "CanonicalViolation",
    "Classification",
    "Comparison",
    "ComputedReal",
    "DecrealError",
    "DigitPrefix",
    "DigitsUnstable",
    "Enclosure",
    "Family",
    "FiniteSet",
    "MalformedLiteral",
    "NegativeRadicand",
    "NoPeriodFound",
    "NotLess",
    "OracleReal",
    "OrderUndecided",
    "PeriodFound",
    "PeriodicReal",
    "PhiOk",
    "PhiViolation",
    "PrefixMaxOracle",
    "RealNumber",
    "SignUndecided",
    "TerminatingDecimal",
    "TerminatingReal",
    "add",
    "archimedean_witness",
    "assert_no_period",
    "between",
    "builtin_family",
    "canonicalize_trailing_nines",
    "check_sup_certificate",
    "classify",
    "compare",
    "decimal_representation",
    "digit_at",
    "evaluate",
    "finite_family",
    "from_periodic",
    "integral_part",
    "is_upper_bound",
    "load_set_file",
    "lower_cut",
    "mul",
    "neg",
    "parse_real",
    "parse_terminating",
    "phi_check",
    "real_from_fraction",
    "reciprocal",
    "render_digits",
    "set_product",
    "set_sum",
    "sqrt",
    "sup",
    "to_decimal",
]
