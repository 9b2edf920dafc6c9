"""Exact q-series toolkit for overpartition counting with bounded part spread.

The package has five layers:

* :mod:`overq.series` -- truncated Laurent series over exact rationals.
* :mod:`overq.qfunctions` -- Pochhammer symbols, Gaussian and overpartition
  q-binomials, and a basic hypergeometric series evaluator.
* :mod:`overq.enumeration` -- brute-force partition enumeration oracles.
* :mod:`overq.identities` -- generating functions and identity checks that
  pit closed forms against direct sums and the oracles.
* :mod:`overq.cli` -- the ``overq`` command (table / verify / coeff).
"""

from .series import (
    EmptyWindowError,
    MismatchInfo,
    NotInvertibleError,
    PrecisionExceededError,
    QMonomial,
    QSeries,
    QSeriesError,
    WindowViolationError,
    add,
    coeff,
    div,
    equal_to_order,
    from_terms,
    geometric,
    invert,
    monomial,
    mul,
    one,
    zero,
)

__version__ = "0.1.0"

__all__ = [
    "EmptyWindowError",
    "MismatchInfo",
    "NotInvertibleError",
    "PrecisionExceededError",
    "QMonomial",
    "QSeries",
    "QSeriesError",
    "WindowViolationError",
    "add",
    "coeff",
    "div",
    "equal_to_order",
    "from_terms",
    "geometric",
    "invert",
    "monomial",
    "mul",
    "one",
    "zero",
    "__version__",
]
