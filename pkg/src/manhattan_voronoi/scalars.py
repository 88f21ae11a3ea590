"""Exact rational scalar type used for every coordinate, length and area.

All geometry in this package is carried out over arbitrary-precision
rationals.  Bisector breakpoints only ever require halving, so staying in
the rationals is free and removes every tolerance question from the area
bookkeeping.  We use gmpy2.mpq when available (much faster on large
denominators) and fall back to fractions.Fraction.
"""

from __future__ import annotations

from typing import Union

try:
    from gmpy2 import mpq as Q
except ImportError:  # pragma: no cover - gmpy2 is a declared dependency
    from fractions import Fraction as Q

Scalar = Q
ScalarLike = Union[int, str, Scalar]

ZERO = Q(0)
ONE = Q(1)
HALF = Q(1, 2)


def to_scalar(value) -> Scalar:
    """Convert ints, 'p/q' strings, decimal strings and rationals exactly.

    Floats are rejected: callers that really want to rationalize a float
    must do so explicitly (see balance.search internals).
    """
    if isinstance(value, float):
        raise TypeError(
            "refusing to convert float to exact scalar implicitly: %r" % value
        )
    if isinstance(value, str):
        value = value.strip()
    return Q(value)


def scalar_str(value: Scalar) -> str:
    """Canonical 'p' or 'p/q' string form."""
    return str(Q(value))


def scalar_float(value: Scalar) -> float:
    return float(Q(value))
