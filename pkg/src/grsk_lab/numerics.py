"""Scalar kernels shared by every other module.

The discrete theory is subtraction-free, so it runs end-to-end on exact
positive rationals (``fractions.Fraction``).  The semi-discrete theory is
continuous and lives in the log domain on ordinary floats.  The
zero-temperature theory uses the (max, +) semiring over exact rationals with
``None`` standing in for the -inf annihilator.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Iterable

NEG_INF = float("-inf")

#: Additive identity of the (max, +) semiring ("zero mass").
TROP_ZERO = None


def as_fraction(value: Fraction | int | str) -> Fraction:
    """Coerce an int, a "p/q" string or a Fraction to an exact Fraction."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return Fraction(value)
    raise TypeError(f"cannot interpret {value!r} as an exact rational")


def pos_rational(value: Fraction | int | str) -> Fraction:
    """Validate and return a strictly positive exact rational."""
    q = as_fraction(value)
    if q <= 0:
        raise ValueError(f"expected a strictly positive rational, got {q}")
    return q


def rational_pow_beta(x: Fraction, beta: int) -> Fraction:
    """Exact x**beta for integer inverse temperatures beta >= 1."""
    if beta < 1:
        raise ValueError(f"beta must be a positive integer, got {beta}")
    return x**beta


def logsumexp(values: Iterable[float]) -> float:
    """log(sum(exp(v))) with the usual max shift; exact -inf on all--inf input."""
    vals = list(values)
    if not vals:
        raise ValueError("logsumexp of an empty list")
    m = max(vals)
    if m == NEG_INF:
        return NEG_INF
    return m + math.log(math.fsum(math.exp(v - m) for v in vals))


def trop_max(a: Fraction | None, b: Fraction | None) -> Fraction | None:
    """Semiring addition: max, with None as the neutral element."""
    if a is None:
        return b
    if b is None:
        return a
    return a if a >= b else b


def trop_add(a: Fraction | None, b: Fraction | None) -> Fraction | None:
    """Semiring multiplication: +, with None absorbing."""
    if a is None or b is None:
        return None
    return a + b


def trop_sum(values: Iterable[Fraction | None]) -> Fraction | None:
    """max over a finite collection, None if empty or all None."""
    best: Fraction | None = None
    for v in values:
        best = trop_max(best, v)
    return best
