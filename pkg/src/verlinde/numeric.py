"""Arbitrary-precision evaluation and integer certification.

All trigonometric sums in this package are known in advance to be integers;
they are evaluated in binary floating point at a caller-chosen precision
(default 192 bits) and rounded, and the rounding residual is kept as an
audit trail.  When a residual exceeds the integrality tolerance the
precision is doubled, up to three times, before giving up.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Tuple, Union

import mpmath

DEFAULT_PRECISION = 192
MIN_PRECISION = 64
MAX_ESCALATIONS = 3


class IntegralityError(ArithmeticError):
    """A sum failed to certify as an integer at the maximum precision."""

    def __init__(self, raw_value: str, residual: float, precision_bits: int):
        self.raw_value = raw_value
        self.residual = residual
        self.precision_bits = precision_bits
        super().__init__(
            f"value {raw_value} is not within tolerance of an integer "
            f"(residual {residual:.3e} at {precision_bits} bits)"
        )


@dataclass(frozen=True)
class VerlindeResult:
    """A certified integer plus the diagnostics of its evaluation."""

    value: int
    residual: float
    precision_bits: int
    term_count: int
    group_label: str
    level: Union[int, Tuple[int, ...]]
    genus: int


def check_precision(precision: int) -> int:
    if precision < MIN_PRECISION:
        raise ValueError(f"precision must be >= {MIN_PRECISION} bits, got {precision}")
    return precision


def integrality_tolerance(value: int) -> float:
    """max(1e-9 |value|, 1e-30), capped below the rounding ambiguity at 0.4."""
    return min(max(1e-9 * abs(value), 1e-30), 0.4)


def four_sin_sq(x: Fraction) -> mpmath.mpf:
    """4 sin^2(pi x) for exact rational x, at the ambient working precision.

    The argument is reduced mod 1 exactly before any floating point; an
    integer argument would give a zero factor and is rejected.
    """
    frac = x - (x.numerator // x.denominator)
    if frac == 0:
        raise ValueError(f"zero trigonometric factor: sin(pi * {x}) = 0")
    y = mpmath.sinpi(mpmath.mpf(frac.numerator) / frac.denominator)
    return 4 * y * y


def certify_integer(
    compute: Callable[[int], mpmath.mpf], precision: int
) -> Tuple[mpmath.mpf, int, float, int]:
    """Evaluate ``compute(bits)`` and round, escalating precision on failure.

    Returns ``(raw, value, residual, bits_used)``.  ``compute`` must be a
    pure function of the precision; it is re-invoked at doubled precision
    until the result is within :func:`integrality_tolerance` of an integer,
    and :class:`IntegralityError` is raised after three doublings fail.
    """
    bits = check_precision(precision)
    for attempt in range(MAX_ESCALATIONS + 1):
        raw = compute(bits)
        with mpmath.workprec(bits):
            value = int(mpmath.nint(raw))
            residual = float(abs(raw - value))
        if residual < integrality_tolerance(value):
            return raw, value, residual, bits
        if attempt < MAX_ESCALATIONS:
            bits *= 2
    raise IntegralityError(mpmath.nstr(raw, 30), residual, bits)
