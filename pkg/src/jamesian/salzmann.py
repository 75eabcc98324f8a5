"""Salzmann's commutative proper loop on the real line.

The product ``x * t`` is affine in ``(x, t)`` on each of three cones
selected by the ratio ``x / t``::

    OUTER   x/t <= -3/2 or x/t >= 1     x + t/2
    MIDDLE  -2/3 <= x/t <= 1            x/2 + t
    STEEP   -3/2 <= x/t <= -2/3         2x + 2t
    T_ZERO  t == 0                      x

Neighbouring formulas agree on the shared rays, so the operation is
continuous.  The unit is 0 and the inverse of ``x`` is ``-x``.  The loop has
the inverse property and increasing translations but is not even power
associative: ``x^2 * x^2 = 9x/4`` while ``x^3 * x = 5x/2``.
"""

from __future__ import annotations

import enum
import math
from fractions import Fraction
from numbers import Rational

from .loops import EXACT, FLOAT, REAL_LINE, DomainError, RealLoop


class SalzmannCase(enum.Enum):
    OUTER = "OUTER"
    MIDDLE = "MIDDLE"
    STEEP = "STEEP"
    T_ZERO = "T_ZERO"


# Ratio bounds as exact fractions so the comparisons are exact on rationals.
_OUTER_LOW = Fraction(-3, 2)
_STEEP_HIGH = Fraction(-2, 3)


def _classify(x, t) -> SalzmannCase:
    if t == 0:
        return SalzmannCase.T_ZERO
    r = x / t
    # Boundary rays -3/2 and 1 go to OUTER, -2/3 goes to MIDDLE.
    if r <= _OUTER_LOW or r >= 1:
        return SalzmannCase.OUTER
    if r >= _STEEP_HIGH:
        return SalzmannCase.MIDDLE
    return SalzmannCase.STEEP


def apply_case(case: SalzmannCase, x, t):
    """Evaluate the affine formula of ``case`` at ``(x, t)`` without classifying."""
    if case is SalzmannCase.OUTER:
        return x + t / 2
    if case is SalzmannCase.MIDDLE:
        return x / 2 + t
    if case is SalzmannCase.STEEP:
        return 2 * x + 2 * t
    return x


def classify_case(x, t) -> SalzmannCase:
    """Which cone of the case table ``(x, t)`` falls in.

    On the shared rays ``x/t = 1`` and ``x/t = -3/2`` this returns OUTER,
    and on ``x/t = -2/3`` it returns MIDDLE.  The adjacent formulas agree
    there, so the choice does not change any product.  ``x = 0`` with
    ``t != 0`` has ratio 0 and is MIDDLE, giving ``t``.
    """
    return _classify(x, t)


def salzmann_mul(x: float, t: float) -> float:
    if not (math.isfinite(x) and math.isfinite(t)):
        raise DomainError(f"non-finite input ({x!r}, {t!r})")
    x = float(x)
    t = float(t)
    return apply_case(_classify(x, t), x, t)


def salzmann_mul_exact(x: Rational, t: Rational) -> Fraction:
    x = Fraction(x)
    t = Fraction(t)
    return apply_case(_classify(x, t), x, t)


def salzmann_loop(backend: str = FLOAT) -> RealLoop:
    op = salzmann_mul_exact if backend == EXACT else salzmann_mul
    return RealLoop(
        op=op,
        unit=Fraction(0) if backend == EXACT else 0.0,
        inv=lambda x: -x,
        carrier=REAL_LINE,
        backend=backend,
        name="salzmann",
    )


BOUNDARY_RATIOS = {
    Fraction(1): (SalzmannCase.OUTER, SalzmannCase.MIDDLE),
    Fraction(-3, 2): (SalzmannCase.OUTER, SalzmannCase.STEEP),
    Fraction(-2, 3): (SalzmannCase.MIDDLE, SalzmannCase.STEEP),
}
