"""Odd increasing homeomorphisms ``f: (0, 1) -> R`` with ``f(1 - x) = -f(x)``.

These conjugate a loop on the real line into a loop on (0, 1).  Every
family here has a closed-form inverse; :func:`from_forward` wraps a
user-supplied map and inverts it by bisection instead.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Callable, Sequence

from .loops import CheckReport, DomainError, NumericError

LOGIT = "logit"
SCALED_LOGIT = "scaled_logit"
PIECEWISE_IDENTITY = "piecewise_identity"
CUSTOM = "custom"

CLOSED_FORM = "closed-form"
BISECTION = "bisection"


def _check_open(x):
    if not 0 < x < 1:
        raise DomainError(f"{x!r} is outside (0, 1)")


@dataclass(frozen=True)
class OddHomeomorphism:
    forward: Callable[[float], float]
    inverse: Callable[[float], float]
    kind: str
    params: dict = field(default_factory=dict)
    inversion: str = CLOSED_FORM
    tolerance: float = 0.0

    def __call__(self, x):
        return self.forward(x)

    @property
    def label(self) -> str:
        if self.kind == SCALED_LOGIT:
            return f"scaled-logit:{self.params['k']:g}"
        if self.kind == PIECEWISE_IDENTITY:
            return f"piecewise:{self.params['eps']:g}"
        return self.kind


def _expit(y: float) -> float:
    if y >= 0:
        return 1.0 / (1.0 + math.exp(-y))
    z = math.exp(y)
    return z / (1.0 + z)


def logit() -> OddHomeomorphism:
    def forward(x):
        _check_open(x)
        return math.log(x / (1 - x))

    return OddHomeomorphism(forward, _expit, LOGIT)


def scaled_logit(k: float) -> OddHomeomorphism:
    """``x -> k log(x / (1 - x))`` for ``k > 0``."""
    if not k > 0:
        raise ValueError("k must be positive")

    def forward(x):
        _check_open(x)
        return k * math.log(x / (1 - x))

    def inverse(y):
        return _expit(y / k)

    return OddHomeomorphism(forward, inverse, SCALED_LOGIT, {"k": k})


def piecewise_identity(eps: float = 0.1) -> OddHomeomorphism:
    """``x - 1/2`` on ``[eps, 1 - eps]`` with logarithmic tails.

    Below ``eps`` the map is ``(eps - 1/2) + log(x / eps)``, which matches
    value at the knot and runs to minus infinity at 0.  Above ``1 - eps`` it
    is the odd reflection of the lower tail.
    """
    if not 0 < eps < 0.5:
        raise ValueError(f"eps must lie in (0, 1/2), got {eps!r}")
    low = eps - 0.5

    def lower(x):
        return low + math.log(x / eps)

    def lower_inv(y):
        return eps * math.exp(y - low)

    def forward(x):
        _check_open(x)
        if x < eps:
            return lower(x)
        if x > 1 - eps:
            return -lower(1 - x)
        return x - 0.5

    def inverse(y):
        if y < low:
            return lower_inv(y)
        if y > -low:
            return 1 - lower_inv(-y)
        return y + 0.5

    return OddHomeomorphism(forward, inverse, PIECEWISE_IDENTITY, {"eps": eps})


def invert_by_bisection(forward: Callable[[float], float], y: float, tolerance: float = 1e-12) -> float:
    """Solve ``forward(x) = y`` on (0, 1) for an increasing surjection.

    The bracket starts at ``[1/2 - 1/4, 1/2 + 1/4]`` and its gap to each end
    of (0, 1) halves until the bracket straddles ``y``; then plain bisection
    runs until ``|forward(x) - y| <= tolerance * max(1, |y|)``.  If the
    bracket shrinks to adjacent floats first, the closer endpoint is
    returned: near 0 and 1 a steep ``forward`` can skip over the target band.
    """
    if not tolerance > 0:
        raise ValueError("tolerance must be positive")
    if not math.isfinite(y):
        raise DomainError(f"non-finite target {y!r}")
    target = tolerance * max(1.0, abs(y))

    lo, gap = 0.25, 0.25
    while forward(lo) > y:
        gap /= 2
        lo = gap
        if lo == 0.0:
            raise NumericError(f"no preimage of {y!r} near 0; forward is not surjective")
    hi, gap = 0.75, 0.25
    while forward(hi) < y:
        gap /= 2
        hi = 1 - gap
        if hi == 1.0:
            raise NumericError(f"no preimage of {y!r} near 1; forward is not surjective")

    while True:
        mid = lo + (hi - lo) / 2
        value = forward(mid)
        if abs(value - y) <= target:
            return mid
        if mid <= lo or mid >= hi:
            # Bracket is two adjacent floats; neither may meet the target
            # when forward is steep, so return the closer one.
            return min((lo, hi), key=lambda x: abs(forward(x) - y))
        if value < y:
            lo = mid
        else:
            hi = mid


def from_forward(forward: Callable[[float], float], tolerance: float = 1e-12, name: str = CUSTOM) -> OddHomeomorphism:
    """Wrap an odd increasing ``forward`` with a bisection inverse."""

    def inverse(y):
        if y == 0:
            return 0.5
        if y > 0:
            # floats are denser near 0 than near 1
            return 1 - invert_by_bisection(forward, -y, tolerance)
        return invert_by_bisection(forward, y, tolerance)

    return OddHomeomorphism(forward, inverse, name, {}, BISECTION, tolerance)


def check_odd_symmetry(f: OddHomeomorphism, grid: Sequence[float], tol: float = 1e-12) -> CheckReport:
    worst = 0.0
    worst_case = []
    for x in grid:
        r = abs(f.forward(1 - x) + f.forward(x))
        if r > worst or not worst_case:
            worst = r
            worst_case = [(x,)]
    return CheckReport("odd_symmetry", len(grid), worst, worst_case, worst <= tol, tol)


def parse_homeo(text: str) -> OddHomeomorphism:
    """Build a map from ``logit``, ``scaled-logit:K`` or ``piecewise:EPS``."""
    name, _, arg = text.partition(":")
    name = name.strip().lower().replace("_", "-")
    try:
        if name == "logit" and not arg:
            return logit()
        if name == "scaled-logit":
            return scaled_logit(float(arg))
        if name == "piecewise":
            return piecewise_identity(float(arg) if arg else 0.1)
    except ValueError as exc:
        raise ValueError(f"bad homeomorphism {text!r}: {exc}") from None
    raise ValueError(f"unknown homeomorphism {text!r}")
