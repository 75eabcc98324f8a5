"""Closed-form pieces of the Salzmann-transfer function near the centre.

Take ``f`` equal to ``x - 1/2`` on ``I = [eps, 1 - eps]``.  Whenever ``a``
and ``b`` lie in ``I`` and the Salzmann product ``(a - 1/2) * (1/2 - b)``
lands in ``I' = [eps - 1/2, 1/2 - eps]``, both transfer maps act as shifts
and ``J`` is affine:

    A1   a - b/2 + 1/4
    A2   a/2 - b + 3/4
    A3   2a - 2b + 1/2

``Delta = A1 | A2 | A3``.  Everything else is ``OUTSIDE`` and needs the
generic evaluator.  The line ``b = 1/2`` gets its own label, ``B_HALF``,
since the ratio that selects the piece is undefined there and
``J(a, 1/2) = a`` anyway.
"""

from __future__ import annotations

import csv
import enum
import random
from dataclasses import dataclass
from fractions import Fraction

from .functions import from_loop_transfer
from .homeo import piecewise_identity
from .loops import CheckReport, DomainError
from .salzmann import salzmann_loop

DEFAULT_EPS = 0.1


class RegionLabel(enum.Enum):
    A1 = "A1"
    A2 = "A2"
    A3 = "A3"
    OUTSIDE = "OUTSIDE"
    B_HALF = "B_HALF"


class OutOfRegionError(DomainError):
    pass


@dataclass(frozen=True)
class ExplicitRegionSpec:
    eps: float = DEFAULT_EPS

    def __post_init__(self):
        if not 0 < self.eps < 0.5:
            raise ValueError(f"eps must lie in (0, 1/2), got {self.eps!r}")

    @property
    def identity_interval(self):
        return (self.eps, 1 - self.eps)

    @property
    def shifted_interval(self):
        return (self.eps - 0.5, 0.5 - self.eps)

    def in_identity(self, x) -> bool:
        lo, hi = self.identity_interval
        return lo <= x <= hi

    def in_shifted(self, y) -> bool:
        lo, hi = self.shifted_interval
        return lo <= y <= hi


_A1_LOW = Fraction(-3, 2)
_A3_HIGH = Fraction(-2, 3)


def _pieces(a, b):
    """Ratio test and affine image (before the final +1/2) for each piece."""
    r = (a - 0.5) / (0.5 - b)
    return (
        (RegionLabel.A1, r <= _A1_LOW or r >= 1, a - b / 2 - 0.25),
        (RegionLabel.A2, _A3_HIGH <= r <= 1, a / 2 - b + 0.25),
        (RegionLabel.A3, _A1_LOW <= r <= _A3_HIGH, 2 * a - 2 * b),
    )


def classify(a: float, b: float, spec: ExplicitRegionSpec = ExplicitRegionSpec()) -> RegionLabel:
    """Label a point of the open unit square.

    Points on a shared ratio boundary belong to two pieces; A1 wins over A2
    and A2 over A3.  The formulas agree there.
    """
    if not (0 < a < 1 and 0 < b < 1):
        raise DomainError(f"({a!r}, {b!r}) is outside the open unit square")
    if b == 0.5:
        return RegionLabel.B_HALF
    if not (spec.in_identity(a) and spec.in_identity(b)):
        return RegionLabel.OUTSIDE
    for label, ratio_ok, image in _pieces(a, b):
        if ratio_ok and spec.in_shifted(image):
            return label
    return RegionLabel.OUTSIDE


def region_formula(label: RegionLabel, a, b):
    if label is RegionLabel.A1:
        return a - b / 2 + 0.25
    if label is RegionLabel.A2:
        return a / 2 - b + 0.75
    if label is RegionLabel.A3:
        return 2 * a - 2 * b + 0.5
    if label is RegionLabel.B_HALF:
        return a
    raise OutOfRegionError("no closed form outside Delta")


def explicit_eval(a: float, b: float, spec: ExplicitRegionSpec = ExplicitRegionSpec()) -> float:
    label = classify(a, b, spec)
    if label is RegionLabel.OUTSIDE:
        raise OutOfRegionError(
            f"({a}, {b}) is outside Delta for eps={spec.eps}; use the generic transfer evaluator"
        )
    return region_formula(label, a, b)


def transfer_function(spec: ExplicitRegionSpec = ExplicitRegionSpec()):
    return from_loop_transfer(salzmann_loop(), piecewise_identity(spec.eps))


def cross_validate(
    spec: ExplicitRegionSpec = ExplicitRegionSpec(),
    samples: int = 10_000,
    seed: int = 0,
    pinned=(),
    tol: float = 1e-12,
) -> CheckReport:
    """Compare the closed forms with the generic transfer evaluator on Delta.

    Uniform points are drawn, those outside Delta dropped, until ``samples``
    points of Delta are collected; ``pinned`` points are compared as well.
    """
    J = transfer_function(spec)
    rng = random.Random(seed)
    points = list(pinned)
    kept = 0
    while kept < samples:
        a, b = rng.random(), rng.random()
        if 0 < a < 1 and 0 < b < 1 and classify(a, b, spec) is not RegionLabel.OUTSIDE:
            points.append((a, b))
            kept += 1
    worst = 0.0
    worst_case = []
    for a, b in points:
        r = abs(explicit_eval(a, b, spec) - J(a, b))
        if r > worst or not worst_case:
            worst, worst_case = r, [(a, b)]
    return CheckReport("explicit_vs_transfer", len(points), worst, worst_case, worst <= tol, tol, seed)


def region_grid(spec: ExplicitRegionSpec = ExplicitRegionSpec(), resolution: int = 99) -> list:
    """Row-major ``(a, b, label)`` on the lattice ``i / (resolution + 1)``."""
    if resolution < 2:
        raise ValueError("resolution must be at least 2")
    pts = [i / (resolution + 1) for i in range(1, resolution + 1)]
    return [(a, b, classify(a, b, spec)) for a in pts for b in pts]


def write_region_csv(rows, path) -> None:
    with open(path, "w", newline="") as fh:
        w = csv.writer(fh, lineterminator="\n")
        w.writerow(["a", "b", "label"])
        for a, b, label in rows:
            w.writerow([f"{a:.12g}", f"{b:.12g}", label.value])
