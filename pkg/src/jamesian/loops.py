"""Binary operations on the real line or on (0, 1), and generic loop checkers.

A loop is a set with a binary operation that has a two-sided unit and
two-sided inverses but need not be associative.  The checkers here sample
an operation and report the worst residual they see.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Iterable, Optional, Sequence

REAL_LINE = "R"
UNIT_INTERVAL = "(0,1)"

FLOAT = "float"
EXACT = "exact"

DEFAULT_TOL = 1e-9


class DomainError(ValueError):
    """An input lies outside the carrier of the operation."""


class NumericError(ArithmeticError):
    """A numeric procedure could not reach its target."""


@dataclass(frozen=True)
class RealLoop:
    op: Callable
    unit: float
    inv: Callable
    carrier: str = REAL_LINE
    backend: str = FLOAT
    name: str = "loop"

    def __post_init__(self):
        if self.carrier not in (REAL_LINE, UNIT_INTERVAL):
            raise ValueError(f"unknown carrier {self.carrier!r}")
        if self.backend not in (FLOAT, EXACT):
            raise ValueError(f"unknown backend {self.backend!r}")

    def __call__(self, x, y):
        return self.op(x, y)

    def contains(self, x) -> bool:
        if isinstance(x, float) and not math.isfinite(x):
            return False
        if self.carrier == UNIT_INTERVAL:
            return 0 < x < 1
        return True

    def require(self, *xs):
        for x in xs:
            if not self.contains(x):
                raise DomainError(f"{x!r} is outside the carrier {self.carrier} of {self.name}")


@dataclass
class CheckReport:
    property: str
    samples: int
    max_residual: float
    worst_case: list = field(default_factory=list)
    passed: bool = True
    tolerance: float = DEFAULT_TOL
    seed: Optional[int] = None

    def to_dict(self) -> dict:
        return {
            "property": self.property,
            "samples": self.samples,
            "max_residual": float(self.max_residual),
            "worst_case": [[float(v) for v in case] for case in self.worst_case],
            "passed": bool(self.passed),
            "tolerance": self.tolerance,
            "seed": self.seed,
        }


@dataclass(frozen=True)
class AssociativityWitness:
    x: float
    y: float
    z: float
    lhs: float
    rhs: float
    defect: float

    @property
    def triple(self):
        return (self.x, self.y, self.z)


def _report(name, residuals: Iterable, tol, seed=None) -> CheckReport:
    """Fold ``(residual, inputs)`` pairs into a report, keeping the worst."""
    count = 0
    worst = None
    worst_case = []
    for residual, inputs in residuals:
        count += 1
        if worst is None or residual > worst:
            worst = residual
            worst_case = [tuple(inputs)]
    if worst is None:
        worst = 0
    if tol == 0:
        passed = worst == 0
    else:
        passed = worst <= tol
    return CheckReport(name, count, worst, worst_case, passed, tol, seed)


def _tol(loop: RealLoop, tol):
    if tol is not None:
        return tol
    return 0 if loop.backend == EXACT else DEFAULT_TOL


def _diff(a, b):
    return abs(a - b)


def check_identity(loop: RealLoop, samples: Sequence, tol=None) -> CheckReport:
    loop.require(*samples)
    e = loop.unit

    def residuals():
        for x in samples:
            yield max(_diff(loop.op(x, e), x), _diff(loop.op(e, x), x)), (x,)

    return _report("identity", residuals(), _tol(loop, tol))


def check_inverse(loop: RealLoop, samples: Sequence, tol=None) -> CheckReport:
    """Two-sided inverse law plus ``inv(inv(x)) = x``."""
    loop.require(*samples)
    e = loop.unit

    def residuals():
        for x in samples:
            xi = loop.inv(x)
            r = max(
                _diff(loop.op(x, xi), e),
                _diff(loop.op(xi, x), e),
                _diff(loop.inv(xi), x),
            )
            yield r, (x,)

    return _report("inverse", residuals(), _tol(loop, tol))


def check_inverse_property(loop: RealLoop, samples: Sequence, tol=None) -> CheckReport:
    """Check ``x(x^-1 y) = y`` and ``(y x^-1) x = y`` on sampled pairs."""
    for x, y in samples:
        loop.require(x, y)
    op, inv = loop.op, loop.inv

    def residuals():
        for x, y in samples:
            xi = inv(x)
            left = op(x, op(xi, y))
            right = op(op(y, xi), x)
            yield max(_diff(left, y), _diff(right, y)), (x, y)

    return _report("inverse_property", residuals(), _tol(loop, tol))


def check_commutative(loop: RealLoop, samples: Sequence, tol=None) -> CheckReport:
    for x, y in samples:
        loop.require(x, y)

    def residuals():
        for x, y in samples:
            yield _diff(loop.op(x, y), loop.op(y, x)), (x, y)

    return _report("commutative", residuals(), _tol(loop, tol))


def check_translation_monotone(loop: RealLoop, t, grid: Sequence) -> CheckReport:
    """Right translation ``x -> op(x, t)`` must be strictly increasing on ``grid``.

    ``max_residual`` is the largest ``op(x_i, t) - op(x_{i+1}, t)``; it is
    negative exactly when every step goes up, and the report passes only then.
    """
    loop.require(t, *grid)
    if any(b <= a for a, b in zip(grid, grid[1:])):
        raise DomainError("grid must be strictly increasing")
    values = [loop.op(x, t) for x in grid]
    worst = None
    worst_case = []
    for i in range(len(values) - 1):
        drop = values[i] - values[i + 1]
        if worst is None or drop > worst:
            worst = drop
            worst_case = [(grid[i], grid[i + 1], t)]
    if worst is None:
        worst = -math.inf
    return CheckReport(
        "translation_monotone", len(grid), worst, worst_case, worst < 0, 0.0
    )


def power(loop: RealLoop, x, n: int):
    """Left-nested power: ``x^n = op(x^(n-1), x)`` and ``x^0`` is the unit.

    Only ``x^1``, ``x^2`` and ``x^3`` are bracketing-independent in a
    commutative loop.  From ``n = 4`` on this is one bracketing out of
    several, and in a loop that is not power associative other bracketings
    give other values.
    """
    if n < 0:
        raise ValueError("n must be non-negative")
    loop.require(x)
    if n == 0:
        return loop.unit
    acc = x
    for _ in range(n - 1):
        acc = loop.op(acc, x)
    return acc


def _power_candidates(loop: RealLoop) -> list:
    if loop.carrier == UNIT_INTERVAL:
        xs = [0.6, 0.4, 0.55, 0.45, 0.7, 0.3, 0.8, 0.2, 0.9, 0.1]
    else:
        xs = [1, -1, Fraction(1, 2), Fraction(-1, 2), 2, -2, 10, -10]
        if loop.backend == FLOAT:
            xs = [float(x) for x in xs]
    return xs


def _sample(rng: random.Random, loop: RealLoop, span: float):
    if loop.carrier == UNIT_INTERVAL:
        x = rng.random()
        while x == 0.0:
            x = rng.random()
        return x
    x = rng.uniform(-span, span)
    return Fraction(x) if loop.backend == EXACT else x


def associator(loop: RealLoop, x, y, z):
    """Return ``(op(op(x, y), z), op(x, op(y, z)))``."""
    return loop.op(loop.op(x, y), z), loop.op(x, loop.op(y, z))


def find_associativity_witness(
    loop: RealLoop,
    threshold: float,
    budget: int = 10_000,
    seed: int = 0,
    span: float = 10.0,
    candidates: Optional[Sequence] = None,
) -> Optional[AssociativityWitness]:
    """Search for a triple whose associator defect reaches ``threshold``.

    Power-family triples go first: ``(x*x, x, x)`` compares ``x^3 * x``
    with ``x^2 * x^2``, and ``(x, x*x, x)`` is tried too.  Then ``budget``
    uniform random triples drawn with ``seed``.  Returns the first triple
    that qualifies, or None.
    """
    if not threshold > 0:
        raise ValueError("threshold must be positive")
    if candidates is None:
        candidates = _power_candidates(loop)

    def triples():
        for x in candidates:
            if not loop.contains(x):
                continue
            xx = loop.op(x, x)
            yield (xx, x, x)
            yield (x, xx, x)
        rng = random.Random(seed)
        for _ in range(budget):
            yield tuple(_sample(rng, loop, span) for _ in range(3))

    for x, y, z in triples():
        lhs, rhs = associator(loop, x, y, z)
        defect = abs(lhs - rhs)
        if defect >= threshold:
            return AssociativityWitness(x, y, z, lhs, rhs, defect)
    return None


def additive_group(backend: str = FLOAT) -> RealLoop:
    """``(R, +)``, the associative baseline."""
    return RealLoop(
        op=lambda x, y: x + y,
        unit=0,
        inv=lambda x: -x,
        carrier=REAL_LINE,
        backend=backend,
        name="addition",
    )
