"""Involutive Jamesian functions and the checks that certify them.

A Jamesian function ``J(a, b)`` gives the probability that a team with
winning percentage ``a`` beats one with percentage ``b``.  It is involutive
when ``J(a, J(a, b)) = b``, ``J(a, b) + J(b, a) = 1`` and ``a -> J(a, b)``
is strictly increasing.

Three constructions are provided:

* :func:`adams` - the log5 closed form.
* :func:`from_representable` - ``f^-1(f(a) - f(b))`` for an odd
  homeomorphism ``f``.  These are exactly the transitive ones.
* :func:`from_loop_transfer` - ``f^-1(f(a) * f(1 - b))`` for a loop ``*``
  on the real line.  With a proper loop such as Salzmann's the result is
  involutive but not transitive, hence not representable.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass, field
from typing import Callable, Iterable, Optional, Sequence

from . import loops
from .homeo import OddHomeomorphism
from .loops import CheckReport, DomainError, RealLoop

ADAMS = "adams"
REPRESENTABLE = "representable"
LOOP_TRANSFER = "loop_transfer"
FROM_INDUCED = "from_induced"

REPRESENTABLE_CONSISTENT = "REPRESENTABLE_CONSISTENT"
NON_TRANSITIVE_WITNESS_FOUND = "NON_TRANSITIVE_WITNESS_FOUND"

DEFAULT_SEED = 20240101
PINNED_TRIPLE = (0.8, 0.6, 0.7)


class ConstructionError(ValueError):
    """A loop failed the hypotheses needed for the transfer construction."""


class UndefinedCornerError(DomainError):
    """``(0, 0)`` and ``(1, 1)`` have no consistent limit value."""


@dataclass(frozen=True)
class JamesianFunction:
    evaluator: Callable[[float, float], float]
    construction: str
    params: dict = field(default_factory=dict)
    tolerance: float = 1e-12

    def __call__(self, a, b):
        return self.evaluator(a, b)

    @property
    def label(self) -> str:
        parts = [self.construction]
        for k, v in self.params.items():
            parts.append(f"{k}={v}")
        return " ".join(parts)


def _check_open(a, b):
    if not (0 < a < 1 and 0 < b < 1):
        raise DomainError(f"({a!r}, {b!r}) is outside the open unit square")


def adams(a: float, b: float) -> float:
    """Log5: ``a(1-b) / (a(1-b) + (1-a)b)``."""
    _check_open(a, b)
    num = a * (1 - b)
    return num / (num + (1 - a) * b)


def adams_function() -> JamesianFunction:
    return JamesianFunction(adams, ADAMS, {}, 1e-12)


def from_representable(f: OddHomeomorphism) -> JamesianFunction:
    fwd, inv = f.forward, f.inverse

    def J(a, b):
        _check_open(a, b)
        return inv(fwd(a) - fwd(b))

    tol = 1e-12 if f.inversion == "closed-form" else 10 * f.tolerance
    return JamesianFunction(J, REPRESENTABLE, {"f": f.label}, tol)


def _transfer_samples(seed: int = 7, n: int = 200):
    rng = random.Random(seed)
    xs = [rng.uniform(-5.0, 5.0) for _ in range(n)]
    pairs = [(rng.uniform(-5.0, 5.0), rng.uniform(-5.0, 5.0)) for _ in range(n)]
    return xs, pairs


def check_transfer_hypotheses(loop: RealLoop, tol: float = 1e-9) -> list:
    """Unit 0, inverse ``-x``, commutativity, IP and increasing translations."""
    if loop.carrier != loops.REAL_LINE:
        raise ConstructionError("transfer needs a loop on the real line")
    xs, pairs = _transfer_samples()
    failed = []
    if loop.unit != 0:
        failed.append("unit")
    if any(abs(loop.inv(x) + x) > tol for x in xs):
        failed.append("inverse_is_negation")
    reports = [
        loops.check_identity(loop, xs, tol),
        loops.check_inverse(loop, xs, tol),
        loops.check_commutative(loop, pairs, tol),
        loops.check_inverse_property(loop, pairs, tol),
    ]
    grid = [-5 + 10 * i / 200 for i in range(201)]
    for t in (-3.0, -1.0, 0.5, 2.0):
        reports.append(loops.check_translation_monotone(loop, t, grid))
    failed.extend(r.property for r in reports if not r.passed)
    return sorted(set(failed))


def from_loop_transfer(loop: RealLoop, f: OddHomeomorphism, check: bool = True) -> JamesianFunction:
    """``J(a, b) = f^-1(f(a) * f(1 - b))`` for a loop ``*`` on the real line."""
    if check:
        failed = check_transfer_hypotheses(loop)
        if failed:
            raise ConstructionError(f"loop {loop.name!r} fails: {', '.join(failed)}")
    fwd, inv, op = f.forward, f.inverse, loop.op

    def J(a, b):
        _check_open(a, b)
        # f(1 - b) = -f(b); the right side keeps precision when b is tiny.
        return inv(op(fwd(a), -fwd(b)))

    tol = 1e-9 if f.inversion == "closed-form" else max(10 * f.tolerance, 1e-9)
    return JamesianFunction(J, LOOP_TRANSFER, {"loop": loop.name, "f": f.label}, tol)


def induced_loop(J: JamesianFunction) -> RealLoop:
    """The loop ``a . b = J(a, 1 - b)`` on (0, 1), unit 1/2, inverse ``1 - a``."""
    return RealLoop(
        op=lambda a, b: J(a, 1 - b),
        unit=0.5,
        inv=lambda a: 1 - a,
        carrier=loops.UNIT_INTERVAL,
        backend=loops.FLOAT,
        name=f"induced[{J.label}]",
    )


def from_induced(loop: RealLoop) -> JamesianFunction:
    """Recover ``J(a, b) = a . (1 - b)`` from a Jamesian loop on (0, 1)."""
    if loop.carrier != loops.UNIT_INTERVAL:
        raise ConstructionError("need a loop on (0, 1)")

    def J(a, b):
        _check_open(a, b)
        return loop.op(a, 1 - b)

    return JamesianFunction(J, FROM_INDUCED, {"loop": loop.name}, 1e-9)


def lattice(n: int = 99) -> list:
    """Interior lattice points ``i / (n + 1)`` for ``i = 1..n``."""
    if n < 1:
        raise ValueError("lattice size must be positive")
    return [i / (n + 1) for i in range(1, n + 1)]


# --- axioms --------------------------------------------------------------


def _fold(name, items: Iterable, tol) -> CheckReport:
    worst = 0.0
    worst_case = []
    count = 0
    for r, case in items:
        count += 1
        if r > worst or not worst_case:
            worst = r
            worst_case = [case]
    return CheckReport(name, count, worst, worst_case, worst <= tol, tol)


def _monotone(J, grid) -> CheckReport:
    """``a -> J(a, b0)`` strictly increasing along ``grid`` for every ``b0``."""
    worst = None
    worst_case = []
    for b0 in grid:
        prev = None
        for a in grid:
            v = J(a, b0)
            if prev is not None:
                drop = prev[1] - v
                if worst is None or drop > worst:
                    worst = drop
                    worst_case = [(prev[0], a, b0)]
            prev = (a, v)
    if worst is None:
        worst = -math.inf
    return CheckReport("monotone", len(grid) ** 2, worst, worst_case, worst < 0, 0.0)


def check_axioms(J: JamesianFunction, grid: Sequence[float] = None, tol: float = None) -> list:
    """Check the involutive axioms and their basic consequences on ``grid x grid``.

    Reports: involutive, complement, monotone, reflection ``J(a,b) =
    J(1-b, 1-a)``, diagonal ``J(a,a) = 1/2``, unit ``J(a, 1/2) = a`` and
    solution symmetry ``J(a, c) = b`` for ``c = J(a, b)``.  The monotone
    report is strict: it passes only when every step goes up.
    """
    if grid is None:
        grid = lattice(99)
    if tol is None:
        tol = J.tolerance
    pairs = [(a, b) for a in grid for b in grid]
    values = {p: J(*p) for p in pairs}

    def involutive():
        for (a, b), c in values.items():
            yield abs(J(a, c) - b), (a, b)

    def complement():
        for (a, b), c in values.items():
            yield abs(c + J(b, a) - 1), (a, b)

    def reflection():
        for (a, b), c in values.items():
            yield abs(c - J(1 - b, 1 - a)), (a, b)

    def diagonal():
        for a in grid:
            yield abs(J(a, a) - 0.5), (a, a)

    def unit():
        for a in grid:
            yield abs(J(a, 0.5) - a), (a, 0.5)

    def solution_symmetry():
        # J(a, b) = c  iff  J(a, c) = b, exercised from the c side.
        for (a, c), b in values.items():
            yield abs(J(a, b) - c), (a, c)

    return [
        _fold("involutive", involutive(), tol),
        _fold("complement", complement(), tol),
        _monotone(J, grid),
        _fold("reflection", reflection(), tol),
        _fold("diagonal", diagonal(), tol),
        _fold("unit", unit(), tol),
        _fold("solution_symmetry", solution_symmetry(), tol),
    ]


# --- transitivity ----------------------------------------------------------


@dataclass
class DefectReport:
    max_defect: float
    argmax: tuple
    samples: int
    threshold: float
    verdict: str
    seed: Optional[int] = None

    def to_dict(self) -> dict:
        # "passed" means transitive at the threshold; callers do not gate on it.
        return {
            "property": "transitivity",
            "samples": self.samples,
            "max_residual": self.max_defect,
            "worst_case": [list(self.argmax)],
            "passed": self.verdict == REPRESENTABLE_CONSISTENT,
            "threshold": self.threshold,
            "verdict": self.verdict,
            "seed": self.seed,
        }


def transitivity_residual(J, a, b, c) -> float:
    """``|J(J(a, c), J(b, c)) - J(a, b)|``."""
    return abs(J(J(a, c), J(b, c)) - J(a, b))


def random_triples(count: int, seed: int) -> list:
    rng = random.Random(seed)
    out = []
    while len(out) < count:
        t = (rng.random(), rng.random(), rng.random())
        if all(0 < v < 1 for v in t):
            out.append(t)
    return out


def transitivity_defect(
    J: JamesianFunction,
    count: int = 10_000,
    seed: int = DEFAULT_SEED,
    pinned: Sequence[tuple] = (),
    threshold: float = 1e-6,
) -> DefectReport:
    """Largest transitivity residual over pinned triples plus seeded random ones.

    A positive residual anywhere means ``J`` is not representable.  The
    verdict flips once the maximum exceeds ``threshold``.
    """
    triples = list(pinned) + random_triples(count, seed)
    worst = -1.0
    arg = None
    for a, b, c in triples:
        d = transitivity_residual(J, a, b, c)
        if d > worst:
            worst, arg = d, (a, b, c)
    if arg is None:
        worst, arg = 0.0, ()
    verdict = NON_TRANSITIVE_WITNESS_FOUND if worst > threshold else REPRESENTABLE_CONSISTENT
    return DefectReport(worst, arg, len(triples), threshold, verdict, seed)


def find_transitivity_witness(
    J: JamesianFunction,
    threshold: float,
    budget: int = 10_000,
    seed: int = DEFAULT_SEED,
    pinned: Sequence[tuple] = (PINNED_TRIPLE,),
) -> Optional[dict]:
    """First triple (pinned ones first) whose residual reaches ``threshold``."""
    if not threshold > 0:
        raise ValueError("threshold must be positive")
    for a, b, c in list(pinned) + random_triples(budget, seed):
        lhs = J(J(a, c), J(b, c))
        rhs = J(a, b)
        if abs(lhs - rhs) >= threshold:
            return {"triple": [a, b, c], "lhs": lhs, "rhs": rhs, "defect": abs(lhs - rhs), "seed": seed}
    return None


def defect_persistence(J: JamesianFunction, triple=PINNED_TRIPLE, radius: float = 1e-3, steps: int = 2) -> float:
    """Smallest transitivity residual over a cube of perturbed triples.

    A value bounded away from zero means the defect is not an isolated
    artefact: no representable function can sit uniformly close to ``J``.
    """
    offsets = [radius * (2 * i / steps - 1) for i in range(steps + 1)]
    a0, b0, c0 = triple
    return min(
        transitivity_residual(J, a0 + da, b0 + db, c0 + dc)
        for da in offsets
        for db in offsets
        for dc in offsets
    )


# --- boundary and comparisons -----------------------------------------------


def eval_extended(J: JamesianFunction, a: float, b: float) -> float:
    """``J`` on the closed square minus ``(0, 0)`` and ``(1, 1)``.

    On the boundary the continuous extension is forced: a perfect team
    always wins, a winless one always loses.
    """
    if not (0 <= a <= 1 and 0 <= b <= 1):
        raise DomainError(f"({a!r}, {b!r}) is outside the closed unit square")
    if (a == 0 and b == 0) or (a == 1 and b == 1):
        raise UndefinedCornerError(f"J is undefined at the corner ({a:g}, {b:g})")
    if a == 1 or b == 0:
        return 1.0
    if a == 0 or b == 1:
        return 0.0
    return J(a, b)


def boundary_sequence(J: JamesianFunction, a: float = 0.7, n_max: int = 60) -> list:
    """``[J(a, 2^-n) for n = 1..n_max]``."""
    return [J(a, 2.0 ** -n) for n in range(1, n_max + 1)]


def distinctness_witness(J1, J2, grid: Sequence[float] = None, min_gap: float = 1e-9):
    """Lattice point of largest ``|J1 - J2|`` and the gap, or None if tiny."""
    if grid is None:
        grid = lattice(99)
    best = (None, -1.0)
    for a in grid:
        for b in grid:
            gap = abs(J1(a, b) - J2(a, b))
            if gap > best[1]:
                best = ((a, b), gap)
    if best[1] > min_gap:
        return best
    return None
