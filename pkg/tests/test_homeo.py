import math
import random

import pytest

from jamesian.homeo import (
    check_odd_symmetry,
    from_forward,
    invert_by_bisection,
    logit,
    parse_homeo,
    piecewise_identity,
    scaled_logit,
)
from jamesian.loops import DomainError, NumericError

FAMILIES = [logit(), scaled_logit(2.0), scaled_logit(0.5), piecewise_identity(0.1), piecewise_identity(0.3)]
IDS = [f.label for f in FAMILIES]


def samples(n=1000, seed=0):
    rng = random.Random(seed)
    return [rng.uniform(1e-6, 1 - 1e-6) for _ in range(n)]


def test_logit_center_and_round_trip():
    f = logit()
    assert f(0.5) == 0
    assert f.inverse(0) == 0.5
    assert abs(f.inverse(f(0.3)) - 0.3) <= 1e-14


@pytest.mark.parametrize("x", [0.0, 1.0, -0.2, 1.5])
def test_logit_domain(x):
    with pytest.raises(DomainError):
        logit()(x)


def test_piecewise_values():
    f = piecewise_identity(0.1)
    assert f(0.3) == pytest.approx(-0.2, abs=1e-15)
    assert f(0.5) == 0
    assert f(0.05) == pytest.approx(-0.4 + math.log(0.5), abs=1e-15)
    assert f(0.05) == pytest.approx(-1.0931, abs=1e-4)


@pytest.mark.parametrize("eps", [0.0, 0.5, -0.1, 0.7])
def test_piecewise_eps_range(eps):
    with pytest.raises(ValueError):
        piecewise_identity(eps)


@pytest.mark.parametrize("f", FAMILIES, ids=IDS)
def test_round_trip(f):
    xs = samples()
    assert max(abs(f.inverse(f(x)) - x) for x in xs) <= 1e-9
    ys = [random.Random(1).uniform(-8, 8) for _ in range(1000)]
    assert max(abs(f(f.inverse(y)) - y) for y in ys) <= 1e-9


@pytest.mark.parametrize("f", FAMILIES, ids=IDS)
def test_odd_symmetry(f):
    r = check_odd_symmetry(f, samples())
    assert r.passed and r.max_residual <= 1e-12


def test_odd_symmetry_uniform_grid():
    grid = [i / 1000 for i in range(1, 1000)]
    assert check_odd_symmetry(logit(), grid).max_residual <= 1e-12
    tails = grid + [0.0015, 0.05, 0.0999, 0.9001, 0.95]
    assert check_odd_symmetry(piecewise_identity(0.1), tails).max_residual <= 1e-12


def test_odd_symmetry_negative_control():
    broken = from_forward(math.log)
    r = check_odd_symmetry(broken, [0.2, 0.5, 0.8])
    assert not r.passed and r.max_residual > 0.1


@pytest.mark.parametrize("f", FAMILIES, ids=IDS)
def test_monotone(f):
    xs = sorted(samples())
    vals = [f(x) for x in xs]
    assert all(b > a for a, b in zip(vals, vals[1:]))


@pytest.mark.parametrize("eps", [0.1, 0.25])
def test_piecewise_continuity_at_knots(eps):
    f = piecewise_identity(eps)
    for knot in (eps, 1 - eps):
        left = f(math.nextafter(knot, 0))
        right = f(math.nextafter(knot, 1))
        assert abs(left - right) <= 1e-12
    # the inverse is continuous at the image knots too
    for y in (eps - 0.5, 0.5 - eps):
        assert abs(f.inverse(math.nextafter(y, -1)) - f.inverse(math.nextafter(y, 1))) <= 1e-12


def test_bisection_examples():
    assert invert_by_bisection(logit().forward, 0.0, 1e-12) == 0.5
    f = piecewise_identity(0.1)
    assert invert_by_bisection(f.forward, 0.2, 1e-12) == pytest.approx(0.7, abs=1e-11)
    y = f(0.05)
    assert invert_by_bisection(f.forward, y, 1e-12) == pytest.approx(0.05, abs=1e-11)


def test_bisection_residual_contract():
    f = scaled_logit(3.0)
    tol = 1e-10
    for y in (-40.0, -3.3, 0.1, 7.0, 15.0):
        x = invert_by_bisection(f.forward, y, tol)
        assert abs(f(x) - y) <= tol * max(1.0, abs(y))


def test_bisection_near_one_returns_closest_float():
    # Near 1 adjacent floats map more than the tolerance apart.
    f = logit()
    x = invert_by_bisection(f.forward, 30.0, 1e-14)
    assert abs(x - f.inverse(30.0)) <= 2e-16


def test_bisection_is_deterministic():
    f = piecewise_identity(0.2)
    assert invert_by_bisection(f.forward, 1.234, 1e-12) == invert_by_bisection(f.forward, 1.234, 1e-12)


def test_bisection_not_surjective():
    bounded = lambda x: math.atan(x - 0.5)  # image is a bounded interval
    with pytest.raises(NumericError):
        invert_by_bisection(bounded, 3.0, 1e-12)


def test_bisection_tolerance_positive():
    with pytest.raises(ValueError):
        invert_by_bisection(logit().forward, 0.0, 0.0)


def test_from_forward_matches_closed_form():
    g = from_forward(logit().forward, 1e-13)
    f = logit()
    for y in (-5.0, -0.3, 0.0, 2.0, 11.0):
        assert abs(g.inverse(y) - f.inverse(y)) <= 1e-9


@pytest.mark.parametrize(
    "text, label",
    [("logit", "logit"), ("scaled-logit:2", "scaled-logit:2"), ("piecewise:0.1", "piecewise:0.1"), ("piecewise", "piecewise:0.1")],
)
def test_parse(text, label):
    assert parse_homeo(text).label == label


@pytest.mark.parametrize("text", ["sigmoid", "scaled-logit:-1", "piecewise:0.9", "scaled-logit:x"])
def test_parse_rejects(text):
    with pytest.raises(ValueError):
        parse_homeo(text)
