import random

import pytest

from jamesian.regions import (
    ExplicitRegionSpec,
    OutOfRegionError,
    RegionLabel,
    classify,
    cross_validate,
    explicit_eval,
    region_formula,
    region_grid,
    transfer_function,
    write_region_csv,
)

SPEC = ExplicitRegionSpec(0.1)


def test_spec_intervals():
    assert SPEC.identity_interval == (0.1, 0.9)
    lo, hi = SPEC.shifted_interval
    assert lo == pytest.approx(-0.4) and hi == pytest.approx(0.4)
    with pytest.raises(ValueError):
        ExplicitRegionSpec(0.5)


@pytest.mark.parametrize(
    "a, b, label",
    [
        (0.6, 0.55, RegionLabel.A1),
        (0.55, 0.6, RegionLabel.A2),
        (0.55, 0.57, RegionLabel.A3),
        (0.3, 0.5, RegionLabel.B_HALF),
        (0.75, 0.25, RegionLabel.A1),
        (0.05, 0.6, RegionLabel.OUTSIDE),
        (0.95, 0.05, RegionLabel.OUTSIDE),
    ],
)
def test_classify(a, b, label):
    assert classify(a, b, SPEC) is label


def test_classify_requires_identity_interval():
    # Ratio and image tests alone would put this point in A1, but a < eps so
    # f is not a shift at a and the affine formula is wrong there.
    a, b = 0.09, 0.4
    assert (a - 0.5) / (0.5 - b) <= -1.5
    assert -0.4 <= a - b / 2 - 0.25 <= 0.4
    assert classify(a, b, SPEC) is RegionLabel.OUTSIDE
    assert abs(region_formula(RegionLabel.A1, a, b) - transfer_function(SPEC)(a, b)) > 0.01


@pytest.mark.parametrize(
    "a, b, expected",
    [(0.6, 0.55, 0.575), (0.55, 0.6, 0.425), (0.55, 0.57, 0.46), (0.3, 0.5, 0.3)],
)
def test_explicit_eval(a, b, expected):
    assert explicit_eval(a, b, SPEC) == pytest.approx(expected, abs=1e-15)
    assert abs(explicit_eval(a, b, SPEC) - transfer_function(SPEC)(a, b)) <= 1e-15


def test_explicit_eval_outside():
    with pytest.raises(OutOfRegionError):
        explicit_eval(0.05, 0.6, SPEC)


def test_complement_on_delta():
    assert explicit_eval(0.6, 0.55) + explicit_eval(0.55, 0.6) == pytest.approx(1, abs=1e-12)
    rng = random.Random(3)
    checked = 0
    for _ in range(5000):
        a, b = rng.random(), rng.random()
        if classify(a, b) is RegionLabel.OUTSIDE or classify(b, a) is RegionLabel.OUTSIDE:
            continue
        checked += 1
        assert abs(explicit_eval(a, b) + explicit_eval(b, a) - 1) <= 1e-12
    assert checked > 500


@pytest.mark.parametrize(
    "ratio, first, second",
    [
        (-1.5, RegionLabel.A1, RegionLabel.A3),
        (-2 / 3, RegionLabel.A2, RegionLabel.A3),
        (1.0, RegionLabel.A1, RegionLabel.A2),
    ],
)
def test_region_formulas_agree_on_boundaries(ratio, first, second):
    # points with (a - 1/2) = ratio * (1/2 - b)
    for i in range(1, 60):
        d = 0.2 * i / 60  # 1/2 - b
        a = 0.5 + ratio * d
        b = 0.5 - d
        for sign in (1, -1):
            aa, bb = (a, b) if sign == 1 else (1 - a, 1 - b)
            if not (0.1 <= aa <= 0.9 and 0.1 <= bb <= 0.9):
                continue
            lhs = region_formula(first, aa, bb)
            rhs = region_formula(second, aa, bb)
            assert abs(lhs - rhs) <= 1e-12


def test_cross_validate():
    r = cross_validate(SPEC, samples=10_000, seed=0, pinned=[(0.6, 0.55), (0.3, 0.5), (0.8, 0.5)])
    assert r.passed and r.max_residual <= 1e-12
    assert r.samples == 10_003


def test_cross_validate_other_eps():
    assert cross_validate(ExplicitRegionSpec(0.25), samples=3000, seed=9).passed


def test_classify_total():
    rng = random.Random(1)
    for _ in range(5000):
        assert isinstance(classify(rng.random() or 0.5, rng.random() or 0.5), RegionLabel)


def test_region_grid_small():
    rows = region_grid(SPEC, 3)
    assert len(rows) == 9
    assert [(a, b) for a, b, _ in rows][:3] == [(0.25, 0.25), (0.25, 0.5), (0.25, 0.75)]
    labels = {(a, b): lab for a, b, lab in rows}
    assert labels[(0.5, 0.5)] is RegionLabel.B_HALF
    assert labels[(0.75, 0.25)] is RegionLabel.A1


def test_region_grid_reflection():
    # (a, b) -> (1-b, 1-a) inverts the ratio and keeps the affine image, so
    # A1 and A2 swap and A3 stays; J agrees at both points.
    swap = {RegionLabel.A1: RegionLabel.A2, RegionLabel.A2: RegionLabel.A1, RegionLabel.A3: RegionLabel.A3}
    for a, b, lab in region_grid(SPEC, 19):
        if lab in (RegionLabel.B_HALF, RegionLabel.OUTSIDE):
            continue
        if min(abs(v - e) for v in (a, b) for e in (0.1, 0.9)) < 1e-12:
            continue  # 1 - 0.9 rounds below eps
        other = classify(1 - b, 1 - a, SPEC)
        r = (a - 0.5) / (0.5 - b)
        on_boundary = min(abs(r - 1), abs(r + 1.5), abs(r + 2 / 3)) < 1e-9
        # a = 1/2 lands on the b = 1/2 line
        assert other is swap[lab] or on_boundary or other is RegionLabel.B_HALF
        assert abs(explicit_eval(a, b) - explicit_eval(1 - b, 1 - a)) <= 1e-12


def test_region_grid_resolution():
    with pytest.raises(ValueError):
        region_grid(SPEC, 1)


def test_region_csv(tmp_path):
    path = tmp_path / "regions.csv"
    write_region_csv(region_grid(SPEC, 3), path)
    lines = path.read_text().splitlines()
    assert lines[0] == "a,b,label"
    assert len(lines) == 10
    assert "0.5,0.5,B_HALF" in lines
    assert "0.75,0.25,A1" in lines
