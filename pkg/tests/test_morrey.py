import itertools
import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from equivym.morrey import (
    GridFunction,
    MorreyParams,
    axis_shifts,
    check_invariance_bound,
    check_product,
    cover_bound,
    default_radii,
    lp_norm,
    morrey_norm,
    read_grid,
    translation_seminorm,
    write_grid,
)


def brute_morrey(f, p, d, radii):
    """Loop over every centre and every cell; no FFT, no kernels."""
    vals = np.abs(f.values) ** p * f.cell_volume
    cells = list(itertools.product(*[range(m) for m in f.dims]))
    coords = {c: np.array([(i + 0.5) / m for i, m in zip(c, f.dims)]) for c in cells}
    base = vals.sum()
    best = 0.0
    for rho in radii:
        for x in cells:
            tot = 0.0
            for y in cells:
                diff = np.abs(coords[x] - coords[y])
                if f.domain == "torus":
                    diff = np.minimum(diff, 1 - diff)
                if math.sqrt(float(diff @ diff)) <= rho * (1 + 1e-9):
                    tot += vals[y]
            best = max(best, rho ** (d - f.n) * tot)
    return (base + best) ** (1 / p)


def random_grid(rng, dims, domain="torus"):
    return GridFunction(dims, rng.normal(size=dims), domain)


# -- lp norm ------------------------------------------------------------------

def test_lp_examples():
    one = GridFunction.sample(lambda x, y: 1.0, (16, 8))
    assert lp_norm(one, 2) == pytest.approx(1.0, abs=1e-15)
    assert lp_norm(one.with_values(-3 * one.values), 3) == pytest.approx(3.0, rel=1e-14)
    half = GridFunction.sample(lambda x, y: (x < 0.5).astype(float), (16, 16))
    assert lp_norm(half, 1) == pytest.approx(0.5, abs=1e-15)
    with pytest.raises(ValueError):
        lp_norm(one, 0.5)


# -- Morrey norm -----------------------------------------------------------------

@pytest.mark.parametrize("domain", ["torus", "box"])
@pytest.mark.parametrize("dims", [(12,), (8, 6), (4, 5, 3)])
def test_morrey_matches_brute_force(domain, dims):
    rng = np.random.default_rng(sum(dims))
    f = random_grid(rng, dims, domain)
    radii = (0.6, 0.3, 0.17) if domain == "box" else (0.4, 0.25, 0.12)
    for p, d in [(1.0, 0.0), (2.0, 1.0), (3.0, 2.5)]:
        got = morrey_norm(f, MorreyParams(p, d, radii))
        assert got == pytest.approx(brute_morrey(f, p, d, radii), rel=1e-12)


def test_constant_one_example():
    radii = (0.5, 0.25, 0.125)
    f = GridFunction.sample(lambda x, y: 1.0, (64, 64))
    got = morrey_norm(f, MorreyParams(2, 1, radii))
    # the ball of radius 1/2 holds the disc area minus the four periodic overlaps
    # (cells within 1/2 counted once): sup term = 2 * cells_within / 64^2
    k = np.arange(64)
    k = np.where(k <= 32, k, k - 64) / 64
    within = np.sum(k[:, None] ** 2 + k[None, :] ** 2 <= 0.25 * (1 + 1e-9))
    assert got == pytest.approx(math.sqrt(1 + 2 * within / 64 ** 2), rel=1e-12)
    assert got >= math.sqrt(1 + 2 * math.pi / 4 * 0.95)
    assert got == pytest.approx(1.601848297670538, rel=1e-12)  # regression


def test_d_equals_n_collapse():
    rng = np.random.default_rng(1)
    f = random_grid(rng, (16, 16))
    got = morrey_norm(f, MorreyParams(2, 2, (0.75, 0.25)))
    assert got ** 2 == pytest.approx(2 * lp_norm(f, 2) ** 2, rel=1e-12)


def test_zero_function():
    f = GridFunction((8, 8), np.zeros(64))
    assert morrey_norm(f, MorreyParams(2, 1)) == 0.0


def test_default_radii():
    f = GridFunction((32, 32), np.zeros(1024))
    assert default_radii(f) == (0.25, 0.125, 0.0625, 0.03125)
    b = GridFunction((4,), np.zeros(4), "box")
    assert default_radii(b) == (1.0, 0.5, 0.25)


def test_params_validation():
    for bad in [dict(p=0.5, d=1), dict(p=2, d=-1), dict(p=2, d=1, radii=()), dict(p=2, d=1, radii=(1.5,))]:
        with pytest.raises(ValueError):
            MorreyParams(**bad)


@settings(max_examples=30)
@given(st.integers(0, 10_000))
def test_monotone_in_d_and_bounds(seed):
    rng = np.random.default_rng(seed)
    f = random_grid(rng, (16, 16))
    norms = [morrey_norm(f, MorreyParams(2, d)) for d in (0, 0.5, 1, 1.5, 2)]
    assert all(b <= a * (1 + 1e-12) for a, b in zip(norms, norms[1:]))
    for d in (0, 1, 2):
        mp = MorreyParams(2, d)
        assert lp_norm(f, 2) <= morrey_norm(f, mp) <= cover_bound(f, mp) * (1 + 1e-12)


@settings(max_examples=30)
@given(st.integers(0, 10_000), st.integers(0, 15), st.integers(0, 15), st.booleans())
def test_isometry_invariance(seed, sx, sy, swap):
    rng = np.random.default_rng(seed)
    f = random_grid(rng, (16, 16))
    mp = MorreyParams(2, 1)
    g_vals = np.roll(f.values, (sx, sy), axis=(0, 1))
    if swap:
        g_vals = g_vals.T
    g = f.with_values(g_vals)
    assert abs(morrey_norm(g, mp) - morrey_norm(f, mp)) <= 1e-12 * morrey_norm(f, mp)


# -- product inequality ---------------------------------------------------------

def test_product_examples():
    one = GridFunction.sample(lambda x, y: 1.0, (16, 16))
    assert check_product(one, one, 4, 4, 2, MorreyParams(2, 1)).holds
    a = GridFunction.sample(lambda x, y: (x < 0.5).astype(float), (16, 16))
    b = a.with_values(1 - a.values)
    rep = check_product(a, b, 4, 4, 2, MorreyParams(2, 1))
    assert rep.lhs == 0 and rep.holds
    rng = np.random.default_rng(7)
    f = GridFunction((32, 32), rng.choice([-1.0, 1.0], size=(32, 32)))
    g = GridFunction((32, 32), rng.choice([-1.0, 1.0], size=(32, 32)))
    assert check_product(f, g, 4, 4, 2, MorreyParams(2, 1)).holds


def test_product_errors():
    f = GridFunction((8, 8), np.ones(64))
    with pytest.raises(ValueError):
        check_product(f, f, 2, 2, 2, MorreyParams(2, 1))
    with pytest.raises(ValueError):
        check_product(f, GridFunction((8, 4), np.ones(32)), 4, 4, 2, MorreyParams(2, 1))


@settings(max_examples=40)
@given(st.integers(0, 10_000), st.floats(2.0, 6.0), st.floats(2.0, 6.0), st.floats(0, 2))
def test_holder_property(seed, p, q, d):
    rng = np.random.default_rng(seed)
    f, g = random_grid(rng, (16, 16)), random_grid(rng, (16, 16))
    r = 1 / (1 / p + 1 / q)
    assert check_product(f, g, p, q, r, MorreyParams(2, d)).holds


# -- invariance report ------------------------------------------------------------

def test_invariance_report_small():
    rep = check_invariance_bound(1, 2, resolutions=(16, 32, 64))
    assert rep.bounded and rep.generic_grows and rep.ok
    rep = check_invariance_bound(2, 2, resolutions=(16, 32))
    assert rep.ok and rep.observed_max <= math.sqrt(2) * (1 + 1e-12)
    with pytest.raises(ValueError):
        check_invariance_bound(3, 2)


# -- translation seminorm -----------------------------------------------------

def test_seminorm_examples():
    c = GridFunction.sample(lambda x, y: 2.0, (32, 32))
    assert translation_seminorm(c, 2, 1, 0.5, axis_shifts(2, [1 / 32, 1 / 8])) == 0.0
    s = GridFunction.sample(lambda x, y: np.sin(2 * np.pi * x), (32, 32))
    v = translation_seminorm(s, 2, 1, 0.5, axis_shifts(2, [1 / 32, 1 / 16, 1 / 8, 1 / 4]))
    assert v == pytest.approx(2.764900819986176, rel=1e-10)  # regression
    # the largest quotient comes from the largest shift for a smooth function
    assert v == pytest.approx(translation_seminorm(s, 2, 1, 0.5, axis_shifts(2, [1 / 4])), rel=1e-12)


def test_seminorm_grows_for_indicator():
    # the indicator of one coarse cell, resampled finer, probed at one fine step
    vals = []
    for m in (16, 32, 64):
        f = GridFunction.sample(lambda x, y: ((abs(x - 0.53) < 1 / 16) & (abs(y - 0.53) < 1 / 16)).astype(float),
                                (m, m))
        vals.append(translation_seminorm(f, 2, 1, 1.0, axis_shifts(2, [1 / m])))
    assert vals[0] < vals[1] < vals[2]


def test_seminorm_errors():
    b = GridFunction((8, 8), np.ones(64), "box")
    with pytest.raises(ValueError):
        translation_seminorm(b, 2, 1, 0.5, axis_shifts(2, [1 / 8]))
    t = GridFunction((8, 8), np.ones(64))
    with pytest.raises(ValueError):
        translation_seminorm(t, 2, 1, 0.5, [(0.1, 0.0)])
    with pytest.raises(ValueError):
        translation_seminorm(t, 2, 1, 1.5, axis_shifts(2, [1 / 8]))


# -- file format -------------------------------------------------------------------

def test_grid_round_trip(tmp_path):
    rng = np.random.default_rng(3)
    for dims, dom in [((5,), "torus"), ((3, 4), "box"), ((2, 3, 2), "torus")]:
        f = random_grid(rng, dims, dom)
        path = tmp_path / "g.txt"
        write_grid(f, path)
        g = read_grid(path)
        assert g.dims == f.dims and g.domain == f.domain
        assert np.array_equal(g.values, f.values)


def test_grid_bad_files(tmp_path):
    p = tmp_path / "bad.txt"
    p.write_text("2 4 torus\n1 2 3 4\n")
    with pytest.raises(ValueError):
        read_grid(p)
    p.write_text("1 4 torus\n1 2 3\n")
    with pytest.raises(ValueError):
        read_grid(p)
