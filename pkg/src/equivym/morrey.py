"""Discrete Morrey norms of functions sampled at cell centres of the unit
n-torus or n-box.

The Morrey norm of exponent p and dimension d is

    |f|^p = |f|_{L^p}^p + sup_rho sup_x rho^(d-n) |f|_{L^p(B_rho(x))}^p

with rho over a finite set of radii and x over cell centres.  A ball is the
set of cells whose centre lies within rho of x (periodic distance on the
torus).  Ball sums for every centre at once are a convolution of |f|^p with
the ball's indicator, done by FFT.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from pathlib import Path
from typing import Optional, Sequence

import numpy as np
from scipy.signal import fftconvolve

DOMAINS = ("torus", "box")
_EPS = 1e-9


@dataclass
class GridFunction:
    dims: tuple[int, ...]
    values: np.ndarray
    domain: str = "torus"

    def __post_init__(self):
        self.dims = tuple(int(x) for x in self.dims)
        if not 1 <= len(self.dims) <= 4:
            raise ValueError("only 1 to 4 coordinates are supported")
        if any(x < 1 for x in self.dims):
            raise ValueError("grid sizes must be positive")
        if self.domain not in DOMAINS:
            raise ValueError(f"domain must be one of {DOMAINS}")
        vals = np.asarray(self.values, dtype=float)
        if vals.size != math.prod(self.dims):
            raise ValueError(f"{vals.size} samples for a {self.dims} grid")
        self.values = vals.reshape(self.dims)

    @property
    def n(self) -> int:
        return len(self.dims)

    @property
    def cell_volume(self) -> float:
        return 1.0 / math.prod(self.dims)

    @property
    def min_cell(self) -> float:
        return 1.0 / max(self.dims)

    def centers(self) -> list[np.ndarray]:
        """Cell-centre coordinates, one broadcastable array per axis."""
        return list(np.meshgrid(*[(np.arange(m) + 0.5) / m for m in self.dims], indexing="ij"))

    @classmethod
    def sample(cls, fn, dims: Sequence[int], domain: str = "torus") -> "GridFunction":
        grid = cls(dims, np.zeros(math.prod(dims)), domain)
        grid.values = np.asarray(fn(*grid.centers()), dtype=float) * np.ones(grid.dims)
        return grid

    def with_values(self, values) -> "GridFunction":
        return GridFunction(self.dims, values, self.domain)

    def __mul__(self, other: "GridFunction") -> "GridFunction":
        _check_match(self, other)
        return self.with_values(self.values * other.values)

    def __sub__(self, other: "GridFunction") -> "GridFunction":
        _check_match(self, other)
        return self.with_values(self.values - other.values)


def _check_match(f: GridFunction, g: GridFunction) -> None:
    if f.dims != g.dims or f.domain != g.domain:
        raise ValueError(f"grid mismatch: {f.dims}/{f.domain} vs {g.dims}/{g.domain}")


def read_grid(path) -> GridFunction:
    """Header line ``n d1 ... dn kind`` then row-major samples."""
    text = Path(path).read_text().split("\n", 1)
    head = text[0].split()
    try:
        n = int(head[0])
        dims = tuple(int(x) for x in head[1:1 + n])
        kind = head[1 + n].lower()
    except (ValueError, IndexError) as exc:
        raise ValueError(f"bad grid header {text[0]!r}") from exc
    body = np.array((text[1] if len(text) > 1 else "").split(), dtype=float)
    return GridFunction(dims, body, kind)


def write_grid(f: GridFunction, path) -> None:
    head = " ".join([str(f.n), *map(str, f.dims), f.domain])
    body = "\n".join(" ".join(repr(float(v)) for v in row) for row in f.values.reshape(-1, f.dims[-1]))
    Path(path).write_text(head + "\n" + body + "\n")


def default_radii(f: GridFunction) -> tuple[float, ...]:
    """Dyadic radii down to the cell width; at most rho_0/2 = 1/4 on the torus."""
    rho = 0.25 if f.domain == "torus" else 1.0
    out = []
    while rho >= f.min_cell * (1 - _EPS):
        out.append(rho)
        rho /= 2
    return tuple(out) or (f.min_cell,)


@dataclass
class MorreyParams:
    p: float
    d: float
    radii: Optional[tuple[float, ...]] = None
    stride: int = 1

    def __post_init__(self):
        if self.p < 1:
            raise ValueError("p must be >= 1")
        if self.d < 0:
            raise ValueError("d must be >= 0")
        if self.stride < 1:
            raise ValueError("stride must be >= 1")
        if self.radii is not None:
            self.radii = tuple(sorted((float(r) for r in self.radii), reverse=True))
            if not self.radii:
                raise ValueError("radii must be nonempty")
            if any(not 0 < r <= 1 for r in self.radii):
                raise ValueError("radii must lie in (0, 1]")

    def radii_for(self, f: GridFunction) -> tuple[float, ...]:
        return self.radii if self.radii is not None else default_radii(f)


def lp_norm(f: GridFunction, p: float) -> float:
    if p < 1:
        raise ValueError("p must be >= 1")
    return float((np.sum(np.abs(f.values) ** p) * f.cell_volume) ** (1.0 / p))


def ball_kernel(dims: Sequence[int], domain: str, rho: float) -> np.ndarray:
    """Indicator of cell offsets within rho.

    Torus: an array of shape dims indexed by offset mod dims (each cell once).
    Box: shape 2*dims-1 centred on the zero offset.
    """
    axes = []
    for m in dims:
        if domain == "torus":
            k = np.arange(m)
            k = np.where(k <= m // 2, k, k - m)
        else:
            k = np.arange(-(m - 1), m)
        axes.append(k / m)
    grids = np.meshgrid(*axes, indexing="ij")
    dist2 = sum(g * g for g in grids)
    return (dist2 <= rho * rho * (1 + _EPS)).astype(float)


def ball_sums(weights: np.ndarray, domain: str, rho: float) -> np.ndarray:
    """sum of weights over B_rho(x) for every cell centre x."""
    dims = weights.shape
    kern = ball_kernel(dims, domain, rho)
    if domain == "torus":
        axes = tuple(range(len(dims)))
        out = np.fft.irfftn(np.fft.rfftn(weights) * np.fft.rfftn(kern), s=dims, axes=axes)
    else:
        out = fftconvolve(weights, kern, mode="same")
    return np.maximum(out, 0.0)


def _center_slice(f: GridFunction, stride: int):
    return tuple(slice(None, None, stride) for _ in f.dims)


def sup_terms(f: GridFunction, mp: MorreyParams) -> dict[float, float]:
    """max over centres of rho^(d-n) |f|_{L^p(B_rho(x))}^p, per radius."""
    w = np.abs(f.values) ** mp.p * f.cell_volume
    out = {}
    for rho in mp.radii_for(f):
        sums = ball_sums(w, f.domain, rho)[_center_slice(f, mp.stride)]
        out[rho] = float(rho ** (mp.d - f.n) * sums.max())
    return out


def morrey_norm(f: GridFunction, mp: MorreyParams) -> float:
    base = lp_norm(f, mp.p) ** mp.p
    return float((base + max(sup_terms(f, mp).values())) ** (1.0 / mp.p))


def cover_bound(f: GridFunction, mp: MorreyParams) -> float:
    """(1 + max rho^(d-n))^(1/p) * |f|_p, an upper bound for morrey_norm."""
    c = 1 + max(r ** (mp.d - f.n) for r in mp.radii_for(f))
    return c ** (1.0 / mp.p) * lp_norm(f, mp.p)


# ---------------------------------------------------------------------------
# bound checks


@dataclass
class InvarianceReport:
    n: int
    d: int
    p: float
    resolutions: tuple[int, ...]
    invariant: dict[str, list[float]]
    generic: dict[str, list[float]]
    growth_tol: float
    observed_max: float = field(init=False)
    bounded: bool = field(init=False)
    generic_grows: bool = field(init=False)

    def __post_init__(self):
        self.observed_max = max(max(v) for v in self.invariant.values())
        self.bounded = all(
            b <= a * (1 + self.growth_tol) for v in self.invariant.values() for a, b in zip(v, v[1:])
        )
        self.generic_grows = all(
            all(b > a for a, b in zip(v, v[1:])) and v[-1] > v[0] * (1 + self.growth_tol)
            for v in self.generic.values()
        )

    @property
    def ok(self) -> bool:
        return self.bounded and (self.generic_grows or self.d >= self.n)

    def to_dict(self) -> dict:
        return {
            "n": self.n, "d": self.d, "p": self.p, "resolutions": list(self.resolutions),
            "invariant_ratios": self.invariant, "generic_ratios": self.generic,
            "observed_max": self.observed_max, "bounded": self.bounded,
            "generic_grows": self.generic_grows, "ok": self.ok,
        }


def _invariant_family(d: int):
    # functions of the first d coordinates only
    return {
        "sin": lambda *x: np.sin(2 * np.pi * x[0]),
        "sum_cos": lambda *x: sum(np.cos(2 * np.pi * (j + 1) * x[j]) for j in range(d)),
        "bump_slab": lambda *x: np.exp(-40 * sum((x[j] - 0.5) ** 2 for j in range(d))),
    }


def _bump(n: int, m: int):
    # bump of width ~4 cells, unit L^2-ish mass, shrinking with resolution
    width = 4.0 / m

    def fn(*x):
        r2 = sum((x[j] - 0.5) ** 2 for j in range(n))
        return np.exp(-r2 / (2 * width * width)) * width ** (-n / 2)
    return fn


def check_invariance_bound(d: int, n: int, resolutions: Sequence[int] = (32, 64, 128),
                           p: float = 2.0, growth_tol: float = 0.05) -> InvarianceReport:
    """Ratio morrey_norm / lp_norm for functions invariant along n-d directions
    (bounded uniformly in resolution) against a point-concentrated bump
    (ratio grows as the radii reach below its width)."""
    if not 1 <= d <= n:
        raise ValueError("need 1 <= d <= n")
    res = tuple(int(r) for r in resolutions)
    inv = {name: [] for name in _invariant_family(d)}
    gen = {"bump": []} if d < n else {}
    for m in res:
        dims = (m,) * n
        mp = MorreyParams(p, d)
        for name, fn in _invariant_family(d).items():
            g = GridFunction.sample(fn, dims)
            inv[name].append(morrey_norm(g, mp) / lp_norm(g, p))
        if d < n:
            g = GridFunction.sample(_bump(n, m), dims)
            gen["bump"].append(morrey_norm(g, mp) / lp_norm(g, p))
    return InvarianceReport(n, d, p, res, inv, gen, growth_tol)


@dataclass
class ProductReport:
    lhs: float
    rhs: float
    p: float
    q: float
    r: float

    @property
    def holds(self) -> bool:
        return self.lhs <= self.rhs * (1 + 1e-12) + 1e-300

    def to_dict(self) -> dict:
        return {"lhs": self.lhs, "rhs": self.rhs, "p": self.p, "q": self.q, "r": self.r, "holds": self.holds}


def check_product(f: GridFunction, g: GridFunction, p: float, q: float, r: float,
                  mp_base: MorreyParams) -> ProductReport:
    """Compare |fg|_{L^r_d} with |f|_{L^p_d} |g|_{L^q_d} on shared radii and centres."""
    if abs(1 / p + 1 / q - 1 / r) > 1e-12:
        raise ValueError("need 1/p + 1/q = 1/r")
    _check_match(f, g)
    radii = mp_base.radii_for(f)

    def norm(h, s):
        return morrey_norm(h, MorreyParams(s, mp_base.d, radii, mp_base.stride))
    return ProductReport(norm(f * g, r), norm(f, p) * norm(g, q), p, q, r)


def _shift_cells(f: GridFunction, h) -> tuple[int, ...]:
    h = np.atleast_1d(np.asarray(h, dtype=float))
    if h.shape != (f.n,):
        raise ValueError(f"shift must have {f.n} components")
    cells = h * np.array(f.dims)
    k = np.rint(cells)
    if np.any(np.abs(cells - k) > 1e-9):
        raise ValueError(f"shift {tuple(h)} is not a multiple of the cell size")
    return tuple(int(x) for x in k)


def translation_seminorm(f: GridFunction, q: float, d: float, alpha: float, shifts,
                         radii: Optional[Sequence[float]] = None) -> float:
    """max over shifts h of |h|^-alpha |f(. + h) - f|_{L^q_d}."""
    if f.domain != "torus":
        raise ValueError("translations are only defined on the torus")
    if not 0 < alpha <= 1:
        raise ValueError("alpha must lie in (0, 1]")
    mp = MorreyParams(q, d, tuple(radii) if radii is not None else None)
    best = 0.0
    for h in shifts:
        k = _shift_cells(f, h)
        size = float(np.linalg.norm(h))
        if not 0 < size <= 1:
            raise ValueError("shifts must satisfy 0 < |h| <= 1")
        moved = f.with_values(np.roll(f.values, [-x for x in k], axis=tuple(range(f.n))))
        best = max(best, size ** (-alpha) * morrey_norm(moved - f, mp))
    return best


def axis_shifts(n: int, steps: Sequence[float]) -> list[tuple[float, ...]]:
    return [tuple(s if j == i else 0.0 for j in range(n)) for s in steps for i in range(n)]
