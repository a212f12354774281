"""Lattice gradient descent and a string-method saddle search between
zero-energy sectors.

Sector k is represented in the trivial SU(2) bundle by the abelian flux-k
minimiser put into the regular gauge, where every link is near the identity
and the Higgs field winds k times.  A string of images joins two sectors and
relaxes by preconditioned gradient descent with equal-arclength
reparametrisation after each sweep; its top image bounds the mountain-pass
level from above.
"""
from __future__ import annotations

import math
from dataclasses import asdict, dataclass, field
from typing import Optional

import jax.numpy as jnp
import numpy as np

from .abelian import SolveReport, discrete_minimizer
from .lattice import (
    Geometry,
    LatticeField,
    Tangent,
    _consts,
    _energy_batch,
    _grad_batch,
    _grad_jit,
    check_branch,
    embed_abelian,
    lattice_energy,
    qexp,
    qinv,
    qlog,
    qmul,
    regular_gauge,
)


@dataclass
class LatticeDescentConfig:
    armijo: float = 1e-4
    shrink: float = 0.5
    max_iter: int = 2000
    grad_tol: float = 1e-8
    max_step: float = 1.0


@dataclass
class StringConfig:
    nt: int = 32
    nph: int = 64
    images: int = 16
    iterations: int = 300
    armijo: float = 1e-4
    shrink: float = 0.5
    max_step: float = 1.0
    perturbation: float = 1e-3
    seed: int = 0
    energy_tol: float = 1e-9
    collapse_tol: float = 1e-6

    def __post_init__(self):
        if self.images < 3:
            raise ValueError("a string needs at least 3 images")


def sector_minimizer(k: int, geom: Geometry) -> LatticeField:
    """Flux-k zero-energy configuration in the regular gauge."""
    prof = discrete_minimizer(k, 2 * geom.nt)
    return embed_abelian(prof, geom).gauge_transform(regular_gauge(geom, k))


def _metric_arrays(geom: Geometry):
    return geom.metric


def _step(arrays, direction, t):
    """Left retraction of stacked fields along stacked directions, t per image."""
    uphi, uth, higgs = arrays
    dp, dt_, dh = direction
    tt = t[:, None, None, None]
    return (
        _unit(qmul(qexp(tt * dp, np), uphi, np)),
        _unit(qmul(qexp(tt * dt_, np), uth, np)),
        higgs + tt * dh,
    )


def _unit(q):
    return q / np.linalg.norm(q, axis=-1, keepdims=True)


def _batched(arrays):
    return tuple(jnp.asarray(a) for a in arrays)


def lattice_minimize(F: LatticeField, config: Optional[LatticeDescentConfig] = None,
                     sector: str = "") -> tuple[LatticeField, SolveReport]:
    """Preconditioned gradient descent with Armijo backtracking on one field."""
    cfg = config or LatticeDescentConfig()
    geom = F.geom
    consts = _consts(geom)
    metric = geom.metric
    arrays = tuple(a[None] for a in F.arrays)
    e, grads = _grad_batch(_batched(arrays), consts)
    e = float(e[0])
    t = cfg.max_step
    history = []
    it = 0
    converged = False
    while True:
        g = Tangent(*(np.asarray(x[0]) for x in grads))
        d = g.scaled(metric)
        slope = g.dot(d)
        gnorm = math.sqrt(max(slope, 0.0))
        history.append((it, e, gnorm))
        if gnorm <= cfg.grad_tol:
            converged = True
            break
        if it >= cfg.max_iter:
            break
        direction = tuple(-x[None] for x in (d.uphi, d.uth, d.higgs))
        t = min(cfg.max_step, 2 * t)
        while True:
            trial = _step(arrays, direction, np.array([t]))
            e_new = float(_energy_batch(_batched(trial), consts)[0])
            if e_new <= e - cfg.armijo * t * slope:
                break
            t *= cfg.shrink
            if t < 1e-16:
                break
        if not e_new < e:
            break
        arrays = trial
        e, grads = _grad_batch(_batched(arrays), consts)
        e = float(e[0])
        it += 1
    out = LatticeField(geom, *(a[0] for a in arrays))
    return out, SolveReport(e, gnorm, it, sector, converged, history)


# ---------------------------------------------------------------------------
# string method


def _rel_log(a, b):
    """x with b = exp(x) a, per link."""
    return qlog(qmul(b, qinv(a, np), np), np)


def geodesic_path(A: LatticeField, B: LatticeField, s: np.ndarray):
    """Stacked fields exp(s log(B A^-1)) A on links, (1-s) PhiA + s PhiB."""
    s = np.asarray(s, dtype=float)
    ss = s[:, None, None, None]
    xp = _rel_log(A.uphi, B.uphi)
    xt = _rel_log(A.uth, B.uth)
    uphi = qmul(qexp(ss * xp[None], np), A.uphi[None], np)
    uth = qmul(qexp(ss * xt[None], np), A.uth[None], np)
    higgs = (1 - ss) * A.higgs[None] + ss * B.higgs[None]
    return uphi, uth, higgs


def _segment_vectors(arrays):
    uphi, uth, higgs = arrays
    return (_rel_log(uphi[:-1], uphi[1:]), _rel_log(uth[:-1], uth[1:]), higgs[1:] - higgs[:-1])


def path_lengths(arrays, metric) -> np.ndarray:
    segs = _segment_vectors(arrays)
    tot = np.zeros(arrays[0].shape[0] - 1)
    for v, m in zip(segs, metric):
        tot += np.sum(np.sum(v * v, axis=-1) * m[None], axis=(1, 2))
    return np.sqrt(tot)


def reparametrize(arrays, metric):
    """Equal-arclength redistribution along the piecewise geodesic path."""
    n = arrays[0].shape[0]
    seg = path_lengths(arrays, metric)
    cum = np.concatenate([[0.0], np.cumsum(seg)])
    if cum[-1] == 0:
        return arrays
    targets = np.linspace(0.0, cum[-1], n)
    j = np.clip(np.searchsorted(cum, targets, side="right") - 1, 0, n - 2)
    frac = np.where(seg[j] > 0, (targets - cum[j]) / np.where(seg[j] > 0, seg[j], 1.0), 0.0)
    frac = np.clip(frac, 0.0, 1.0)
    vp, vt, vh = _segment_vectors(arrays)
    ff = frac[:, None, None, None]
    uphi = qmul(qexp(ff * vp[j], np), arrays[0][j], np)
    uth = qmul(qexp(ff * vt[j], np), arrays[1][j], np)
    higgs = arrays[2][j] + ff * vh[j]
    # endpoints are kept bit-exact
    out = [_unit(uphi), _unit(uth), higgs]
    for o, a in zip(out, arrays):
        o[0], o[-1] = a[0], a[-1]
    return tuple(out)


@dataclass
class SaddleReport:
    k0: int
    k1: int
    estimate: float
    grad_norm: float
    top_image: int
    energies: list
    iterations: int
    collapsed: bool
    config: dict
    history: list = field(default_factory=list)
    path_length: float = 0.0

    @property
    def ok(self) -> bool:
        return not self.collapsed

    def to_dict(self) -> dict:
        return {
            "k0": self.k0, "k1": self.k1, "estimate": self.estimate, "grad_norm": self.grad_norm,
            "top_image": self.top_image, "energies": self.energies, "iterations": self.iterations,
            "collapsed": self.collapsed, "path_length": self.path_length, "config": self.config,
        }


def saddle_search(k0: int, k1: int, images: Optional[int] = None,
                  config: Optional[StringConfig] = None) -> SaddleReport:
    cfg = config or StringConfig()
    if images is not None:
        cfg = StringConfig(**{**asdict(cfg), "images": images})
    if k0 == k1:
        return SaddleReport(k0, k1, 0.0, 0.0, 0, [0.0] * cfg.images, 0, False, asdict(cfg))
    geom = Geometry(cfg.nt, cfg.nph)
    consts = _consts(geom)
    metric = geom.metric
    A, B = sector_minimizer(k0, geom), sector_minimizer(k1, geom)
    n = cfg.images
    arrays = geodesic_path(A, B, np.linspace(0.0, 1.0, n))
    rng = np.random.default_rng(cfg.seed)
    if cfg.perturbation:
        noise = [cfg.perturbation * rng.normal(size=a.shape[:-1] + (3,)) for a in arrays]
        noise = [x * np.r_[0.0, np.ones(n - 2), 0.0].reshape(-1, 1, 1, 1) for x in noise]
        arrays = _step(arrays, noise, np.ones(n))
    inner = np.r_[False, np.ones(n - 2, dtype=bool), False]
    t = np.full(n, cfg.max_step)
    history = []
    prev_top = None
    it = 0
    for it in range(1, cfg.iterations + 1):
        energies, grads = _grad_batch(_batched(arrays), consts)
        energies = np.asarray(energies)
        g = [np.asarray(x) for x in grads]
        d = [x / m[None, ..., None] for x, m in zip(g, metric)]
        slope = sum(np.sum(a * b, axis=(1, 2, 3)) for a, b in zip(g, d))
        direction = [-x * inner.reshape(-1, 1, 1, 1) for x in d]
        t = np.minimum(cfg.max_step, 2 * t)
        accepted = ~inner
        trial = arrays
        for _ in range(60):
            cand = _step(arrays, direction, np.where(accepted, 0.0, t))
            e_new = np.asarray(_energy_batch(_batched(cand), consts))
            ok = e_new <= energies - cfg.armijo * t * slope
            newly = ok & ~accepted
            trial = tuple(np.where(newly.reshape(-1, 1, 1, 1), c, tr) for c, tr in zip(cand, trial))
            accepted = accepted | ok
            if accepted.all():
                break
            t = np.where(accepted, t, t * cfg.shrink)
        arrays = reparametrize(trial, metric)
        top = float(np.max(energies))
        history.append((it, top, float(np.sqrt(np.max(slope[inner])))))
        if prev_top is not None and abs(top - prev_top) <= cfg.energy_tol * max(1.0, top):
            break
        prev_top = top
    energies = np.asarray(_energy_batch(_batched(arrays), consts))
    j = int(np.argmax(energies))
    top_field = LatticeField(geom, *(a[j] for a in arrays))
    check_branch(top_field)
    _, gtop = _grad_jit(tuple(jnp.asarray(a) for a in top_field.arrays), consts)
    gnorm = Tangent(*(np.asarray(x) for x in gtop)).norm(metric)
    ends = max(energies[0], energies[-1])
    collapsed = bool(j in (0, n - 1) or energies[j] - ends <= cfg.collapse_tol)
    return SaddleReport(k0, k1, float(energies[j]), gnorm, j, [float(e) for e in energies], it, collapsed,
                        asdict(cfg), history, float(path_lengths(arrays, metric).sum()))


def path_fields(report_arrays, geom: Geometry) -> list[LatticeField]:
    return [LatticeField(geom, *(a[i] for a in report_arrays)) for i in range(report_arrays[0].shape[0])]
