"""Rotationally reduced U(1) sector of the twisted YMH functional on S^2.

With A = a(theta) T dphi and Phi = h(theta) T the functional reduces to

    E = pi * int_0^pi [(a' - h sin)^2 / sin + h'^2 sin] dtheta

Samples live on M+1 nodes theta_j = j pi / M; a' and h' are cell differences
and h, sin are evaluated at the cell midpoint, so nothing is sampled at the
poles where 1/sin blows up.  The sector is fixed by a(0) = 0, a(pi) = k.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Optional

import numpy as np
from scipy.linalg import solveh_banded


@dataclass
class AbelianProfile:
    k: int
    a: np.ndarray
    h: np.ndarray

    def __post_init__(self):
        self.a = np.asarray(self.a, dtype=float).copy()
        self.h = np.asarray(self.h, dtype=float).copy()
        if self.a.shape != self.h.shape or self.a.ndim != 1:
            raise ValueError("a and h must be 1-D arrays of equal length")
        if self.M < 16:
            raise ValueError("need M >= 16 cells")
        # boundary conditions are pinned, not checked
        self.a[0], self.a[-1] = 0.0, float(self.k)

    @property
    def M(self) -> int:
        return len(self.a) - 1

    @property
    def theta(self) -> np.ndarray:
        return np.linspace(0.0, math.pi, self.M + 1)

    @classmethod
    def from_functions(cls, k: int, M: int, a_fn, h_fn) -> "AbelianProfile":
        th = np.linspace(0.0, math.pi, M + 1)
        return cls(k, a_fn(th) * np.ones_like(th), h_fn(th) * np.ones_like(th))

    @classmethod
    def closed_form(cls, k: int, M: int) -> "AbelianProfile":
        """a = (k/2)(1 - cos), h = k/2: the continuum minimiser."""
        return cls.from_functions(k, M, lambda t: 0.5 * k * (1 - np.cos(t)), lambda t: 0.5 * k)

    @classmethod
    def linear(cls, k: int, M: int) -> "AbelianProfile":
        return cls.from_functions(k, M, lambda t: k * t / math.pi, lambda t: 0.0)


def _mid_sin(M: int) -> np.ndarray:
    return np.sin((np.arange(M) + 0.5) * math.pi / M)


def abelian_energy(p: AbelianProfile) -> float:
    M = p.M
    dt = math.pi / M
    s = _mid_sin(M)
    da = np.diff(p.a) / dt
    dh = np.diff(p.h) / dt
    hm = 0.5 * (p.h[1:] + p.h[:-1])
    return float(math.pi * dt * np.sum((da - hm * s) ** 2 / s + dh * dh * s))


def _gradient(a, h, s, dt):
    # dE/da at interior nodes and dE/dh at all nodes
    r = (np.diff(a) / dt - 0.5 * (h[1:] + h[:-1]) * s) / s  # residual / sin
    dh = np.diff(h) / dt
    ga = np.zeros_like(a)
    ga[:-1] -= 2 * math.pi * r
    ga[1:] += 2 * math.pi * r
    gh = np.zeros_like(h)
    t1 = -math.pi * dt * r * s  # d/dh_mid of the curvature term times 1/2
    gh[:-1] += t1
    gh[1:] += t1
    t2 = 2 * math.pi * dh * s
    gh[:-1] -= t2
    gh[1:] += t2
    ga[0] = ga[-1] = 0.0
    return ga, gh


def _metric_bands(s, dt):
    """Banded Hessians of the two decoupled blocks (coupling dropped)."""
    M = len(s)
    # a-block on interior nodes 1..M-1: weights 2 pi / (s dt)
    w = 2 * math.pi / (s * dt)
    a_diag = w[:-1] + w[1:]
    a_off = -w[1:-1]
    ab = np.zeros((2, M - 1))
    ab[0, 1:] = a_off
    ab[1] = a_diag
    # h-block on nodes 0..M: mass from the midpoint average, stiffness from h'
    m = 0.5 * math.pi * dt * s
    st = 2 * math.pi * s / dt
    h_diag = np.zeros(M + 1)
    h_diag[:-1] += m + st
    h_diag[1:] += m + st
    h_off = m - st
    hb = np.zeros((2, M + 1))
    hb[0, 1:] = h_off
    hb[1] = h_diag
    return ab, hb


@dataclass
class DescentConfig:
    armijo: float = 1e-4
    shrink: float = 0.5
    max_iter: int = 20000
    energy_tol: float = 1e-14
    grad_tol: float = 1e-12


@dataclass
class SolveReport:
    energy: float
    grad_norm: float
    iterations: int
    sector: str
    converged: bool
    history: list = field(default_factory=list)
    profile: Optional[AbelianProfile] = None
    extra: dict = field(default_factory=dict)

    def to_dict(self) -> dict:
        out = {
            "energy": self.energy, "grad_norm": self.grad_norm, "iterations": self.iterations,
            "sector": self.sector, "converged": self.converged,
        }
        out.update(self.extra)
        return out


def abelian_minimize(k: int, M: int, config: Optional[DescentConfig] = None,
                     init: Optional[AbelianProfile] = None) -> SolveReport:
    """Preconditioned projected gradient descent with Armijo backtracking.

    The search direction is the gradient in the metric of the decoupled
    (a, h) Hessian blocks; the boundary values of a are projected out.
    """
    if M < 64:
        raise ValueError("abelian_minimize needs M >= 64")
    cfg = config or DescentConfig()
    prof = init if init is not None else AbelianProfile.linear(k, M)
    a, h = prof.a.copy(), prof.h.copy()
    dt = math.pi / M
    s = _mid_sin(M)
    ab, hb = _metric_bands(s, dt)

    def energy(a_, h_):
        return abelian_energy(AbelianProfile(k, a_, h_))

    e = energy(a, h)
    history = [(0, e, float("nan"))]
    step = 1.0
    it = 0
    gnorm = float("nan")
    converged = False
    while True:
        ga, gh = _gradient(a, h, s, dt)
        da = np.zeros_like(a)
        da[1:-1] = solveh_banded(ab, ga[1:-1])
        dh = solveh_banded(hb, gh)
        slope = float(ga @ da + gh @ dh)  # squared gradient norm in the metric
        gnorm = math.sqrt(max(slope, 0.0))
        history[-1] = (it, e, gnorm)
        if e <= cfg.energy_tol or gnorm <= cfg.grad_tol:
            converged = True
            break
        if it >= cfg.max_iter:
            break
        t = min(1.0, 2 * step)
        while True:
            a_new, h_new = a - t * da, h - t * dh
            e_new = energy(a_new, h_new)
            if e_new <= e - cfg.armijo * t * slope:
                break
            t *= cfg.shrink
            if t < 1e-20:
                break
        if e_new > e:
            break
        a, h, e, step = a_new, h_new, e_new, t
        it += 1
        history.append((it, e, float("nan")))
    out = AbelianProfile(k, a, h)
    return SolveReport(e, gnorm, it, f"k={k}", converged, history, out,
                       {"h_max_dev": float(np.max(np.abs(h - 0.5 * k)))})


def discrete_minimizer(k: int, M: int) -> AbelianProfile:
    """Exact zero of the discrete energy: a at the closed form, h = k sin(dt/2)/dt."""
    dt = math.pi / M
    return AbelianProfile.from_functions(
        k, M, lambda t: 0.5 * k * (1 - np.cos(t)), lambda t: k * math.sin(dt / 2) / dt
    )
