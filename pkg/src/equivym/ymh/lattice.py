"""SU(2) lattice discretisation of the twisted YMH functional on S^2.

Conventions
-----------
* su(2) = R^3 through X = i x.sigma, with |X|^2 = -tr(X^2)/2 = |x|^2.
* A link is a unit quaternion q = (q0, v) standing for q0 + i v.sigma, so
  exp(x) = (cos|x|, sin|x| x/|x|) and the product has vector part
  a0 b + b0 a - a x b.
* Sites are cell centres theta_i = (i+1/2) pi/nt, phi_j = (j+1/2) 2pi/nph.
  uphi[i, j] joins (i, j) to (i, j+1 mod nph); uth[i, j] joins (i, j) to
  (i+1, j).  A link U_xy acts by U_xy -> g_x U_xy g_y^-1.
* Quad plaquettes sit between rings i and i+1 and are based at (i, j):
  H = uth[i,j] uphi[i+1,j] uth[i,j+1]^-1 uphi[i,j]^-1.  The two polar caps
  are the products around the first and last ring.  Areas are exact.

Energy = 1/2 sum_P |log(H_P)/A_P - Phi_P|^2 A_P
       + 1/2 sum_e w_e |U_e Phi_y U_e^-1 - Phi_x|^2
with Phi_P the corner average transported to the base site.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from functools import cached_property

import jax
import jax.numpy as jnp
import numpy as np

jax.config.update("jax_enable_x64", True)

LOG_GUARD = 1e-3  # reject plaquettes closer than this to angle pi


class BranchError(ValueError):
    """A plaquette holonomy is too close to angle pi for a single-valued log."""


# ---------------------------------------------------------------------------
# quaternion algebra, written for both numpy and jax arrays


def qmul(a, b, xp=jnp):
    a0, av = a[..., :1], a[..., 1:]
    b0, bv = b[..., :1], b[..., 1:]
    s = a0 * b0 - jnp_sum(av * bv, xp)
    v = a0 * bv + b0 * av - xp.cross(av, bv)
    return xp.concatenate([s, v], axis=-1)


def jnp_sum(x, xp):
    return xp.sum(x, axis=-1, keepdims=True)


def qinv(a, xp=jnp):
    return xp.concatenate([a[..., :1], -a[..., 1:]], axis=-1)


def qexp(x, xp=jnp):
    n2 = xp.sum(x * x, axis=-1, keepdims=True)
    small = n2 < 1e-24
    n = xp.sqrt(xp.where(small, 1.0, n2))
    c = xp.where(small, 1.0 - n2 / 2, xp.cos(n))
    sc = xp.where(small, 1.0 - n2 / 6, xp.sin(n) / n)
    return xp.concatenate([c, sc * x], axis=-1)


def qlog(q, xp=jnp):
    """Principal logarithm as an R^3 vector; angle in [0, pi]."""
    w = q[..., :1]
    v = q[..., 1:]
    n2 = xp.sum(v * v, axis=-1, keepdims=True)
    small = n2 < 1e-24
    n = xp.sqrt(xp.where(small, 1.0, n2))
    ws = xp.where(small, 1.0, w)
    f = xp.where(small, (1.0 - n2 / (3 * ws * ws)) / ws, xp.arctan2(n, w) / n)
    return f * v


def qangle(q, xp=np):
    return xp.arctan2(xp.linalg.norm(q[..., 1:], axis=-1), q[..., 0])


def adjoint(q, x, xp=jnp):
    """U X U^-1 as an R^3 vector."""
    zero = xp.zeros(x.shape[:-1] + (1,), dtype=x.dtype)
    p = xp.concatenate([zero, x], axis=-1)
    return qmul(qmul(q, p, xp), qinv(q, xp), xp)[..., 1:]


def identity_links(shape) -> np.ndarray:
    out = np.zeros(tuple(shape) + (4,))
    out[..., 0] = 1.0
    return out


def to_matrix(q) -> np.ndarray:
    """2x2 complex matrices of unit quaternions."""
    q = np.asarray(q)
    q0, q1, q2, q3 = (q[..., i] for i in range(4))
    m = np.empty(q.shape[:-1] + (2, 2), dtype=complex)
    m[..., 0, 0] = q0 + 1j * q3
    m[..., 0, 1] = q2 + 1j * q1
    m[..., 1, 0] = -q2 + 1j * q1
    m[..., 1, 1] = q0 - 1j * q3
    return m


def from_matrix(m) -> np.ndarray:
    m = np.asarray(m)
    return np.stack([m[..., 0, 0].real, m[..., 0, 1].imag, m[..., 0, 1].real, m[..., 0, 0].imag], axis=-1)


def random_su2(rng, shape) -> np.ndarray:
    q = rng.normal(size=tuple(shape) + (4,))
    return q / np.linalg.norm(q, axis=-1, keepdims=True)


# ---------------------------------------------------------------------------
# geometry


@dataclass(frozen=True)
class Geometry:
    nt: int
    nph: int

    def __post_init__(self):
        if self.nt < 2 or self.nph < 3:
            raise ValueError("need at least 2 rings and 3 sites per ring")

    @property
    def dtheta(self) -> float:
        return math.pi / self.nt

    @property
    def dphi(self) -> float:
        return 2 * math.pi / self.nph

    @cached_property
    def theta(self) -> np.ndarray:
        return (np.arange(self.nt) + 0.5) * self.dtheta

    @cached_property
    def phi(self) -> np.ndarray:
        return (np.arange(self.nph) + 0.5) * self.dphi

    @cached_property
    def quad_area(self) -> np.ndarray:
        c = np.cos(self.theta)
        return np.repeat(((c[:-1] - c[1:]) * self.dphi)[:, None], self.nph, axis=1)

    @cached_property
    def cap_area(self) -> tuple[float, float]:
        a = 2 * math.pi * (1 - math.cos(self.theta[0]))
        return a, a

    @cached_property
    def w_theta(self) -> np.ndarray:
        """Weights of theta-edges: dual width / length."""
        node = np.arange(1, self.nt) * self.dtheta
        return np.repeat((np.sin(node) * self.dphi / self.dtheta)[:, None], self.nph, axis=1)

    @cached_property
    def w_phi(self) -> np.ndarray:
        return np.repeat((self.dtheta / (np.sin(self.theta) * self.dphi))[:, None], self.nph, axis=1)

    def total_area(self) -> float:
        return float(self.quad_area.sum() + sum(self.cap_area))

    @cached_property
    def metric(self) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
        """Diagonal preconditioner for (uphi, uth, higgs) from the local
        curvature and edge weights each variable touches."""
        nt, nph = self.nt, self.nph
        inv_a = 1.0 / self.quad_area
        m_phi = np.zeros((nt, nph))
        m_phi[:-1] += inv_a
        m_phi[1:] += inv_a
        m_phi[0] += 1.0 / self.cap_area[0]
        m_phi[-1] += 1.0 / self.cap_area[1]
        m_phi += self.w_phi
        m_th = inv_a + np.roll(inv_a, 1, axis=1) + self.w_theta
        m_h = np.zeros((nt, nph))
        m_h[:-1] += self.w_theta + self.quad_area / 16
        m_h[1:] += self.w_theta + self.quad_area / 16
        m_h += self.w_phi + np.roll(self.w_phi, 1, axis=1)
        for r, a in ((0, self.cap_area[0]), (nt - 1, self.cap_area[1])):
            m_h[r] += a / nph ** 2
        return m_phi, m_th, m_h


# ---------------------------------------------------------------------------
# fields


@dataclass
class LatticeField:
    geom: Geometry
    uphi: np.ndarray
    uth: np.ndarray
    higgs: np.ndarray

    def __post_init__(self):
        g = self.geom
        self.uphi = np.asarray(self.uphi, dtype=float)
        self.uth = np.asarray(self.uth, dtype=float)
        self.higgs = np.asarray(self.higgs, dtype=float)
        if self.uphi.shape != (g.nt, g.nph, 4) or self.uth.shape != (g.nt - 1, g.nph, 4):
            raise ValueError("link arrays do not match the geometry")
        if self.higgs.shape != (g.nt, g.nph, 3):
            raise ValueError("higgs array does not match the geometry")

    @classmethod
    def trivial(cls, geom: Geometry) -> "LatticeField":
        return cls(geom, identity_links((geom.nt, geom.nph)), identity_links((geom.nt - 1, geom.nph)),
                   np.zeros((geom.nt, geom.nph, 3)))

    @property
    def arrays(self):
        return (self.uphi, self.uth, self.higgs)

    def replace(self, uphi=None, uth=None, higgs=None) -> "LatticeField":
        return LatticeField(self.geom, self.uphi if uphi is None else uphi,
                            self.uth if uth is None else uth, self.higgs if higgs is None else higgs)

    def reproject(self) -> "LatticeField":
        """Renormalise links onto SU(2)."""
        def unit(q):
            return q / np.linalg.norm(q, axis=-1, keepdims=True)
        return self.replace(unit(self.uphi), unit(self.uth))

    def unitarity_defect(self) -> float:
        return float(max(np.abs(np.linalg.norm(self.uphi, axis=-1) - 1).max(),
                         np.abs(np.linalg.norm(self.uth, axis=-1) - 1).max()))

    def gauge_transform(self, g: np.ndarray) -> "LatticeField":
        """U_xy -> g_x U_xy g_y^-1, Phi_x -> g_x Phi_x g_x^-1 for g of shape (nt, nph, 4)."""
        g = np.asarray(g, dtype=float)
        gy_phi = np.roll(g, -1, axis=1)
        uphi = qmul(qmul(g, self.uphi, np), qinv(gy_phi, np), np)
        uth = qmul(qmul(g[:-1], self.uth, np), qinv(g[1:], np), np)
        higgs = adjoint(g, self.higgs, np)
        return self.replace(uphi, uth, higgs)

    def max_link_angle(self) -> float:
        return float(max(qangle(self.uphi).max(), qangle(self.uth).max()))


# ---------------------------------------------------------------------------
# energy


def _cumulative(ring):
    """Prefix products P_0 = 1, P_j = u_0 ... u_{j-1} along a ring of links."""
    def step(acc, u):
        return qmul(acc, u), acc
    one = jnp.zeros(4, dtype=ring.dtype).at[0].set(1.0)
    total, prefix = jax.lax.scan(step, one, ring)
    return prefix, total


def holonomies(uphi, uth):
    """Quad holonomies (nt-1, nph, 4) and the two cap holonomies."""
    uth_next = jnp.roll(uth, -1, axis=1)
    h = qmul(qmul(qmul(uth, uphi[1:]), qinv(uth_next)), qinv(uphi[:-1]))
    _, north = _cumulative(uphi[0])
    _, south = _cumulative(uphi[-1])
    return h, north, qinv(south)


def _energy_terms(uphi, uth, higgs, consts):
    area, cap_a, w_th, w_ph = consts
    quad, north, south = holonomies(uphi, uth)
    # transported corner average for quads
    phi_next = jnp.roll(higgs, -1, axis=1)
    path = qmul(uth, uphi[1:])
    avg = 0.25 * (higgs[:-1] + adjoint(uth, higgs[1:]) + adjoint(uphi[:-1], phi_next[:-1])
                  + adjoint(path, phi_next[1:]))
    f = qlog(quad) / area[..., None] - avg
    e_quad = 0.5 * jnp.sum(jnp.sum(f * f, axis=-1) * area)
    e_cap = 0.0
    for ring, hol, a in ((0, north, cap_a[0]), (-1, south, cap_a[1])):
        pref, _ = _cumulative(uphi[ring])
        cav = jnp.mean(adjoint(pref, higgs[ring]), axis=0)
        fc = qlog(hol) / a - cav
        e_cap = e_cap + 0.5 * jnp.sum(fc * fc) * a
    d_th = adjoint(uth, higgs[1:]) - higgs[:-1]
    d_ph = adjoint(uphi, phi_next) - higgs
    e_edge = 0.5 * (jnp.sum(jnp.sum(d_th * d_th, axis=-1) * w_th) + jnp.sum(jnp.sum(d_ph * d_ph, axis=-1) * w_ph))
    return e_quad + e_cap, e_edge


def _energy(arrays, consts):
    c, e = _energy_terms(*arrays, consts)
    return c + e


_energy_jit = jax.jit(_energy)
_energy_batch = jax.jit(jax.vmap(_energy, in_axes=(0, None)))


def _tangent(q, G):
    # gradient along left translations exp(eps x) q
    q0, qv = q[..., :1], q[..., 1:]
    g0, gv = G[..., :1], G[..., 1:]
    return -g0 * qv + q0 * gv - jnp.cross(qv, gv)


def _gradient(arrays, consts):
    e, (gphi, gth, gh) = jax.value_and_grad(_energy)(arrays, consts)
    return e, (_tangent(arrays[0], gphi), _tangent(arrays[1], gth), gh)


_grad_jit = jax.jit(_gradient)
_grad_batch = jax.jit(jax.vmap(_gradient, in_axes=(0, None)))


def _consts(geom: Geometry):
    return (jnp.asarray(geom.quad_area), jnp.asarray(geom.cap_area), jnp.asarray(geom.w_theta),
            jnp.asarray(geom.w_phi))


def check_branch(F: LatticeField, guard: float = LOG_GUARD) -> float:
    """Largest plaquette angle; raises BranchError within ``guard`` of pi."""
    quad, north, south = (np.asarray(x) for x in holonomies(jnp.asarray(F.uphi), jnp.asarray(F.uth)))
    worst = max(qangle(quad).max(), qangle(north), qangle(south))
    if math.pi - worst < guard:
        raise BranchError(
            f"plaquette holonomy at angle {worst:.6f}, within {guard} of pi; refine the grid"
        )
    return float(worst)


def lattice_energy(F: LatticeField, check: bool = True) -> float:
    if check:
        check_branch(F)
    return float(_energy_jit(tuple(jnp.asarray(a) for a in F.arrays), _consts(F.geom)))


def energy_parts(F: LatticeField) -> tuple[float, float]:
    c, e = jax.jit(_energy_terms)(*(jnp.asarray(a) for a in F.arrays), _consts(F.geom))
    return float(c), float(e)


@dataclass
class Tangent:
    """Left-trivialised link directions (R^3 per link) and Higgs directions."""

    uphi: np.ndarray
    uth: np.ndarray
    higgs: np.ndarray

    def dot(self, other: "Tangent") -> float:
        return float(np.sum(self.uphi * other.uphi) + np.sum(self.uth * other.uth)
                     + np.sum(self.higgs * other.higgs))

    def norm(self, metric=None) -> float:
        if metric is None:
            return math.sqrt(self.dot(self))
        parts = (self.uphi, self.uth, self.higgs)
        return math.sqrt(sum(float(np.sum(np.sum(p * p, axis=-1) / m)) for p, m in zip(parts, metric)))

    def scaled(self, metric) -> "Tangent":
        return Tangent(*(p / m[..., None] for p, m in zip((self.uphi, self.uth, self.higgs), metric)))

    @classmethod
    def random(cls, geom: Geometry, rng) -> "Tangent":
        return cls(rng.normal(size=(geom.nt, geom.nph, 3)), rng.normal(size=(geom.nt - 1, geom.nph, 3)),
                   rng.normal(size=(geom.nt, geom.nph, 3)))


def lattice_gradient(F: LatticeField) -> Tangent:
    _, (gp, gt, gh) = _grad_jit(tuple(jnp.asarray(a) for a in F.arrays), _consts(F.geom))
    return Tangent(np.asarray(gp), np.asarray(gt), np.asarray(gh))


def retract(F: LatticeField, v: Tangent, eps: float) -> LatticeField:
    """exp(eps x) U on links, Phi + eps psi on the Higgs field."""
    return F.replace(qmul(qexp(eps * v.uphi, np), F.uphi, np), qmul(qexp(eps * v.uth, np), F.uth, np),
                     F.higgs + eps * v.higgs)


def directional_check(F: LatticeField, v: Tangent, eps: float = 1e-5,
                      grad: Tangent | None = None) -> tuple[float, float]:
    """(analytic, central-difference) directional derivatives along v."""
    an = (grad if grad is not None else lattice_gradient(F)).dot(v)
    fd = (lattice_energy(retract(F, v, eps)) - lattice_energy(retract(F, v, -eps))) / (2 * eps)
    return an, fd


# ---------------------------------------------------------------------------
# embedded abelian configurations


def embed_abelian(profile, geom: Geometry) -> LatticeField:
    """Lattice field of an abelian profile sampled on 2*nt cells.

    Rings sit at the odd nodes of the profile grid; uphi = exp(a dphi T),
    uth = 1, Phi = h T with T = i sigma_3.
    """
    if profile.M != 2 * geom.nt:
        raise ValueError(f"profile needs M = 2 nt = {2 * geom.nt}, has {profile.M}")
    a = profile.a[1::2]
    h = profile.h[1::2]
    ang = a * geom.dphi
    uphi = np.zeros((geom.nt, geom.nph, 4))
    uphi[..., 0] = np.cos(ang)[:, None]
    uphi[..., 3] = np.sin(ang)[:, None]
    higgs = np.zeros((geom.nt, geom.nph, 3))
    higgs[..., 2] = h[:, None]
    return LatticeField(geom, uphi, identity_links((geom.nt - 1, geom.nph)), higgs)


def regular_gauge(geom: Geometry, k: int) -> np.ndarray:
    """g = exp(-i k phi s3/2) exp(i theta s2/2) exp(i k phi s3/2) at every site.

    It unwinds the flux-k abelian field at the south pole so that every link
    of the transformed field is close to the identity.
    """
    th, ph = np.meshgrid(geom.theta, geom.phi, indexing="ij")
    zero = np.zeros_like(th)

    def q(c, s, axis):
        parts = [c, zero, zero, zero]
        parts[axis] = s
        return np.stack(parts, axis=-1)
    left = q(np.cos(k * ph / 2), -np.sin(k * ph / 2), 3)
    mid = q(np.cos(th / 2), np.sin(th / 2), 2)
    right = q(np.cos(k * ph / 2), np.sin(k * ph / 2), 3)
    return qmul(qmul(left, mid, np), right, np)
