"""Killing norms of Lie algebra homomorphisms out of su(2), and the
finite-group cochain homotopy behind the rigidity of homomorphisms.

All arithmetic is exact.  Structure constants are stored as an integer
array over a common denominator; vectors are numpy object arrays of
``Fraction``.  Complexified targets (e.g. ``sl(N)`` standing in for ``su(N)``)
are handled by carrying real and imaginary coordinate vectors; the complex
Killing form restricted to any compact real form is that form's Killing
form, so norms come out the same.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property, lru_cache
from typing import Optional, Sequence

import numpy as np



class NotSemisimpleError(ValueError):
    """The Killing form is degenerate."""


class NotAHomomorphismError(ValueError):
    pass


def _frac_vec(values) -> np.ndarray:
    out = np.empty(len(values), dtype=object)
    for i, v in enumerate(values):
        out[i] = Fraction(v)
    return out


def _zero_vec(n: int) -> np.ndarray:
    return _frac_vec([0] * n)


def symmetric_signature(gram) -> tuple[int, int, int, Optional[np.ndarray]]:
    """Sylvester signature ``(n_plus, n_minus, n_zero, null_vector)`` of a
    rational symmetric matrix by exact congruence diagonalisation."""
    a = np.array([[Fraction(x) for x in row] for row in np.asarray(gram, dtype=object)], dtype=object)
    n = a.shape[0]
    # track the congruence so a null direction can be reported in the original basis
    t = np.array([[Fraction(int(i == j)) for j in range(n)] for i in range(n)], dtype=object)
    pos = neg = 0
    null = None
    for col in range(n):
        piv = next((r for r in range(col, n) if a[r, r] != 0), None)
        if piv is None:
            # no diagonal pivot: combine with an off-diagonal partner
            off = next((r for r in range(col + 1, n) if a[col, r] != 0), None)
            if off is None:
                # row col is zero in the remaining block: a null direction
                if null is None:
                    null = t[col].copy()
                continue
            a[col, :] = a[col, :] + a[off, :]
            a[:, col] = a[:, col] + a[:, off]
            t[col] = t[col] + t[off]
            piv = col
        if piv != col:
            a[[col, piv], :] = a[[piv, col], :]
            a[:, [col, piv]] = a[:, [piv, col]]
            t[[col, piv]] = t[[piv, col]]
        d = a[col, col]
        if d > 0:
            pos += 1
        else:
            neg += 1
        for r in range(col + 1, n):
            if a[r, col] != 0:
                f = a[r, col] / d
                a[r, :] = a[r, :] - f * a[col, :]
                a[:, r] = a[:, r] - f * a[:, col]
                t[r] = t[r] - f * t[col]
    return pos, neg, n - pos - neg, null


class LieAlgebra:
    """A finite-dimensional Lie algebra over Q given by structure constants.

    ``structure[i, j, k]`` is the coefficient of ``e_k`` in ``[e_i, e_j]``,
    scaled by ``denominator``.
    """

    def __init__(self, structure, denominator: int = 1, name: str = "",
                 basis_names: Optional[Sequence[str]] = None, check_jacobi: Optional[bool] = None):
        c = np.asarray(structure)
        if c.ndim != 3 or len(set(c.shape)) != 1:
            raise ValueError("structure constants must have shape (n, n, n)")
        if not np.issubdtype(c.dtype, np.integer):
            raise TypeError("use LieAlgebra.from_fractions for rational structure constants")
        self.c = c.astype(np.int64)
        self.den = int(denominator)
        self.name = name
        self.dim = c.shape[0]
        self.basis_names = list(basis_names) if basis_names else [f"e{i + 1}" for i in range(self.dim)]
        if not np.array_equal(self.c, -self.c.transpose(1, 0, 2)):
            raise ValueError(f"{name}: structure constants are not antisymmetric")
        if check_jacobi is None:
            check_jacobi = self.dim <= 40
        if check_jacobi and not self.jacobi_holds():
            raise ValueError(f"{name}: Jacobi identity fails")

    @classmethod
    def from_fractions(cls, structure, **kw) -> "LieAlgebra":
        arr = np.asarray(structure, dtype=object)
        den = 1
        for x in arr.ravel():
            den = math.lcm(den, Fraction(x).denominator)
        num = np.vectorize(lambda x: int(Fraction(x) * den), otypes=[np.int64])(arr)
        return cls(num, den, **kw)

    def jacobi_holds(self) -> bool:
        c = self.c
        # sum_m c_jk^m c_im^n + cyclic, all integer
        t = np.einsum("jkm,imn->ijkn", c, c)
        return not np.any(t + t.transpose(1, 2, 0, 3) + t.transpose(2, 0, 1, 3))

    def basis(self, i: int) -> np.ndarray:
        v = _zero_vec(self.dim)
        v[i] = Fraction(1)
        return v

    def bracket(self, x, y) -> np.ndarray:
        x, y = np.asarray(x, dtype=object), np.asarray(y, dtype=object)
        out = _zero_vec(self.dim)
        for i in np.flatnonzero(x != 0):
            for j in np.flatnonzero(y != 0):
                row = self.c[i, j]
                if row.any():
                    out = out + (x[i] * y[j] / self.den) * row.astype(object)
        return out

    def ad(self, x) -> np.ndarray:
        """Matrix of ad x: column j holds the coordinates of [x, e_j]."""
        x = np.asarray(x, dtype=object)
        m = np.zeros((self.dim, self.dim), dtype=object) + Fraction(0)
        for i in np.flatnonzero(x != 0):
            m = m + (x[i] / self.den) * self.c[i].T.astype(object)
        return m

    @cached_property
    def _killing_num(self) -> np.ndarray:
        # Tr(ad e_a ad e_b) * den^2, as Python ints
        bound = (self.dim ** 2) * int(np.abs(self.c).max() or 1) ** 2
        if bound >= 2 ** 62:
            raise OverflowError("Killing form would overflow int64")
        return np.einsum("ajk,bkj->ab", self.c, self.c).astype(object)

    @cached_property
    def killing_gram(self) -> np.ndarray:
        """Tr(ad e_a ad e_b), exact."""
        den2 = self.den * self.den
        return np.vectorize(lambda v: Fraction(int(v), den2), otypes=[object])(self._killing_num)

    def killing(self, x, y) -> Fraction:
        (xn, xd, xi), (yn, yd, yi) = _scaled(x), _scaled(y)
        if not len(xi) or not len(yi):
            return Fraction(0)
        val = xn.dot(self._killing_num[np.ix_(xi, yi)].dot(yn))
        return Fraction(int(val), xd * yd * self.den * self.den)

    @cached_property
    def signature(self) -> tuple[int, int, int, Optional[np.ndarray]]:
        return symmetric_signature(self.killing_gram)

    @property
    def semisimple(self) -> bool:
        return self.signature[2] == 0

    @property
    def compact_semisimple(self) -> bool:
        return self.signature[1] == self.dim

    def require_semisimple(self) -> None:
        pos, neg, zero, null = self.signature
        if zero:
            terms = [f"{v}*{n}" for v, n in zip(null, self.basis_names) if v != 0]
            raise NotSemisimpleError(
                f"{self.name or 'algebra'}: Killing form degenerate along {' + '.join(terms)}"
            )

    def in_derived(self, x) -> bool:
        """Whether x lies in [g, g]."""
        rows = [self.c[i, j].astype(object) / self.den for i in range(self.dim) for j in range(i + 1, self.dim)]
        rows = [r for r in rows if any(v != 0 for v in r)]
        base = _rank(rows)
        return _rank(rows + [np.asarray(x, dtype=object)]) == base

    def __repr__(self) -> str:
        return f"LieAlgebra({self.name!r}, dim={self.dim})"


def _scaled(v):
    """Nonzero part of a rational vector as (integers, common denominator, indices)."""
    v = np.asarray(v, dtype=object)
    idx = np.flatnonzero(v != 0)
    vals = [Fraction(v[i]) for i in idx]
    den = math.lcm(*(f.denominator for f in vals)) if vals else 1
    return np.array([f.numerator * (den // f.denominator) for f in vals], dtype=object), den, idx


def _rank(rows) -> int:
    m = [list(map(Fraction, r)) for r in rows]
    rank, ncol = 0, (len(m[0]) if m else 0)
    for col in range(ncol):
        piv = next((r for r in range(rank, len(m)) if m[r][col] != 0), None)
        if piv is None:
            continue
        m[rank], m[piv] = m[piv], m[rank]
        for r in range(len(m)):
            if r != rank and m[r][col] != 0:
                f = m[r][col] / m[rank][col]
                m[r] = [a - f * b for a, b in zip(m[r], m[rank])]
        rank += 1
    return rank


def rank(matrix) -> int:
    """Exact rank of a rational matrix."""
    return _rank([list(r) for r in np.asarray(matrix, dtype=object)])


# ---------------------------------------------------------------------------
# concrete algebras


@lru_cache(maxsize=None)
def su2() -> LieAlgebra:
    """su(2) in the basis e1, e2, e3 with [e1, e2] = e3 and cyclic."""
    c = np.zeros((3, 3, 3), dtype=np.int64)
    for i, j, k in ((0, 1, 2), (1, 2, 0), (2, 0, 1)):
        c[i, j, k] = 1
        c[j, i, k] = -1
    return LieAlgebra(c, name="su(2)")


def direct_sum(*algebras: LieAlgebra) -> LieAlgebra:
    den = math.lcm(*(g.den for g in algebras))
    n = sum(g.dim for g in algebras)
    c = np.zeros((n, n, n), dtype=np.int64)
    names, off = [], 0
    for g in algebras:
        d = g.dim
        c[off:off + d, off:off + d, off:off + d] = g.c * (den // g.den)
        names += [f"{x}@{g.name}" for x in g.basis_names]
        off += d
    return LieAlgebra(c, den, name=" + ".join(g.name for g in algebras), basis_names=names,
                      check_jacobi=False)


class MatrixBasis:
    """Rational basis of sl(N): E_ab (a != b) then H_a = E_aa - E_{a+1,a+1}."""

    def __init__(self, n: int):
        self.n = n
        mats, names = [], []
        for a in range(n):
            for b in range(n):
                if a != b:
                    m = np.zeros((n, n), dtype=np.int64)
                    m[a, b] = 1
                    mats.append(m)
                    names.append(f"E{a}{b}")
        for a in range(n - 1):
            m = np.zeros((n, n), dtype=np.int64)
            m[a, a], m[a + 1, a + 1] = 1, -1
            mats.append(m)
            names.append(f"H{a}")
        self.mats = np.array(mats)
        self.names = names
        self.index = {name: i for i, name in enumerate(names)}

    @property
    def dim(self) -> int:
        return len(self.names)

    def coords(self, mat) -> np.ndarray:
        """Coordinates of a traceless rational N x N matrix."""
        mat = np.asarray(mat, dtype=object)
        n = self.n
        if sum(mat[i, i] for i in range(n)) != 0:
            raise ValueError("matrix is not traceless")
        out = _zero_vec(self.dim)
        for a in range(n):
            for b in range(n):
                if a != b and mat[a, b] != 0:
                    out[self.index[f"E{a}{b}"]] = Fraction(mat[a, b])
        acc = Fraction(0)
        for a in range(n - 1):
            acc += Fraction(mat[a, a])
            out[self.index[f"H{a}"]] = acc
        return out

    def coords_int(self, mats: np.ndarray) -> np.ndarray:
        """Integer coordinates for a stack of integer traceless matrices."""
        lead = mats.shape[:-2]
        n = self.n
        off = mats[..., ~np.eye(n, dtype=bool)].reshape(*lead, n * (n - 1))
        diag = np.cumsum(np.diagonal(mats, axis1=-2, axis2=-1), axis=-1)[..., : n - 1]
        return np.concatenate([off, diag], axis=-1)


@lru_cache(maxsize=None)
def sl(n: int) -> LieAlgebra:
    """sl(N) over Q, the complexification of su(N), with integer structure constants."""
    if n < 2:
        raise ValueError("sl(N) needs N >= 2")
    basis = MatrixBasis(n)
    m = basis.mats
    comm = np.einsum("iab,jbc->ijac", m, m) - np.einsum("jab,ibc->ijac", m, m)
    c = basis.coords_int(comm)
    alg = LieAlgebra(c, name=f"sl({n})", basis_names=basis.names, check_jacobi=n <= 4)
    alg.matrix_basis = basis
    return alg


def partitions(n: int, largest: Optional[int] = None) -> list[tuple[int, ...]]:
    """Partitions of n as nonincreasing tuples, in reverse lexicographic order."""
    largest = n if largest is None else largest
    if n == 0:
        return [()]
    out = []
    for first in range(min(n, largest), 0, -1):
        out += [(first,) + rest for rest in partitions(n - first, first)]
    return out


# ---------------------------------------------------------------------------
# homomorphisms su(2) -> k


@dataclass
class HomSpec:
    """lambda: su(2) -> target, by the images of e1, e2, e3.

    Images are coordinate vectors in the target basis, each a pair
    ``(real, imag)`` so that homomorphisms into a complexified target can be
    written with rational coordinates.
    """

    target: LieAlgebra
    images: list
    partition: Optional[tuple[int, ...]] = None

    def __post_init__(self):
        fixed = []
        for img in self.images:
            if isinstance(img, tuple):
                re, im = img
            else:
                re, im = img, None
            re = _frac_vec(re)
            im = _zero_vec(len(re)) if im is None else _frac_vec(im)
            if len(re) != self.target.dim:
                raise ValueError("image has the wrong dimension for the target")
            fixed.append((re, im))
        if len(fixed) != 3:
            raise ValueError("a map out of su(2) needs three images")
        self.images = fixed

    def bracket(self, x, y):
        g = self.target
        (a, b), (c, d) = x, y
        return (g.bracket(a, c) - g.bracket(b, d), g.bracket(a, d) + g.bracket(b, c))

    def killing(self, x) -> Fraction:
        a, b = x
        g = self.target
        if any(v != 0 for v in b):
            if g.killing(a, b) != 0:
                raise ArithmeticError("Killing form has an imaginary part on this image")
            return g.killing(a, a) - g.killing(b, b)
        return g.killing(a, a)

    def check_homomorphism(self) -> None:
        src = su2()
        for i in range(3):
            for j in range(i + 1, 3):
                lhs = self.bracket(self.images[i], self.images[j])
                coeffs = src.bracket(src.basis(i), src.basis(j))
                rhs_re = sum((coeffs[k] * self.images[k][0] for k in range(3)), _zero_vec(self.target.dim))
                rhs_im = sum((coeffs[k] * self.images[k][1] for k in range(3)), _zero_vec(self.target.dim))
                if any(lhs[0] != rhs_re) or any(lhs[1] != rhs_im):
                    raise NotAHomomorphismError(f"[lambda e{i + 1}, lambda e{j + 1}] != lambda [e{i + 1}, e{j + 1}]")


@dataclass(frozen=True)
class HomNorm:
    squared: Fraction

    @property
    def value(self) -> float:
        return math.sqrt(self.squared)

    def render(self) -> str:
        s = self.squared
        return f"{s.numerator}/{s.denominator}"


def killing_norm_sq(x, g: LieAlgebra) -> Fraction:
    """|X|^2 = -Tr((ad X)^2) on a semisimple algebra."""
    g.require_semisimple()
    return -g.killing(x, x)


def hom_norm(lam: HomSpec) -> HomNorm:
    """sup |lambda X|^2 / |X|^2, which is one constant on the simple source."""
    lam.check_homomorphism()
    g = lam.target
    if not g.semisimple:
        for re, im in lam.images:
            if not (g.in_derived(re) and g.in_derived(im)):
                raise ValueError("image has a central component; norm undefined off the semisimple part")
    src = su2()
    ratios = []
    for k in range(3):
        num = -lam.killing(lam.images[k])
        ratios.append(num / killing_norm_sq(src.basis(k), src))
    if len(set(ratios)) != 1:
        raise NotAHomomorphismError(f"norm ratio is not constant across the basis: {ratios}")
    return HomNorm(ratios[0])


def identity_hom() -> HomSpec:
    g = su2()
    return HomSpec(g, [g.basis(i) for i in range(3)])


def zero_hom(target: LieAlgebra) -> HomSpec:
    return HomSpec(target, [_zero_vec(target.dim)] * 3)


def sum_hom(*homs: HomSpec) -> HomSpec:
    """lambda_1 + lambda_2 into the direct sum of the targets."""
    target = direct_sum(*(h.target for h in homs))
    images = []
    for k in range(3):
        re = np.concatenate([h.images[k][0] for h in homs])
        im = np.concatenate([h.images[k][1] for h in homs])
        images.append((re, im))
    return HomSpec(target, images)


def diagonal_hom() -> HomSpec:
    """X -> (X, X) into su(2) + su(2)."""
    return sum_hom(identity_hom(), identity_hom())


def rep_matrices(parts: Sequence[int]) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """Integer block-diagonal (E, F, H) of the sl(2)-module with the given
    irreducible dimensions; [E, F] = H, [H, E] = 2E, [H, F] = -2F."""
    n = sum(parts)
    E = np.zeros((n, n), dtype=np.int64)
    F = np.zeros((n, n), dtype=np.int64)
    H = np.zeros((n, n), dtype=np.int64)
    off = 0
    for m in parts:
        for r in range(m):
            H[off + r, off + r] = m - 1 - 2 * r
            if r:
                E[off + r - 1, off + r] = 1
                F[off + r, off + r - 1] = r * (m - r)
        off += m
    return E, F, H


def compact_images(E, F, H):
    """Matrices of e1, e2, e3 as (real, imag) pairs:
    e1 = -(i/2)(E+F), e2 = -(1/2)(E-F), e3 = -(i/2)H."""
    half = Fraction(1, 2)
    z = np.zeros_like(E, dtype=object)
    e1 = (z + 0, -half * (E + F).astype(object))
    e2 = (-half * (E - F).astype(object), z + 0)
    e3 = (z + 0, -half * H.astype(object))
    return [e1, e2, e3]


def matrix_hom(n: int, mats) -> HomSpec:
    """HomSpec into sl(n) from (real, imag) image matrices."""
    g = sl(n)
    basis = g.matrix_basis
    return HomSpec(g, [(basis.coords(re), basis.coords(im)) for re, im in mats])


def partition_hom(parts: Sequence[int]) -> HomSpec:
    """su(2) -> su(N) (complexified) as the sum of irreducibles of dims ``parts``."""
    parts = tuple(sorted(parts, reverse=True))
    n = sum(parts)
    mats = compact_images(*rep_matrices(parts))
    for re, im in mats:
        if sum(re[i, i] for i in range(n)) != 0 or sum(im[i, i] for i in range(n)) != 0:
            raise ValueError("representation is not trace-free")
    spec = matrix_hom(n, mats)
    spec.partition = parts
    return spec


def cayley_orthogonal(skew) -> np.ndarray:
    """Rational orthogonal (I - S)(I + S)^-1 from a rational skew matrix."""
    s = np.array([[Fraction(x) for x in row] for row in skew], dtype=object)
    n = s.shape[0]
    eye = np.array([[Fraction(int(i == j)) for j in range(n)] for i in range(n)], dtype=object)
    return (eye - s).dot(_inverse(eye + s))


def _inverse(m) -> np.ndarray:
    n = m.shape[0]
    aug = [list(m[i]) + [Fraction(int(i == j)) for j in range(n)] for i in range(n)]
    for col in range(n):
        piv = next(r for r in range(col, n) if aug[r][col] != 0)
        aug[col], aug[piv] = aug[piv], aug[col]
        p = aug[col][col]
        aug[col] = [v / p for v in aug[col]]
        for r in range(n):
            if r != col and aug[r][col] != 0:
                f = aug[r][col]
                aug[r] = [a - f * b for a, b in zip(aug[r], aug[col])]
    return np.array([row[n:] for row in aug], dtype=object)


def conjugate_partition_hom(parts: Sequence[int], q) -> HomSpec:
    """Q lambda(.) Q^T for a rational orthogonal Q."""
    parts = tuple(sorted(parts, reverse=True))
    n = sum(parts)
    q = np.asarray(q, dtype=object)
    mats = [(q.dot(re).dot(q.T), q.dot(im).dot(q.T)) for re, im in compact_images(*rep_matrices(parts))]
    spec = matrix_hom(n, mats)
    spec.partition = parts
    return spec


def norm_spectrum_su2_to_sun(n: int) -> dict[tuple[int, ...], HomNorm]:
    """Norms of every su(2) -> su(N), one per partition of N, in partition order.

    The trivial representation (all parts 1) is included and maps to 0.
    """
    if not 2 <= n <= 10:
        raise ValueError("N must be between 2 and 10")
    return {parts: hom_norm(partition_hom(parts)) for parts in partitions(n)}


# ---------------------------------------------------------------------------
# cochain homotopy for a cyclic group


@dataclass(frozen=True)
class ChainReport:
    order: int
    module_dim: int
    delta_squared_zero: bool
    homotopy_identity: dict
    s1_delta1: bool
    fixed_dim: int
    cohomology: dict

    @property
    def ok(self) -> bool:
        return self.delta_squared_zero and self.s1_delta1 and all(self.homotopy_identity.values())


class CyclicModule:
    """Z/m acting on Z^d through powers of an integer matrix A with A^m = 1."""

    def __init__(self, order: int, generator):
        self.m = int(order)
        a = np.asarray(generator, dtype=np.int64)
        if a.ndim != 2 or a.shape[0] != a.shape[1]:
            raise ValueError("generator must be square")
        self.d = a.shape[0]
        powers = [np.eye(self.d, dtype=np.int64)]
        for _ in range(self.m):
            powers.append(powers[-1] @ a)
        if not np.array_equal(powers[self.m], powers[0]):
            raise ValueError("generator does not have order dividing m")
        self.sigma = np.array(powers[: self.m])  # (m, d, d)

    def mul_index(self, h1, h2):
        return (h1 + h2) % self.m

    # cochains of degree q: arrays (batch, m, ..., m, d) with q group slots

    def delta(self, mu: np.ndarray, q: int) -> np.ndarray:
        """delta_q: C^{q-1} -> C^q."""
        m = self.m
        batch = mu.shape[0]
        out_shape = (batch,) + (m,) * q + (self.d,)
        # Ad sigma(h1) mu(h2, ..., hq)
        out = np.einsum("hab,z...b->zh...a", self.sigma, mu)
        idx = np.indices((m,) * q)
        for i in range(1, q):
            args = [idx[j] for j in range(q) if j != i]
            args[i - 1] = self.mul_index(idx[i - 1], idx[i])
            sel = (slice(None),) + tuple(args)
            out = out + (-1) ** i * mu[sel]
        if q == 1:
            last = mu[:, None, :]
        else:
            last = mu[(slice(None),) + tuple(idx[j] for j in range(q - 1))]
        out = out + (-1) ** q * last
        return out.reshape(out_shape)

    def s_scaled(self, mu: np.ndarray, q: int) -> np.ndarray:
        """m * s_q: C^q -> C^{q-1}, s_q mu = (-1)^q * average over the last slot."""
        return (-1) ** q * mu.sum(axis=q)

    def basis(self, q: int) -> np.ndarray:
        size = self.m ** q * self.d
        return np.eye(size, dtype=np.int64).reshape((size,) + (self.m,) * q + (self.d,))


def check_chain_identity(module: CyclicModule, degrees: Sequence[int] = (1, 2)) -> ChainReport:
    """Verify delta^2 = 0, delta s + s delta = 1 and s_1 delta_1 = 1 - p exactly.

    Everything is checked on the full basis of cochains, scaled by the group
    order so that integer arithmetic is exact.
    """
    m = module.m
    sq_zero = True
    homotopy = {}
    for q in degrees:
        # delta_{q+1} delta_q = 0 on C^{q-1}
        b = module.basis(q - 1)
        if np.any(module.delta(module.delta(b, q), q + 1)):
            sq_zero = False
        # m (delta_q s_q + s_{q+1} delta_{q+1}) = m on C^q
        b = module.basis(q)
        lhs = module.delta(module.s_scaled(b, q), q) + module.s_scaled(module.delta(b, q + 1), q + 1)
        homotopy[q] = bool(np.array_equal(lhs, m * b))
    b0 = module.basis(0)
    proj = module.sigma.sum(axis=0)  # m * p
    lhs = module.s_scaled(module.delta(b0, 1), 1)
    rhs = m * b0 - np.einsum("ab,zb->za", proj, b0)
    s1 = bool(np.array_equal(lhs, rhs))
    fixed = module.d - (rank(module.delta(b0, 1).reshape(module.d, -1)) if module.d else 0)
    cohomology = {0: fixed}
    for q in degrees:
        if homotopy.get(q):
            # every cocycle z equals delta(s z)
            cohomology[q] = 0
    return ChainReport(m, module.d, sq_zero, homotopy, s1, fixed, cohomology)


def standard_modules(order: int) -> dict[str, CyclicModule]:
    """Trivial, sign (even order) and quarter-turn (order divisible by 4) modules."""
    mods = {"trivial": CyclicModule(order, [[1]]), "zero": CyclicModule(order, np.zeros((0, 0), dtype=np.int64))}
    if order % 2 == 0:
        mods["sign"] = CyclicModule(order, [[-1]])
    if order % 4 == 0:
        mods["rotation"] = CyclicModule(order, [[0, -1], [1, 0]])
    if order % 3 == 0:
        mods["cyclic3"] = CyclicModule(order, [[0, 0, 1], [1, 0, 0], [0, 1, 0]])
    return mods
