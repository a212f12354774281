"""Hessian spectra at the reducible invariant Yang-Mills connections on S^2 x S^2.

The pipeline is

    full spectrum of H_A + d_A d_A^*  (six families, eigenspaces 2 V_k (x) V_l)
        -> Spin(3)-invariant part       (Clebsch-Gordan, ``repcore``)
        -> minus the gauge-orbit part    (invariant scalar Laplacian, zero line removed)
        -> Hessian on the normal bundle  -> index / nullity.

Every spectrum is an infinite family of lines, so each :class:`Spectrum`
carries an explicit cutoff and claims completeness only up to it.
"""
from __future__ import annotations

import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from math import isqrt
from typing import Callable, Iterable, Mapping, Optional

from .equivlifts import (
    ConnectionLabel,
    Omega,
    TauPQ,
    WeightPair,
    enumerate_lifts,
    reducible_orbits,
)
from .repcore import invariant_dim

STAGES = ("full", "invariant", "scalar", "orbit", "normal")


class SpectrumContainmentError(ArithmeticError):
    """Multiset subtraction of spectra with a line that is not contained."""


@dataclass(frozen=True)
class SpectralLine:
    eigenvalue: int
    multiplicity: int

    def __post_init__(self):
        if self.multiplicity <= 0:
            raise ValueError("spectral lines have positive multiplicity")


class Spectrum:
    """Finite multiset of eigenvalues, complete below ``cutoff``."""

    __slots__ = ("_lines", "cutoff")

    def __init__(self, lines: Mapping[int, int] | None = None, cutoff: int = 0):
        merged: dict[int, int] = {}
        for ev, mult in (lines or {}).items():
            if mult < 0:
                raise ValueError(f"negative multiplicity at eigenvalue {ev}")
            if ev > cutoff:
                raise ValueError(f"eigenvalue {ev} above cutoff {cutoff}")
            if mult:
                merged[int(ev)] = merged.get(int(ev), 0) + int(mult)
        self._lines = dict(sorted(merged.items()))
        self.cutoff = int(cutoff)

    @classmethod
    def from_pairs(cls, pairs: Iterable[tuple[int, int]], cutoff: int) -> "Spectrum":
        acc: dict[int, int] = {}
        for ev, mult in pairs:
            if ev <= cutoff and mult:
                acc[ev] = acc.get(ev, 0) + mult
        return cls(acc, cutoff)

    @property
    def lines(self) -> dict[int, int]:
        return dict(self._lines)

    def as_lines(self) -> list[SpectralLine]:
        return [SpectralLine(ev, m) for ev, m in self._lines.items()]

    def multiplicity(self, eigenvalue: int) -> int:
        return self._lines.get(eigenvalue, 0)

    def total(self) -> int:
        return sum(self._lines.values())

    def truncate(self, cutoff: int) -> "Spectrum":
        cutoff = min(cutoff, self.cutoff)
        return Spectrum({e: m for e, m in self._lines.items() if e <= cutoff}, cutoff)

    def without(self, eigenvalue: int) -> "Spectrum":
        return Spectrum({e: m for e, m in self._lines.items() if e != eigenvalue}, self.cutoff)

    def __add__(self, other: "Spectrum") -> "Spectrum":
        cut = min(self.cutoff, other.cutoff)
        a, b = self.truncate(cut), other.truncate(cut)
        out = dict(a._lines)
        for e, m in b._lines.items():
            out[e] = out.get(e, 0) + m
        return Spectrum(out, cut)

    def __sub__(self, other: "Spectrum") -> "Spectrum":
        cut = min(self.cutoff, other.cutoff)
        a, b = self.truncate(cut), other.truncate(cut)
        out = dict(a._lines)
        for e, m in b._lines.items():
            have = out.get(e, 0)
            if have < m:
                raise SpectrumContainmentError(
                    f"eigenvalue {e}: cannot remove multiplicity {m} from {have}"
                )
            out[e] = have - m
        return Spectrum(out, cut)

    def contains(self, other: "Spectrum") -> bool:
        try:
            self - other
        except SpectrumContainmentError:
            return False
        return True

    def __eq__(self, other) -> bool:
        # equality is only meaningful below the smaller cutoff
        if not isinstance(other, Spectrum):
            return NotImplemented
        cut = min(self.cutoff, other.cutoff)
        return self.truncate(cut)._lines == other.truncate(cut)._lines

    def __hash__(self):
        return hash((tuple(self._lines.items()), self.cutoff))

    def __repr__(self) -> str:
        body = ", ".join(f"{e}: {m}" for e, m in self._lines.items())
        return f"Spectrum({{{body}}}, cutoff={self.cutoff})"


# ---------------------------------------------------------------------------
# the six families of H_A + d_A d_A^* on T_A A_d


@dataclass(frozen=True)
class Family:
    """Lines ``k^2+k + l^2+l - shift`` for ``k >= k_min, l >= l_min``.

    Each (k, l) carries the eigenspace ``2 V_k (x) V_l`` (``(x) V_1`` for omega),
    of dimension ``2 (2k+1)(2l+1)`` (times 3).
    """

    index: int
    k_min: int
    l_min: int
    shift: int

    def eigenvalue(self, k: int, l: int) -> int:
        return k * k + k + l * l + l - self.shift

    def points(self, cutoff: int) -> Iterable[tuple[int, int]]:
        """All (k, l) in range with eigenvalue <= cutoff."""
        k = self.k_min
        while self.eigenvalue(k, self.l_min) <= cutoff:
            l = self.l_min
            while self.eigenvalue(k, l) <= cutoff:
                yield k, l
                l += 1
            k += 1


def families(p: int, q: int) -> list[Family]:
    s = p * p + q * q
    return [
        Family(1, 1, 0, 0),
        Family(2, 0, 1, 0),
        Family(3, abs(p - 1), abs(q), s),
        Family(4, abs(p + 1), abs(q), s),
        Family(5, abs(p), abs(q - 1), s),
        Family(6, abs(p), abs(q + 1), s),
    ]


def label_families(label: ConnectionLabel) -> tuple[list[Family], tuple[int, ...]]:
    """Families carrying the invariant part for a label, plus the extra tensor
    factor on each eigenspace (``(1,)`` for omega, i.e. V_1)."""
    if isinstance(label, Omega):
        return families(0, 0)[:2], (1,)
    return families(label.p, label.q), ()


def _workers(threads: Optional[int]) -> int:
    if threads is None:
        threads = int(os.environ.get("EQUIVYM_THREADS", "1") or 1)
    return max(1, threads)


def _merge_ordered(parts: Iterable[list[tuple[int, int]]], cutoff: int) -> Spectrum:
    pairs: list[tuple[int, int]] = []
    for part in parts:
        pairs.extend(part)
    return Spectrum.from_pairs(pairs, cutoff)


def _map_families(fn: Callable[[Family], list[tuple[int, int]]], fams: list[Family],
                  threads: Optional[int]) -> list[list[tuple[int, int]]]:
    n = _workers(threads)
    if n == 1 or len(fams) == 1:
        return [fn(f) for f in fams]
    with ThreadPoolExecutor(max_workers=n) as pool:
        # map preserves family order, so the merge is deterministic
        return list(pool.map(fn, fams))


def full_spectrum(p: int, q: int, cutoff: int, threads: Optional[int] = None) -> Spectrum:
    """Spectrum of H_A + d_A d_A^* on all of T_A A_d at A_{p,q}, up to ``cutoff``."""

    def lines(fam: Family):
        return [(fam.eigenvalue(k, l), 2 * (2 * k + 1) * (2 * l + 1)) for k, l in fam.points(cutoff)]

    return _merge_ordered(_map_families(lines, families(p, q), threads), cutoff)


def invariant_spectrum(label: ConnectionLabel, cutoff: int, threads: Optional[int] = None) -> Spectrum:
    """Invariant part of each eigenspace, counted with Clebsch-Gordan."""
    fams, extra = label_families(label)

    def lines(fam: Family):
        out = []
        for k, l in fam.points(cutoff):
            n = invariant_dim((k, l) + extra)
            if n:
                out.append((fam.eigenvalue(k, l), 2 * n))
        return out

    return _merge_ordered(_map_families(lines, fams, threads), cutoff)


# ---------------------------------------------------------------------------
# closed-form tables


@dataclass(frozen=True)
class TableLine:
    """``a k^2 + b k + c`` with multiplicity ``mult`` for ``k >= k_min``.

    A line with ``k_min is None`` is a single eigenvalue ``c``.
    """

    a: int
    b: int
    c: int
    mult: int
    k_min: Optional[int] = None

    def values(self, cutoff: int) -> Iterable[int]:
        if self.k_min is None:
            if self.c <= cutoff:
                yield self.c
            return
        if self.a < 0 or (self.a == 0 and self.b <= 0):
            raise ValueError("table lines must be increasing in k")
        k = self.k_min
        # increasing for k >= 0 when a >= 0 and a + b >= 0
        while (v := self.a * k * k + self.b * k + self.c) <= cutoff:
            yield v
            k += 1


def _table_spectrum(table: list[TableLine], cutoff: int) -> Spectrum:
    return Spectrum.from_pairs(((v, t.mult) for t in table for v in t.values(cutoff)), cutoff)


def _oriented(label: TauPQ) -> tuple[int, int]:
    p, q = label.p, label.q
    return (p, q) if abs(p) >= abs(q) else (q, p)


def invariant_table(label: ConnectionLabel) -> list[TableLine]:
    """Aggregated invariant spectrum of H_A + d_A d_A^* (closed form)."""
    if isinstance(label, Omega):
        return [TableLine(2, 2, 0, 4, 1), TableLine(0, 0, 2, 4), TableLine(2, 0, 0, 8, 2)]
    p, q = _oriented(label)
    P, s = abs(p), p * p + q * q
    if P == 0:
        return [TableLine(2, 2, 0, 12, 1)]
    if P == abs(q):
        return [TableLine(2, 2, 0, 4, 1), TableLine(0, 0, 2 * P, 4), TableLine(2, 2, -2 * p * p, 8, P + 1)]
    return [
        TableLine(2, 2, 0, 4, 1),
        TableLine(0, 0, p * p - 2 * P - q * q, 2),
        TableLine(0, 0, p * p + 2 * P - q * q, 6),
        TableLine(2, 2, -s, 8, P + 1),
    ]


def scalar_table(label: ConnectionLabel) -> list[TableLine]:
    """Invariant spectrum of the scalar Laplacian Delta_A on Omega^0(Ad P)."""
    if isinstance(label, Omega):
        return [TableLine(2, 2, 0, 1, 1), TableLine(2, 0, 0, 2, 1)]
    p, q = _oriented(label)
    P = abs(p)
    if P == 0:
        return [TableLine(2, 2, 0, 3, 0)]
    return [TableLine(2, 2, 0, 1, 0), TableLine(2, 2, -(p * p + q * q), 2, P)]


def normal_table(label: ConnectionLabel) -> list[TableLine]:
    """Hessian on the normal bundle of the gauge orbit (closed form)."""
    if isinstance(label, Omega):
        return [TableLine(2, 2, 0, 3, 1), TableLine(0, 0, 2, 2), TableLine(2, 0, 0, 6, 2)]
    p, q = _oriented(label)
    P, s = abs(p), p * p + q * q
    if P == 0:
        return [TableLine(2, 2, 0, 9, 1)]
    if P == abs(q):
        return [TableLine(2, 2, 0, 3, 1), TableLine(0, 0, 2 * P, 2), TableLine(2, 2, -2 * p * p, 6, P + 1)]
    return [
        TableLine(2, 2, 0, 3, 1),
        TableLine(0, 0, p * p - 2 * P - q * q, 2),
        TableLine(0, 0, p * p + 2 * P - q * q, 4),
        TableLine(2, 2, -s, 6, P + 1),
    ]


def invariant_table_spectrum(label: ConnectionLabel, cutoff: int) -> Spectrum:
    return _table_spectrum(invariant_table(label), cutoff)


def normal_table_spectrum(label: ConnectionLabel, cutoff: int) -> Spectrum:
    return _table_spectrum(normal_table(label), cutoff)


def scalar_invariant_spectrum(label: ConnectionLabel, cutoff: int) -> Spectrum:
    return _table_spectrum(scalar_table(label), cutoff)


def orbit_spectrum(label: ConnectionLabel, cutoff: int) -> Spectrum:
    """d_A d_A^* on the tangent space of the invariant gauge orbit."""
    return scalar_invariant_spectrum(label, cutoff).without(0)


def normal_spectrum(label: ConnectionLabel, cutoff: int, threads: Optional[int] = None) -> Spectrum:
    inv = invariant_spectrum(label, cutoff, threads)
    orb = orbit_spectrum(label, cutoff)
    try:
        return inv - orb
    except SpectrumContainmentError as exc:
        raise SpectrumContainmentError(
            f"orbit spectrum of {label} is not contained in its invariant spectrum: {exc}"
        ) from exc


def spectrum(label: ConnectionLabel, stage: str, cutoff: int, threads: Optional[int] = None) -> Spectrum:
    """Dispatch on the pipeline stage name."""
    if stage == "full":
        p, q = (0, 0) if isinstance(label, Omega) else (label.p, label.q)
        return full_spectrum(p, q, cutoff, threads)
    if stage == "invariant":
        return invariant_spectrum(label, cutoff, threads)
    if stage == "scalar":
        return scalar_invariant_spectrum(label, cutoff)
    if stage == "orbit":
        return orbit_spectrum(label, cutoff)
    if stage == "normal":
        return normal_spectrum(label, cutoff, threads)
    raise ValueError(f"unknown stage {stage!r}; expected one of {STAGES}")


# ---------------------------------------------------------------------------
# index and nullity


@dataclass(frozen=True)
class TailBound:
    """Certificate that one family is strictly positive past ``first_positive``.

    Along the invariant diagonal the family is ``g(k) = a k^2 + b k + c`` with
    ``g(k+1) - g(k) = a (2k+1) + b > 0`` for ``k >= k_start``.
    """

    family: int
    branch: str
    a: int
    b: int
    c: int
    k_start: int
    first_positive: int


@dataclass(frozen=True)
class IndexNullity:
    index: int
    nullity: int
    tail: tuple[TailBound, ...] = field(default=(), compare=False, repr=False)

    def as_tuple(self) -> tuple[int, int]:
        return (self.index, self.nullity)


def _diagonal_branches(fam: Family, extra: tuple[int, ...]) -> list[tuple[str, int, int, int, int]]:
    """Quadratics in k along the (k, l) set where the invariant part is nonzero.

    tau: l = k.  omega: l = k and l = k -/+ 1 (the invariants of V_k V_l V_1).
    Returns (branch, a, b, c, k_start).
    """
    s = fam.shift
    lo = max(fam.k_min, fam.l_min)
    if not extra:
        return [("l=k", 2, 2, -s, lo)]
    return [
        ("l=k", 2, 2, -s, max(lo, 1)),
        # l = k - 1: k^2+k + (k-1)^2+(k-1) = 2k^2
        ("l=k-1", 2, 0, -s, max(fam.k_min, fam.l_min + 1, 1)),
        # k = l - 1, written in terms of l
        ("k=l-1", 2, 0, -s, max(fam.l_min, fam.k_min + 1, 1)),
    ]


def tail_certificate(label: ConnectionLabel) -> tuple[TailBound, ...]:
    """Exact proof that every invariant family eigenvalue is positive past a
    finite window, so index and nullity do not depend on the cutoff."""
    fams, extra = label_families(label)
    out = []
    for fam in fams:
        for branch, a, b, c, k0 in _diagonal_branches(fam, extra):
            # increments a(2k+1) + b are increasing in k; check at k0
            if a * (2 * k0 + 1) + b <= 0:
                raise ArithmeticError(f"family {fam.index} ({branch}) not increasing from k={k0}")
            k = k0
            while a * k * k + b * k + c <= 0:
                k += 1
            out.append(TailBound(fam.index, branch, a, b, c, k0, k))
    return tuple(out)


def index_nullity(label: ConnectionLabel, threads: Optional[int] = None) -> IndexNullity:
    tail = tail_certificate(label)
    # the window [min, 0] is enumerated exactly by normal_spectrum(cutoff=0);
    # the tail certificate covers everything beyond it
    spec = normal_spectrum(label, 0, threads)
    index = sum(m for e, m in spec.lines.items() if e < 0)
    return IndexNullity(index, spec.multiplicity(0), tail)


# ---------------------------------------------------------------------------
# existence of non-self-dual connections


EXCLUDED_CHERN = (-4, -2, 2, 4)


@dataclass
class Corollary2Certificate:
    chern: int
    certified: bool
    weights: Optional[WeightPair] = None
    orbits: list = field(default_factory=list)
    index_nullity: list = field(default_factory=list)
    statement: str = ""
    transcript: list = field(default_factory=list)

    def to_dict(self) -> dict:
        return {
            "chern": self.chern,
            "certified": self.certified,
            "weights": None if self.weights is None else list(self.weights.as_tuple()),
            "orbits": [str(o) for o in self.orbits],
            "index_nullity": [list(x.as_tuple()) for x in self.index_nullity],
            "statement": self.statement,
            "transcript": self.transcript,
        }


def _admissible(w: WeightPair) -> Optional[str]:
    if w.w_plus in (0, 1) or w.w_minus in (0, 1):
        return "a weight is 0 or 1"
    if w.as_tuple() == (2, 2):
        return "weights (2, 2)"
    return None


def certify_corollary2(d: int) -> Corollary2Certificate:
    """Pick a lift with exactly two reducible orbits, both Hessian-stable.

    For even ``d`` outside {+-2, +-4} this returns a certificate; inside, a
    refusal whose transcript lists every lift of Chern number ``d`` and why it
    was rejected.
    """
    if d % 2:
        raise ValueError(f"second Chern number must be even, got {d}")
    # for d != 0, (w+ - w-)(w+ + w-) = 2d with both factors even bounds w+ + w- <= |d|
    w_max = abs(d) + 3
    transcript = []
    for w in enumerate_lifts(d, w_max):
        reason = _admissible(w)
        if reason:
            transcript.append({"weights": list(w.as_tuple()), "rejected": reason})
            continue
        orbits = reducible_orbits(w)
        stats = [index_nullity(o) for o in orbits]
        ok = len(orbits) == 2 and all(s.as_tuple() == (0, 0) for s in stats)
        transcript.append({"weights": list(w.as_tuple()), "orbits": [str(o) for o in orbits],
                           "index_nullity": [list(s.as_tuple()) for s in stats], "accepted": ok})
        if ok:
            return Corollary2Certificate(
                d, True, w, orbits, stats,
                statement=(
                    f"The Hessian is positive definite on the normal bundles of both "
                    f"reducible orbits {orbits[0]} and {orbits[1]} over the lift {w.as_tuple()}; "
                    f"a mountain-pass argument gives an irreducible non-(anti-)self-dual "
                    f"Yang-Mills connection of second Chern number {d} with energy above both."
                ),
                transcript=transcript,
            )
    return Corollary2Certificate(
        d, False,
        statement=f"no admissible lift with second Chern number {d} (searched w+, w- <= {w_max})",
        transcript=transcript,
    )
