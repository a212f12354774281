"""Spin(3)-lifts on SU(2)-bundles over S^2 x S^2 and their reducible orbits.

A lift of the diagonal Spin(3) action is labelled by its weight pair
``(w_plus, w_minus)`` at the two singular orbits; the U(1)-reducible
invariant Yang-Mills orbits are ``tau(p, q)`` and, on the trivial bundle,
``omega``.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from enum import Enum
from typing import Union


@dataclass(frozen=True, order=True)
class WeightPair:
    w_plus: int
    w_minus: int

    def __post_init__(self):
        if self.w_plus < 0 or self.w_minus < 0:
            raise ValueError(f"weights must be nonnegative: {self}")
        if (self.w_plus - self.w_minus) % 2:
            raise ValueError(f"weights must have equal parity: {self}")

    @property
    def chern(self) -> int:
        return chern_of_weights(self)

    def as_tuple(self) -> tuple[int, int]:
        return (self.w_plus, self.w_minus)


@dataclass(frozen=True)
class TauPQ:
    """The reducible orbit [A_{p,q}, tau_{p,q}], stored in canonical sign."""

    p: int
    q: int

    def __post_init__(self):
        # (p, q) ~ (-p, -q): make the first nonzero component positive
        lead = self.p if self.p else self.q
        if lead < 0:
            object.__setattr__(self, "p", -self.p)
            object.__setattr__(self, "q", -self.q)

    def __str__(self) -> str:
        return f"tau:{self.p},{self.q}"


@dataclass(frozen=True)
class Omega:
    """The orbit [A_{0,0}, omega] on the trivial bundle."""

    def __str__(self) -> str:
        return "omega"


ConnectionLabel = Union[TauPQ, Omega]

_LABEL_RE = re.compile(r"^\s*(?:tau|τ)\s*:\s*(-?\d+)\s*,\s*(-?\d+)\s*$")


def parse_label(text: str) -> ConnectionLabel:
    """Parse ``"tau:p,q"`` / ``"τ:p,q"`` / ``"omega"`` / ``"ω"``."""
    if text.strip().lower() in ("omega", "ω", "w"):
        return Omega()
    m = _LABEL_RE.match(text)
    if not m:
        raise ValueError(f"cannot parse connection label {text!r}")
    return TauPQ(int(m.group(1)), int(m.group(2)))


def chern_of_weights(w: WeightPair) -> int:
    return (w.w_plus ** 2 - w.w_minus ** 2) // 2


def weights_of_tau(p: int, q: int) -> WeightPair:
    return WeightPair(abs(p + q), abs(p - q))


def enumerate_lifts(d: int, w_max: int) -> list[WeightPair]:
    """All weight pairs with entries <= w_max and second Chern number d."""
    if w_max < 0:
        raise ValueError("w_max must be nonnegative")
    out = []
    for wp in range(w_max + 1):
        for wm in range(wp % 2, w_max + 1, 2):
            if wp * wp - wm * wm == 2 * d:
                out.append(WeightPair(wp, wm))
    return out


def reducible_orbits(w: WeightPair) -> list[ConnectionLabel]:
    """The U(1)-reducible invariant Yang-Mills orbits over a lift."""
    wp, wm = w.w_plus, w.w_minus
    if (wp, wm) == (0, 0):
        return [TauPQ(0, 0)]
    if (wp, wm) == (1, 1):
        return [TauPQ(1, 0), TauPQ(0, 1), Omega()]
    if wm == 0:
        p = wp // 2
        return [TauPQ(p, p)]
    if wp == 0:
        p = wm // 2
        return [TauPQ(p, -p)]
    p, q = (wp + wm) // 2, (wp - wm) // 2
    return [TauPQ(p, q), TauPQ(q, p)]


class Infinite(Enum):
    """Marker for a countably infinite splitting count."""

    INFINITE = "Infinite"

    def __str__(self) -> str:
        return "Infinite"


INFINITE = Infinite.INFINITE

KERNELS = ("U1", "SU2")
QUOTIENTS = ("SO2", "Spin3", "Spin4")


@dataclass(frozen=True)
class SequenceSpec:
    """The product sequence 1 -> K -> K x H -> H -> 1."""

    kernel: str
    quotient: str

    def __post_init__(self):
        if self.kernel not in KERNELS or self.quotient not in QUOTIENTS:
            raise ValueError(
                f"unsupported sequence ({self.kernel}, {self.quotient}); "
                f"kernel in {KERNELS}, quotient in {QUOTIENTS}"
            )


# Conjugacy classes of homomorphisms H -> K.  Into U(1): semisimple sources
# only map trivially, SO(2) maps by any integer weight.  Into SU(2): Spin(3)
# gives trivial or identity; Spin(4) = SU(2) x SU(2) gives trivial or one of
# the two projections; SO(2) gives one class per nonnegative weight.
_SPLITTINGS = {
    ("U1", "Spin3"): 1,
    ("U1", "Spin4"): 1,
    ("U1", "SO2"): INFINITE,
    ("SU2", "Spin3"): 2,
    ("SU2", "Spin4"): 3,
    ("SU2", "SO2"): INFINITE,
}


def splitting_count(s: SequenceSpec) -> Union[int, Infinite]:
    return _SPLITTINGS[(s.kernel, s.quotient)]
