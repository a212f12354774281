"""Exact representation theory of Spin(3) = SU(2).

Irreducibles are labelled by a spin ``k`` in (1/2)Z, stored as the integer
``2k`` so that half-integers stay exact.  Everything here is integer
arithmetic on immutable values.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache, reduce
from typing import Iterable, Mapping, Sequence, Union

SpinLike = Union["Spin", int, Fraction, str]


@dataclass(frozen=True, order=True)
class Spin:
    """Spin-k irreducible V_k, stored as ``twice = 2k``."""

    twice: int

    def __post_init__(self):
        if not isinstance(self.twice, int) or isinstance(self.twice, bool):
            raise TypeError(f"twice must be an int, got {self.twice!r}")
        if self.twice < 0:
            raise ValueError(f"spin must be nonnegative, got twice={self.twice}")

    @classmethod
    def of(cls, value: SpinLike) -> "Spin":
        """Coerce ``0``, ``1``, ``Fraction(1, 2)``, ``"3/2"`` or a Spin."""
        if isinstance(value, Spin):
            return value
        frac = Fraction(value)
        doubled = 2 * frac
        if doubled.denominator != 1:
            raise ValueError(f"{value!r} is not a half-integer")
        return cls(int(doubled))

    @property
    def value(self) -> Fraction:
        return Fraction(self.twice, 2)

    @property
    def dim(self) -> int:
        return self.twice + 1

    def __str__(self) -> str:
        return str(self.twice // 2) if self.twice % 2 == 0 else f"{self.twice}/2"


class RepSum:
    """A finite direct sum of irreducibles with positive multiplicities."""

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[Spin, int] | None = None):
        clean = {}
        for spin, mult in (terms or {}).items():
            if mult < 0:
                raise ValueError("multiplicities must be nonnegative")
            if mult:
                clean[Spin.of(spin)] = int(mult)
        self._terms = dict(sorted(clean.items()))

    @property
    def terms(self) -> dict[Spin, int]:
        return dict(self._terms)

    @property
    def dim(self) -> int:
        return sum(m * s.dim for s, m in self._terms.items())

    def multiplicity(self, spin: SpinLike) -> int:
        return self._terms.get(Spin.of(spin), 0)

    def __eq__(self, other) -> bool:
        if isinstance(other, RepSum):
            return self._terms == other._terms
        if isinstance(other, Mapping):
            return self == RepSum(other)
        return NotImplemented

    def __hash__(self) -> int:
        return hash(tuple(self._terms.items()))

    def __add__(self, other: "RepSum") -> "RepSum":
        out = dict(self._terms)
        for s, m in other._terms.items():
            out[s] = out.get(s, 0) + m
        return RepSum(out)

    def __iter__(self):
        return iter(self._terms.items())

    def __len__(self) -> int:
        return len(self._terms)

    def __repr__(self) -> str:
        body = ", ".join(f"V_{s}:{m}" for s, m in self._terms.items())
        return f"RepSum({{{body}}})"


@lru_cache(maxsize=None)
def _tensor_twice(a: int, b: int) -> tuple[int, ...]:
    return tuple(range(abs(a - b), a + b + 1, 2))


def tensor(a: SpinLike, b: SpinLike) -> RepSum:
    """Clebsch-Gordan: V_a (x) V_b = sum of V_j, |a-b| <= j <= a+b."""
    a, b = Spin.of(a), Spin.of(b)
    return RepSum({Spin(j): 1 for j in _tensor_twice(a.twice, b.twice)})


def _tensor_sum(rep: RepSum, factor: Spin) -> RepSum:
    out: dict[Spin, int] = {}
    for spin, mult in rep:
        for j in _tensor_twice(spin.twice, factor.twice):
            out[Spin(j)] = out.get(Spin(j), 0) + mult
    return RepSum(out)


def tensor_many(factors: Sequence[SpinLike]) -> RepSum:
    """Left fold of :func:`tensor`; raises ``ValueError`` on an empty sequence."""
    spins = [Spin.of(f) for f in factors]
    if not spins:
        raise ValueError("tensor_many needs at least one factor")
    return reduce(_tensor_sum, spins[1:], RepSum({spins[0]: 1}))


@lru_cache(maxsize=None)
def _invariant_dim_sorted(twice: tuple[int, ...]) -> int:
    if not twice:
        return 1
    return tensor_many([Spin(t) for t in twice]).multiplicity(0)


def invariant_dim(factors: Iterable[SpinLike]) -> int:
    """Multiplicity of the trivial representation in the tensor product.

    The empty product is the trivial representation, so the answer is 1.
    """
    key = tuple(sorted(Spin.of(f).twice for f in factors))
    return _invariant_dim_sorted(key)
