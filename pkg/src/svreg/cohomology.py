"""Exact cohomology of line bundles on products of projective spaces.

All dimensions are exact Python integers; nothing here ever touches a
float, so results stay correct far past 64 bits.  The key structural fact
is that a line bundle O(j) on a single P^l has cohomology in at most one
degree (0 or l), hence by the Kunneth formula a line bundle
O(a_1, ..., a_r) on P^{l_1} x ... x P^{l_r} also concentrates in a single
degree: the sum of the factor degrees.
"""
from __future__ import annotations

from dataclasses import dataclass
from math import comb, factorial
from typing import Sequence

MultiDegree = tuple[int, ...]


@dataclass(frozen=True)
class SegreVeronese:
    """A product of projective spaces P^{l_1} x ... x P^{l_r} together with
    the degrees d = (d_1, ..., d_r) of the very ample bundle O(d) giving its
    Segre-Veronese embedding into P^N.
    """

    l: tuple[int, ...]
    d: tuple[int, ...]

    def __post_init__(self) -> None:
        l = tuple(int(x) for x in self.l)
        d = tuple(int(x) for x in self.d)
        if len(l) == 0:
            raise ValueError("need at least one factor")
        if len(l) != len(d):
            raise ValueError(f"l has {len(l)} entries but d has {len(d)}")
        if any(x < 1 for x in l):
            raise ValueError(f"factor dimensions must all be >= 1, got l={l}")
        if any(x < 1 for x in d):
            raise ValueError(f"embedding degrees must all be >= 1, got d={d}")
        object.__setattr__(self, "l", l)
        object.__setattr__(self, "d", d)

    @property
    def r(self) -> int:
        """Number of factors."""
        return len(self.l)

    @property
    def n(self) -> int:
        """Dimension of the product, sum of the l_k."""
        return sum(self.l)

    @property
    def ambient_dim(self) -> int:
        """Dimension N of the embedding's target space: prod C(l_k+d_k, d_k) - 1."""
        out = 1
        for lk, dk in zip(self.l, self.d):
            out *= comb(lk + dk, dk)
        return out - 1


@dataclass(frozen=True)
class CohomologyProfile:
    """Where a line bundle's cohomology lives: either nowhere (both fields
    None) or in exactly one degree with a strictly positive dimension."""

    degree: int | None
    dimension: int | None

    def __post_init__(self) -> None:
        if (self.degree is None) != (self.dimension is None):
            raise ValueError("degree and dimension must be both present or both absent")
        if self.degree is not None:
            if self.degree < 0:
                raise ValueError(f"degree must be >= 0, got {self.degree}")
            if self.dimension < 1:
                raise ValueError(f"dimension must be >= 1, got {self.dimension}")

    @classmethod
    def zero(cls) -> "CohomologyProfile":
        return cls(None, None)

    @property
    def vanishes(self) -> bool:
        return self.degree is None

    def h(self, i: int) -> int:
        """dim H^i."""
        return self.dimension if i == self.degree else 0

    def table(self, n: int) -> list[int]:
        """The flat view [h^0, ..., h^n], mostly zeros."""
        if self.degree is not None and self.degree > n:
            raise ValueError(f"profile degree {self.degree} exceeds table size {n}")
        return [self.h(i) for i in range(n + 1)]


def binom(a: int, b: int) -> int:
    """C(a, b) as an exact integer, with the convention C(a, b) = 0 whenever
    a < 0 or a < b."""
    if a < 0 or a < b:
        return 0
    return comb(a, b)


def factor_cohomology(l: int, j: int) -> CohomologyProfile:
    """Cohomology of O(j) on a single P^l.

    H^0 has dimension C(j+l, l) when j >= 0, H^l has dimension C(-j-1, l)
    when j <= -l-1, and everything vanishes for -l <= j <= -1.
    """
    if l < 1:
        raise ValueError(f"projective space dimension must be >= 1, got {l}")
    if j >= 0:
        return CohomologyProfile(0, comb(j + l, l))
    if j <= -l - 1:
        return CohomologyProfile(l, comb(-j - 1, l))
    return CohomologyProfile.zero()


def product_cohomology(E: SegreVeronese, a: Sequence[int]) -> CohomologyProfile:
    """Cohomology of O(a_1, ..., a_r) on the product, by the Kunneth formula.

    If any factor vanishes the bundle has no cohomology at all; otherwise
    the factor degrees add up and the factor dimensions multiply.  The
    resulting degree equals l_J for J = {k : a_k <= -l_k - 1}.
    """
    _require_length(E, a, "a")
    degree = 0
    dimension = 1
    for lk, ak in zip(E.l, a):
        p = factor_cohomology(lk, ak)
        if p.vanishes:
            return CohomologyProfile.zero()
        degree += p.degree
        dimension *= p.dimension
    return CohomologyProfile(degree, dimension)


def twist(E: SegreVeronese, a: Sequence[int], steps: int) -> MultiDegree:
    """Multidegree of O(a) twisted along the embedding bundle: a + steps*d
    componentwise."""
    _require_length(E, a, "a")
    return tuple(ak + steps * dk for ak, dk in zip(a, E.d))


def euler_characteristic(E: SegreVeronese, a: Sequence[int]) -> int:
    """chi(O(a)) as an exact signed integer.

    Each factor contributes the binomial polynomial
    (a_k+1)(a_k+2)...(a_k+l_k) / l_k! evaluated over the integers.  The
    clamped binom cannot be used here: negative arguments must keep their
    sign for the alternating-sum cross-check to mean anything.
    """
    _require_length(E, a, "a")
    chi = 1
    for lk, ak in zip(E.l, a):
        num = 1
        for t in range(1, lk + 1):
            num *= ak + t
        # exact: a product of l_k consecutive integers is divisible by l_k!
        chi *= num // factorial(lk)
    return chi


def _require_length(E: SegreVeronese, a: Sequence[int], name: str) -> None:
    if len(a) != len(E.l):
        raise ValueError(f"{name} has {len(a)} entries, expected {len(E.l)}")
