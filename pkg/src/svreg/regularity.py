"""Regularity of line bundles with respect to the embedding bundle.

O(m) is called O(p)-regular (with respect to B = O(d)) when
H^i(O(m + p - i*d)) = 0 for every i > 0.  Everything in this module hangs
off two routes to that predicate: a closed-form max/min test over subsets
of factors, and a brute-force scan of the finitely many cohomology groups
involved.  The two must agree everywhere; ``svreg verify`` replays that
agreement on exhaustive grids.

Conventions: factor indices are 0-based, all floors are mathematical
(toward -infinity, which is what Python's // does), and subset/permutation
enumerations are capped because they grow like 2^r and r!.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache
from typing import Literal, Sequence

from .cohomology import SegreVeronese

SUBSET_CAP = 20
PERMUTATION_CAP = 8

PairStatus = Literal["holds", "fails", "hypothesis-not-met"]


@dataclass(frozen=True)
class RegularityCorner:
    """One translate corner of the regularity set.

    ``sigma`` lists factor indices in peel order: sigma[0] is charged for
    the full factor set, sigma[i] for the suffix sigma[i:].  The corner has
    k-th entry -m_k - l_k + l_{J(sigma,k)} * d_k where J(sigma,k) is the
    suffix containing k.
    """

    sigma: tuple[int, ...]
    corner: tuple[int, ...]


@dataclass(frozen=True)
class SubadditivityReport:
    """The three regularities entering reg(m) + reg(m2) >= reg(m + m2)."""

    reg_m: int
    reg_m2: int
    reg_sum: int
    holds: bool


@dataclass(frozen=True)
class IdealSheafBound:
    """Twist from which the ideal sheaf of the embedded image is regular,
    computed through two presentations that must agree."""

    value: int
    case_split_value: int


@lru_cache(maxsize=None)
def _subset_table(l: tuple[int, ...]) -> tuple[tuple[tuple[int, ...], int], ...]:
    """All nonempty subsets of factor indices, paired with l_J = sum l_k."""
    r = len(l)
    out = []
    for mask in range(1, 1 << r):
        members = tuple(k for k in range(r) if mask >> k & 1)
        out.append((members, sum(l[k] for k in members)))
    return tuple(out)


def _check_lengths(E: SegreVeronese, **vectors: Sequence[int]) -> None:
    r = len(E.l)
    for name, v in vectors.items():
        if len(v) != r:
            raise ValueError(f"{name} has {len(v)} entries, expected {r}")


def _check_subset_cap(r: int, subset_cap: int) -> None:
    if r > subset_cap:
        raise ValueError(
            f"r={r} needs {2 ** r - 1} subsets, above the cap {subset_cap}; raise the cap to proceed"
        )


def is_regular_formula(
    E: SegreVeronese,
    m: Sequence[int],
    p: Sequence[int],
    subset_cap: int = SUBSET_CAP,
) -> bool:
    """Closed-form regularity test: O(m) is O(p)-regular for B = O(d) iff
    every nonempty subset J of factors contains some k with
    p_k + m_k + l_k - l_J * d_k >= 0."""
    l = E.l
    d = E.d
    r = len(l)
    if len(m) != r or len(p) != r:
        _check_lengths(E, m=m, p=p)
    _check_subset_cap(r, subset_cap)
    for members, lJ in _subset_table(l):
        for k in members:
            if p[k] + m[k] + l[k] - lJ * d[k] >= 0:
                break
        else:
            return False
    return True


def is_regular_oracle(E: SegreVeronese, m: Sequence[int], p: Sequence[int]) -> bool:
    """Brute-force regularity test straight from the definition: check that
    H^i(O(m + p - i*d)) = 0 for every i in 1..n.

    The check is finite and complete because each twist concentrates in a
    single degree, so H^i of the i-th twist is nonzero exactly when that
    concentration degree equals i.  The factor windows are inlined here
    rather than routed through CohomologyProfile; this function runs
    millions of times during grid verification.
    """
    l = E.l
    d = E.d
    r = len(l)
    if len(m) != r or len(p) != r:
        _check_lengths(E, m=m, p=p)
    c = [m[k] + p[k] for k in range(r)]
    n = sum(l)
    for i in range(1, n + 1):
        degree = 0
        alive = True
        for k in range(r):
            j = c[k] - i * d[k]
            if j < 0:
                lk = l[k]
                if j >= -lk:
                    alive = False
                    break
                degree += lk
        if alive and degree == i:
            return False
    return True


def regularity_corners(
    E: SegreVeronese,
    m: Sequence[int],
    antichain: bool = False,
    permutation_cap: int = PERMUTATION_CAP,
) -> list[RegularityCorner]:
    """Corner points whose translated positive orthants union to the
    regularity set of O(m).

    One corner per permutation of the factors; corners produced by several
    permutations are listed once (first permutation in lexicographic order
    wins).  With ``antichain=True`` corners dominated componentwise by
    another corner are dropped as well.
    """
    _check_lengths(E, m=m)
    l = E.l
    d = E.d
    r = len(l)
    if r > permutation_cap:
        raise ValueError(
            f"r={r} needs {r}! permutations, above the cap {permutation_cap}; raise the cap to proceed"
        )
    seen: dict[tuple[int, ...], tuple[int, ...]] = {}
    for sigma in itertools.permutations(range(r)):
        suffix = [0] * (r + 1)
        for i in range(r - 1, -1, -1):
            suffix[i] = suffix[i + 1] + l[sigma[i]]
        corner = [0] * r
        for i, k in enumerate(sigma):
            corner[k] = -m[k] - l[k] + suffix[i] * d[k]
        key = tuple(corner)
        if key not in seen:
            seen[key] = sigma
    corners = [RegularityCorner(sigma, corner) for corner, sigma in seen.items()]
    if antichain:
        corners = [
            c
            for c in corners
            if not any(o.corner != c.corner and _dominates(c.corner, o.corner) for o in corners)
        ]
    return corners


def _dominates(p: Sequence[int], corner: Sequence[int]) -> bool:
    return all(pk >= ck for pk, ck in zip(p, corner))


@lru_cache(maxsize=None)
def _corner_points(
    E: SegreVeronese, m: tuple[int, ...], permutation_cap: int
) -> tuple[tuple[int, ...], ...]:
    return tuple(c.corner for c in regularity_corners(E, m, permutation_cap=permutation_cap))


def in_regularity_set(
    E: SegreVeronese,
    m: Sequence[int],
    p: Sequence[int],
    permutation_cap: int = PERMUTATION_CAP,
) -> bool:
    """Membership test for the regularity set of O(m): p belongs iff it
    dominates some corner componentwise."""
    r = len(E.l)
    if len(m) != r or len(p) != r:
        _check_lengths(E, m=m, p=p)
    for corner in _corner_points(E, tuple(m), permutation_cap):
        for pk, ck in zip(p, corner):
            if pk < ck:
                break
        else:
            return True
    return False


def cm_regularity(E: SegreVeronese, m: Sequence[int], subset_cap: int = SUBSET_CAP) -> int:
    """Castelnuovo-Mumford regularity of the pushforward of O(m) to the
    ambient projective space of the embedding:

        max over nonempty J of min over k in J of (l_J - floor((m_k + l_k)/d_k)).
    """
    _check_lengths(E, m=m)
    l = E.l
    d = E.d
    r = len(l)
    _check_subset_cap(r, subset_cap)
    f = [(m[k] + l[k]) // d[k] for k in range(r)]
    best = None
    for members, lJ in _subset_table(l):
        v = lJ - max(f[k] for k in members)
        if best is None or v > best:
            best = v
    return best


def cm_regularity_breakdown(
    E: SegreVeronese, m: Sequence[int], subset_cap: int = SUBSET_CAP
) -> list[tuple[tuple[int, ...], int, int]]:
    """Per-subset rows (J, l_J, min_k(l_J - floor((m_k+l_k)/d_k))) behind
    cm_regularity; the regularity is the max of the row values."""
    _check_lengths(E, m=m)
    _check_subset_cap(len(E.l), subset_cap)
    f = [(mk + lk) // dk for mk, lk, dk in zip(m, E.l, E.d)]
    return [(members, lJ, lJ - max(f[k] for k in members)) for members, lJ in _subset_table(E.l)]


def segre_regularity(a: int, b: int, k: int, l: int) -> int:
    """Regularity of the pushforward of O(k, l) under the Segre embedding of
    P^a x P^b: max(-min(k, l), min(b - k, a - l))."""
    if a < 1 or b < 1:
        raise ValueError(f"factor dimensions must be >= 1, got a={a}, b={b}")
    return max(-min(k, l), min(b - k, a - l))


def ideal_sheaf_bound(E: SegreVeronese) -> IdealSheafBound:
    """Regularity bound lambda for the ideal sheaf of the embedded image.

    Evaluates both presentations: the simple form
    n + 1 - min_k floor(l_k/d_k), and the case split on
    q_k = floor((l_k+1)/d_k) which adds one more when the minimum q_0 is
    attained by a k with d_k | l_k + 1.  The two always coincide, so a
    disagreement can only mean an implementation bug and raises.
    """
    n = E.n
    simple = n + 1 - min(lk // dk for lk, dk in zip(E.l, E.d))
    q = [(lk + 1) // dk for lk, dk in zip(E.l, E.d)]
    q0 = min(q)
    bumped = any(
        qk == q0 and (lk + 1) % dk == 0 for qk, lk, dk in zip(q, E.l, E.d)
    )
    case_split = n + 2 - q0 if bumped else n + 1 - q0
    if simple != case_split:
        raise RuntimeError(
            f"ideal sheaf bound presentations disagree on l={E.l}, d={E.d}: "
            f"{simple} vs {case_split}"
        )
    return IdealSheafBound(simple, case_split)


def check_subadditivity(
    E: SegreVeronese,
    m: Sequence[int],
    m2: Sequence[int],
    subset_cap: int = SUBSET_CAP,
) -> SubadditivityReport:
    """Evaluate reg(m) + reg(m2) >= reg(m + m2).

    A report with holds=False would contradict subadditivity of regularity
    for these pushforward sheaves and therefore signals a bug.
    """
    _check_lengths(E, m=m, m2=m2)
    reg_m = cm_regularity(E, m, subset_cap)
    reg_m2 = cm_regularity(E, m2, subset_cap)
    total = tuple(a + b for a, b in zip(m, m2))
    reg_sum = cm_regularity(E, total, subset_cap)
    return SubadditivityReport(reg_m, reg_m2, reg_sum, reg_m + reg_m2 >= reg_sum)


def check_pair_subadditivity(
    E: SegreVeronese,
    m: Sequence[int],
    p: Sequence[int],
    m2: Sequence[int],
    p2: Sequence[int],
    subset_cap: int = SUBSET_CAP,
) -> PairStatus:
    """If O(m) is O(p)-regular and O(m2) is O(p2)-regular, then O(m + m2)
    must be O(p + p2)-regular.

    Returns "hypothesis-not-met" when either input pair fails its own
    regularity test; the theorem is conditional and lumping that case in
    with a conclusion failure would make the check meaningless.
    """
    _check_lengths(E, m=m, p=p, m2=m2, p2=p2)
    if not is_regular_formula(E, m, p, subset_cap):
        return "hypothesis-not-met"
    if not is_regular_formula(E, m2, p2, subset_cap):
        return "hypothesis-not-met"
    m_sum = tuple(a + b for a, b in zip(m, m2))
    p_sum = tuple(a + b for a, b in zip(p, p2))
    return "holds" if is_regular_formula(E, m_sum, p_sum, subset_cap) else "fails"
