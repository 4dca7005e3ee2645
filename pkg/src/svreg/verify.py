"""Grid verification: replay every closed form against the brute-force
cohomology route on exhaustive small grids plus seeded random sampling.

Each check walks its grid in a fixed deterministic order and reports how
many instances it saw, how many failed, and the first failure (hence the
smallest one in iteration order) as a serializable counterexample.
Sampled instances come from ``random.Random`` seeded off the
configuration, so reruns are reproducible.
"""
from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from typing import Callable, Iterator, Sequence

from . import cohomology, regularity, tate
from .cohomology import SegreVeronese


@dataclass(frozen=True)
class VerifyConfig:
    """Grid bounds and sample counts; the defaults are the reference grid."""

    lmax: int = 3
    dmax: int = 3
    box: tuple[int, int] = (-8, 8)
    r3_samples: int = 10000
    seed: int = 1729
    subadd_pairs: int = 1000
    pair_samples: int = 200


@dataclass
class CheckResult:
    name: str
    instances: int
    failures: int
    counterexample: dict | None = None

    @property
    def ok(self) -> bool:
        return self.failures == 0

    def as_dict(self) -> dict:
        return {
            "name": self.name,
            "instances": self.instances,
            "failures": self.failures,
            "counterexample": self.counterexample,
        }


def _embeddings(config: VerifyConfig, r_values: Sequence[int] = (1, 2)) -> Iterator[SegreVeronese]:
    for r in r_values:
        for l in itertools.product(range(1, config.lmax + 1), repeat=r):
            for d in itertools.product(range(1, config.dmax + 1), repeat=r):
                yield SegreVeronese(l, d)


def _box_points(config: VerifyConfig, r: int) -> list[tuple[int, ...]]:
    lo, hi = config.box
    return list(itertools.product(range(lo, hi + 1), repeat=r))


def _random_r3(config: VerifyConfig) -> Iterator[tuple[tuple, tuple, tuple, tuple]]:
    """Seeded (l, d, m, p) samples with r = 3; the same sequence for every
    check that consumes it."""
    rng = random.Random(config.seed)
    lo, hi = config.box
    for _ in range(config.r3_samples):
        l = tuple(rng.randint(1, config.lmax) for _ in range(3))
        d = tuple(rng.randint(1, config.dmax) for _ in range(3))
        m = tuple(rng.randint(lo, hi) for _ in range(3))
        p = tuple(rng.randint(lo, hi) for _ in range(3))
        yield l, d, m, p


def _instance(E: SegreVeronese, **extra) -> dict:
    out = {"l": list(E.l), "d": list(E.d)}
    for key, value in extra.items():
        out[key] = list(value) if isinstance(value, tuple) else value
    return out


def check_formula_vs_oracle(config: VerifyConfig) -> CheckResult:
    """The closed-form regularity test must agree with the cohomology scan
    on every grid point."""
    formula = regularity.is_regular_formula
    oracle = regularity.is_regular_oracle
    instances = failures = 0
    ce = None
    for E in _embeddings(config):
        pts = _box_points(config, E.r)
        for m in pts:
            for p in pts:
                instances += 1
                if formula(E, m, p) == oracle(E, m, p):
                    continue
                failures += 1
                if ce is None:
                    ce = _instance(E, m=m, p=p, formula=formula(E, m, p), oracle=oracle(E, m, p))
    for l, d, m, p in _random_r3(config):
        E = SegreVeronese(l, d)
        instances += 1
        if formula(E, m, p) != oracle(E, m, p):
            failures += 1
            if ce is None:
                ce = _instance(E, m=m, p=p, formula=formula(E, m, p), oracle=oracle(E, m, p))
    return CheckResult("formula-vs-oracle", instances, failures, ce)


def check_corner_membership(config: VerifyConfig) -> CheckResult:
    """Corner domination must agree with the closed-form test everywhere."""
    member = regularity.in_regularity_set
    formula = regularity.is_regular_formula
    instances = failures = 0
    ce = None
    for E in _embeddings(config):
        pts = _box_points(config, E.r)
        for m in pts:
            for p in pts:
                instances += 1
                if member(E, m, p) == formula(E, m, p):
                    continue
                failures += 1
                if ce is None:
                    ce = _instance(E, m=m, p=p, member=member(E, m, p), formula=formula(E, m, p))
    for l, d, m, p in _random_r3(config):
        E = SegreVeronese(l, d)
        instances += 1
        if member(E, m, p) != formula(E, m, p):
            failures += 1
            if ce is None:
                ce = _instance(E, m=m, p=p, member=member(E, m, p), formula=formula(E, m, p))
    return CheckResult("corner-membership", instances, failures, ce)


def _minimal_twist_failure(E: SegreVeronese, m: tuple[int, ...]) -> dict | None:
    """Scan twists by the embedding bundle with the cohomology route and
    compare the least regular one against cm_regularity."""
    rho = regularity.cm_regularity(E, m)
    d = E.d
    bound = E.n + max(abs(mk) + lk for mk, lk in zip(m, E.l)) + 2
    if regularity.is_regular_oracle(E, m, tuple(-bound * dk for dk in d)):
        return _instance(E, m=m, reason=f"scan lower bound {-bound} is already regular")
    found = None
    for q in range(-bound + 1, bound + 1):
        if regularity.is_regular_oracle(E, m, tuple(q * dk for dk in d)):
            found = q
            break
    if found is None:
        return _instance(E, m=m, reason=f"no regular twist in [{-bound}, {bound}]")
    if found != rho:
        return _instance(E, m=m, minimal_twist=found, cm_regularity=rho)
    for q in range(found + 1, found + 4):
        if not regularity.is_regular_oracle(E, m, tuple(q * dk for dk in d)):
            return _instance(E, m=m, reason=f"twist {q} above the minimum {found} is not regular")
    return None


def check_minimal_twist(config: VerifyConfig) -> CheckResult:
    """cm_regularity must equal the least q with q*d in the regularity set."""
    instances = failures = 0
    ce = None
    for E in _embeddings(config):
        for m in _box_points(config, E.r):
            instances += 1
            failure = _minimal_twist_failure(E, m)
            if failure is not None:
                failures += 1
                ce = ce or failure
    for l, d, m, _ in _random_r3(config):
        instances += 1
        failure = _minimal_twist_failure(SegreVeronese(l, d), m)
        if failure is not None:
            failures += 1
            ce = ce or failure
    return CheckResult("minimal-twist", instances, failures, ce)


def _cohomology_failure(E: SegreVeronese, a: tuple[int, ...]) -> dict | None:
    n = E.n
    profile = cohomology.product_cohomology(E, a)
    # independent route: full Kunneth convolution of the factor tables
    conv = [1]
    for lk, ak in zip(E.l, a):
        t = cohomology.factor_cohomology(lk, ak).table(lk)
        new = [0] * (len(conv) + lk)
        for i, ci in enumerate(conv):
            if ci:
                for j, tj in enumerate(t):
                    if tj:
                        new[i + j] += ci * tj
        conv = new
    if sum(1 for v in conv if v) > 1:
        return _instance(E, a=a, reason="concentration violated", table=conv)
    if profile.table(n) != conv:
        return _instance(E, a=a, reason="profile disagrees with Kunneth convolution", table=conv)
    dead = any(-lk <= ak <= -1 for lk, ak in zip(E.l, a))
    if dead != profile.vanishes:
        return _instance(E, a=a, reason="vanishing window disagrees with profile")
    if not profile.vanishes:
        J = [k for k in range(E.r) if a[k] <= -E.l[k] - 1]
        lJ = sum(E.l[k] for k in J)
        dim = 1
        for k in range(E.r):
            if k in J:
                dim *= cohomology.binom(-a[k] - 1, E.l[k])
            else:
                dim *= cohomology.binom(a[k] + E.l[k], E.l[k])
        if profile.degree != lJ or profile.dimension != dim:
            return _instance(E, a=a, reason="degree law violated", expected=[lJ, dim])
    dual = tuple(-ak - lk - 1 for ak, lk in zip(a, E.l))
    dual_profile = cohomology.product_cohomology(E, dual)
    for i in range(n + 1):
        if conv[i] != dual_profile.h(n - i):
            return _instance(E, a=a, reason=f"Serre duality violated at i={i}")
    chi = cohomology.euler_characteristic(E, a)
    alternating = sum(v if i % 2 == 0 else -v for i, v in enumerate(conv))
    if chi != alternating:
        return _instance(E, a=a, reason="Euler characteristic disagrees", chi=chi, alternating=alternating)
    return None


def check_cohomology_consistency(config: VerifyConfig) -> CheckResult:
    """Concentration, Serre duality and the Euler characteristic, replayed
    against a full Kunneth convolution, exhaustively for r up to 3."""
    instances = failures = 0
    ce = None
    for r in (1, 2, 3):
        for l in itertools.product(range(1, config.lmax + 1), repeat=r):
            E = SegreVeronese(l, (1,) * r)
            for a in _box_points(config, r):
                instances += 1
                failure = _cohomology_failure(E, a)
                if failure is not None:
                    failures += 1
                    ce = ce or failure
    return CheckResult("cohomology", instances, failures, ce)


def check_segre_closed_form(config: VerifyConfig) -> CheckResult:
    """The two-factor Segre closed form must match cm_regularity."""
    instances = failures = 0
    ce = None
    for a in range(1, 4):
        for b in range(1, 4):
            E = SegreVeronese((a, b), (1, 1))
            for k in range(-5, 6):
                for twist_l in range(-5, 6):
                    instances += 1
                    special = regularity.segre_regularity(a, b, k, twist_l)
                    general = regularity.cm_regularity(E, (k, twist_l))
                    if special != general:
                        failures += 1
                        if ce is None:
                            ce = _instance(E, m=(k, twist_l), special=special, general=general)
    return CheckResult("segre-r2", instances, failures, ce)


def check_ideal_sheaf_bound(config: VerifyConfig) -> CheckResult:
    """lambda - 1 must bound reg of the structure sheaf of the image from
    above, strictly so at l=(1,2), d=(1,1)."""
    instances = failures = 0
    ce = None
    for E in _embeddings(config):
        instances += 1
        bound = regularity.ideal_sheaf_bound(E)
        reg_zero = regularity.cm_regularity(E, (0,) * E.r)
        if bound.value - 1 < reg_zero:
            failures += 1
            ce = ce or _instance(E, bound=bound.value, reg_zero=reg_zero)
    witness = SegreVeronese((1, 2), (1, 1))
    instances += 1
    bound = regularity.ideal_sheaf_bound(witness)
    reg_zero = regularity.cm_regularity(witness, (0, 0))
    if not (bound.value - 1 == 2 and reg_zero == 1 and bound.value - 1 > reg_zero):
        failures += 1
        ce = ce or _instance(witness, bound=bound.value, reg_zero=reg_zero, reason="strictness witness failed")
    return CheckResult("ideal-bound", instances, failures, ce)


def check_subadditivity_random(config: VerifyConfig) -> CheckResult:
    """reg(m) + reg(m2) >= reg(m + m2) on seeded random pairs."""
    instances = failures = 0
    ce = None
    lo, hi = config.box
    for E in _embeddings(config):
        rng = random.Random(f"{config.seed}|subadd|{E.l}|{E.d}")
        for _ in range(config.subadd_pairs):
            m = tuple(rng.randint(lo, hi) for _ in range(E.r))
            m2 = tuple(rng.randint(lo, hi) for _ in range(E.r))
            instances += 1
            report = regularity.check_subadditivity(E, m, m2)
            if not report.holds:
                failures += 1
                ce = ce or _instance(E, m=m, m2=m2, report=report.__dict__)
    return CheckResult("subadditivity", instances, failures, ce)


def check_pair_subadditivity_random(config: VerifyConfig) -> CheckResult:
    """For seeded random pairs satisfying the hypotheses (built from corner
    points, so regularity is guaranteed), the sum pair must be regular."""
    instances = failures = 0
    ce = None
    lo, hi = config.box
    for E in _embeddings(config):
        rng = random.Random(f"{config.seed}|pairs|{E.l}|{E.d}")
        for _ in range(config.pair_samples):
            m = tuple(rng.randint(lo, hi) for _ in range(E.r))
            m2 = tuple(rng.randint(lo, hi) for _ in range(E.r))
            c1 = rng.choice(regularity.regularity_corners(E, m)).corner
            p = tuple(ck + rng.randint(0, 2) for ck in c1)
            c2 = rng.choice(regularity.regularity_corners(E, m2)).corner
            p2 = tuple(ck + rng.randint(0, 2) for ck in c2)
            instances += 1
            status = regularity.check_pair_subadditivity(E, m, p, m2, p2)
            if status != "holds":
                failures += 1
                ce = ce or _instance(E, m=m, p=p, m2=m2, p2=p2, status=status)
    return CheckResult("pair-subadditivity", instances, failures, ce)


def check_tate_endpoints(config: VerifyConfig) -> CheckResult:
    """Window length closed forms, the balanced special case, and the
    duality p_minus(m) = -p_plus(dual twist of m)."""
    instances = failures = 0
    ce = None

    def record(failure: dict) -> None:
        nonlocal failures, ce
        failures += 1
        ce = ce or failure

    # constant m: window length is (r-1)l + 1 whatever m is
    for r in (1, 2, 3):
        for l in range(1, config.lmax + 1):
            E = SegreVeronese((l,) * r, (1,) * r)
            for m_val in range(-6, 7):
                m = (m_val,) * r
                instances += 1
                length = tate.p_plus(E, m) - tate.p_minus(E, m)
                if length != (r - 1) * l + 1:
                    record(_instance(E, m=m, length=length, expected=(r - 1) * l + 1))
    # balanced closed form against the general operations
    for r in (1, 2, 3):
        for l in range(1, config.lmax + 1):
            E = SegreVeronese((l,) * r, (1,) * r)
            for ms in itertools.combinations_with_replacement(range(-6, 7), r):
                instances += 1
                got = tate.balanced_endpoints(r, l, ms)
                want = (tate.p_plus(E, ms), tate.p_minus(E, ms))
                if got != want:
                    record(_instance(E, m=ms, balanced=list(got), general=list(want)))
    # m = (0, ..., 0, M) with M >= (r-1)l: window length grows as M - l + 1
    for r in (2, 3):
        for l in range(1, config.lmax + 1):
            E = SegreVeronese((l,) * r, (1,) * r)
            for M in range((r - 1) * l, (r - 1) * l + 9):
                m = (0,) * (r - 1) + (M,)
                instances += 1
                length = tate.p_plus(E, m) - tate.p_minus(E, m)
                if length != M - l + 1:
                    record(_instance(E, m=m, length=length, expected=M - l + 1))
    # duality and involution on the general grid
    def duality_failure(E: SegreVeronese, m: tuple[int, ...]) -> dict | None:
        md = tate.dual_twist(E, m)
        if tate.dual_twist(E, md) != tuple(m):
            return _instance(E, m=m, reason="dual twist is not an involution")
        try:
            lhs = tate.p_minus(E, m)
        except RuntimeError as exc:
            return _instance(E, m=m, reason=str(exc))
        if lhs != -tate.p_plus(E, md):
            return _instance(E, m=m, p_minus=lhs, dual_p_plus=tate.p_plus(E, md))
        return None

    for E in _embeddings(config):
        for m in _box_points(config, E.r):
            instances += 1
            failure = duality_failure(E, m)
            if failure is not None:
                record(failure)
    for l, d, m, _ in _random_r3(config):
        instances += 1
        failure = duality_failure(SegreVeronese(l, d), m)
        if failure is not None:
            record(failure)
    return CheckResult("tate-endpoints", instances, failures, ce)


def check_window_structure(config: VerifyConfig) -> CheckResult:
    """Column purity must characterize both endpoints exactly: pure H^0 iff
    p >= p_plus, pure H^n iff p <= p_minus, across a padded window."""
    instances = failures = 0
    ce = None
    lo, hi = -4, 4  # windows cost a full cohomology sweep per column
    for E in _embeddings(config):
        n = E.n
        for m in itertools.product(range(lo, hi + 1), repeat=E.r):
            instances += 1
            try:
                window = tate.tate_window(E, m, pad=3)
            except RuntimeError as exc:
                failures += 1
                ce = ce or _instance(E, m=m, reason=str(exc))
                continue
            for t in window.terms:
                if tate._pure(t, 0) != (t.p >= window.p_plus) or tate._pure(t, n) != (
                    t.p <= window.p_minus
                ):
                    failures += 1
                    ce = ce or _instance(E, m=m, p=t.p, reason="purity does not match endpoint")
                    break
    return CheckResult("tate-window", instances, failures, ce)


CHECKS: dict[str, Callable[[VerifyConfig], CheckResult]] = {
    "cohomology": check_cohomology_consistency,
    "formula-vs-oracle": check_formula_vs_oracle,
    "corner-membership": check_corner_membership,
    "minimal-twist": check_minimal_twist,
    "segre-r2": check_segre_closed_form,
    "ideal-bound": check_ideal_sheaf_bound,
    "subadditivity": check_subadditivity_random,
    "pair-subadditivity": check_pair_subadditivity_random,
    "tate-endpoints": check_tate_endpoints,
    "tate-window": check_window_structure,
}


def run_checks(config: VerifyConfig, names: Sequence[str] | None = None) -> list[CheckResult]:
    """Run the named checks (all of them by default) in registry order."""
    if names is None:
        selected = list(CHECKS)
    else:
        unknown = [n for n in names if n not in CHECKS]
        if unknown:
            raise ValueError(
                f"unknown checks: {', '.join(unknown)}; available: {', '.join(CHECKS)}"
            )
        selected = list(names)
    return [CHECKS[name](config) for name in selected]
