"""Zassenhaus-ball radii for SO_o(n,1) after H. C. Wang.

C1 and C2 are the suprema of the operator norm of ad X over the unit
spheres of p and k.  R_G is the least positive zero of

    F(t) = exp(C1 t) - 1 + 2 sin(C2 t) - C1 t / (exp(C1 t) - 1)

and r0 = R_G / 2 is the embedded-ball radius the volume bound consumes.
Division binds only the final term, which forces F(0+) = -1 and hence the
existence of a least positive zero.

The volume pipeline uses Wang's published values of R_G (published_rg);
the locally computed (C1, C2) -> root chain is a diagnostic cross-check.
The computed constants in the scaled metric are (1, 1) for n = 3 and
(1, sqrt 2) for n >= 4; the published radii are reproduced by the
normalized pairs of reconciliation_pair, reported rather than asserted.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass
from enum import Enum

import numpy as np

from .lie_core import (
    AlgebraVector,
    Metric,
    alg_dim,
    compact_dim,
    gram_diagonal,
    _ad_stack,
)


class NoRootError(ArithmeticError):
    """F(t) found no sign change in the scanned interval."""


class Provenance(Enum):
    COMPUTED = "computed"
    PUBLISHED = "published"


@dataclass(frozen=True)
class WangConstants:
    n: int
    c1: float
    c2: float
    metric: Metric
    provenance: Provenance

    def __post_init__(self):
        if self.c1 <= 0.0 or self.c2 <= 0.0:
            raise ValueError("Wang constants must be positive")


@dataclass(frozen=True)
class RGResult:
    c1: float
    c2: float
    rg: float
    r0: float
    bracket: tuple[float, float]
    f_evals: int


def op_norm_ad(v: AlgebraVector, metric: Metric = Metric.CANONICAL) -> float:
    """Operator norm of ad(v), largest singular value.

    Both metrics have Gram matrices proportional to the identity, so the
    matrix of ad(v) in a metric-orthonormal basis equals its matrix in the
    standard basis and the norm does not depend on the metric choice; the
    metric matters only when normalizing v itself.
    """
    del metric
    M = np.einsum("a,aij->ij", v.coeffs, _ad_stack(v.n))
    w = np.linalg.eigvalsh(M.T @ M)
    return math.sqrt(max(0.0, float(w[-1])))


def _coeff_norm_for_unit(n: int, metric: Metric) -> float:
    """Coefficient 2-norm of a metric-unit vector (Gram is gram * identity)."""
    return 1.0 / math.sqrt(gram_diagonal(n, metric))


def _op_norm_coeffs(AD: np.ndarray, c: np.ndarray) -> float:
    M = np.einsum("a,aij->ij", c, AD)
    w = np.linalg.eigvalsh(M.T @ M)
    return math.sqrt(max(0.0, float(w[-1])))


def _ascend(AD: np.ndarray, c: np.ndarray, active: np.ndarray, iters: int = 40) -> tuple[float, np.ndarray]:
    """Alternating maximization of the top singular value over the unit sphere
    of the coordinate subspace selected by ``active``.

    Given the top singular pair (u, w) of ad(c), the supergradient of
    c -> sigma_max(ad c) is g_a = u . ad(e_a) w; moving to the projected
    unit vector along g never decreases the objective.
    """
    c = c / np.linalg.norm(c)
    val = _op_norm_coeffs(AD, c)
    for _ in range(iters):
        M = np.einsum("a,aij->ij", c, AD)
        U, s, Vt = np.linalg.svd(M)
        g = np.einsum("i,aij,j->a", U[:, 0], AD, Vt[0, :]) * active
        ng = np.linalg.norm(g)
        if ng == 0.0:
            break
        cand = g / ng
        new = _op_norm_coeffs(AD, cand)
        if new <= val + 1e-14:
            break
        c, val = cand, new
    return val, c


def _sup_over_sphere(n: int, active: np.ndarray, candidates: list[np.ndarray],
                     n_random: int, seed: int) -> tuple[float, list[float]]:
    """Max op norm over the unit sphere of a coordinate subspace.

    Returns the best value and the raw values of the random starts (the
    latter feed the p-sphere variance check).
    """
    AD = _ad_stack(n)
    d = alg_dim(n)
    rng = np.random.default_rng(seed)
    best = 0.0
    randvals = []
    starts = [c for c in candidates]
    for _ in range(n_random):
        starts.append(rng.standard_normal(d) * active)
    for k, c in enumerate(starts):
        nc = np.linalg.norm(c)
        if nc == 0.0:
            continue
        c = c / nc
        v0 = _op_norm_coeffs(AD, c)
        if k >= len(candidates):
            randvals.append(v0)
        val, _ = _ascend(AD, c, active)
        best = max(best, v0, val)
    return best, randvals


def wang_C1(n: int, metric: Metric = Metric.CANONICAL, seed: int = 0, samples: int = 200) -> float:
    """sup of N(ad X) over metric-unit X in p.

    The isotropy action is transitive on the unit sphere of p, so every
    start should give the same value; a sample variance above 1e-10 is
    flagged with a warning.
    """
    if n < 2:
        raise ValueError(f"need n >= 2, got {n}")
    d, nk = alg_dim(n), compact_dim(n)
    active = np.zeros(d)
    active[nk:] = 1.0
    cands = [np.eye(d)[k] for k in range(nk, d)]
    best, randvals = _sup_over_sphere(n, active, cands, max(samples, 200), seed)
    if randvals and float(np.var(randvals)) > 1e-10:
        warnings.warn(f"unit p-sphere op norms at n={n} are not constant "
                      f"(variance {np.var(randvals):.2e})", RuntimeWarning, stacklevel=2)
    return best * _coeff_norm_for_unit(n, metric)


def wang_C2(n: int, metric: Metric = Metric.CANONICAL, seed: int = 0, restarts: int = 500) -> float:
    """sup of N(ad U) over metric-unit U in k.

    Candidates are every normalized alpha, normalized sums of disjoint
    alpha pairs (a_12 + a_34 + ...), and ``restarts`` random starts of
    projected ascent.  Deterministic under the seed.
    """
    if n < 2:
        raise ValueError(f"need n >= 2, got {n}")
    d, nk = alg_dim(n), compact_dim(n)
    active = np.zeros(d)
    active[:nk] = 1.0
    cands = [np.eye(d)[k] for k in range(nk)]
    pairs = [(i, j) for i in range(1, n + 1) for j in range(i + 1, n + 1)]
    pos = {p: k for k, p in enumerate(pairs)}
    disjoint = [pos[(2 * m + 1, 2 * m + 2)] for m in range(n // 2)]
    for count in range(2, len(disjoint) + 1):
        c = np.zeros(d)
        for k in disjoint[:count]:
            c[k] = 1.0
        cands.append(c)
    best, _ = _sup_over_sphere(n, active, cands, max(restarts, 500), seed)
    return best * _coeff_norm_for_unit(n, metric)


def wang_constants(n: int, metric: Metric = Metric.CANONICAL, seed: int = 0) -> WangConstants:
    return WangConstants(n, wang_C1(n, metric, seed), wang_C2(n, metric, seed + 1),
                         metric, Provenance.COMPUTED)


def wang_F(t: float, c1: float, c2: float) -> float:
    """Wang's function; F(0+) = -1 under this parse of the final quotient."""
    if t <= 0.0:
        raise ValueError(f"F is evaluated for t > 0, got {t}")
    e = math.expm1(c1 * t)
    return e + 2.0 * math.sin(c2 * t) - c1 * t / e


def least_positive_zero(c1: float, c2: float, tol: float = 1e-10) -> RGResult:
    """Least positive zero of F by sign scan and bisection.

    Scans from 1e-6 in steps of 1e-3 * max(1, 1/c1); the step is small
    against the derivative scale c1 + 2 c2 near the root, so the first sign
    change is not skipped.  Raises NoRootError past 10 (1/c1 + 1/c2).
    """
    if c1 <= 0.0 or c2 <= 0.0:
        raise ValueError("Wang constants must be positive")
    evals = 0

    def f(t):
        nonlocal evals
        evals += 1
        return wang_F(t, c1, c2)

    t_lo = 1e-6
    step = 1e-3 * max(1.0, 1.0 / c1)
    t_max = 10.0 * (1.0 / c1 + 1.0 / c2)
    f_lo = f(t_lo)
    if f_lo >= 0.0:
        raise NoRootError("F does not start negative; no least positive zero bracketed")
    t_hi = t_lo
    while True:
        t_hi = t_hi + step
        if t_hi > t_max:
            raise NoRootError(f"no sign change of F in (0, {t_max:g}]")
        f_hi = f(t_hi)
        if f_hi >= 0.0:
            t_lo = t_hi - step
            break
    while t_hi - t_lo > tol:
        mid = 0.5 * (t_lo + t_hi)
        if f(mid) < 0.0:
            t_lo = mid
        else:
            t_hi = mid
    rg = 0.5 * (t_lo + t_hi)
    return RGResult(c1, c2, rg, rg / 2.0, (t_lo, t_hi), evals)


def published_rg(n: int) -> float:
    """Published Zassenhaus-ball radius R_G for SO_o(n,1).

    0.277 sqrt(2) at n = 3 and 0.228 sqrt(2(n-1)) for n >= 4; these are the
    values the volume bound consumes.
    """
    if n < 3:
        raise ValueError(f"published R_G values start at n = 3, got {n}")
    if n == 3:
        return 0.277 * math.sqrt(2.0)
    return 0.228 * math.sqrt(2.0 * (n - 1))


def reconciliation_pair(n: int) -> tuple[float, float]:
    """Normalized (C1, C2) pairs under which the root finder reproduces the
    published R_G coefficients: (sqrt 2, sqrt 2) at n = 3, (1, sqrt 2) for
    n >= 4.  A reporting aid; the published values stay authoritative.
    """
    if n < 3:
        raise ValueError(f"need n >= 3, got {n}")
    if n == 3:
        return (math.sqrt(2.0), math.sqrt(2.0))
    return (1.0, math.sqrt(2.0))


def wang_report(n: int, metric: Metric = Metric.CANONICAL, seed: int = 0) -> dict:
    """Computed constants and root against the published radius.

    The published R_G is a canonical-metric distance; for a scaled-metric
    report it is converted by 1/sqrt(2(n-1)) so the gap compares like with
    like.  No radius is published for n = 2, so those fields come back null.
    """
    consts = wang_constants(n, metric, seed)
    res = least_positive_zero(consts.c1, consts.c2)
    pub = gap = None
    if n >= 3:
        pub = published_rg(n)
        if metric is Metric.SCALED:
            pub = pub / math.sqrt(2.0 * (n - 1))
        gap = res.rg / pub - 1.0
    return {
        "n": n,
        "metric": metric.value,
        "c1": consts.c1,
        "c2": consts.c2,
        "computed_rg": res.rg,
        "computed_r0": res.r0,
        "published_rg": pub,
        "relative_gap": gap,
    }
