"""Log-space volume engine for the orbifold lower bound.

Constant-curvature ball volumes V(d,k,r), the volume of SO(n) in the
rescaled metric, and their quotient

    bound(n) = V(d0, k0, r0) / Vol[SO(n)],
    d0 = n(n+1)/2,  k0 = (n^2 + 43n)/8,  r0 = published R_G / 2,

are all evaluated as natural logs; linear values are materialized only at
the report boundary (by n = 15 the bound underflows double precision in
linear space, and past n = 19 even its exponential is subnormal).

Vol[SO(n)] = 2^floor((n^2+2n-2)/4) pi^floor(n^2/4) / ((n-2)!(n-4)! ... 1),
the floor convention being anchored by Vol[SO(3)] = 8 pi^2.  The one-line
closed form of the bound is the same quotient with the powers of 2, pi and
(n^2+43n) collected; the exponents arising from that rearrangement are
exact rationals, which keeps the two evaluation routes in 1e-9 agreement
(flooring them as well would not reproduce the quotient).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

from .wang import published_rg


@dataclass(frozen=True)
class BallSpec:
    """Ball of radius r in the model space of dimension d and curvature k."""

    d: int
    k: float
    r: float

    def __post_init__(self):
        if self.d < 1:
            raise ValueError(f"dimension must be >= 1, got {self.d}")
        if self.r < 0.0:
            raise ValueError(f"radius must be >= 0, got {self.r}")


@dataclass(frozen=True)
class BoundReport:
    """Per-dimension record of the orbifold volume bound, held in log space."""

    n: int
    d0: int
    k0: float
    r0: float
    log_v: float
    log_vol_so: float
    log_bound: float
    log_closed_form: float

    @property
    def bound(self) -> float:
        return math.exp(self.log_bound)

    @property
    def closed_form_bound(self) -> float:
        return math.exp(self.log_closed_form)

    @property
    def consistency_gap(self) -> float:
        return abs(math.expm1(self.log_closed_form - self.log_bound))

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "d0": self.d0,
            "k0": self.k0,
            "r0": self.r0,
            "logV": self.log_v,
            "logVolSO": self.log_vol_so,
            "bound": self.bound,
            "log_bound": self.log_bound,
            "closed_form_bound": self.closed_form_bound,
            "log_closed_form_bound": self.log_closed_form,
            "consistency_gap": self.consistency_gap,
        }


def sin_power_integral(m: int, u: float) -> float:
    """integral_0^u sin^m(rho) d rho by the stable reduction recurrence

    I_m = -cos(u) sin^(m-1)(u)/m + (m-1)/m I_(m-2),  I_0 = u, I_1 = 1 - cos u.
    """
    if m < 0:
        raise ValueError(f"power must be >= 0, got {m}")
    if not 0.0 <= u <= math.pi:
        raise ValueError(f"u must lie in [0, pi], got {u}")
    if m == 0:
        return u
    s, c = math.sin(u), math.cos(u)
    even, odd = u, 1.0 - c
    if m == 1:
        return odd
    for k in range(2, m + 1):
        prev = even if k % 2 == 0 else odd
        val = -c * s ** (k - 1) / k + (k - 1) / k * prev
        if k % 2 == 0:
            even = val
        else:
            odd = val
    return even if m % 2 == 0 else odd


_SINH_SERIES_CUT = 1e-2


def sinh_power_integral(m: int, u: float) -> float:
    """integral_0^u sinh^m(rho) d rho.

    Uses the reduction recurrence
    I_m = cosh(u) sinh^(m-1)(u)/m - (m-1)/m I_(m-2); for tiny u the
    recurrence cancels catastrophically, so a short series in u is used:
    I = u^(m+1)/(m+1) + m u^(m+3)/(6(m+3)) + (m/120 + m(m-1)/72) u^(m+5)/(m+5).
    """
    if m < 0:
        raise ValueError(f"power must be >= 0, got {m}")
    if u < 0.0:
        raise ValueError(f"u must be >= 0, got {u}")
    if m == 0:
        return u
    if u * u * (m + 3) < _SINH_SERIES_CUT:
        return (u ** (m + 1) / (m + 1)
                + m * u ** (m + 3) / (6.0 * (m + 3))
                + (m / 120.0 + m * (m - 1) / 72.0) * u ** (m + 5) / (m + 5))
    s, c = math.sinh(u), math.cosh(u)
    even, odd = u, c - 1.0
    if m == 1:
        return odd
    for k in range(2, m + 1):
        prev = even if k % 2 == 0 else odd
        val = c * s ** (k - 1) / k - (k - 1) / k * prev
        if k % 2 == 0:
            even = val
        else:
            odd = val
    return even if m % 2 == 0 else odd


def adaptive_simpson(f, a: float, b: float, tol: float = 1e-14, max_depth: int = 60) -> float:
    """Adaptive Simpson quadrature to absolute tolerance; the integration
    oracle the power-integral recurrences are tested against.

    Panels also stop refining at the floating-point noise floor (refinement
    signal below a few ulps of the local value), without which an absolute
    target under the roundoff of a large integrand would expand the full
    tree.
    """
    def simp(x0, f0, x2, f2, x1, f1):
        return (x2 - x0) / 6.0 * (f0 + 4.0 * f1 + f2)

    def rec(x0, f0, x2, f2, x1, f1, whole, tol, depth):
        xl = 0.5 * (x0 + x1)
        xr = 0.5 * (x1 + x2)
        fl, fr = f(xl), f(xr)
        left = simp(x0, f0, x1, f1, xl, fl)
        right = simp(x1, f1, x2, f2, xr, fr)
        delta = left + right - whole
        # delta below a few ulps of the panel values is pure roundoff
        noise = 2e-15 * (abs(left) + abs(right))
        if depth <= 0 or abs(delta) <= max(15.0 * tol, noise):
            return left + right + delta / 15.0
        return (rec(x0, f0, x1, f1, xl, fl, left, 0.5 * tol, depth - 1)
                + rec(x1, f1, x2, f2, xr, fr, right, 0.5 * tol, depth - 1))

    if a == b:
        return 0.0
    fa, fb = f(a), f(b)
    mid = 0.5 * (a + b)
    fm = f(mid)
    return rec(a, fa, b, fb, mid, fm, simp(a, fa, b, fb, mid, fm), tol, max_depth)


def ball_volume_log(spec: BallSpec) -> float:
    """Natural log of V(d, k, r), the constant-curvature model ball volume.

    k > 0: V = 2 (pi/k)^(d/2) / Gamma(d/2) * integral_0^min(r sqrt k, pi) sin^(d-1)
    (the model is the sphere of radius k^(-1/2); the cap at pi is the whole
    sphere).  k = 0 is the Euclidean ball; k < 0 the hyperbolic analogue
    with sinh and no cap.  r = 0 returns -inf.
    """
    d, k, r = spec.d, spec.k, spec.r
    if r == 0.0:
        return -math.inf
    if k > 0.0:
        u = min(r * math.sqrt(k), math.pi)
        return (math.log(2.0) + 0.5 * d * (math.log(math.pi) - math.log(k))
                - math.lgamma(0.5 * d) + math.log(sin_power_integral(d - 1, u)))
    if k == 0.0:
        return 0.5 * d * math.log(math.pi) + d * math.log(r) - math.lgamma(0.5 * d + 1.0)
    u = r * math.sqrt(-k)
    return (math.log(2.0) + 0.5 * d * (math.log(math.pi) - math.log(-k))
            - math.lgamma(0.5 * d) + math.log(sinh_power_integral(d - 1, u)))


def _log_factorial_descent(n: int) -> float:
    """log of (n-2)!(n-4)! ... down to 1! or 0!; the tail factors are 1."""
    out = 0.0
    m = n - 2
    while m > 1:
        out += math.lgamma(m + 1.0)
        m -= 2
    return out


def vol_SO_log(n: int) -> float:
    """log Vol[SO(n)] in the rescaled metric.

    2^floor((n^2+2n-2)/4) pi^floor(n^2/4) / ((n-2)!(n-4)! ... 1); floor is
    the bracket convention, fixed by the anchor Vol[SO(3)] = 8 pi^2.
    """
    if n < 2:
        raise ValueError(f"need n >= 2, got {n}")
    return ((n * n + 2 * n - 2) // 4 * math.log(2.0)
            + (n * n) // 4 * math.log(math.pi)
            - _log_factorial_descent(n))


def ball_dimension(n: int) -> int:
    return n * (n + 1) // 2


def curvature_constant(n: int) -> float:
    return (n * n + 43.0 * n) / 8.0


def embedded_radius(n: int) -> float:
    """r0 = published R_G / 2 (0.277 sqrt2 / 2 at n = 3, 0.114 sqrt(2(n-1)) after)."""
    return published_rg(n) / 2.0


@lru_cache(maxsize=None)
def orbifold_bound(n: int) -> BoundReport:
    """Volume lower bound for hyperbolic n-orbifolds, n >= 3."""
    if n < 3:
        raise ValueError(f"the bound pipeline starts at n = 3, got {n}")
    d0 = ball_dimension(n)
    k0 = curvature_constant(n)
    r0 = embedded_radius(n)
    log_v = ball_volume_log(BallSpec(d0, k0, r0))
    log_so = vol_SO_log(n)
    return BoundReport(
        n=n, d0=d0, k0=k0, r0=r0,
        log_v=log_v, log_vol_so=log_so,
        log_bound=log_v - log_so,
        log_closed_form=orbifold_bound_closed_form_log(n),
    )


def closed_form_integral_limit(n: int) -> float:
    """0.057 sqrt(n^3 + 42 n^2 - 43 n), identically r0 sqrt(k0) for n >= 4."""
    return 0.057 * math.sqrt(n ** 3 + 42.0 * n * n - 43.0 * n)


def orbifold_bound_closed_form_log(n: int) -> float:
    """log of the one-line closed form of the bound.

    The quotient V(d0,k0,r0)/Vol[SO(n)] with all powers collected:

      2^(1 + 3(n^2+n)/4 - floor((n^2+2n-2)/4)) * pi^((n^2+n)/4 - floor(n^2/4))
      * (n^2+43n)^(-(n^2+n)/4) * (n-2)!(n-4)!...1 / Gamma((n^2+n)/4)
      * integral_0^min(0.057 sqrt(n^3+42n^2-43n), pi) sin^((n^2+n-2)/2).

    The integral limit for n = 3 is r0 sqrt(k0) with the published n = 3
    radius, which differs from the blanket 0.114-coefficient expression.
    """
    if n < 3:
        raise ValueError(f"the bound pipeline starts at n = 3, got {n}")
    half = (n * n + n) / 4.0
    exp2 = 1.0 + 3.0 * half - (n * n + 2 * n - 2) // 4
    exp_pi = half - (n * n) // 4
    if n >= 4:
        u = min(closed_form_integral_limit(n), math.pi)
    else:
        u = min(embedded_radius(n) * math.sqrt(curvature_constant(n)), math.pi)
    m = (n * n + n - 2) // 2
    return (exp2 * math.log(2.0) + exp_pi * math.log(math.pi)
            - half * math.log(n * n + 43.0 * n)
            + _log_factorial_descent(n) - math.lgamma(half)
            + math.log(sin_power_integral(m, u)))


def symmetry_order_bound(n: int, vol_m: float, outer: bool = False) -> int:
    """Order bound for a group H of orientation-preserving isometries of a
    hyperbolic n-manifold of volume vol_m: floor(vol_m / bound(n)).

    With outer=True the bound applies to a subgroup of the outer
    automorphism group of the fundamental group, doubling the quotient.
    The integer is exact only while the quotient stays below 2^53.
    """
    if not (vol_m > 0.0 and math.isfinite(vol_m)):
        raise ValueError(f"manifold volume must be positive and finite, got {vol_m}")
    rep = orbifold_bound(n)
    q = math.exp(math.log(vol_m) - rep.log_bound)
    if outer:
        q *= 2.0
    if not math.isfinite(q):
        raise OverflowError(f"order bound exceeds float range at n={n}")
    # the quotient carries ~1e-16 log-space noise; keep exact-integer
    # quotients (vol_m equal to the bound itself) from flooring one short
    return math.floor(q * (1.0 + 1e-13))
