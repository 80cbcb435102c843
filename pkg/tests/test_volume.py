import math

import pytest

from orbvol.volume import (
    BallSpec,
    BoundReport,
    adaptive_simpson,
    ball_volume_log,
    closed_form_integral_limit,
    curvature_constant,
    embedded_radius,
    orbifold_bound,
    orbifold_bound_closed_form_log,
    sin_power_integral,
    sinh_power_integral,
    symmetry_order_bound,
    vol_SO_log,
)


def test_sin_power_base_cases():
    assert sin_power_integral(0, 0.7) == 0.7
    assert sin_power_integral(1, math.pi / 2) == pytest.approx(1.0, abs=1e-15)
    assert sin_power_integral(3, 0.0) == 0.0


def test_sin_power_against_antiderivative():
    # integral of sin^5 = -cos u + (2/3) cos^3 u - (1/5) cos^5 u, from 0
    u = 0.81346
    c = math.cos(u)
    oracle = -c + (2.0 / 3.0) * c**3 - c**5 / 5.0 + 8.0 / 15.0
    assert oracle == pytest.approx(0.03189190310611412, abs=1e-15)  # frozen
    assert sin_power_integral(5, u) == pytest.approx(oracle, abs=1e-12)


@pytest.mark.parametrize("m", [2, 7, 40, 151, 250])
@pytest.mark.parametrize("u", [0.05, 0.81346, math.pi / 2, 2.4, math.pi])
def test_sin_power_against_quadrature(m, u):
    quad = adaptive_simpson(lambda x: math.sin(x) ** m, 0.0, u)
    assert abs(sin_power_integral(m, u) - quad) <= 1e-12


def test_sin_power_domain_errors():
    with pytest.raises(ValueError):
        sin_power_integral(-1, 0.5)
    with pytest.raises(ValueError):
        sin_power_integral(3, -0.1)
    with pytest.raises(ValueError):
        sin_power_integral(3, 3.5)


def test_sinh_power_values():
    assert sinh_power_integral(0, 2.0) == 2.0
    closed = (math.sinh(1.0) * math.cosh(1.0) - 1.0) / 2.0
    assert sinh_power_integral(2, 1.0) == pytest.approx(closed, rel=1e-14)
    # tiny-argument series limit
    u = 1e-4
    assert sinh_power_integral(2, u) == pytest.approx(u**3 / 3.0, rel=1e-6)
    with pytest.raises(ValueError):
        sinh_power_integral(2, -1.0)
    with pytest.raises(ValueError):
        sinh_power_integral(-2, 1.0)


@pytest.mark.parametrize("m,u", [(1, 0.3), (4, 0.009), (9, 1.7), (20, 0.4), (60, 0.05)])
def test_sinh_power_against_quadrature(m, u):
    # absolute agreement at the quadrature scale; the tiny-u series cases
    # additionally hold relatively
    quad = adaptive_simpson(lambda x: math.sinh(x) ** m, 0.0, u)
    val = sinh_power_integral(m, u)
    assert abs(val - quad) <= 1e-12 * max(1.0, abs(quad))
    if u * u * (m + 3) < 1e-2:
        assert val == pytest.approx(quad, rel=1e-9)


def test_ball_volume_euclidean():
    for r in (0.1, 1.0):
        expect = math.log(4.0 * math.pi / 3.0) + 3.0 * math.log(r)
        assert ball_volume_log(BallSpec(3, 0.0, r)) == pytest.approx(expect, abs=1e-12)


def test_ball_volume_sphere_cap():
    # radius pi on the unit 2-sphere is the whole sphere, area 4 pi
    assert ball_volume_log(BallSpec(2, 1.0, math.pi)) == pytest.approx(math.log(4.0 * math.pi), abs=1e-13)
    # past the cap the volume is constant
    v1 = ball_volume_log(BallSpec(4, 2.0, 10.0))
    v2 = ball_volume_log(BallSpec(4, 2.0, 50.0))
    assert v1 == v2


def test_ball_volume_monotone_in_radius_up_to_cap():
    prev = -math.inf
    for r in [0.05 * k for k in range(1, 40)]:
        v = ball_volume_log(BallSpec(6, 17.25, r))
        assert v >= prev
        prev = v


def test_ball_volume_hyperbolic_small_radius_is_euclidean():
    r = 1.5e-4
    hyp = ball_volume_log(BallSpec(3, -1.0, r))
    euc = ball_volume_log(BallSpec(3, 0.0, r))
    assert hyp == pytest.approx(euc, abs=1e-8)
    assert hyp >= euc  # negative curvature balls are larger


def test_ball_volume_n3_instance_against_quadrature():
    # the d0 = 6, k0 = 17.25 ball at the published n = 3 radius
    quad = adaptive_simpson(lambda x: math.sin(x) ** 5, 0.0, 0.19587 * math.sqrt(17.25))
    oracle = 2.0 * (math.pi / 17.25) ** 3 / math.gamma(3.0) * quad
    assert oracle == pytest.approx(1.9270745941557456e-4, rel=1e-12)  # frozen
    got = ball_volume_log(BallSpec(6, 17.25, 0.19587))
    assert got == pytest.approx(math.log(oracle), abs=1e-12)


def test_ball_volume_edge_cases():
    assert ball_volume_log(BallSpec(3, 1.0, 0.0)) == -math.inf
    with pytest.raises(ValueError):
        BallSpec(0, 1.0, 1.0)
    with pytest.raises(ValueError):
        BallSpec(3, 1.0, -0.5)


def test_vol_so_values():
    assert vol_SO_log(3) == pytest.approx(math.log(8.0 * math.pi**2), rel=1e-14)
    assert vol_SO_log(2) == pytest.approx(math.log(2.0 * math.pi), rel=1e-14)
    assert vol_SO_log(4) == pytest.approx(math.log(16.0 * math.pi**4), rel=1e-14)
    with pytest.raises(ValueError):
        vol_SO_log(1)


def test_lgamma_matches_exact_factorials():
    # Gamma(k) = (k-1)! and Gamma(k + 1/2) = (2k)! sqrt(pi) / (4^k k!)
    for d0 in range(2, 61):
        half = d0 / 2.0
        if d0 % 2 == 0:
            k = d0 // 2
            exact = math.lgamma(k)  # reference below avoids factorial overflow
            exact = math.log(math.factorial(k - 1))
        else:
            k = (d0 - 1) // 2
            exact = (math.log(math.factorial(2 * k)) + 0.5 * math.log(math.pi)
                     - k * math.log(4.0) - math.log(math.factorial(k)))
        assert math.lgamma(half) == pytest.approx(exact, rel=1e-12)


def test_pipeline_constants():
    assert curvature_constant(3) == 17.25
    assert embedded_radius(3) == pytest.approx(0.277 * math.sqrt(2.0) / 2.0, rel=0)
    assert embedded_radius(5) == pytest.approx(0.114 * math.sqrt(8.0), rel=0)


def test_orbifold_bound_values():
    # frozen pipeline values; the published decimals 2.804e-6 / 2.568e-10 /
    # 3.144e-16 are matched within a factor of 2, not reproduced exactly
    assert orbifold_bound(3).bound == pytest.approx(2.440576938477462e-06, rel=1e-12)
    assert orbifold_bound(4).bound == pytest.approx(4.650830758356542e-10, rel=1e-12)
    assert orbifold_bound(5).bound == pytest.approx(5.917755460514651e-16, rel=1e-12)
    for n, quoted in ((3, 2.804e-6), (4, 2.568e-10), (5, 3.144e-16)):
        ratio = orbifold_bound(n).bound / quoted
        assert 0.5 < ratio < 2.0
    with pytest.raises(ValueError):
        orbifold_bound(2)


def test_bound_report_fields():
    rep = orbifold_bound(4)
    assert isinstance(rep, BoundReport)
    assert rep.d0 == 10
    assert rep.k0 == 23.5
    assert rep.log_bound == rep.log_v - rep.log_vol_so
    d = rep.to_dict()
    assert set(d) == {"n", "d0", "k0", "r0", "logV", "logVolSO", "bound", "log_bound",
                      "closed_form_bound", "log_closed_form_bound", "consistency_gap"}


@pytest.mark.parametrize("n", range(4, 16))
def test_closed_form_consistency(n):
    rep = orbifold_bound(n)
    assert rep.consistency_gap <= 1e-9


def test_closed_form_integral_limit_identity():
    assert closed_form_integral_limit(4) == pytest.approx(1.3536749979223226, abs=1e-12)  # frozen
    for n in range(4, 51):
        direct = embedded_radius(n) * math.sqrt(curvature_constant(n))
        assert abs(closed_form_integral_limit(n) - direct) <= 1e-12 * direct
        # the closed-form integrand power is the ball dimension minus one
        assert (n * n + n - 2) // 2 == n * (n + 1) // 2 - 1


def test_bound_monotone_decreasing_in_logs():
    logs = [orbifold_bound(n).log_bound for n in range(3, 21)]
    assert all(b < a for a, b in zip(logs, logs[1:]))


def test_closed_form_log_errors():
    with pytest.raises(ValueError):
        orbifold_bound_closed_form_log(2)


def test_symmetry_order_bound():
    rep = orbifold_bound(3)
    assert symmetry_order_bound(3, rep.bound) == 1
    cor1 = symmetry_order_bound(3, 0.94)
    cor2 = symmetry_order_bound(3, 0.94, outer=True)
    assert cor1 == math.floor(0.94 / rep.bound)
    assert cor2 == math.floor(2.0 * 0.94 / rep.bound)
    with pytest.raises(ValueError):
        symmetry_order_bound(3, 0.0)
    with pytest.raises(ValueError):
        symmetry_order_bound(3, math.inf)
    with pytest.raises(OverflowError):
        symmetry_order_bound(30, 1.0)
