import math

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from quadwalk.limit_density import dispersion_gap
from quadwalk import (
    CoinAngles,
    DegenerateError,
    DensityContext,
    InvalidAnglesError,
    MinMaxCoin,
    Protocol,
    continuous_mass,
    d_coeffs,
    delta_mass,
    density,
    distribution,
    eigenvalue,
    empirical_moment,
    evolve,
    group_velocity,
    make_initial,
    moment,
)

from _oracles import SpectralOracle, random_state, random_valid_coins

QQ = make_initial(0.5, 0.5, 0.5, 0.5)
E0 = make_initial(1, 0, 0, 0)
FOUR = [(1 / 6, 1 / 6), (1 / 4, 1 / 4), (1 / 6, 1 / 4), (1 / 4, 1 / 6)]


def test_minmax_coin_selection_and_tie():
    mm = MinMaxCoin.from_coins(CoinAngles.from_pi_units(1 / 6, 1 / 4))
    assert (mm.m, mm.M) == (2, 1)
    assert mm.c_m == pytest.approx(math.cos(math.pi / 4))
    assert mm.s_m == pytest.approx(math.sin(math.pi / 4))
    assert mm.s_M == pytest.approx(math.sin(math.pi / 6))
    tie = MinMaxCoin.from_coins(CoinAngles.from_pi_units(0.25, 0.25))
    assert (tie.m, tie.M) == (1, 2)


def test_delta_pure_q0_quarter_pi():
    # all cross terms vanish; the eta1(0) coefficient is exactly one
    assert delta_mass(CoinAngles.from_pi_units(0.25, 0.25), E0) == pytest.approx(
        math.sqrt(2) / 4.0, abs=1e-15)


def test_delta_symmetric_under_middle_swap():
    coins = CoinAngles.from_pi_units(1 / 6, 1 / 4)
    q = make_initial(0.5, 0.5, 0.5, 0.5)
    swapped = make_initial(0.5, 0.5, 0.5, 0.5)  # q1 <-> q2 is the identity here
    assert delta_mass(coins, q) == delta_mass(coins, swapped)


def test_delta_strictly_inside_unit_interval():
    rng = np.random.default_rng(37)
    for _ in range(20):
        d = delta_mass(random_valid_coins(rng), random_state(rng))
        assert 0.0 < d < 1.0


def test_d_coeffs_pure_q0():
    coins = CoinAngles.from_pi_units(1 / 6, 1 / 4)
    assert d_coeffs(coins, E0) == pytest.approx((2.0, -2.0, 0.5), abs=1e-15)


def test_d_coeffs_pure_q1_kills_d1():
    coins = CoinAngles.from_pi_units(1 / 6, 1 / 4)
    _, d1, _ = d_coeffs(coins, make_initial(0, 1, 0, 0))
    assert d1 == 0.0


def test_d1_has_no_population_term_for_balanced_state():
    # |q0| = |q3| wipes the population difference; only tangent terms remain.
    coins = CoinAngles.from_pi_units(1 / 6, 0.37)
    q = make_initial(0.5, 0.5, 0.5, 0.5)
    _, d1, _ = d_coeffs(coins, q)
    s1, c1, s2, c2 = coins.s1, coins.c1, coins.s2, coins.c2
    expected = -2.0 * (s1 / c1 * 0.5 + s2 / c2 * 0.5)
    assert d1 == pytest.approx(expected, abs=1e-15)


def test_density_zero_outside_open_support():
    ctx = DensityContext.build(CoinAngles.from_pi_units(1 / 6, 1 / 4), QQ)
    r = ctx.support_radius
    assert r == pytest.approx(math.sqrt(2))
    assert density(ctx, r + 0.1) == 0.0
    assert density(ctx, -r - 1e-9) == 0.0
    assert density(ctx, r) == 0.0
    assert density(ctx, 0.5 * r) > 0.0


def test_density_nonnegative_random():
    rng = np.random.default_rng(41)
    for _ in range(50):
        ctx = DensityContext.build(random_valid_coins(rng), random_state(rng))
        xs = np.linspace(-ctx.support_radius, ctx.support_radius, 200)[1:-1]
        assert min(density(ctx, float(x)) for x in xs) >= -1e-12


def test_density_context_rejects_excluded_angles():
    with pytest.raises(InvalidAnglesError):
        DensityContext.build(CoinAngles.from_pi_units(0.5, 0.25), QQ)


@pytest.mark.parametrize("u1,u2", FOUR)
def test_density_tracks_coarse_grained_simulation(u1, u2):
    # Cell-averaged t*P over two adjacent sites vs f on the middle band of the
    # support.  Site-by-site values carry O(f)-sized interference fringes, so
    # the comparison coarse-grains; near the origin t*P is dominated by the
    # localized mass, near the edges by the caustic, hence the band.
    coins = CoinAngles.from_pi_units(u1, u2)
    ctx = DensityContext.build(coins, QQ)
    d = distribution(evolve(QQ, coins, Protocol.XY, 500))
    r = ctx.support_radius
    half = np.linspace(0.1 * r, 0.5 * r, 20)
    for x in np.concatenate([-half[::-1], half]):
        site = math.floor(float(x) * 500)
        cell = 500 * 0.5 * (d.prob(site) + d.prob(site + 1))
        assert abs(cell - density(ctx, float(x))) < 0.05


def test_continuous_mass_basics():
    ctx = DensityContext.build(CoinAngles.from_pi_units(1 / 6, 1 / 4), QQ)
    r = ctx.support_radius
    assert continuous_mass(ctx, r + 1.0, r + 2.0) == 0.0
    assert continuous_mass(ctx, -10.0, -r) == 0.0
    full = continuous_mass(ctx, -r, r)
    assert full == pytest.approx(1.0 - ctx.delta, abs=1e-8)
    split = continuous_mass(ctx, -r, 0.0) + continuous_mass(ctx, 0.0, r)
    assert split == pytest.approx(full, abs=1e-12)
    with pytest.raises(ValueError):
        continuous_mass(ctx, 1.0, 0.0)


def test_moment_normalization_and_bounds():
    ctx = DensityContext.build(CoinAngles.from_pi_units(1 / 6, 1 / 4), QQ)
    assert moment(ctx, 0) == pytest.approx(1.0, abs=1e-8)
    with pytest.raises(ValueError):
        moment(ctx, 5)
    with pytest.raises(ValueError):
        moment(ctx, -1)


def test_first_moment_sign_pure_q0():
    ctx = DensityContext.build(CoinAngles.from_pi_units(1 / 6, 1 / 4), E0)
    m1 = moment(ctx, 1)
    # independent sign oracle: plain trapezoid of x f(x) on the open support
    # (slowly convergent at the endpoint singularity, fine for the sign)
    xs = np.linspace(-ctx.support_radius, ctx.support_radius, 20001)[1:-1]
    crude = np.trapezoid([x * density(ctx, float(x)) for x in xs], xs)
    assert m1 < 0.0
    assert np.sign(crude) == np.sign(m1)
    assert m1 == pytest.approx(float(crude), abs=0.05)


def test_moments_vs_spectral_oracle():
    rng = np.random.default_rng(43)
    coins = random_valid_coins(rng, margin=0.05)
    q = random_state(rng)
    ctx = DensityContext.build(coins, q)
    oracle = SpectralOracle(coins, order=900)
    for r in range(5):
        assert moment(ctx, r) == pytest.approx(
            oracle.rescaled_moment(q.as_array(), r), abs=1e-8)


def test_first_moment_vs_long_simulation():
    coins = CoinAngles.from_pi_units(1 / 6, 1 / 4)
    ctx = DensityContext.build(coins, QQ)
    d = distribution(evolve(QQ, coins, Protocol.XY, 2000))
    assert empirical_moment(d, 1) == pytest.approx(moment(ctx, 1), abs=1e-2)


def test_eigenvalue_basics():
    coins = CoinAngles.from_pi_units(1 / 6, 1 / 6)
    assert eigenvalue(coins, 0.0, 1) == pytest.approx(1.0 + 0.0j, abs=1e-15)
    assert eigenvalue(coins, 0.0, 2) == pytest.approx(1.0 + 0.0j, abs=1e-15)
    with pytest.raises(ValueError):
        eigenvalue(coins, 0.3, 3)


@given(st.floats(-math.pi, math.pi), st.floats(0.01, 1.99), st.floats(0.01, 1.99))
def test_eigenvalue_unit_modulus_and_conjugacy(k, u1, u2):
    coins = CoinAngles.from_pi_units(u1, u2)
    l1 = eigenvalue(coins, k, 1)
    l2 = eigenvalue(coins, k, 2)
    assert abs(abs(l1) - 1.0) < 1e-14
    assert l2 == pytest.approx(l1.conjugate(), abs=1e-15)


def test_group_velocity_basics():
    coins = CoinAngles.from_pi_units(1 / 6, 1 / 4)
    assert group_velocity(coins, 0.0, 1) == 0.0
    k = 0.8
    assert group_velocity(coins, k, 1) == pytest.approx(-group_velocity(coins, k, 2))
    degenerate = CoinAngles.from_pi_units(1 / 6, 1 / 6)
    with pytest.raises(DegenerateError):
        group_velocity(degenerate, 0.0, 1)


@pytest.mark.parametrize("u1,u2", FOUR + [(0.37, 1.73)])
def test_group_velocity_range_is_ballistic_support(u1, u2):
    coins = CoinAngles.from_pi_units(u1, u2)
    # dense scan on a midpoint grid, straight from the dispersion formula
    ks = (np.arange(1_000_000) + 0.5) / 1_000_000 * 2.0 * math.pi - math.pi
    _, gap = dispersion_gap(coins, ks)
    v = 2.0 * coins.c1 * coins.c2 * np.sin(ks) / np.sqrt(gap)
    vmax = float(np.max(np.abs(v)))
    r = 2.0 * min(abs(coins.c1), abs(coins.c2))
    assert abs(vmax - r) < 1e-9
    assert np.all(np.abs(v) <= r + 1e-9)
    # the scalar routine agrees with the textbook expression away from degeneracy
    for k in (0.3, -1.2, 2.9):
        a1 = coins.c1 * coins.c2 * math.cos(k) + coins.s1 * coins.s2
        expected = -2.0 * coins.c1 * coins.c2 * math.sin(k) / math.sqrt(1 - a1 * a1)
        assert group_velocity(coins, k, 1) == pytest.approx(expected, rel=1e-13)


def test_weak_limit_normalization_random():
    rng = np.random.default_rng(47)
    for _ in range(50):
        ctx = DensityContext.build(random_valid_coins(rng), random_state(rng))
        total = ctx.delta + continuous_mass(ctx, -ctx.support_radius, ctx.support_radius)
        assert total == pytest.approx(1.0, abs=1e-8)
