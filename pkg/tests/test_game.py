import math

import numpy as np
import pytest

from quadwalk import (
    DRAW,
    INVALID,
    LOSING,
    WINNING,
    CoinAngles,
    LimitMeasureContext,
    Protocol,
    classify,
    distribution,
    evolve,
    game_time_series,
    limit_prob,
    make_initial,
    mu_sides,
    partial_mass,
    phase_sweep,
    side_split,
    state_sweep,
    truncation_bound,
)

Q_TILTED = make_initial(math.cos(5 * math.pi / 12), 1j * math.sin(5 * math.pi / 12), 0, 0)
Q_DRAW = make_initial(1 / math.sqrt(2), 0, 0, 1 / math.sqrt(2))


def test_mu_sides_budget_identity():
    # both sides plus the origin mass account for everything up to truncation
    for u1, u2 in [(1 / 6, 1 / 6), (1 / 4, 1 / 4), (1 / 6, 1 / 4), (1 / 4, 1 / 6)]:
        coins = CoinAngles.from_pi_units(u1, u2)
        mu_l, mu_r = mu_sides(coins, Q_TILTED, 10000)
        origin = limit_prob(LimitMeasureContext(coins), 0, Q_TILTED)
        assert abs(mu_l + mu_r + origin - 1.0) < 1e-6
        assert 0.0 <= mu_l <= 1.0 and 0.0 <= mu_r <= 1.0


def test_mu_sides_tilted_state_signs():
    mu_l, mu_r = mu_sides(CoinAngles.from_pi_units(1 / 6, 1 / 4), Q_TILTED, 10000)
    assert mu_r - mu_l > 0
    mu_l, mu_r = mu_sides(CoinAngles.from_pi_units(1 / 6, 1 / 6), Q_TILTED, 10000)
    assert mu_r - mu_l < 0


def test_mu_sides_validation():
    coins = CoinAngles.from_pi_units(1 / 6, 1 / 4)
    with pytest.raises(ValueError):
        mu_sides(coins, Q_TILTED, 0)


def test_classify_tilted_state_labels():
    assert classify(CoinAngles.from_pi_units(1 / 6, 1 / 4), Q_TILTED).label == WINNING
    assert classify(CoinAngles.from_pi_units(1 / 4, 1 / 6), Q_TILTED).label == LOSING


def test_classify_dead_zone_draw():
    verdict = classify(CoinAngles.from_pi_units(1 / 6, 1 / 6), Q_DRAW, 2000, 1e-6)
    assert verdict.label == DRAW
    assert abs(verdict.margin) < 1e-12
    with pytest.raises(ValueError):
        classify(CoinAngles.from_pi_units(1 / 6, 1 / 6), Q_DRAW, 2000, 0.0)


def test_classify_margin_consistency():
    v = classify(CoinAngles.from_pi_units(1 / 6, 1 / 4), Q_TILTED, 10000)
    assert v.margin == pytest.approx(v.mu_r - v.mu_l, abs=1e-15)


def test_phase_sweep_contains_both_regions():
    axis = np.linspace(0.06, 0.44, 8)
    grid = phase_sweep(axis, axis, make_initial(1, 0, 0, 0), n=2000)
    labels = set(grid.labels.ravel().tolist())
    assert WINNING in labels and LOSING in labels


def test_phase_sweep_marks_excluded_rows_invalid():
    grid = phase_sweep([0.2, 0.5, 0.3], [0.2, 0.3], make_initial(1, 0, 0, 0), n=500)
    assert all(label == INVALID for label in grid.labels[1])
    assert np.all(np.isnan(grid.margins[1]))
    assert all(label != INVALID for label in grid.labels[0])


def test_phase_sweep_diagonal_draw_for_balanced_extremes():
    # q0 = q3 = 1/sqrt(2): simulation shows an exactly symmetric walk on the
    # diagonal, so the diagonal cells are draws.
    sim = side_split(distribution(evolve(Q_DRAW, CoinAngles.from_pi_units(0.2, 0.2),
                                         Protocol.XY, 200)))
    assert abs(sim.p_right - sim.p_left) < 1e-12
    axis = [0.15, 0.2, 0.3]
    grid = phase_sweep(axis, axis, Q_DRAW, n=1000)
    for i in range(3):
        assert grid.labels[i][i] == DRAW


def test_phase_sweep_deterministic_across_worker_counts():
    axis = np.linspace(0.05, 0.45, 6)
    one = phase_sweep(axis, axis, Q_TILTED, n=1000, threads=1)
    two = phase_sweep(axis, axis, Q_TILTED, n=1000, threads=2)
    assert np.array_equal(one.margins, two.margins, equal_nan=True)
    assert (one.labels == two.labels).all()


def test_phase_sweep_rejects_empty_axis():
    with pytest.raises(ValueError):
        phase_sweep([], [0.2], make_initial(1, 0, 0, 0))


def test_state_sweep_winning_window():
    # margins on phi in [3pi/4, 5pi/4] are positive for (pi/6, pi/4) and
    # negative with the coins swapped (they are negative for every phi there)
    phis = np.linspace(0.75, 1.25, 9)
    winning = state_sweep(CoinAngles.from_pi_units(1 / 6, 1 / 4), phis, n=10000)
    assert all(p.label == WINNING for p in winning)
    losing = state_sweep(CoinAngles.from_pi_units(1 / 4, 1 / 6), phis, n=10000)
    assert all(p.label == LOSING for p in losing)


def test_state_sweep_equal_coins_single_draw():
    pts = state_sweep(CoinAngles.from_pi_units(1 / 6, 1 / 6),
                      [i / 8 for i in range(17)], n=10000)
    labels = [p.label for p in pts]
    assert labels.count(DRAW) == 1
    assert pts[8].phi_over_pi == 1.0 and pts[8].label == DRAW
    assert all(label == LOSING for i, label in enumerate(labels) if i != 8)


def test_state_sweep_matches_simulation():
    coins = CoinAngles.from_pi_units(1 / 6, 1 / 4)
    for u in (0.25, 0.8125, 1.5):
        point = state_sweep(coins, [u], n=10000)[0]
        phi = u * math.pi
        q = make_initial(math.cos(phi / 2), 1j * math.sin(phi / 2), 0, 0)
        split = side_split(distribution(evolve(q, coins, Protocol.XY, 500)))
        assert point.margin == pytest.approx(split.p_right - split.p_left, abs=0.02)


def test_game_time_series_shape_and_signs():
    coins = CoinAngles.from_pi_units(1 / 6, 1 / 4)
    q = make_initial(0, 1, 0, 0)
    series = game_time_series(Protocol.XY, coins, q, 300)
    assert [t for t, _ in series] == list(range(1, 301))
    assert all(-1.0 <= margin <= 1.0 for _, margin in series)
    assert series[-1][1] > 0
    flipped = game_time_series(Protocol.YY, coins, q, 300)
    assert flipped[-1][1] < 0
    with pytest.raises(ValueError):
        game_time_series(Protocol.XY, coins, q, 0)


def test_truncation_bound_dominates_tail():
    coins = CoinAngles.from_pi_units(1 / 6, 1 / 4)
    ctx = LimitMeasureContext(coins)
    q = make_initial(0, 1 / math.sqrt(3), 1j / math.sqrt(3), 1 / math.sqrt(3))
    bounds = [truncation_bound(ctx, q, n) for n in (10, 100, 1000, 10000)]
    assert bounds[0] > bounds[1] > bounds[2] >= bounds[3]
    assert bounds[3] < 1e-12
    for n in (10, 100):
        tail = (partial_mass(ctx, q, n + 1, n + 200)
                + partial_mass(ctx, q, -(n + 200), -(n + 1)))
        assert truncation_bound(ctx, q, n) >= tail
    with pytest.raises(ValueError):
        truncation_bound(ctx, q, 0)


def test_margin_stable_under_doubling_truncation():
    coins = CoinAngles.from_pi_units(1 / 6, 1 / 4)
    ctx = LimitMeasureContext(coins)
    for n in (100, 1000):
        m_n = classify(coins, Q_TILTED, n).margin
        m_2n = classify(coins, Q_TILTED, 2 * n).margin
        assert abs(m_n - m_2n) <= truncation_bound(ctx, Q_TILTED, n)
