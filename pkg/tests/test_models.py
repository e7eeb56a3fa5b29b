import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from tracklight import PlayerProperty
from tracklight.datasets import get_dataset_sample
from tracklight.exceptions import StateError
from tracklight.models import (
    AccelerationModel,
    ApproximateEntropyModel,
    CentroidModel,
    DistanceModel,
    KineticsParams,
    MetabolicPowerModel,
    VelocityModel,
    approximate_entropy,
    energy_cost_running,
)
from tracklight.transforms import translate

from conftest import make_td, random_td


def apen_oracle(u, m, r):
    """Double-loop approximate entropy, straight from the definition."""
    n = len(u)

    def phi(mm):
        count = n - mm + 1
        total = 0.0
        for i in range(count):
            matches = 0
            for j in range(count):
                if max(abs(u[i + k] - u[j + k]) for k in range(mm)) <= r:
                    matches += 1
            total += math.log(matches / count)
        return total / count

    return phi(m) - phi(m + 1)


def quintic_oracle(es):
    return 155.4 * es**5 - 30.4 * es**4 - 43.3 * es**3 + 46.3 * es**2 + 19.5 * es + 3.6


@pytest.mark.parametrize(
    "model,query",
    [
        (DistanceModel(), "frame_distance"),
        (VelocityModel(), "velocity"),
        (AccelerationModel(), "acceleration"),
        (MetabolicPowerModel(), "cumulative_metabolic_power"),
        (CentroidModel(), "stretch_index"),
        (ApproximateEntropyModel(), "approximate_entropy"),
    ],
)
def test_unfitted_query_raises(model, query):
    assert not model.is_fitted
    with pytest.raises(StateError):
        getattr(model, query)()


class TestDistance:
    def test_stationary(self):
        m = DistanceModel().fit(make_td(np.full(5, 3.0), np.full(5, 1.0)))
        assert (m.frame_distance().values == 0).all()
        assert (m.cumulative_distance().values == 0).all()

    def test_uniform_motion(self):
        m = DistanceModel().fit(make_td(0.5 * np.arange(4)))
        np.testing.assert_allclose(m.frame_distance().values[:, 0], [0, 0.5, 0.5, 0.5])
        np.testing.assert_allclose(m.cumulative_distance().values[:, 0], [0, 0.5, 1.0, 1.5])

    def test_missing(self):
        x = 0.5 * np.arange(5)
        x[2] = np.nan
        m = DistanceModel().fit(make_td(x, np.where(np.isnan(x), np.nan, 0)))
        fd = m.frame_distance().values[:, 0]
        assert np.isnan(fd[2]) and np.isnan(fd[3])
        np.testing.assert_allclose(m.cumulative_distance().values[:, 0], [0, 0.5, 0.5, 0.5, 1.0])

    def test_metadata_copied(self, rng):
        td = random_td(rng, n_frames=10, n_players=3, framerate=25.0)
        prop = DistanceModel().fit(td).frame_distance()
        assert prop.framerate == 25.0 and prop.player_ids == td.player_ids


class TestVelocity:
    def test_uniform_motion(self):
        v = VelocityModel().fit(make_td(0.5 * np.arange(10), framerate=20)).velocity().values
        np.testing.assert_allclose(v, 10.0)

    def test_stationary(self):
        v = VelocityModel().fit(make_td(np.ones(5))).velocity().values
        assert (v == 0).all()

    def test_too_short(self):
        with pytest.raises(ValueError):
            VelocityModel().fit(make_td([1.0]))

    def test_missing_neighbour(self):
        x = np.arange(6.0)
        x[2] = np.nan
        v = VelocityModel().fit(make_td(x, np.where(np.isnan(x), np.nan, 0))).velocity().values[:, 0]
        assert np.isnan(v[1:4]).all()
        assert not np.isnan(v[[0, 4, 5]]).any()

    def test_second_order_convergence(self):
        def max_error(dt):
            t = np.arange(0, 2 * np.pi, dt)
            td = make_td(np.sin(t), np.cos(2 * t), framerate=1 / dt)
            v = VelocityModel().fit(td).velocity().values[1:-1, 0]
            exact = np.hypot(np.cos(t), -2 * np.sin(2 * t))[1:-1]
            return np.max(np.abs(v - exact))

        assert max_error(0.02) / max_error(0.01) >= 3


class TestAcceleration:
    def test_uniform_motion(self):
        a = AccelerationModel().fit(make_td(0.5 * np.arange(10))).acceleration().values
        np.testing.assert_allclose(a, 0, atol=1e-9)

    def test_speed_ramp(self):
        # x = 0.005 t^2 gives central-difference speed 0.1 t at 10 Hz
        t = np.arange(20)
        td = make_td(0.005 * t**2, framerate=10)
        v = VelocityModel().fit(td).velocity().values[1:-1, 0]
        np.testing.assert_allclose(v, 0.1 * t[1:-1], atol=1e-12)
        a = AccelerationModel().fit(td).acceleration().values[2:-2, 0]
        np.testing.assert_allclose(a, 1.0, atol=1e-9)

    def test_missing_velocity_neighbour(self):
        x = np.arange(8.0)
        x[3] = np.nan
        a = AccelerationModel().fit(make_td(x, np.where(np.isnan(x), np.nan, 0))).acceleration().values[:, 0]
        assert np.isnan(a[1:6]).all()

    def test_too_short(self):
        with pytest.raises(ValueError):
            AccelerationModel().fit(make_td([1.0, 2.0]))


class TestMetabolicPower:
    def test_quintic_against_term_by_term(self):
        for es in np.linspace(-0.5, 0.5, 41):
            assert energy_cost_running(es, 1.0) == pytest.approx(quintic_oracle(es), abs=1e-12)
        assert quintic_oracle(0.1) == pytest.approx(5.968214, abs=1e-12)
        assert energy_cost_running(0.1) == pytest.approx(5.968214 * math.sqrt(1.01), abs=1e-12)

    def test_stationary(self):
        m = MetabolicPowerModel().fit(make_td(np.full(30, 4.0)))
        assert (m.metabolic_power().values == 0).all()
        assert (m.cumulative_metabolic_power().values == 0).all()

    def test_constant_speed(self):
        n, rate = 200, 20.0
        m = MetabolicPowerModel().fit(make_td(4.0 / rate * np.arange(n), framerate=rate))
        np.testing.assert_allclose(m.energy_cost().values, 3.6, atol=1e-12)
        np.testing.assert_allclose(m.metabolic_power().values, 14.4, atol=1e-9)
        assert m.cumulative_metabolic_power().values[-1, 0] == pytest.approx(14.4 * n / rate, abs=1e-6)

    def test_constant_acceleration(self):
        rate, a = 20.0, 0.981
        t = np.arange(60) / rate
        td = make_td(0.5 * a * t**2, framerate=rate)
        m = MetabolicPowerModel().fit(td)
        interior = slice(2, -2)
        np.testing.assert_allclose(m.equivalent_slope().values[interior], 0.1, atol=1e-12)
        ec = quintic_oracle(0.1) * math.sqrt(1.01)
        np.testing.assert_allclose(m.energy_cost().values[interior], ec, atol=1e-9)
        v = VelocityModel().fit(td).velocity().values
        np.testing.assert_allclose(m.metabolic_power().values[interior], ec * v[interior], rtol=1e-9)

    def test_terrain_factor_scales_linearly(self):
        td = make_td(0.2 * np.arange(30) ** 1.5 / 20)
        base = MetabolicPowerModel().fit(td).metabolic_power().values
        sand = MetabolicPowerModel().fit(td, KineticsParams(terrain_factor=1.5)).metabolic_power().values
        np.testing.assert_allclose(sand, 1.5 * base, rtol=1e-12)
        with pytest.raises(ValueError):
            KineticsParams(terrain_factor=0)

    def test_missing_contributes_nothing(self):
        x = 0.2 * np.arange(40)
        x[10] = np.nan
        m = MetabolicPowerModel().fit(make_td(x, np.where(np.isnan(x), np.nan, 0), framerate=20))
        p = m.metabolic_power().values[:, 0]
        assert np.isnan(p[8:13]).all()
        cum = m.cumulative_metabolic_power().values[:, 0]
        np.testing.assert_allclose(cum, np.cumsum(np.nan_to_num(p)) / 20)

    def test_sample_cumulative_non_decreasing(self):
        home, away, _, _ = get_dataset_sample()
        for td in (home, away):
            m = MetabolicPowerModel().fit(td)
            assert np.nanmin(m.energy_cost().values) >= 0
            assert (np.diff(m.cumulative_metabolic_power().values, axis=0) >= 0).all()
            dist = DistanceModel().fit(td).cumulative_distance().values
            assert (np.diff(dist, axis=0) >= 0).all()


class TestCentroid:
    def test_centroid(self):
        m = CentroidModel().fit(make_td([[0.0, 2.0]], [[0.0, 2.0]]))
        np.testing.assert_array_equal(m.centroid().coords, [[1, 1]])

    def test_stretch_index(self):
        m = CentroidModel().fit(make_td([[0.0, 2.0]], [[0.0, 0.0]]))
        assert m.stretch_index().values[0, 0] == 1.0

    def test_centroid_distance(self):
        a = CentroidModel().fit(make_td([[-1.0, 1.0]], [[0.0, 0.0]]))
        b = CentroidModel().fit(make_td([[3.0]], [[4.0]]))
        assert a.centroid_distance(b).values[0, 0] == 5.0

    def test_mismatch(self):
        a = CentroidModel().fit(make_td(np.zeros(3)))
        with pytest.raises(ValueError):
            a.centroid_distance(CentroidModel().fit(make_td(np.zeros(4))))
        with pytest.raises(ValueError):
            a.centroid_distance(CentroidModel().fit(make_td(np.zeros(3), framerate=10)))

    def test_missing_players(self):
        x = np.array([[0.0, 4.0, np.nan], [np.nan, np.nan, np.nan]])
        m = CentroidModel().fit(make_td(x, np.where(np.isnan(x), np.nan, 0)))
        c = m.centroid().coords
        np.testing.assert_array_equal(c[0], [2, 0])
        assert np.isnan(c[1]).all()
        assert np.isnan(m.stretch_index().values[1, 0])

    @settings(max_examples=30, deadline=None)
    @given(st.integers(0, 2**31), st.floats(-100, 100), st.floats(-100, 100))
    def test_permutation_and_translation(self, seed, dx, dy):
        rng = np.random.default_rng(seed)
        td = random_td(rng, n_frames=12, n_players=5, missing=0.2)
        perm = rng.permutation(td.n_players)
        cols = np.ravel([[2 * k, 2 * k + 1] for k in perm])
        shuffled = td.replace(td.coords[:, cols], player_ids=[td.player_ids[k] for k in perm])
        base = CentroidModel().fit(td)
        other = CentroidModel().fit(shuffled)
        np.testing.assert_allclose(other.centroid().coords, base.centroid().coords, atol=1e-12, equal_nan=True)
        np.testing.assert_allclose(other.stretch_index().values, base.stretch_index().values, atol=1e-12, equal_nan=True)

        moved = CentroidModel().fit(translate(td, dx, dy))
        np.testing.assert_allclose(
            moved.centroid().coords, translate(base.centroid(), dx, dy).coords, atol=1e-12, equal_nan=True
        )
        np.testing.assert_allclose(moved.stretch_index().values, base.stretch_index().values, atol=1e-12, equal_nan=True)
        ref_td = random_td(rng, n_frames=12, n_players=3, missing=0.0, framerate=td.framerate)
        before = base.centroid_distance(CentroidModel().fit(ref_td)).values
        after = moved.centroid_distance(CentroidModel().fit(translate(ref_td, dx, dy))).values
        np.testing.assert_allclose(after, before, atol=1e-12, equal_nan=True)


class TestApproximateEntropy:
    def test_constant_series(self):
        for m in (1, 2, 3):
            assert approximate_entropy(np.full(30, 2.5), m, 0.1) == 0.0
            assert approximate_entropy(np.full(30, 2.5), m) == 0.0

    def test_alternating_series(self):
        u = np.array([1.0, 2.0] * 25)
        assert approximate_entropy(u, 2, 0.5) == pytest.approx(apen_oracle(u, 2, 0.5), abs=1e-12)

    def test_random_series_match_oracle(self, rng):
        for _ in range(15):
            n = int(rng.integers(10, 120))
            m = int(rng.integers(1, 4))
            u = rng.normal(size=n)
            r = float(rng.uniform(0.1, 1.0))
            assert approximate_entropy(u, m, r) == pytest.approx(apen_oracle(u, m, r), abs=1e-12)

    def test_default_tolerance(self, rng):
        u = rng.normal(size=60)
        assert approximate_entropy(u) == pytest.approx(apen_oracle(u, 2, 0.2 * np.std(u)), abs=1e-12)

    def test_blocked_counting_on_long_series(self, rng):
        u = np.round(rng.normal(size=1100), 1)
        expected = approximate_entropy(u[:1100], 1, 0.3)
        windows = u[:, None]
        counts = (np.abs(windows - windows.T) <= 0.3).sum(axis=1)
        phi1 = np.mean(np.log(counts / len(u)))
        pairs = np.stack([u[:-1], u[1:]], axis=1)
        d = np.abs(pairs[:, None, :] - pairs[None, :, :]).max(axis=2)
        phi2 = np.mean(np.log((d <= 0.3).sum(axis=1) / len(pairs)))
        assert expected == pytest.approx(phi1 - phi2, abs=1e-12)

    @pytest.mark.parametrize("c", [0.5, 2.0, 8.0])
    def test_scale_consistency(self, rng, c):
        u = rng.normal(size=80)
        assert approximate_entropy(c * u, 2, c * 0.3) == approximate_entropy(u, 2, 0.3)

    def test_argument_errors(self):
        with pytest.raises(ValueError):
            approximate_entropy(np.arange(3.0), 2, 0.2)
        with pytest.raises(ValueError):
            approximate_entropy(np.arange(10.0), 2, 0.0)
        with pytest.raises(ValueError):
            approximate_entropy(np.arange(10.0), 2, -1.0)

    def test_model(self, rng):
        values = rng.normal(size=(50, 3))
        values[:5, 1] = np.nan
        values[20, 2] = np.nan
        prop = PlayerProperty(values, "v", "m/s", 20, ["a", "b", "c"])
        model = ApproximateEntropyModel().fit(prop, m=2, r=0.4)
        out = model.approximate_entropy()
        assert out[0] == pytest.approx(apen_oracle(values[:, 0], 2, 0.4), abs=1e-12)
        assert out[1] == pytest.approx(apen_oracle(values[5:, 1], 2, 0.4), abs=1e-12)
        assert np.isnan(out[2])
        assert model.state.source_player_ids == ("a", "b", "c")

    def test_model_short_series(self):
        prop = PlayerProperty(np.arange(3.0)[:, None], "v", "m/s", 20)
        with pytest.raises(ValueError):
            ApproximateEntropyModel().fit(prop, m=2)
        with pytest.raises(ValueError):
            ApproximateEntropyModel().fit(PlayerProperty(np.zeros((10, 1)), "v", "", 20), r=0.0)
