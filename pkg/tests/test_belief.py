"""Tests for the per-cell Bayesian risk calculus.

Reference values come from the independent enumeration oracles in
oracles.py; hand-frozen constants below were computed with those oracles
first and asserted against them where cheap.
"""

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from riskscout.belief import (
    CellBelief,
    CountDistribution,
    EnvDistribution,
    ObservationCaps,
    SensorSuite,
    adaptive_z_max,
    anticipated_risk_cond,
    bayes_estimate_env,
    bayes_estimate_targets,
    cell_benefit,
    current_risk,
    joint_obs_prob,
    likelihood_table,
    marginal_posterior_targets,
    obs_likelihood,
    posterior_env,
    posterior_targets,
)
from riskscout.errors import ImpossibleObservationError
from riskscout.presets import DEMO_REGION_DISTRIBUTIONS, default_sensors

from oracles import (
    anticipated_risk_enum,
    bayes_estimate_enum,
    cell_benefit_enum,
    current_risk_enum,
    obs_likelihood_enum,
)

SENSORS = default_sensors()


def identity_confusion_sensors(detection, false_alarm):
    m = len(detection)
    return SensorSuite(np.asarray(detection), np.asarray(false_alarm), np.eye(m))


def random_count_dist(rng, x_max):
    p = rng.random(x_max + 1) + 1e-3
    return CountDistribution(p / p.sum())


def random_env_dist(rng, m):
    p = rng.random(m) + 1e-3
    return EnvDistribution(p / p.sum())


class TestObsLikelihood:
    def test_empty_cell_is_geometric(self):
        """x=0 collapses the sum to the bare false-alarm term."""
        assert obs_likelihood(0, 0, 2, SENSORS) == pytest.approx(0.95, abs=1e-12)
        assert obs_likelihood(3, 0, 2, SENSORS) == pytest.approx(0.95 * 0.05**3, abs=1e-12)

    def test_single_target_detected(self):
        assert obs_likelihood(1, 1, 1, SENSORS) == pytest.approx(0.602, abs=1e-12)

    def test_single_target_missed(self):
        assert obs_likelihood(0, 1, 0, SENSORS) == pytest.approx(0.21, abs=1e-12)

    @pytest.mark.parametrize("x", range(6))
    @pytest.mark.parametrize("env", range(3))
    def test_matches_outcome_enumeration(self, x, env):
        d = SENSORS.detection[env]
        a = SENSORS.false_alarm[env]
        for z in range(8):
            assert obs_likelihood(z, x, env, SENSORS) == pytest.approx(
                obs_likelihood_enum(z, x, d, a), abs=1e-12
            )

    @pytest.mark.parametrize("env", range(3))
    def test_normalizes_over_truncated_z(self, env):
        """Partial sums to the adaptive cap lie within 1e-9 of 1."""
        x_max = 5
        z_max = adaptive_z_max(x_max, float(SENSORS.false_alarm.max()))
        for x in range(x_max + 1):
            total = sum(obs_likelihood(z, x, env, SENSORS) for z in range(z_max + 1))
            assert abs(total - 1.0) < 1e-9

    def test_invalid_class_rejected(self):
        with pytest.raises(ValueError):
            obs_likelihood(0, 0, 3, SENSORS)


class TestAdaptiveZMax:
    def test_cap_is_minimal_with_certified_tail(self):
        for alpha in (0.05, 0.3, 0.4, 0.9):
            for x_max in (0, 3, 5):
                z = adaptive_z_max(x_max, alpha)
                assert alpha ** (z - x_max + 1) <= 1e-9
                assert alpha ** (z - x_max) > 1e-9

    def test_caps_validate(self):
        with pytest.raises(ValueError):
            ObservationCaps(z_max=2, x_max=3)


class TestPosteriorTargets:
    def test_zero_observation_favors_empty(self):
        post = posterior_targets(CountDistribution.uniform(1), 0, 2, SENSORS)
        np.testing.assert_allclose(post.probs, [20 / 21, 1 / 21], atol=1e-12)

    def test_point_mass_is_fixed_point(self):
        prior = CountDistribution.point_mass(2, 3)
        for z in range(4):
            post = posterior_targets(prior, z, 1, SENSORS)
            np.testing.assert_allclose(post.probs, prior.probs, atol=1e-15)

    def test_large_z_shifts_mass_up(self):
        """Posterior after z=3 stochastically dominates the uniform prior."""
        prior = CountDistribution.uniform(3)
        post = posterior_targets(prior, 3, 0, SENSORS)
        prior_cdf = np.cumsum(prior.probs)
        post_cdf = np.cumsum(post.probs)
        assert np.all(post_cdf <= prior_cdf + 1e-12)
        assert post_cdf[0] < prior_cdf[0]

    def test_matches_enumeration(self):
        rng = np.random.default_rng(7)
        for _ in range(20):
            prior = random_count_dist(rng, 4)
            z = int(rng.integers(0, 6))
            env = int(rng.integers(0, 3))
            got = posterior_targets(prior, z, env, SENSORS).probs
            want = np.array(
                [
                    obs_likelihood_enum(z, x, SENSORS.detection[env], SENSORS.false_alarm[env]) * p
                    for x, p in enumerate(prior.probs)
                ]
            )
            np.testing.assert_allclose(got, want / want.sum(), atol=1e-12)

    def test_impossible_observation_raises(self):
        # Perfect detection means fewer observations than targets is impossible.
        sensors = identity_confusion_sensors([1.0], [0.05])
        with pytest.raises(ImpossibleObservationError):
            posterior_targets(CountDistribution.point_mass(2, 2), 1, 0, sensors)


class TestPosteriorEnv:
    def test_uniform_prior_mildly_noisy_observation(self):
        post = posterior_env(EnvDistribution.uniform(3), 2, SENSORS)
        np.testing.assert_allclose(post.probs, [0.09 / 1.05, 0.08 / 1.05, 0.88 / 1.05], atol=1e-12)
        np.testing.assert_allclose(post.probs, [0.0857, 0.0762, 0.8381], atol=1e-3)

    def test_point_mass_prior_invariant(self):
        prior = EnvDistribution(np.array([1.0, 0.0, 0.0]))
        for y in range(3):
            np.testing.assert_allclose(posterior_env(prior, y, SENSORS).probs, prior.probs)

    def test_noiseless_sensor_identifies_class(self):
        sensors = identity_confusion_sensors([0.9, 0.9, 0.9], [0.1, 0.1, 0.1])
        post = posterior_env(EnvDistribution.uniform(3), 0, sensors)
        np.testing.assert_allclose(post.probs, [1.0, 0.0, 0.0])


class TestMarginalPosterior:
    def test_single_class_collapses(self):
        sensors = SensorSuite([0.8], [0.3], [[1.0]])
        belief = CellBelief(CountDistribution.uniform(3), EnvDistribution.uniform(1))
        got = marginal_posterior_targets(belief, 2, 0, sensors)
        want = posterior_targets(belief.target_prior, 2, 0, sensors)
        np.testing.assert_allclose(got.probs, want.probs)

    def test_identity_confusion_picks_observed_class(self):
        sensors = identity_confusion_sensors(SENSORS.detection, SENSORS.false_alarm)
        belief = CellBelief(CountDistribution.uniform(3), EnvDistribution.uniform(3))
        got = marginal_posterior_targets(belief, 1, 1, sensors)
        want = posterior_targets(belief.target_prior, 1, 1, sensors)
        np.testing.assert_allclose(got.probs, want.probs)

    def test_is_mixture_of_conditionals(self):
        belief = CellBelief(CountDistribution.uniform(3), EnvDistribution.uniform(3))
        z, y = 1, 2
        got = marginal_posterior_targets(belief, z, y, SENSORS).probs
        env_post = posterior_env(belief.env_prior, y, SENSORS).probs
        want = sum(
            env_post[j] * posterior_targets(belief.target_prior, z, j, SENSORS).probs
            for j in range(3)
        )
        np.testing.assert_allclose(got, want, atol=1e-12)


class TestBayesEstimateTargets:
    def test_symmetric_costs(self):
        est, risk = bayes_estimate_targets(CountDistribution(np.array([0.2, 0.8])), 1.0, 1.0)
        assert est == 1
        assert risk == pytest.approx(0.2, abs=1e-12)

    def test_point_mass_has_zero_risk(self):
        est, risk = bayes_estimate_targets(CountDistribution.point_mass(3, 4), 1.0, 1.0)
        assert est == 3
        assert risk == 0.0

    def test_heavy_underestimation_penalty_pushes_up(self):
        est, risk = bayes_estimate_targets(CountDistribution(np.array([0.8, 0.2])), 9.0, 1.0)
        assert est == 1
        assert risk == pytest.approx(0.8, abs=1e-12)

    @given(st.integers(0, 2**32 - 1))
    @settings(max_examples=50, deadline=None)
    def test_matches_exhaustive_candidate_scan(self, seed):
        rng = np.random.default_rng(seed)
        dist = random_count_dist(rng, int(rng.integers(1, 7)))
        cu = float(rng.uniform(0.1, 5.0))
        co = float(rng.uniform(0.1, 5.0))
        est, risk = bayes_estimate_targets(dist, cu, co)
        want_est, want_risk = bayes_estimate_enum(dist.probs, cu, co)
        assert est == want_est
        assert risk == pytest.approx(want_risk, abs=1e-12)

    @given(st.integers(0, 2**32 - 1))
    @settings(max_examples=50, deadline=None)
    def test_equal_costs_give_posterior_median(self, seed):
        rng = np.random.default_rng(seed)
        dist = random_count_dist(rng, int(rng.integers(1, 7)))
        est, _ = bayes_estimate_targets(dist, 1.0, 1.0)
        cdf = np.cumsum(dist.probs)
        smallest_median = int(np.searchsorted(cdf, 0.5 - 1e-12))
        assert est == smallest_median


class TestRisks:
    def test_point_mass_prior_has_no_risk(self):
        belief = CellBelief(CountDistribution.point_mass(1, 3), EnvDistribution.uniform(3))
        assert current_risk(belief, SENSORS) == 0.0

    def test_uniform_binary_prior(self):
        belief = CellBelief(CountDistribution.uniform(1), EnvDistribution.uniform(3))
        assert current_risk(belief, SENSORS) == pytest.approx(0.5, abs=1e-12)

    def test_current_risk_matches_enum_on_demo_cell(self):
        env = EnvDistribution(np.array(DEMO_REGION_DISTRIBUTIONS["A5"]))
        belief = CellBelief(CountDistribution.uniform(3), env)
        want = current_risk_enum(belief.target_prior.probs, env.probs, 1.0, 1.0)
        assert current_risk(belief, SENSORS) == pytest.approx(want, abs=1e-12)

    def test_anticipated_point_mass_zero(self):
        belief = CellBelief(CountDistribution.point_mass(2, 3), EnvDistribution.uniform(3))
        assert anticipated_risk_cond(belief, 1, 0, SENSORS) == 0.0

    def test_anticipated_zero_observation_easy_class(self):
        belief = CellBelief(CountDistribution.uniform(1), EnvDistribution.uniform(3))
        assert anticipated_risk_cond(belief, 0, 2, SENSORS) == pytest.approx(1 / 21, abs=1e-12)

    def test_hard_class_expects_more_residual_risk(self):
        """Expected posterior risk weighted by P(z): worst class >= best class."""
        belief = CellBelief(CountDistribution.uniform(3), EnvDistribution.uniform(3))
        caps = ObservationCaps.adaptive(3, SENSORS)
        expected = []
        for env in range(3):
            total = 0.0
            for z in range(caps.z_max + 1):
                pz = sum(
                    obs_likelihood(z, x, env, SENSORS) * belief.target_prior.probs[x]
                    for x in range(4)
                )
                total += pz * anticipated_risk_cond(belief, z, env, SENSORS)
            expected.append(total)
        assert expected[0] >= expected[2]

    def test_anticipated_matches_enum(self):
        rng = np.random.default_rng(11)
        for _ in range(10):
            prior = random_count_dist(rng, 3)
            belief = CellBelief(prior, EnvDistribution.uniform(3))
            z = int(rng.integers(0, 5))
            env = int(rng.integers(0, 3))
            want = anticipated_risk_enum(
                prior.probs, z, SENSORS.detection[env], SENSORS.false_alarm[env], 1.0, 1.0
            )
            assert anticipated_risk_cond(belief, z, env, SENSORS) == pytest.approx(want, abs=1e-12)


class TestBayesEstimateEnv:
    def test_identity_confusion_returns_observation(self):
        sensors = identity_confusion_sensors(SENSORS.detection, SENSORS.false_alarm)
        belief = CellBelief(CountDistribution.uniform(3), EnvDistribution.uniform(3))
        for y in range(3):
            est, _ = bayes_estimate_env(belief, 1, y, sensors)
            assert est == y

    def test_two_class_tie_breaks_low(self):
        sensors = SensorSuite([0.6, 0.9], [0.4, 0.1], [[0.5, 0.5], [0.5, 0.5]])
        belief = CellBelief(CountDistribution.uniform(2), EnvDistribution.uniform(2))
        est, risk = bayes_estimate_env(belief, 0, 0, sensors)
        # Symmetric posterior [0.5, 0.5]: both candidates cost 0.5 |r0 - r1|.
        r0 = anticipated_risk_cond(belief, 0, 0, sensors)
        r1 = anticipated_risk_cond(belief, 0, 1, sensors)
        assert est == 0
        assert risk == pytest.approx(r0, abs=1e-15)
        assert abs(r0 - r1) > 0  # the tie is between equal scores, not equal risks

    def test_strong_observation_dominates(self):
        belief = CellBelief(CountDistribution.uniform(3), EnvDistribution.uniform(3))
        est, risk = bayes_estimate_env(belief, 0, 2, SENSORS)
        # Enumerate the three candidates by hand.
        r_col = [anticipated_risk_cond(belief, 0, j, SENSORS) for j in range(3)]
        env_post = posterior_env(belief.env_prior, 2, SENSORS).probs
        scores = []
        for d in range(3):
            scores.append(sum(env_post[e] * abs(r_col[e] - r_col[d]) for e in range(3)))
        assert est == int(np.argmin(scores)) == 2
        assert risk == pytest.approx(r_col[2], abs=1e-15)


class TestJointObsProb:
    def test_single_class_empty_cell_geometric(self):
        sensors = SensorSuite([0.8], [0.3], [[1.0]])
        belief = CellBelief(CountDistribution.point_mass(0, 0), EnvDistribution(np.array([1.0])))
        for z in range(5):
            assert joint_obs_prob(belief, z, 0, sensors) == pytest.approx(
                0.7 * 0.3**z, abs=1e-12
            )

    def test_total_mass_one(self):
        belief = CellBelief(CountDistribution.uniform(3), EnvDistribution.uniform(3))
        caps = ObservationCaps.adaptive(3, SENSORS)
        total = sum(
            joint_obs_prob(belief, z, y, SENSORS)
            for z in range(caps.z_max + 1)
            for y in range(3)
        )
        assert abs(total - 1.0) < 1e-6

    def test_matches_double_sum(self):
        belief = CellBelief(CountDistribution.uniform(3), EnvDistribution.uniform(3))
        want = 0.0
        for j in range(3):
            for x in range(4):
                want += (
                    obs_likelihood_enum(0, x, SENSORS.detection[j], SENSORS.false_alarm[j])
                    * SENSORS.env_confusion[j, 0]
                    * belief.target_prior.probs[x]
                    * belief.env_prior.probs[j]
                )
        assert joint_obs_prob(belief, 0, 0, SENSORS) == pytest.approx(want, abs=1e-12)


class TestCellBenefit:
    def test_point_mass_prior_nothing_to_learn(self):
        belief = CellBelief(CountDistribution.point_mass(2, 3), EnvDistribution.uniform(3))
        res = cell_benefit(belief, SENSORS)
        assert res.benefit == pytest.approx(0.0, abs=1e-12)

    def test_identity_confusion_nonnegative(self):
        sensors = identity_confusion_sensors(SENSORS.detection, SENSORS.false_alarm)
        rng = np.random.default_rng(3)
        for _ in range(25):
            belief = CellBelief(random_count_dist(rng, 3), random_env_dist(rng, 3))
            assert cell_benefit(belief, sensors).benefit >= -1e-12

    def test_demo_region_ordering(self):
        """Cells likely to be easy terrain promise more risk reduction."""
        prior = CountDistribution.uniform(3)
        benefits = {}
        for name in ("A1", "A5"):
            env = EnvDistribution(np.array(DEMO_REGION_DISTRIBUTIONS[name]))
            benefits[name] = cell_benefit(CellBelief(prior, env), SENSORS).benefit
        assert benefits["A5"] > benefits["A1"]

    def test_matches_triple_sum_oracle(self):
        rng = np.random.default_rng(5)
        for _ in range(5):
            belief = CellBelief(random_count_dist(rng, 3), random_env_dist(rng, 3))
            caps = ObservationCaps.adaptive(3, SENSORS)
            res = cell_benefit(belief, SENSORS, caps)
            want_rho, want_ant, want_b = cell_benefit_enum(
                belief.target_prior.probs,
                belief.env_prior.probs,
                SENSORS.detection,
                SENSORS.false_alarm,
                SENSORS.env_confusion,
                caps.z_max,
            )
            assert res.current_risk == pytest.approx(want_rho, abs=1e-9)
            assert res.anticipated_risk == pytest.approx(want_ant, abs=1e-9)
            assert res.benefit == pytest.approx(want_b, abs=1e-9)

    def test_more_informative_sensor_larger_benefit(self):
        belief = CellBelief(CountDistribution.uniform(3), EnvDistribution.uniform(1))
        sharp = SensorSuite([0.95], [0.05], [[1.0]])
        blunt = SensorSuite([0.65], [0.40], [[1.0]])
        assert cell_benefit(belief, sharp).benefit >= cell_benefit(belief, blunt).benefit

    def test_cost_scaling_is_linear(self):
        rng = np.random.default_rng(9)
        prior = random_count_dist(rng, 3)
        env = random_env_dist(rng, 3)
        base = CellBelief(prior, env)
        scaled = CellBelief(prior, env, cost_under=3.0, cost_over=3.0)
        res0 = cell_benefit(base, SENSORS)
        res1 = cell_benefit(scaled, SENSORS)
        assert res1.current_risk == pytest.approx(3.0 * res0.current_risk, rel=1e-12)
        assert res1.anticipated_risk == pytest.approx(3.0 * res0.anticipated_risk, rel=1e-12)
        assert res1.benefit == pytest.approx(3.0 * res0.benefit, rel=1e-12)
        assert res1.estimate == res0.estimate

    def test_risk_order_flag_accepted(self):
        belief = CellBelief(CountDistribution.uniform(3), EnvDistribution.uniform(3))
        res = cell_benefit(belief, SENSORS, order="risk")
        assert np.isfinite(res.benefit)

    def test_likelihood_table_matches_pointwise(self):
        caps = ObservationCaps.adaptive(3, SENSORS)
        table = likelihood_table(SENSORS, caps)
        assert table[1, 1, 1] == pytest.approx(0.602, abs=1e-12)
        assert table.shape == (3, 4, caps.z_max + 1)
