"""Bayesian target-count and environment belief calculus.

Per-cell model: an unknown target count x with prior P(x) on {0..x_max},
an unknown environment class e from m discrete classes with prior over
classes, and a count sensor whose detection/false-alarm behaviour depends
on the true class.  A count observation z is the sum of binomial
detections and a geometric false-alarm count; a class observation y is
drawn from a row-stochastic confusion matrix.

The functions here compute posteriors, Bayes estimates under linear
over/under-estimation losses, the current risk of the best blind
estimate, the anticipated risk after an (unseen) measurement, and their
difference: the expected value of searching the cell.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .errors import ImpossibleObservationError

__all__ = [
    "EnvClass",
    "SensorSuite",
    "CountDistribution",
    "EnvDistribution",
    "CellBelief",
    "ObservationCaps",
    "adaptive_z_max",
    "obs_likelihood",
    "likelihood_table",
    "loss_matrix",
    "posterior_targets",
    "posterior_env",
    "marginal_posterior_targets",
    "bayes_estimate_targets",
    "current_risk",
    "anticipated_risk_cond",
    "anticipated_risk_table",
    "bayes_estimate_env",
    "joint_obs_prob",
    "cell_benefit",
    "BenefitResult",
]

_SUM_TOL = 1e-9
_ROW_TOL = 1e-12


@dataclass(frozen=True)
class EnvClass:
    """One discrete environment class; ids run 1..m, index = id - 1."""

    id: int
    label: str = ""

    def __post_init__(self):
        if self.id < 1:
            raise ValueError(f"EnvClass.id must be >= 1, got {self.id}")


@dataclass(frozen=True)
class SensorSuite:
    """Per-class sensor behaviour plus the class-observation confusion matrix.

    detection[j] is the per-target detection probability in class j,
    false_alarm[j] the probability of one or more false alarms (the
    geometric false-alarm count has P(g=k) = (1-a) a^k), and
    env_confusion[i, j] = P(observe class j | true class i).  Classes are
    indexed 0..m-1 in code; class ids in `classes` are 1-based.
    """

    detection: np.ndarray
    false_alarm: np.ndarray
    env_confusion: np.ndarray
    labels: tuple = ()

    def __post_init__(self):
        det = np.asarray(self.detection, dtype=float)
        fa = np.asarray(self.false_alarm, dtype=float)
        conf = np.asarray(self.env_confusion, dtype=float)
        object.__setattr__(self, "detection", det)
        object.__setattr__(self, "false_alarm", fa)
        object.__setattr__(self, "env_confusion", conf)
        m = det.shape[0]
        if det.ndim != 1 or fa.shape != (m,) or conf.shape != (m, m):
            raise ValueError(
                "detection, false_alarm must be length-m vectors and "
                f"env_confusion an m x m matrix; got {det.shape}, {fa.shape}, {conf.shape}"
            )
        if not np.all((det > 0.0) & (det <= 1.0)):
            raise ValueError("detection probabilities must lie in (0, 1]")
        if not np.all((fa > 0.0) & (fa < 1.0)):
            raise ValueError("false-alarm probabilities must lie in (0, 1)")
        if np.any(conf < 0.0) or np.any(np.abs(conf.sum(axis=1) - 1.0) > _ROW_TOL):
            raise ValueError("env_confusion rows must be nonnegative and sum to 1")
        if self.labels and len(self.labels) != m:
            raise ValueError(f"expected {m} labels, got {len(self.labels)}")

    @property
    def m(self) -> int:
        return self.detection.shape[0]

    @property
    def classes(self) -> tuple[EnvClass, ...]:
        labels = self.labels or tuple(f"b{j + 1}" for j in range(self.m))
        return tuple(EnvClass(j + 1, labels[j]) for j in range(self.m))

    def check_class(self, env: int) -> None:
        if not 0 <= env < self.m:
            raise ValueError(f"class index {env} outside 0..{self.m - 1}")


def _check_probs(probs: np.ndarray, what: str) -> np.ndarray:
    p = np.asarray(probs, dtype=float)
    if p.ndim != 1 or p.size == 0:
        raise ValueError(f"{what} must be a nonempty 1-d probability vector")
    if np.any(p < 0.0):
        raise ValueError(f"{what} has negative entries")
    if abs(p.sum() - 1.0) > _SUM_TOL:
        raise ValueError(f"{what} sums to {p.sum():.12f}, expected 1")
    return p


@dataclass(frozen=True)
class CountDistribution:
    """Probability vector over target counts {0..x_max}."""

    probs: np.ndarray

    def __post_init__(self):
        object.__setattr__(self, "probs", _check_probs(self.probs, "CountDistribution"))

    @property
    def x_max(self) -> int:
        return self.probs.shape[0] - 1

    @classmethod
    def uniform(cls, x_max: int) -> "CountDistribution":
        return cls(np.full(x_max + 1, 1.0 / (x_max + 1)))

    @classmethod
    def point_mass(cls, x: int, x_max: int) -> "CountDistribution":
        p = np.zeros(x_max + 1)
        p[x] = 1.0
        return cls(p)


@dataclass(frozen=True)
class EnvDistribution:
    """Probability vector over the m environment classes."""

    probs: np.ndarray

    def __post_init__(self):
        object.__setattr__(self, "probs", _check_probs(self.probs, "EnvDistribution"))

    @property
    def m(self) -> int:
        return self.probs.shape[0]

    @classmethod
    def uniform(cls, m: int) -> "EnvDistribution":
        return cls(np.full(m, 1.0 / m))


@dataclass(frozen=True)
class CellBelief:
    """Joint cell belief: target prior, environment prior, loss weights.

    cost_under / cost_over weigh under- and over-estimating the target
    count; env_cost_under / env_cost_over weigh under- and over-estimating
    the environment class.  All must be strictly positive.
    """

    target_prior: CountDistribution
    env_prior: EnvDistribution
    cost_under: float = 1.0
    cost_over: float = 1.0
    env_cost_under: float = 1.0
    env_cost_over: float = 1.0

    def __post_init__(self):
        for name in ("cost_under", "cost_over", "env_cost_under", "env_cost_over"):
            if getattr(self, name) <= 0.0:
                raise ValueError(f"{name} must be strictly positive")


def adaptive_z_max(x_max: int, false_alarm_max: float, tol: float = 1e-9) -> int:
    """Smallest count-observation cap with certified tail mass below tol.

    The observation is (detections <= x) + geometric false alarms, so for
    any x <= x_max the mass above z_max is at most alpha^(z_max - x_max + 1).
    """
    if not 0.0 < false_alarm_max < 1.0:
        raise ValueError("false_alarm_max must lie in (0, 1)")
    n = math.ceil(math.log(tol) / math.log(false_alarm_max))
    while false_alarm_max**n > tol:
        n += 1
    return x_max + n - 1


@dataclass(frozen=True)
class ObservationCaps:
    """Truncation of the observation space: z in {0..z_max}, x in {0..x_max}."""

    z_max: int
    x_max: int

    def __post_init__(self):
        if not self.z_max >= self.x_max >= 0:
            raise ValueError(f"need z_max >= x_max >= 0, got {self.z_max}, {self.x_max}")

    @classmethod
    def adaptive(cls, x_max: int, sensors: SensorSuite, tol: float = 1e-9) -> "ObservationCaps":
        return cls(adaptive_z_max(x_max, float(sensors.false_alarm.max()), tol), x_max)


def obs_likelihood(z: int, x: int, env: int, sensors: SensorSuite) -> float:
    """P(observe count z | true count x, true class env).

    Sum over the number of detected targets k: binomial detections times
    the geometric probability of z - k false alarms.
    """
    if z < 0 or x < 0:
        raise ValueError("counts must be nonnegative")
    sensors.check_class(env)
    d = float(sensors.detection[env])
    a = float(sensors.false_alarm[env])
    total = 0.0
    for k in range(min(x, z) + 1):
        total += math.comb(x, k) * d**k * (1.0 - d) ** (x - k) * (1.0 - a) * a ** (z - k)
    return total


def likelihood_table(sensors: SensorSuite, caps: ObservationCaps) -> np.ndarray:
    """Dense table like[j, x, z] of obs_likelihood over the truncated spaces."""
    table = np.empty((sensors.m, caps.x_max + 1, caps.z_max + 1))
    for j in range(sensors.m):
        for x in range(caps.x_max + 1):
            for z in range(caps.z_max + 1):
                table[j, x, z] = obs_likelihood(z, x, j, sensors)
    return table


def loss_matrix(x_max: int, cost_under: float, cost_over: float) -> np.ndarray:
    """L[x, d]: cost_under * (x - d) when d < x, else cost_over * (d - x)."""
    x = np.arange(x_max + 1)[:, None]
    d = np.arange(x_max + 1)[None, :]
    return np.where(d < x, cost_under * (x - d), cost_over * (d - x)).astype(float)


def posterior_targets(
    prior: CountDistribution, z: int, env: int, sensors: SensorSuite
) -> CountDistribution:
    """Bayes update of the count prior after observing z under class env."""
    sensors.check_class(env)
    like = np.array([obs_likelihood(z, x, env, sensors) for x in range(prior.x_max + 1)])
    unnorm = like * prior.probs
    norm = unnorm.sum()
    if norm <= 0.0:
        raise ImpossibleObservationError(
            f"observation z={z} has zero probability under class index {env}"
        )
    return CountDistribution(unnorm / norm)


def posterior_env(prior: EnvDistribution, y: int, sensors: SensorSuite) -> EnvDistribution:
    """Bayes update of the class prior after observing class y."""
    sensors.check_class(y)
    unnorm = sensors.env_confusion[:, y] * prior.probs
    norm = unnorm.sum()
    if norm <= 0.0:
        raise ImpossibleObservationError(f"class observation y={y} has zero probability")
    return EnvDistribution(unnorm / norm)


def marginal_posterior_targets(
    belief: CellBelief, z: int, y: int, sensors: SensorSuite
) -> CountDistribution:
    """Count posterior unconditioned on the environment.

    Mixture over classes of the class-conditional count posteriors,
    weighted by the class posterior given y.
    """
    env_post = posterior_env(belief.env_prior, y, sensors)
    mix = np.zeros(belief.target_prior.x_max + 1)
    for j in range(sensors.m):
        w = env_post.probs[j]
        if w == 0.0:
            continue
        mix += w * posterior_targets(belief.target_prior, z, j, sensors).probs
    total = mix.sum()
    if total <= 0.0:
        raise ImpossibleObservationError(f"observation (z={z}, y={y}) has zero probability")
    return CountDistribution(mix / total)


def bayes_estimate_targets(
    post: CountDistribution, cost_under: float, cost_over: float
) -> tuple[int, float]:
    """Best count estimate under the linear loss, with its expected loss.

    Returns (estimate, risk); ties in the argmin go to the smaller
    estimate.
    """
    if cost_under <= 0.0 or cost_over <= 0.0:
        raise ValueError("loss weights must be strictly positive")
    expected = post.probs @ loss_matrix(post.x_max, cost_under, cost_over)
    best = int(np.argmin(expected))
    return best, float(expected[best])


def current_risk(belief: CellBelief, sensors: SensorSuite) -> float:
    """Expected loss of the best blind estimate, averaged over classes.

    The target prior is class-independent, so the class average is over
    identical conditional risks; the explicit sum keeps the contract
    obvious.
    """
    _, risk = bayes_estimate_targets(belief.target_prior, belief.cost_under, belief.cost_over)
    return float(np.sum(belief.env_prior.probs * risk))


def anticipated_risk_cond(belief: CellBelief, z: int, env: int, sensors: SensorSuite) -> float:
    """Bayes risk of the count posterior after observing z under class env."""
    post = posterior_targets(belief.target_prior, z, env, sensors)
    _, risk = bayes_estimate_targets(post, belief.cost_under, belief.cost_over)
    return risk


def anticipated_risk_table(
    belief: CellBelief, sensors: SensorSuite, caps: ObservationCaps, like: np.ndarray = None
) -> np.ndarray:
    """r[j, z]: class-conditional posterior Bayes risk for every z <= z_max."""
    if like is None:
        like = likelihood_table(sensors, caps)
    lmat = loss_matrix(caps.x_max, belief.cost_under, belief.cost_over)
    unnorm = like * belief.target_prior.probs[None, :, None]  # (m, x, z)
    norm = unnorm.sum(axis=1)  # (m, z)
    if np.any(norm <= 0.0):
        raise ImpossibleObservationError("some truncated observation has zero probability")
    post = unnorm / norm[:, None, :]
    exp_loss = np.einsum("jxz,xd->jdz", post, lmat)
    return exp_loss.min(axis=1)  # (m, z)


def _env_order_weights(
    r_col: np.ndarray, env_cost_under: float, env_cost_over: float, order: str
) -> np.ndarray:
    """cw[e, d]: loss weight for estimating class d when the truth is e.

    order="index": d underestimates e when d <= e (classes are indexed by
    increasing informativeness).  order="risk": d underestimates e when
    its anticipated risk is at least e's (a worse environment assumed).
    """
    m = r_col.shape[0]
    if order == "index":
        d_idx = np.arange(m)[None, :]
        e_idx = np.arange(m)[:, None]
        under = d_idx <= e_idx
    elif order == "risk":
        under = r_col[None, :] >= r_col[:, None]
    else:
        raise ValueError(f"unknown environment ordering {order!r}")
    return np.where(under, env_cost_under, env_cost_over)


def bayes_estimate_env(
    belief: CellBelief,
    z: int,
    y: int,
    sensors: SensorSuite,
    order: str = "index",
) -> tuple[int, float]:
    """Best class estimate after (z, y) and its anticipated count risk.

    The estimate minimizes the posterior-weighted deviation between the
    anticipated risk under the candidate class and under the true class;
    returns (class index, anticipated risk under the estimate).  Argmin
    ties go to the smaller class index.
    """
    sensors.check_class(y)
    r_col = np.array([anticipated_risk_cond(belief, z, j, sensors) for j in range(sensors.m)])
    env_post = posterior_env(belief.env_prior, y, sensors).probs
    cw = _env_order_weights(r_col, belief.env_cost_under, belief.env_cost_over, order)
    w = cw * np.abs(r_col[:, None] - r_col[None, :])  # (e, d)
    score = env_post @ w
    best = int(np.argmin(score))
    return best, float(r_col[best])


def joint_obs_prob(
    belief: CellBelief,
    z: int,
    y: int,
    sensors: SensorSuite,
    caps: ObservationCaps = None,
) -> float:
    """P(z, y) marginal over true count and true class."""
    sensors.check_class(y)
    if z < 0:
        raise ValueError("z must be nonnegative")
    total = 0.0
    for j in range(sensors.m):
        like_sum = sum(
            obs_likelihood(z, x, j, sensors) * belief.target_prior.probs[x]
            for x in range(belief.target_prior.x_max + 1)
        )
        total += like_sum * sensors.env_confusion[j, y] * belief.env_prior.probs[j]
    return total


@dataclass(frozen=True)
class BenefitResult:
    """Current risk, anticipated post-search risk, and their difference."""

    current_risk: float
    anticipated_risk: float
    benefit: float
    estimate: int = 0
    caps: ObservationCaps = field(default=None, compare=False)


def cell_benefit(
    belief: CellBelief,
    sensors: SensorSuite,
    caps: ObservationCaps = None,
    like: np.ndarray = None,
    order: str = "index",
) -> BenefitResult:
    """Expected risk reduction from searching a cell once.

    Averages, over every truncated observation pair (z, y), the
    anticipated risk under the estimated class, and subtracts it from the
    current risk.  `like` may carry a precomputed likelihood table for
    the given caps.
    """
    if caps is None:
        caps = ObservationCaps.adaptive(belief.target_prior.x_max, sensors)
    if like is None:
        like = likelihood_table(sensors, caps)
    prior = belief.target_prior.probs
    env_prior = belief.env_prior.probs
    conf = sensors.env_confusion
    lmat = loss_matrix(caps.x_max, belief.cost_under, belief.cost_over)

    prior_loss = prior @ lmat
    delta0 = int(np.argmin(prior_loss))
    rho = float(np.sum(env_prior * prior_loss[delta0]))

    r = anticipated_risk_table(belief, sensors, caps, like)  # (m, z)

    # Class posterior given each possible y (independent of z).
    env_unnorm = conf * env_prior[:, None]  # (j, y)
    env_norm = env_unnorm.sum(axis=0)
    if np.any(env_norm <= 0.0):
        raise ImpossibleObservationError("some class observation has zero probability")
    env_post = env_unnorm / env_norm[None, :]  # (e, y)

    # P(z, y) via the likelihood reading of the joint.
    pzy = np.einsum("jxz,jy,x,j->zy", like, conf, prior, env_prior)

    m = sensors.m
    n_z = caps.z_max + 1
    if belief.env_cost_under == belief.env_cost_over and order in ("index", "risk"):
        # Uniform weights: deviation |r_e - r_d| only; vectorize over z.
        dev = np.abs(r.T[:, :, None] - r.T[:, None, :])  # (z, e, d)
        score = np.einsum("ey,zed->zyd", env_post, dev) * belief.env_cost_under
        dstar = np.argmin(score, axis=2)  # (z, y)
    else:
        dstar = np.empty((n_z, m), dtype=int)
        for z in range(n_z):
            cw = _env_order_weights(r[:, z], belief.env_cost_under, belief.env_cost_over, order)
            w = cw * np.abs(r[:, z][:, None] - r[:, z][None, :])
            score = env_post.T @ w  # (y, d)
            dstar[z] = np.argmin(score, axis=1)

    anticipated = float(np.sum(pzy * r[dstar, np.arange(n_z)[:, None]]))
    return BenefitResult(rho, anticipated, rho - anticipated, delta0, caps)
