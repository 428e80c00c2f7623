"""Finite-statistics emulation of both experiments.

Sampling is multinomial per measurement context under an isotropic
visibility noise model. Randomness comes from a counter-based generator
(Philox) with one substream per context, so runs are reproducible and the
contexts could be sampled in parallel without shared state.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .errors import DimensionMismatch, InvalidDistribution
from .eprinciple import WReport, evaluate_w_reports
from .numerics import StateVector, probability
from .scenario import (
    MeasurementPlan,
    Scenario,
    build_chsh_scenario,
    build_nc_scenario,
    chsh_measurement_plan,
    nc_measurement_plan,
)

DEFAULT_SHOTS = 200_000

ANALYTIC = 0  # shots sentinel: skip sampling, return exact noisy probabilities


@dataclass(frozen=True)
class NoiseModel:
    """Isotropic white noise: p' = V * p + (1 - V) / dim."""

    visibility: float
    dim: int

    def __post_init__(self) -> None:
        if not 0.0 <= self.visibility <= 1.0:
            raise ValueError(f"visibility {self.visibility} outside [0, 1]")
        if self.dim < 1:
            raise ValueError("dim must be positive")

    def mix(self, dist: np.ndarray) -> np.ndarray:
        return self.visibility * dist + (1.0 - self.visibility) / self.dim


@dataclass(frozen=True)
class SimulatedRun:
    """Per-event estimates and the derived total for one simulated experiment."""

    seed: int
    shots_per_setting: int
    labels: tuple[str, ...]
    estimates: np.ndarray = field(repr=False)
    stderrs: np.ndarray = field(repr=False)
    total: float
    total_err: float


def _context_rngs(seed: int, n: int) -> list[np.random.Generator]:
    children = np.random.SeedSequence(seed).spawn(n)
    return [np.random.Generator(np.random.Philox(child)) for child in children]


def sample_setting(probabilities, shots: int, rng: np.random.Generator) -> np.ndarray:
    """Multinomial draw of `shots` outcomes from one context's distribution."""
    dist = np.asarray(probabilities, dtype=float)
    if np.any(dist < -1e-12) or abs(dist.sum() - 1.0) > 1e-9:
        raise InvalidDistribution("outcome distribution must be non-negative and sum to 1")
    if shots < 1:
        raise ValueError("shots must be at least 1")
    dist = np.clip(dist, 0.0, None)
    dist = dist / dist.sum()
    return rng.multinomial(shots, dist)


def _binomial_stderr(p_hat: float, shots: int) -> float:
    return math.sqrt(max(p_hat * (1.0 - p_hat), 0.0) / shots)


def _context_distributions(scn: Scenario, plan: MeasurementPlan, noise: NoiseModel) -> list[np.ndarray]:
    dists = []
    for basis in plan.bases:
        ideal = np.array([probability(scn.state, vec) for vec in basis])
        dists.append(noise.mix(ideal))
    return dists


def _run_plan(
    scn: Scenario,
    plan: MeasurementPlan,
    seed: int,
    shots: int,
    noise: NoiseModel,
) -> SimulatedRun:
    if noise.dim != len(plan.bases[0]):
        raise DimensionMismatch(
            f"noise model mixes over {noise.dim} outcomes, context has {len(plan.bases[0])}"
        )
    dists = _context_distributions(scn, plan, noise)
    n_events = len(plan.event_positions)
    estimates = np.empty(n_events)
    stderrs = np.zeros(n_events)
    if shots == ANALYTIC:
        for idx, (context, slot) in enumerate(plan.event_positions):
            estimates[idx] = dists[context][slot]
    else:
        rngs = _context_rngs(seed, len(plan.bases))
        counts = [sample_setting(dists[c], shots, rngs[c]) for c in range(len(plan.bases))]
        for idx, (context, slot) in enumerate(plan.event_positions):
            p_hat = counts[context][slot] / shots
            estimates[idx] = p_hat
            stderrs[idx] = _binomial_stderr(p_hat, shots)
    total = float(estimates.sum())
    total_err = float(np.sqrt((stderrs**2).sum()))
    return SimulatedRun(
        seed=seed,
        shots_per_setting=shots,
        labels=tuple(e.label for e in scn.events),
        estimates=estimates,
        stderrs=stderrs,
        total=total,
        total_err=total_err,
    )


def run_chsh(
    seed: int,
    shots: int = DEFAULT_SHOTS,
    noise: NoiseModel | None = None,
    scenario: Scenario | None = None,
) -> SimulatedRun:
    """Simulate the four joint settings of the CHSH experiment."""
    noise = noise or NoiseModel(1.0, 4)
    if noise.dim != 4:
        raise DimensionMismatch("CHSH contexts have 4 outcomes")
    return _run_plan(scenario or build_chsh_scenario(), chsh_measurement_plan(), seed, shots, noise)


def run_nc(
    seed: int,
    shots: int = DEFAULT_SHOTS,
    noise: NoiseModel | None = None,
    scenario: Scenario | None = None,
) -> SimulatedRun:
    """Simulate the eight 5-outcome bases of the NC experiment."""
    noise = noise or NoiseModel(1.0, 5)
    if noise.dim != 5:
        raise DimensionMismatch("NC contexts have 5 outcomes")
    return _run_plan(scenario or build_nc_scenario(), nc_measurement_plan(), seed, shots, noise)


@dataclass(frozen=True)
class ExclusivityCheckRun:
    """Simulated pairwise exclusivity tests: prepare event i, test for event j."""

    pairs: tuple[tuple[int, int], ...]  # (j, i) in report order
    p_hat: np.ndarray = field(repr=False)  # matrix indexed [j, i], NaN where untested
    stderr: np.ndarray = field(repr=False)

    def value(self, j: int, i: int) -> tuple[float, float]:
        return float(self.p_hat[j, i]), float(self.stderr[j, i])


def required_check_pairs(scn: Scenario) -> list[tuple[int, int]]:
    """Self-test plus one test per declared exclusive partner, per event."""
    pairs = []
    for i in range(len(scn.events)):
        pairs.append((i, i))
        pairs.extend((j, i) for j in sorted(scn.graph.neighbors(i)))
    return pairs


def run_exclusivity_checks(
    scn: Scenario,
    plan: MeasurementPlan,
    seed: int,
    shots: int,
    noise: NoiseModel,
) -> ExclusivityCheckRun:
    """For each required (j, i): prepare event i's vector, measure event j's context."""
    if noise.dim != len(plan.bases[0]):
        raise DimensionMismatch("noise model dimension does not match context size")
    pairs = required_check_pairs(scn)
    n = len(scn.events)
    p_hat = np.full((n, n), np.nan)
    stderr = np.full((n, n), np.nan)
    rngs = _context_rngs(seed, len(pairs))
    for rng, (j, i) in zip(rngs, pairs):
        context, slot = plan.event_positions[j]
        prepared = scn.events[i].vec
        dist = noise.mix(np.array([probability(prepared, vec) for vec in plan.bases[context]]))
        if shots == ANALYTIC:
            p_hat[j, i] = dist[slot]
            stderr[j, i] = 0.0
        else:
            counts = sample_setting(dist, shots, rng)
            p_hat[j, i] = counts[slot] / shots
            stderr[j, i] = _binomial_stderr(p_hat[j, i], shots)
    return ExclusivityCheckRun(tuple(pairs), p_hat, stderr)


def run_chsh_exclusivity_checks(seed: int, shots: int, noise: NoiseModel) -> ExclusivityCheckRun:
    return run_exclusivity_checks(build_chsh_scenario(), chsh_measurement_plan(), seed, shots, noise)


def run_nc_exclusivity_checks(seed: int, shots: int, noise: NoiseModel) -> ExclusivityCheckRun:
    return run_exclusivity_checks(build_nc_scenario(), nc_measurement_plan(), seed, shots, noise)


def run_w_report(chsh_run: SimulatedRun, nc_run: SimulatedRun) -> list[WReport]:
    """Evaluate the 16 product inequalities from two simulated runs.

    Per-event errors are independent here by construction, so the
    independent propagation model applies.
    """
    return evaluate_w_reports(
        chsh_run.estimates,
        nc_run.estimates,
        chsh_run.stderrs,
        nc_run.stderrs,
        error_model="independent",
    )
