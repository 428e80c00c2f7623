"""Product exclusivity inequalities from merged event graphs.

Rotating the 8 CHSH events by k steps and optionally reflecting the NC
events pairs the two experiments into 16 distance-preserving assignments.
Each assignment is an 8-clique of joint events, so the sum of the 16
resulting inequalities bounds the product of the two experiment totals by 8.
"""

from __future__ import annotations

import csv
import io
import math
from dataclasses import dataclass

import numpy as np

from .errors import GraphShapeMismatch, InvariantViolation, NonPositiveInput, ProbabilityOutOfRange
from .exgraph import ExclusivityGraph, is_clique

N_EVENTS = 8


def _circular_distance(i: int, j: int) -> int:
    d = abs(i - j) % N_EVENTS
    return min(d, N_EVENTS - d)


@dataclass(frozen=True)
class MergeMap:
    """Index bijection sigma(i) = ((-1)^m * i + k) mod 8 pairing the event lists."""

    k: int
    m: int
    sigma: tuple[int, ...]

    def __post_init__(self) -> None:
        if not 0 <= self.k <= 7 or self.m not in (0, 1):
            raise ValueError(f"bad merge parameters k={self.k}, m={self.m}")
        if sorted(self.sigma) != list(range(N_EVENTS)):
            raise InvariantViolation("merge map is not a bijection")
        for i in range(N_EVENTS):
            for j in range(i + 1, N_EVENTS):
                if _circular_distance(self.sigma[i], self.sigma[j]) != _circular_distance(i, j):
                    raise InvariantViolation("merge map does not preserve circular distance")


def merge_map(k: int, m: int) -> MergeMap:
    sign = -1 if m else 1
    return MergeMap(k, m, tuple((sign * i + k) % N_EVENTS for i in range(N_EVENTS)))


def all_merge_maps() -> list[MergeMap]:
    """The 16 maps in report order: rotations first (k = 0..7), then reflections."""
    return [merge_map(k, m) for m in (0, 1) for k in range(N_EVENTS)]


def _check_probabilities(p, name: str) -> np.ndarray:
    arr = np.asarray(p, dtype=float).reshape(-1)
    if arr.shape != (N_EVENTS,):
        raise ValueError(f"{name} must hold {N_EVENTS} probabilities")
    if np.any(arr < -1e-12) or np.any(arr > 1.0 + 1e-12):
        raise ProbabilityOutOfRange(f"{name} has entries outside [0, 1]")
    return np.clip(arr, 0.0, 1.0)


def w_value(merge: MergeMap, p_s, p_r) -> float:
    """Sum of the 8 joint-event probabilities p_s[i] * p_r[sigma(i)]; at most 1 for
    any theory obeying the exclusivity bound."""
    ps = _check_probabilities(p_s, "p_s")
    pr = _check_probabilities(p_r, "p_r")
    return float(sum(ps[i] * pr[merge.sigma[i]] for i in range(N_EVENTS)))


def w_stderr_independent(merge: MergeMap, p_s, dp_s, p_r, dp_r) -> float:
    """First-order propagation with every per-event error independent."""
    ps, pr = np.asarray(p_s, float), np.asarray(p_r, float)
    ds, dr = np.asarray(dp_s, float), np.asarray(dp_r, float)
    var = 0.0
    for i in range(N_EVENTS):
        j = merge.sigma[i]
        var += (pr[j] * ds[i]) ** 2 + (ps[i] * dr[j]) ** 2
    return math.sqrt(var)


def w_stderr_correlated(merge: MergeMap, p_s, dp_s, p_r, dp_r) -> float:
    """Propagation with each experiment's errors fully correlated internally.

    The two experiment-level deltas sum coherently within an experiment and
    combine in quadrature across experiments; this is the model that matches
    the reported product-inequality uncertainties.
    """
    ps, pr = np.asarray(p_s, float), np.asarray(p_r, float)
    ds, dr = np.asarray(dp_s, float), np.asarray(dp_r, float)
    from_s = sum(pr[merge.sigma[i]] * ds[i] for i in range(N_EVENTS))
    from_r = sum(ps[i] * dr[merge.sigma[i]] for i in range(N_EVENTS))
    return math.sqrt(from_s**2 + from_r**2)


@dataclass(frozen=True)
class WReport:
    """One evaluated product inequality."""

    index: int  # 1..16
    merge: MergeMap
    value: float
    uncertainty: float

    def __post_init__(self) -> None:
        if self.value < 0.0:
            raise InvariantViolation("negative inequality value")

    @property
    def assignment(self) -> tuple[tuple[str, str], ...]:
        return tuple((f"u{i}", f"v{self.merge.sigma[i]}") for i in range(N_EVENTS))

    def exceeds_bound(self, n_sigma: float = 3.0) -> bool:
        return self.value > 1.0 + n_sigma * self.uncertainty + 1e-12


def clique_certificate(merge: MergeMap, product: ExclusivityGraph) -> bool:
    """True iff the map's 8 joint events form a clique of the 64-vertex product graph."""
    if product.n != N_EVENTS * N_EVENTS:
        raise GraphShapeMismatch(f"need {N_EVENTS * N_EVENTS} vertices, got {product.n}")
    vertices = {i * N_EVENTS + merge.sigma[i] for i in range(N_EVENTS)}
    return is_clique(product, vertices)


def product_bound(p_s, p_r) -> tuple[float, float, float]:
    """(S, R, S*R) for the given probabilities, cross-checked against the
    identity sum-over-16-maps(W) = 2*S*R."""
    ps = _check_probabilities(p_s, "p_s")
    pr = _check_probabilities(p_r, "p_r")
    s_total = float(ps.sum())
    r_total = float(pr.sum())
    w_sum = sum(w_value(m, ps, pr) for m in all_merge_maps())
    if abs(w_sum - 2.0 * s_total * r_total) > 1e-9:
        raise InvariantViolation("sum of the 16 inequalities is not twice S*R")
    return s_total, r_total, s_total * r_total


def cross_bounds(
    s_exp: tuple[float, float], r_exp: tuple[float, float]
) -> tuple[tuple[float, float], tuple[float, float]]:
    """Upper bounds each experiment imposes on the other: (bound on R, bound on S).

    bound = 8/x with first-order error 8*dx/x^2.
    """

    def invert(measured: tuple[float, float]) -> tuple[float, float]:
        value, err = measured
        if value <= 0.0:
            raise NonPositiveInput(f"measured value {value} must be positive")
        if err < 0.0:
            raise NonPositiveInput(f"uncertainty {err} must be non-negative")
        return 8.0 / value, 8.0 * err / value**2

    return invert(s_exp), invert(r_exp)


def reference_bounds() -> dict[str, float]:
    """Superseded two-copy bounds kept for report comparison.

    The R bound was circulated as ~2.5298 even though 3*sqrt(3)/2 evaluates
    to 2.5981; both numbers are returned.
    """
    return {
        "r_two_copies": 3.0 * math.sqrt(3.0) / 2.0,
        "r_two_copies_printed": 2.5298,
        "s_two_copies": 8.0 / math.sqrt(5.0),
    }


def evaluate_w_reports(
    p_s, p_r, dp_s=None, dp_r=None, error_model: str = "independent"
) -> list[WReport]:
    """Evaluate all 16 inequalities; uncertainties are 0 for ideal inputs."""
    maps = all_merge_maps()
    if dp_s is None or dp_r is None:
        return [
            WReport(idx + 1, m, w_value(m, p_s, p_r), 0.0) for idx, m in enumerate(maps)
        ]
    stderr = {"independent": w_stderr_independent, "correlated": w_stderr_correlated}[error_model]
    return [
        WReport(idx + 1, m, w_value(m, p_s, p_r), stderr(m, p_s, dp_s, p_r, dp_r))
        for idx, m in enumerate(maps)
    ]


def w_reports_to_csv(reports: list[WReport]) -> str:
    """CSV with one row per inequality: index, the 8 sigma images, value, uncertainty."""
    buf = io.StringIO()
    writer = csv.writer(buf)
    writer.writerow(["index"] + [f"sigma{i}" for i in range(N_EVENTS)] + ["value", "uncertainty"])
    for rep in reports:
        writer.writerow(
            [rep.index]
            + [rep.merge.sigma[i] for i in range(N_EVENTS)]
            + [f"{rep.value:.6f}", f"{rep.uncertainty:.6f}"]
        )
    return buf.getvalue()
