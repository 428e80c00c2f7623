"""The two quantum scenarios: CHSH events in dim 4, NC events in dim 5.

All amplitudes are built from closed-form radicals evaluated in double
precision; the declared exclusivity graphs are re-checked against actual
orthogonality at construction time.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field
from functools import lru_cache

import numpy as np

from .errors import DimensionMismatch, InvariantViolation, ParseError
from .exgraph import CirculantSpec, ExclusivityGraph, circulant
from .numerics import (
    HermitianOperator,
    StateVector,
    inner_product,
    max_eigenpair,
    orthonormal_complement,
    probability,
    sum_of_projectors,
)

SQRT2 = math.sqrt(2.0)

EDGE_ORTHO_TOL = 1e-9
NON_EDGE_MIN_OVERLAP = 1e-6

# CHSH event list: (outcome a, outcome b, setting i, setting j) per event,
# with setting 0 the z test and setting 1 the x test on each qubit.
CHSH_EVENT_SPECS: tuple[tuple[int, int, int, int], ...] = (
    (+1, +1, 0, 0),
    (+1, +1, 1, 0),
    (+1, -1, 1, 1),
    (-1, -1, 0, 1),
    (-1, -1, 0, 0),
    (-1, -1, 1, 0),
    (-1, +1, 1, 1),
    (+1, +1, 0, 1),
)

# The four joint settings in first-appearance order, and the fixed outcome
# order used for every 4-outcome joint distribution.
CHSH_SETTINGS: tuple[tuple[int, int], ...] = ((0, 0), (1, 0), (1, 1), (0, 1))
CHSH_OUTCOMES: tuple[tuple[int, int], ...] = ((+1, +1), (+1, -1), (-1, +1), (-1, -1))


@dataclass(frozen=True)
class Event:
    """A rank-1 measurement event: a label plus its projector direction."""

    label: str
    vec: StateVector

    def __post_init__(self) -> None:
        self.vec.require_unit(1e-12)


@dataclass(frozen=True)
class Scenario:
    """A state, an ordered event list, and the declared exclusivity graph."""

    name: str
    dim: int
    state: StateVector
    events: tuple[Event, ...]
    graph: ExclusivityGraph

    def validate(self) -> None:
        """Re-check all structural invariants; raises InvariantViolation naming the check."""
        if self.state.dim != self.dim:
            raise InvariantViolation("state dimension")
        if abs(self.state.norm - 1.0) > 1e-9:
            raise InvariantViolation("state norm")
        if self.graph.n != len(self.events):
            raise InvariantViolation("graph size")
        for event in self.events:
            if event.vec.dim != self.dim:
                raise InvariantViolation(f"event dimension ({event.label})")
        max_edge, min_non_edge = self.orthogonality_extremes()
        if max_edge > EDGE_ORTHO_TOL:
            raise InvariantViolation("edge orthogonality")
        if min_non_edge <= NON_EDGE_MIN_OVERLAP:
            raise InvariantViolation("non-edge overlap")

    def orthogonality_extremes(self) -> tuple[float, float]:
        """(largest |overlap| over declared edges, smallest over non-edges)."""
        max_edge = 0.0
        min_non_edge = math.inf
        for i in range(len(self.events)):
            for j in range(i + 1, len(self.events)):
                overlap = abs(inner_product(self.events[i].vec, self.events[j].vec))
                if self.graph.has_edge(i, j):
                    max_edge = max(max_edge, overlap)
                else:
                    min_non_edge = min(min_non_edge, overlap)
        return max_edge, min_non_edge

    def event_probabilities(self) -> np.ndarray:
        return np.array([probability(self.state, e.vec) for e in self.events])


def qubit_eigenvector(setting: int, outcome: int) -> StateVector:
    """Single-qubit eigenvector: setting 0 is the z test, setting 1 the x test."""
    if setting == 0:
        return StateVector.basis_state(2, 0 if outcome == +1 else 1)
    sign = 1.0 if outcome == +1 else -1.0
    return StateVector(np.array([1.0, sign]) / SQRT2)


def chsh_event_vector(a: int, b: int, i: int, j: int) -> StateVector:
    """Product eigenvector for joint outcome (a, b) of settings (i, j)."""
    return StateVector(np.kron(qubit_eigenvector(i, a).amps, qubit_eigenvector(j, b).amps))


def chsh_state() -> StateVector:
    """The two-qubit state that maximizes the CHSH event sum."""
    c = 1.0 / (2.0 * math.sqrt(2.0 - SQRT2))
    side = (SQRT2 - 1.0) * c
    return StateVector(np.array([c, side, side, -c]))


def chsh_event_notation(index: int) -> str:
    a, b, i, j = CHSH_EVENT_SPECS[index]
    return f"{a},{b}|{i},{j}"


@lru_cache(maxsize=1)
def build_chsh_scenario() -> Scenario:
    """Dim-4 scenario: 8 product events on the circulant({3,4}) exclusivity graph."""
    events = tuple(
        Event(f"u{k}", chsh_event_vector(*spec)) for k, spec in enumerate(CHSH_EVENT_SPECS)
    )
    scn = Scenario(
        name="chsh",
        dim=4,
        state=chsh_state(),
        events=events,
        graph=circulant(CirculantSpec(8, frozenset({3, 4}))),
    )
    scn.validate()
    return scn


def nc_state() -> StateVector:
    """The dim-5 state that maximizes the NC event sum (no support on the last axis)."""
    head = math.sqrt(1.0 - 1.0 / SQRT2)
    tail = math.sqrt(3.0 / SQRT2 - 2.0)
    return StateVector(np.array([head, head, head, tail, 0.0]))


def nc_event_vectors() -> list[StateVector]:
    """The 8 dim-5 event directions, exact radicals componentwise."""
    r1 = math.sqrt(SQRT2 - 1.0)          # component mixing |3> into v3/v7
    r2 = math.sqrt(3.0 * SQRT2 - 4.0)    # |4> component of v3/v7
    r3 = math.sqrt(2.0 * (5.0 * SQRT2 - 7.0))
    r4 = math.sqrt(6.0 * SQRT2 - 8.0)
    r5 = math.sqrt(5.0 * SQRT2 - 7.0)
    a = 2.0 - SQRT2
    b = 3.0 - 2.0 * SQRT2
    rows = [
        [1.0, 0.0, 0.0, 0.0, 0.0],
        [0.0, 1.0, 0.0, 0.0, 0.0],
        [0.0, 0.0, 1.0, 0.0, 0.0],
        [a, 0.0, 0.0, r1, -r2],
        [b, a, 0.0, r3, r4],
        [a, b, a, -2.0 * r5, 0.0],
        [0.0, -a, -b, -r3, r4],
        [0.0, 0.0, -a, -r1, -r2],
    ]
    return [StateVector(np.array(row)) for row in rows]


def nc_event_notation(index: int) -> str:
    return f"0,0,1|{(index - 2) % 8},{(index - 1) % 8},{index}"


@lru_cache(maxsize=1)
def build_nc_scenario() -> Scenario:
    """Dim-5 scenario: 8 events on the circulant({1,2}) exclusivity graph."""
    events = tuple(Event(f"v{k}", vec) for k, vec in enumerate(nc_event_vectors()))
    scn = Scenario(
        name="nc",
        dim=5,
        state=nc_state(),
        events=events,
        graph=circulant(CirculantSpec(8, frozenset({1, 2}))),
    )
    scn.validate()
    return scn


def sum_value(s: Scenario) -> float:
    """Sum of all event probabilities on the scenario's state."""
    return float(s.event_probabilities().sum())


def quantum_max(s: Scenario) -> tuple[float, StateVector]:
    """Largest eigenvalue (and optimizer) of the summed event projectors."""
    return max_eigenpair(sum_of_projectors([e.vec for e in s.events]))


def exclusivity_table(s: Scenario) -> np.ndarray:
    """Matrix of |<event_j|event_i>|^2: the ideal outcome of every pairwise exclusivity test."""
    k = len(s.events)
    table = np.empty((k, k))
    for j in range(k):
        for i in range(k):
            table[j, i] = abs(inner_product(s.events[j].vec, s.events[i].vec)) ** 2
    return table


def fidelity(a: StateVector, b: StateVector) -> float:
    """|<a|b>|^2, insensitive to global phase."""
    return float(abs(inner_product(a, b)) ** 2)


_PAULI = {
    0: np.array([[1.0, 0.0], [0.0, -1.0]], dtype=np.complex128),  # z test
    1: np.array([[0.0, 1.0], [1.0, 0.0]], dtype=np.complex128),   # x test
}


def chsh_identity_check(state: StateVector) -> tuple[float, float]:
    """Evaluate the event sum two ways: directly, and as 2 + C/2 from the correlators.

    C = <A0 B0> + <A1 B0> - <A1 B1> + <A0 B1> with the module's fixed observables.
    """
    if state.dim != 4:
        raise DimensionMismatch(f"need dim 4, got {state.dim}")
    state.require_unit()
    scn = build_chsh_scenario()
    s_direct = float(sum(probability(state, e.vec) for e in scn.events))
    psi = state.amps

    def correlator(i: int, j: int) -> float:
        obs = np.kron(_PAULI[i], _PAULI[j])
        return float(np.real(np.vdot(psi, obs @ psi)))

    c = correlator(0, 0) + correlator(1, 0) - correlator(1, 1) + correlator(0, 1)
    return s_direct, 2.0 + c / 2.0


def measurement_bases() -> list[list[StateVector]]:
    """One orthonormal 5-outcome basis per NC event: the triple that ends at the
    event, completed deterministically to a full basis."""
    vectors = nc_event_vectors()
    bases = []
    for i in range(8):
        triple = [vectors[(i - 2) % 8], vectors[(i - 1) % 8], vectors[i]]
        bases.append(triple + orthonormal_complement(triple))
    return bases


@dataclass(frozen=True)
class MeasurementPlan:
    """Contexts (orthonormal bases) and where each event sits among their outcomes."""

    bases: tuple[tuple[StateVector, ...], ...] = field(repr=False)
    event_positions: tuple[tuple[int, int], ...]  # event -> (context, outcome slot)


@lru_cache(maxsize=1)
def chsh_measurement_plan() -> MeasurementPlan:
    bases = tuple(
        tuple(chsh_event_vector(a, b, i, j) for (a, b) in CHSH_OUTCOMES)
        for (i, j) in CHSH_SETTINGS
    )
    positions = []
    for a, b, i, j in CHSH_EVENT_SPECS:
        context = CHSH_SETTINGS.index((i, j))
        positions.append((context, CHSH_OUTCOMES.index((a, b))))
    return MeasurementPlan(bases, tuple(positions))


@lru_cache(maxsize=1)
def nc_measurement_plan() -> MeasurementPlan:
    bases = tuple(tuple(basis) for basis in measurement_bases())
    # Basis i orders its outcomes (v_{i-2}, v_{i-1}, v_i, completion...), so
    # each event reads off slot 2 of its own basis.
    positions = tuple((i, 2) for i in range(8))
    return MeasurementPlan(bases, positions)


def scenario_to_json_dict(s: Scenario) -> dict:
    def vec_to_lists(v: StateVector) -> list[list[float]]:
        return [[float(z.real), float(z.imag)] for z in v.amps]

    return {
        "name": s.name,
        "dim": s.dim,
        "state": vec_to_lists(s.state),
        "events": [{"label": e.label, "vec": vec_to_lists(e.vec)} for e in s.events],
        "edges": [list(edge) for edge in sorted(s.graph.edges)],
    }


def scenario_from_json_dict(data: dict) -> Scenario:
    def lists_to_vec(pairs, where: str) -> StateVector:
        try:
            amps = np.array([complex(re, im) for re, im in pairs])
        except (TypeError, ValueError) as exc:
            raise ParseError(f"bad amplitude list in {where}: {exc}") from exc
        return StateVector(amps)

    try:
        name = str(data["name"])
        dim = int(data["dim"])
        state = lists_to_vec(data["state"], "state")
        event_records = [
            (str(rec["label"]), lists_to_vec(rec["vec"], f"event {idx}"))
            for idx, rec in enumerate(data["events"])
        ]
        edges = [(int(i), int(j)) for i, j in data["edges"]]
    except ParseError:
        raise
    except (KeyError, TypeError, ValueError) as exc:
        raise ParseError(f"missing or malformed field: {exc}") from exc
    events = []
    for label, vec in event_records:
        if abs(vec.norm - 1.0) > 1e-12:
            raise InvariantViolation(f"event norm ({label})")
        events.append(Event(label, vec))
    events = tuple(events)
    scn = Scenario(
        name=name,
        dim=dim,
        state=state,
        events=events,
        graph=ExclusivityGraph.from_edges(len(events), edges),
    )
    scn.validate()
    return scn


def save_scenario(s: Scenario, path) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(scenario_to_json_dict(s), fh, indent=2)
        fh.write("\n")


def load_scenario(path) -> Scenario:
    with open(path, "r", encoding="utf-8") as fh:
        try:
            data = json.load(fh)
        except json.JSONDecodeError as exc:
            raise ParseError(f"invalid JSON at line {exc.lineno}, column {exc.colno}: {exc.msg}") from exc
    return scenario_from_json_dict(data)
