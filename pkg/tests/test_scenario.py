import json
import math

import numpy as np
import pytest

from exclusivity.errors import DimensionMismatch, InvariantViolation, ParseError
from exclusivity.exgraph import ExclusivityGraph
from exclusivity.numerics import StateVector, inner_product, probability
from exclusivity.scenario import (
    Event,
    Scenario,
    build_chsh_scenario,
    build_nc_scenario,
    chsh_identity_check,
    exclusivity_table,
    fidelity,
    load_scenario,
    measurement_bases,
    nc_event_vectors,
    quantum_max,
    save_scenario,
    scenario_from_json_dict,
    scenario_to_json_dict,
    sum_value,
)
from exclusivity.reported import NC_EVENT_COMPONENTS_REPORTED

SQRT2 = math.sqrt(2.0)
CHSH_MAX = 2.0 + SQRT2
NC_MAX = 8.0 - 4.0 * SQRT2


class TestChshScenario:
    def test_invariants_hold(self):
        scn = build_chsh_scenario()
        scn.validate()
        max_edge, min_non_edge = scn.orthogonality_extremes()
        assert max_edge <= 1e-12
        assert min_non_edge >= 0.49

    def test_all_event_probabilities_coincide(self):
        probs = build_chsh_scenario().event_probabilities()
        assert np.max(np.abs(probs - CHSH_MAX / 8.0)) <= 1e-12

    def test_total(self):
        assert sum_value(build_chsh_scenario()) == pytest.approx(CHSH_MAX, abs=1e-12)
        assert round(sum_value(build_chsh_scenario()), 4) == 3.4142

    def test_every_declared_edge_is_orthogonal(self):
        scn = build_chsh_scenario()
        for i in range(8):
            for j in range(i + 1, 8):
                overlap = abs(inner_product(scn.events[i].vec, scn.events[j].vec))
                if scn.graph.has_edge(i, j):
                    assert overlap <= 1e-12
                else:
                    assert overlap > 1e-6


class TestNcScenario:
    def test_invariants_hold(self):
        scn = build_nc_scenario()
        scn.validate()

    def test_event_vector_norms(self):
        # e.g. (2-sqrt2)^2 + (sqrt2-1) + (3 sqrt2-4) = 1 exactly
        for vec in nc_event_vectors():
            assert abs(vec.norm - 1.0) <= 1e-12
        radical_sum = (2.0 - SQRT2) ** 2 + (SQRT2 - 1.0) + (3.0 * SQRT2 - 4.0)
        assert radical_sum == pytest.approx(1.0, abs=1e-12)

    def test_probabilities_and_total(self):
        probs = build_nc_scenario().event_probabilities()
        assert np.max(np.abs(probs - (1.0 - 1.0 / SQRT2))) <= 1e-12
        assert round(probs[3], 4) == 0.2929
        assert round(sum_value(build_nc_scenario()), 4) == 2.3431

    def test_selected_overlaps(self):
        events = build_nc_scenario().events
        assert inner_product(events[0].vec, events[3].vec) == pytest.approx(2.0 - SQRT2, abs=1e-12)
        assert inner_product(events[0].vec, events[1].vec) == 0.0

    def test_reported_components_match_construction(self):
        for vec, row in zip(nc_event_vectors(), NC_EVENT_COMPONENTS_REPORTED):
            assert np.max(np.abs(vec.amps.real - np.array(row))) < 2e-3


class TestQuantumMax:
    def test_chsh(self):
        value, optimizer = quantum_max(build_chsh_scenario())
        assert value == pytest.approx(CHSH_MAX, abs=1e-9)
        assert fidelity(optimizer, build_chsh_scenario().state) >= 1.0 - 1e-9

    def test_nc(self):
        value, optimizer = quantum_max(build_nc_scenario())
        assert value == pytest.approx(NC_MAX, abs=1e-9)
        assert fidelity(optimizer, build_nc_scenario().state) >= 1.0 - 1e-9

    def test_single_event_scenario(self):
        vec = StateVector.normalize(np.array([1.0, 2.0, 2.0]))
        scn = Scenario("single", 3, vec, (Event("e0", vec),), ExclusivityGraph(1, frozenset()))
        scn.validate()
        value, optimizer = quantum_max(scn)
        assert value == pytest.approx(1.0, abs=1e-12)
        assert fidelity(optimizer, vec) >= 1.0 - 1e-12

    def test_state_is_optimal(self):
        for scn in (build_chsh_scenario(), build_nc_scenario()):
            value, _ = quantum_max(scn)
            assert abs(sum_value(scn) - value) <= 1e-9


class TestChshIdentity:
    def test_optimal_state(self):
        direct, via_correlator = chsh_identity_check(build_chsh_scenario().state)
        assert direct == pytest.approx(CHSH_MAX, abs=1e-10)
        assert via_correlator == pytest.approx(CHSH_MAX, abs=1e-10)

    def test_product_state(self):
        direct, via_correlator = chsh_identity_check(StateVector.basis_state(4, 0))
        # for |00>: only the z-z correlator survives, C = 1, so both equal 2.5
        assert direct == pytest.approx(2.5, abs=1e-12)
        assert via_correlator == pytest.approx(2.5, abs=1e-12)

    def test_identity_on_random_states(self):
        rng = np.random.default_rng(3)
        for _ in range(1000):
            state = StateVector.normalize(rng.normal(size=4) + 1j * rng.normal(size=4))
            direct, via_correlator = chsh_identity_check(state)
            assert abs(direct - via_correlator) <= 1e-10

    def test_haar_average_sits_in_sanity_band(self):
        rng = np.random.default_rng(12345)
        totals = []
        for _ in range(1000):
            state = StateVector.normalize(rng.normal(size=4) + 1j * rng.normal(size=4))
            totals.append(chsh_identity_check(state)[0])
        mean = float(np.mean(totals))
        assert 2.0 < mean < CHSH_MAX

    def test_dimension_mismatch(self):
        with pytest.raises(DimensionMismatch):
            chsh_identity_check(StateVector.basis_state(5, 0))


class TestExclusivityTable:
    def test_chsh_entries(self):
        table = exclusivity_table(build_chsh_scenario())
        assert table[0, 0] == pytest.approx(1.0, abs=1e-12)
        assert table[4, 0] <= 1e-12

    def test_nc_non_edge_entry(self):
        table = exclusivity_table(build_nc_scenario())
        assert table[3, 0] == pytest.approx((2.0 - SQRT2) ** 2, abs=1e-12)

    def test_structure(self):
        for scn in (build_chsh_scenario(), build_nc_scenario()):
            table = exclusivity_table(scn)
            assert np.max(np.abs(np.diag(table) - 1.0)) <= 1e-12
            for i, j in scn.graph.edges:
                assert table[j, i] <= 1e-12


class TestMeasurementBases:
    def test_eight_orthonormal_bases(self):
        bases = measurement_bases()
        assert len(bases) == 8
        for basis in bases:
            mat = np.array([v.amps for v in basis])
            assert np.max(np.abs(mat.conj() @ mat.T - np.eye(5))) <= 1e-12

    def test_basis_for_event_two_completes_in_trailing_axes(self):
        basis = measurement_bases()[2]  # triple v0, v1, v2
        for completion_vec in basis[3:]:
            assert np.max(np.abs(completion_vec.amps[:3])) <= 1e-12

    def test_basis_for_event_zero_contains_the_wraparound_triple(self):
        basis = measurement_bases()[0]
        vectors = nc_event_vectors()
        assert np.array_equal(basis[0].amps, vectors[6].amps)
        assert np.array_equal(basis[1].amps, vectors[7].amps)
        assert np.array_equal(basis[2].amps, vectors[0].amps)


class TestCliqueProbabilityBound:
    def test_nc_triangles_on_random_states(self):
        scn = build_nc_scenario()
        rng = np.random.default_rng(17)
        triangles = [[(i - 2) % 8, (i - 1) % 8, i] for i in range(8)]
        for _ in range(200):
            state = StateVector.normalize(rng.normal(size=5) + 1j * rng.normal(size=5))
            probs = [probability(state, e.vec) for e in scn.events]
            for tri in triangles:
                assert sum(probs[k] for k in tri) <= 1.0 + 1e-12


class TestSerialization:
    def test_round_trip_is_bit_exact(self, tmp_path):
        path = tmp_path / "chsh.json"
        save_scenario(build_chsh_scenario(), path)
        loaded = load_scenario(path)
        assert loaded == build_chsh_scenario()

    def test_nc_round_trip(self, tmp_path):
        path = tmp_path / "nc.json"
        save_scenario(build_nc_scenario(), path)
        assert load_scenario(path) == build_nc_scenario()

    def test_non_unit_state_is_rejected(self):
        data = scenario_to_json_dict(build_chsh_scenario())
        data["state"][0] = [0.9, 0.0]
        with pytest.raises(InvariantViolation, match="state norm"):
            scenario_from_json_dict(data)

    def test_removed_edge_is_rejected(self):
        data = scenario_to_json_dict(build_chsh_scenario())
        data["edges"] = data["edges"][1:]
        with pytest.raises(InvariantViolation, match="non-edge overlap"):
            scenario_from_json_dict(data)

    def test_extra_edge_is_rejected(self):
        data = scenario_to_json_dict(build_chsh_scenario())
        data["edges"].append([0, 1])
        with pytest.raises(InvariantViolation, match="edge orthogonality"):
            scenario_from_json_dict(data)

    def test_malformed_json_names_the_line(self, tmp_path):
        path = tmp_path / "broken.json"
        path.write_text('{"name": "x",\n  "dim": }', encoding="utf-8")
        with pytest.raises(ParseError, match="line 2"):
            load_scenario(path)

    def test_missing_field_is_a_parse_error(self):
        data = scenario_to_json_dict(build_chsh_scenario())
        del data["events"]
        with pytest.raises(ParseError, match="events"):
            scenario_from_json_dict(data)
