"""Toolkit for the paired CHSH / non-contextuality exclusivity experiments.

Builds both quantum scenarios from closed-form amplitudes, certifies their
graph structure, evaluates the 16 product exclusivity inequalities whose sum
bounds S*R by 8, and regenerates the experiment tables under a seeded
finite-statistics noise model.
"""

from .eprinciple import (
    MergeMap,
    WReport,
    all_merge_maps,
    clique_certificate,
    cross_bounds,
    merge_map,
    product_bound,
    reference_bounds,
    w_value,
)
from .exgraph import (
    CirculantSpec,
    ExclusivityGraph,
    circulant,
    complement,
    disjunctive_product,
    independence_number,
    is_clique,
    is_vertex_transitive,
)
from .montecarlo import NoiseModel, SimulatedRun, run_chsh, run_nc, run_w_report, sample_setting
from .numerics import (
    HermitianOperator,
    StateVector,
    inner_product,
    max_eigenpair,
    orthonormal_complement,
    probability,
)
from .scenario import (
    Event,
    Scenario,
    build_chsh_scenario,
    build_nc_scenario,
    chsh_identity_check,
    exclusivity_table,
    measurement_bases,
    quantum_max,
    sum_value,
)

__version__ = "0.1.0"

__all__ = [
    "CirculantSpec",
    "Event",
    "ExclusivityGraph",
    "HermitianOperator",
    "MergeMap",
    "NoiseModel",
    "Scenario",
    "SimulatedRun",
    "StateVector",
    "WReport",
    "all_merge_maps",
    "build_chsh_scenario",
    "build_nc_scenario",
    "chsh_identity_check",
    "circulant",
    "clique_certificate",
    "complement",
    "cross_bounds",
    "disjunctive_product",
    "exclusivity_table",
    "independence_number",
    "inner_product",
    "is_clique",
    "is_vertex_transitive",
    "max_eigenpair",
    "measurement_bases",
    "merge_map",
    "orthonormal_complement",
    "probability",
    "product_bound",
    "quantum_max",
    "reference_bounds",
    "run_chsh",
    "run_nc",
    "run_w_report",
    "sample_setting",
    "sum_value",
    "w_value",
]
