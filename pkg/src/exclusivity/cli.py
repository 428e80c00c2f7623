"""Command-line entry point: verification suite, simulator, and exporters."""

from __future__ import annotations

import argparse
import csv
import json
import math
import sys
from dataclasses import dataclass, field
from itertools import combinations
from pathlib import Path

import numpy as np

from . import eprinciple, exgraph, montecarlo, reported, scenario
from .errors import InvariantViolation, ParseError
from .numerics import StateVector, inner_product

SQRT2 = math.sqrt(2.0)
CHSH_MAX = 2.0 + SQRT2
NC_MAX = 8.0 - 4.0 * SQRT2

GRAPH_IDS = ("F1b", "F1c", "F4")


@dataclass
class Verdict:
    name: str
    passed: bool
    detail: str


@dataclass
class ReportBundle:
    tables: dict[str, list[dict]] = field(default_factory=dict)
    graphs: dict[str, exgraph.ExclusivityGraph] = field(default_factory=dict)
    verdicts: list[Verdict] = field(default_factory=list)

    def all_passed(self) -> bool:
        return all(v.passed for v in self.verdicts)

    def merge(self, other: "ReportBundle") -> None:
        self.tables.update(other.tables)
        self.graphs.update(other.graphs)
        self.verdicts.extend(other.verdicts)


def _standard_graphs() -> dict[str, exgraph.ExclusivityGraph]:
    chsh_graph = exgraph.circulant(exgraph.CirculantSpec(8, frozenset({3, 4})))
    nc_graph = exgraph.circulant(exgraph.CirculantSpec(8, frozenset({1, 2})))
    return {
        "F1b": chsh_graph,
        "F1c": nc_graph,
        "F4": exgraph.disjunctive_product(chsh_graph, nc_graph),
    }


def _graph_labels(which: str) -> list[str]:
    if which == "F1b":
        return [scenario.chsh_event_notation(i) for i in range(8)]
    if which == "F1c":
        return [scenario.nc_event_notation(i) for i in range(8)]
    return [
        f"{scenario.chsh_event_notation(i)} / {scenario.nc_event_notation(j)}"
        for i in range(8)
        for j in range(8)
    ]


def _perturbed_scenario(scn: scenario.Scenario, label: str, eps: float = 1e-3) -> scenario.Scenario:
    """Copy of a scenario with one event nudged toward a neighbor (test hook)."""
    index = next(i for i, e in enumerate(scn.events) if e.label == label)
    neighbor = min(scn.graph.neighbors(index))
    nudged = StateVector.normalize(
        scn.events[index].vec.amps + eps * scn.events[neighbor].vec.amps
    )
    events = list(scn.events)
    events[index] = scenario.Event(label, nudged)
    return scenario.Scenario(scn.name, scn.dim, scn.state, tuple(events), scn.graph)


def _all_cliques(g: exgraph.ExclusivityGraph, min_size: int = 2) -> list[tuple[int, ...]]:
    cliques = []
    for size in range(min_size, g.n + 1):
        found = [c for c in combinations(range(g.n), size) if exgraph.is_clique(g, set(c))]
        if not found:
            break
        cliques.extend(found)
    return cliques


def _random_states(rng: np.random.Generator, count: int, dim: int) -> np.ndarray:
    raw = rng.normal(size=(count, dim)) + 1j * rng.normal(size=(count, dim))
    return raw / np.linalg.norm(raw, axis=1, keepdims=True)


def _event_probability_matrix(states: np.ndarray, scn: scenario.Scenario) -> np.ndarray:
    event_mat = np.array([e.vec.amps for e in scn.events])
    return np.abs(states @ event_mat.conj().T) ** 2


def build_verify_bundle(perturb_event: str | None = None) -> ReportBundle:
    bundle = ReportBundle()
    bundle.graphs = _standard_graphs()
    chsh = scenario.build_chsh_scenario()
    nc = scenario.build_nc_scenario()
    if perturb_event is not None:
        if perturb_event.startswith("u"):
            chsh = _perturbed_scenario(chsh, perturb_event)
        else:
            nc = _perturbed_scenario(nc, perturb_event)

    verdicts = bundle.verdicts

    graph_b, graph_c, product_graph = (bundle.graphs[k] for k in GRAPH_IDS)
    verdicts.append(
        Verdict(
            "graph-complement",
            exgraph.complement(graph_b) == graph_c,
            "the two 8-event graphs are mutually complementary",
        )
    )
    transitive = exgraph.is_vertex_transitive(graph_b) and exgraph.is_vertex_transitive(graph_c)
    verdicts.append(Verdict("vertex-transitive", transitive, "both 8-event graphs"))

    alpha_b = exgraph.independence_number(graph_b)
    alpha_c = exgraph.independence_number(graph_c)
    verdicts.append(
        Verdict(
            "independence-numbers",
            (alpha_b, alpha_c) == (3, 2),
            f"alpha = {alpha_b} (classical bound 3) and {alpha_c} (classical bound 2)",
        )
    )

    for scn in (chsh, nc):
        max_edge, min_non_edge = scn.orthogonality_extremes()
        ok = max_edge <= scenario.EDGE_ORTHO_TOL and min_non_edge > scenario.NON_EDGE_MIN_OVERLAP
        verdicts.append(
            Verdict(
                f"{scn.name}-orthogonality",
                ok,
                f"max edge overlap {max_edge:.2e}, min non-edge overlap {min_non_edge:.2e}",
            )
        )

    lam_s, top_s = scenario.quantum_max(chsh)
    fid_s = scenario.fidelity(top_s, chsh.state)
    verdicts.append(
        Verdict(
            "chsh-quantum-max",
            abs(lam_s - CHSH_MAX) <= 1e-9 and fid_s >= 1.0 - 1e-9,
            f"largest eigenvalue {lam_s:.12f}, optimizer fidelity {fid_s:.12f}",
        )
    )
    lam_r, top_r = scenario.quantum_max(nc)
    fid_r = scenario.fidelity(top_r, nc.state)
    verdicts.append(
        Verdict(
            "nc-quantum-max",
            abs(lam_r - NC_MAX) <= 1e-9 and fid_r >= 1.0 - 1e-9,
            f"largest eigenvalue {lam_r:.12f}, optimizer fidelity {fid_r:.12f}",
        )
    )
    verdicts.append(
        Verdict(
            "product-saturation",
            abs(lam_s * lam_r - 8.0) <= 1e-8,
            f"S_max*R_max = {lam_s * lam_r:.9f}",
        )
    )

    p_s = chsh.event_probabilities()
    p_r = nc.event_probabilities()
    ideal_ws = [eprinciple.w_value(m, p_s, p_r) for m in eprinciple.all_merge_maps()]
    verdicts.append(
        Verdict(
            "w-saturation",
            max(abs(w - 1.0) for w in ideal_ws) <= 1e-12,
            f"all 16 ideal inequality values within {max(abs(w - 1.0) for w in ideal_ws):.2e} of 1",
        )
    )
    verdicts.append(
        Verdict(
            "merge-cliques",
            all(
                eprinciple.clique_certificate(m, product_graph)
                for m in eprinciple.all_merge_maps()
            ),
            "all 16 merged assignments are cliques of the 64-event graph",
        )
    )

    (r_bound, r_err), (s_bound, s_err) = eprinciple.cross_bounds(
        reported.CHSH_TOTAL_MEASUREMENT, reported.NC_TOTAL_MEASUREMENT
    )
    cross_ok = (
        round(r_bound, 3) == 2.344
        and round(r_err, 3) == 0.009
        and round(s_bound, 3) == 3.426
        and round(s_err, 3) == 0.016
    )
    verdicts.append(
        Verdict(
            "cross-bounds",
            cross_ok,
            f"R <= {r_bound:.3f} +/- {r_err:.3f}, S <= {s_bound:.3f} +/- {s_err:.3f}",
        )
    )

    s_total = float(p_s.sum())
    r_total = float(p_r.sum())
    verdicts.append(
        Verdict(
            "table1-expected",
            bool(np.all(np.abs(p_s - 0.4267) <= 1e-4)) and round(s_total, 4) == 3.4142,
            f"all event probabilities {p_s[0]:.6f}, total {s_total:.4f}",
        )
    )
    verdicts.append(
        Verdict(
            "table2-expected",
            bool(np.all(np.abs(p_r - 0.2929) <= 1e-4)) and round(r_total, 4) == 2.3431,
            f"all event probabilities {p_r[0]:.6f}, total {r_total:.4f}",
        )
    )

    for scn in (chsh, nc):
        table = scenario.exclusivity_table(scn)
        diag_ok = np.max(np.abs(np.diag(table) - 1.0)) <= 1e-12
        edge_vals = [table[j, i] for i, j in scn.graph.edges]
        edges_ok = max(edge_vals) <= 1e-12
        verdicts.append(
            Verdict(
                f"{scn.name}-exclusivity-table",
                bool(diag_ok and edges_ok),
                f"{len(edge_vals)} declared edges at zero, 8 diagonal ones",
            )
        )

    bases = scenario.measurement_bases()
    worst_gram = 0.0
    for basis in bases:
        mat = np.array([v.amps for v in basis])
        gram = mat.conj() @ mat.T
        worst_gram = max(worst_gram, float(np.max(np.abs(gram - np.eye(5)))))
    verdicts.append(
        Verdict(
            "measurement-bases",
            worst_gram <= 1e-12,
            f"8 five-outcome bases, worst Gram deviation {worst_gram:.2e}",
        )
    )

    rng = np.random.Generator(np.random.Philox(20240901))
    states4 = _random_states(rng, 1000, 4)
    p4 = _event_probability_matrix(states4, scenario.build_chsh_scenario())
    s_direct = p4.sum(axis=1)
    pauli_z = np.array([[1, 0], [0, -1]], dtype=complex)
    pauli_x = np.array([[0, 1], [1, 0]], dtype=complex)
    obs = {(i, j): np.kron(a, b) for i, a in ((0, pauli_z), (1, pauli_x)) for j, b in ((0, pauli_z), (1, pauli_x))}
    correlator_sum = obs[(0, 0)] + obs[(1, 0)] - obs[(1, 1)] + obs[(0, 1)]
    c_vals = np.real(np.einsum("td,de,te->t", states4.conj(), correlator_sum, states4))
    identity_gap = float(np.max(np.abs(s_direct - (2.0 + c_vals / 2.0))))
    verdicts.append(
        Verdict(
            "chsh-identity",
            identity_gap <= 1e-10,
            f"event sum equals 2 + C/2 within {identity_gap:.2e} on 1000 random states",
        )
    )

    states5 = _random_states(rng, 1000, 5)
    p5 = _event_probability_matrix(states5, scenario.build_nc_scenario())
    worst = 0.0
    for clique in _all_cliques(graph_b):
        worst = max(worst, float(np.max(p4[:, list(clique)].sum(axis=1))))
    for clique in _all_cliques(graph_c):
        worst = max(worst, float(np.max(p5[:, list(clique)].sum(axis=1))))
    for m in eprinciple.all_merge_maps():
        joint = sum(p4[:, i] * p5[:, m.sigma[i]] for i in range(8))
        worst = max(worst, float(np.max(joint)))
    verdicts.append(
        Verdict(
            "clique-probability-bound",
            worst <= 1.0 + 1e-12,
            f"largest clique probability sum {worst:.12f} over 1000 random states",
        )
    )

    bundle.tables["T1"] = [
        {
            "event": e.label,
            "notation": scenario.chsh_event_notation(k),
            "expected": float(p_s[k]),
            "reported": reported.CHSH_EVENT_MEASUREMENTS[k][0],
            "reported_err": reported.CHSH_EVENT_MEASUREMENTS[k][1],
        }
        for k, e in enumerate(chsh.events)
    ]
    bundle.tables["T2"] = [
        {
            "event": e.label,
            "notation": scenario.nc_event_notation(k),
            "expected": float(p_r[k]),
            "reported": reported.NC_EVENT_MEASUREMENTS[k][0],
            "reported_err": reported.NC_EVENT_MEASUREMENTS[k][1],
        }
        for k, e in enumerate(nc.events)
    ]
    bundle.tables["T5"] = _basis_table(bases)
    bundle.tables["T5_reported_check"] = _basis_discrepancy_table(bases)
    return bundle


def _basis_table(bases) -> list[dict]:
    rows = []
    for i, basis in enumerate(bases):
        slot_labels = [f"v{(i - 2) % 8}", f"v{(i - 1) % 8}", f"v{i}", "c0", "c1"]
        for slot, (label, vec) in enumerate(zip(slot_labels, basis)):
            rows.append(
                {
                    "basis": i,
                    "slot": slot,
                    "label": label,
                    **{f"c{k}": float(vec.amps[k].real) for k in range(5)},
                }
            )
    return rows


def _basis_discrepancy_table(bases) -> list[dict]:
    """How far the lab-reported completion vectors sit from the derived ones."""
    rows = []
    for i, basis in enumerate(bases):
        triple, completion = basis[:3], basis[3:]
        for which, comp in enumerate(reported.NC_COMPLETIONS_REPORTED[i]):
            w = StateVector.normalize(np.array(comp, dtype=complex))
            triple_overlap = max(abs(inner_product(v, w)) for v in triple)
            inside = sum(inner_product(c, w) * c.amps for c in completion)
            residual = float(np.linalg.norm(w.amps - inside))
            rows.append(
                {
                    "basis": i,
                    "reported_vector": which,
                    "max_overlap_with_triple": float(triple_overlap),
                    "residual_outside_completion": residual,
                }
            )
    return rows


def build_simulate_bundle(seed: int, shots: int, visibility: float, which: str) -> ReportBundle:
    bundle = ReportBundle()
    chsh_run = nc_run = None
    if which in ("chsh", "both"):
        chsh_run = montecarlo.run_chsh(seed, shots, montecarlo.NoiseModel(visibility, 4))
        expected = scenario.build_chsh_scenario().event_probabilities()
        bundle.tables["T1"] = _run_table(chsh_run, expected, scenario.chsh_event_notation,
                                         reported.CHSH_EVENT_MEASUREMENTS)
        bundle.tables["T1"].append(
            {"event": "S", "notation": "", "expected": float(expected.sum()),
             "reported": reported.CHSH_TOTAL_MEASUREMENT[0],
             "reported_err": reported.CHSH_TOTAL_MEASUREMENT[1],
             "simulated": chsh_run.total, "stderr": chsh_run.total_err}
        )
    if which in ("nc", "both"):
        nc_run = montecarlo.run_nc(seed, shots, montecarlo.NoiseModel(visibility, 5))
        expected = scenario.build_nc_scenario().event_probabilities()
        bundle.tables["T2"] = _run_table(nc_run, expected, scenario.nc_event_notation,
                                         reported.NC_EVENT_MEASUREMENTS)
        bundle.tables["T2"].append(
            {"event": "R", "notation": "", "expected": float(expected.sum()),
             "reported": reported.NC_TOTAL_MEASUREMENT[0],
             "reported_err": reported.NC_TOTAL_MEASUREMENT[1],
             "simulated": nc_run.total, "stderr": nc_run.total_err}
        )
    if chsh_run is not None and nc_run is not None:
        w_reports = montecarlo.run_w_report(chsh_run, nc_run)
        bundle.tables["T3"] = [
            {
                "index": rep.index,
                **{f"sigma{i}": rep.merge.sigma[i] for i in range(8)},
                "value": rep.value,
                "uncertainty": rep.uncertainty,
                "reported": reported.W_MEASUREMENTS[rep.index - 1][0],
                "reported_err": reported.W_MEASUREMENTS[rep.index - 1][1],
            }
            for rep in w_reports
        ]
        exceeded = [rep.index for rep in w_reports if rep.exceeds_bound()]
        bundle.verdicts.append(
            Verdict(
                "simulated-w-bound",
                not exceeded,
                "no inequality exceeds 1 by more than 3 sigma"
                if not exceeded
                else f"inequalities above bound: {exceeded}",
            )
        )
        (r_bound, r_err), (s_bound, s_err) = eprinciple.cross_bounds(
            (chsh_run.total, chsh_run.total_err), (nc_run.total, nc_run.total_err)
        )
        bundle.tables["cross_bounds"] = [
            {"bound_on": "R", "from": "simulated S", "value": r_bound, "err": r_err},
            {"bound_on": "S", "from": "simulated R", "value": s_bound, "err": s_err},
        ]
    return bundle


def _run_table(run, expected, notation, measurements) -> list[dict]:
    return [
        {
            "event": run.labels[k],
            "notation": notation(k),
            "expected": float(expected[k]),
            "reported": measurements[k][0],
            "reported_err": measurements[k][1],
            "simulated": float(run.estimates[k]),
            "stderr": float(run.stderrs[k]),
        }
        for k in range(len(run.labels))
    ]


def _check_table(check_run, scn, mu: str, prefix: str) -> list[dict]:
    rows = []
    ideal = scenario.exclusivity_table(scn)
    for j, i in check_run.pairs:
        p_hat, err = check_run.value(j, i)
        rows.append(
            {
                "probability": f"p(1|{mu}{j};{prefix}{i})",
                "ideal": float(ideal[j, i]),
                "simulated": p_hat,
                "stderr": err,
            }
        )
    return rows


def build_report_bundle(seed: int, shots: int, visibility: float) -> ReportBundle:
    bundle = build_verify_bundle()
    bundle.merge(build_simulate_bundle(seed, shots, visibility, "both"))
    chsh_checks = montecarlo.run_chsh_exclusivity_checks(
        seed + 1, shots, montecarlo.NoiseModel(visibility, 4)
    )
    nc_checks = montecarlo.run_nc_exclusivity_checks(
        seed + 2, shots, montecarlo.NoiseModel(visibility, 5)
    )
    bundle.tables["T4"] = _check_table(chsh_checks, scenario.build_chsh_scenario(), "mu", "u")
    bundle.tables["T6"] = _check_table(nc_checks, scenario.build_nc_scenario(), "mu'", "v")
    return bundle


def bundle_to_json_dict(bundle: ReportBundle) -> dict:
    return {
        "tables": bundle.tables,
        "graphs": {k: exgraph.to_json_dict(g) for k, g in bundle.graphs.items()},
        "verdicts": [
            {"name": v.name, "passed": v.passed, "detail": v.detail} for v in bundle.verdicts
        ],
    }


def _format_cell(value) -> str:
    if isinstance(value, float):
        return f"{value:.4f}"
    return str(value)


def print_bundle(bundle: ReportBundle, stream=None) -> None:
    stream = stream or sys.stdout
    for name, rows in bundle.tables.items():
        print(f"== {name} ==", file=stream)
        if not rows:
            continue
        headers = list(rows[0].keys())
        print("  " + "  ".join(headers), file=stream)
        for row in rows:
            print("  " + "  ".join(_format_cell(row.get(h, "")) for h in headers), file=stream)
        print(file=stream)
    for key, g in bundle.graphs.items():
        print(f"graph {key}: {g.n} nodes, {len(g.edges)} edges", file=stream)
    if bundle.graphs:
        print(file=stream)
    for verdict in bundle.verdicts:
        status = "PASS" if verdict.passed else "FAIL"
        print(f"[{status}] {verdict.name}: {verdict.detail}", file=stream)


def write_bundle(bundle: ReportBundle, out_dir: Path, fmt: str) -> None:
    out_dir.mkdir(parents=True, exist_ok=True)
    if fmt == "json":
        path = out_dir / "report.json"
        path.write_text(json.dumps(bundle_to_json_dict(bundle), indent=2) + "\n", encoding="utf-8")
    else:
        for name, rows in bundle.tables.items():
            if not rows:
                continue
            with open(out_dir / f"{name}.csv", "w", newline="", encoding="utf-8") as fh:
                writer = csv.DictWriter(fh, fieldnames=list(rows[0].keys()))
                writer.writeheader()
                writer.writerows(rows)
        if bundle.verdicts:
            verdict_rows = [
                {"name": v.name, "passed": v.passed, "detail": v.detail} for v in bundle.verdicts
            ]
            with open(out_dir / "verdicts.csv", "w", newline="", encoding="utf-8") as fh:
                writer = csv.DictWriter(fh, fieldnames=["name", "passed", "detail"])
                writer.writeheader()
                writer.writerows(verdict_rows)
    for key, g in bundle.graphs.items():
        (out_dir / f"{key}.json").write_text(
            json.dumps(exgraph.to_json_dict(g), indent=2) + "\n", encoding="utf-8"
        )


def _add_sim_flags(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--seed", type=int, default=0, help="master seed (64-bit int)")
    parser.add_argument("--shots", type=int, default=montecarlo.DEFAULT_SHOTS,
                        help="shots per setting; 0 = analytic (infinite statistics)")
    parser.add_argument("--visibility", type=float, default=1.0, help="noise visibility in [0, 1]")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="exclusivity",
        description="Verify and simulate the paired CHSH / non-contextuality experiments.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_verify = sub.add_parser("verify", help="run the full ideal-value verification suite")
    p_verify.add_argument("--out", type=Path, default=None, help="directory for table/verdict files")
    p_verify.add_argument("--format", choices=("csv", "json"), default="csv")
    p_verify.add_argument("--perturb-event", default=None, metavar="LABEL",
                          help="test hook: nudge one event vector before checking")

    p_sim = sub.add_parser("simulate", help="finite-statistics simulation of either experiment")
    p_sim.add_argument("which", choices=("chsh", "nc", "both"))
    _add_sim_flags(p_sim)
    p_sim.add_argument("--out", type=Path, default=None)
    p_sim.add_argument("--format", choices=("csv", "json"), default="csv")

    p_export = sub.add_parser("export-graph", help="write an exclusivity graph as DOT or JSON")
    p_export.add_argument("which", choices=("f1b", "f1c", "f4"))
    p_export.add_argument("--format", choices=("dot", "json"), default="dot")
    p_export.add_argument("--out", type=Path, default=None)

    p_scn = sub.add_parser("scenario", help="save or load a scenario JSON file")
    p_scn.add_argument("direction", choices=("save", "load"))
    p_scn.add_argument("path", type=Path)
    p_scn.add_argument("--which", choices=("chsh", "nc"), default="chsh",
                       help="scenario to save (ignored on load)")

    p_report = sub.add_parser("report", help="verify + simulate and bundle all tables")
    _add_sim_flags(p_report)
    p_report.add_argument("--out", type=Path, default=None)
    p_report.add_argument("--format", choices=("csv", "json"), default="csv")
    return parser


def _emit(bundle: ReportBundle, out: Path | None, fmt: str) -> None:
    if out is None:
        print_bundle(bundle)
    else:
        write_bundle(bundle, out, fmt)
        for verdict in bundle.verdicts:
            status = "PASS" if verdict.passed else "FAIL"
            print(f"[{status}] {verdict.name}: {verdict.detail}")


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)

    if args.command in ("simulate", "report"):
        if not 0.0 <= args.visibility <= 1.0:
            parser.error("--visibility must lie in [0, 1]")
        if args.shots < 0:
            parser.error("--shots must be non-negative (0 = analytic)")

    if args.command == "verify":
        bundle = build_verify_bundle(perturb_event=args.perturb_event)
        _emit(bundle, args.out, args.format)
        return 0 if bundle.all_passed() else 1

    if args.command == "simulate":
        bundle = build_simulate_bundle(args.seed, args.shots, args.visibility, args.which)
        _emit(bundle, args.out, args.format)
        return 0 if bundle.all_passed() else 1

    if args.command == "export-graph":
        key = {"f1b": "F1b", "f1c": "F1c", "f4": "F4"}[args.which]
        graph = _standard_graphs()[key]
        labels = _graph_labels(key)
        if args.format == "dot":
            text = exgraph.to_dot(graph, labels, name=key)
        else:
            body = exgraph.to_json_dict(graph)
            body["labels"] = labels
            text = json.dumps(body, indent=2) + "\n"
        if args.out is None:
            sys.stdout.write(text)
            print(f"{args.which}: {graph.n} nodes, {len(graph.edges)} edges", file=sys.stderr)
        else:
            args.out.write_text(text, encoding="utf-8")
            print(f"{args.which}: {graph.n} nodes, {len(graph.edges)} edges")
        return 0

    if args.command == "scenario":
        if args.direction == "save":
            scn = scenario.build_chsh_scenario() if args.which == "chsh" else scenario.build_nc_scenario()
            scenario.save_scenario(scn, args.path)
            print(f"saved {scn.name} scenario to {args.path}")
            return 0
        try:
            scn = scenario.load_scenario(args.path)
        except (ParseError, InvariantViolation) as exc:
            print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
            return 1
        print(f"loaded {scn.name}: dim {scn.dim}, {len(scn.events)} events, "
              f"{len(scn.graph.edges)} exclusivity relations; invariants hold")
        return 0

    if args.command == "report":
        bundle = build_report_bundle(args.seed, args.shots, args.visibility)
        _emit(bundle, args.out, args.format)
        return 0 if bundle.all_passed() else 1

    raise AssertionError(f"unhandled command {args.command}")


if __name__ == "__main__":
    sys.exit(main())
