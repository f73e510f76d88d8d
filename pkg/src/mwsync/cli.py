"""Command line front end.

Verbs:

* ``eval``           evaluate a named map on the grid, emit CSV
* ``check``          residual certificate for one differential property
* ``causal``         chronology / automorphism checks for a named map
* ``propertime``     proper-time computations and cross-checks
* ``counterexample`` the two-observer averaging construction, documented

Exit codes: 0 the certified property holds (or the check does not
apply), 1 a property violation was found, 2 input validation failed,
3 a runtime evaluation error occurred.  Output is deterministic: no
timestamps, fixed float formatting, seeds always explicit.

A residual check passes when its maximum either sits at the rounding
floor ``512 * eps * (1 + max|F|) / h**k`` (k = 1 for first-order
stencils, k = 2 for the wave stencils) or shrinks with demonstrated
order near 2 under step halving.  Exact solutions land on the floor:
their truncation error is identically zero, so no order can be
measured, only rounding remains.
"""

from __future__ import annotations

import argparse
import sys

import numpy as np

from .algebra import ZERO
from .errors import MwsyncError, ScenarioError
from .fieldcheck import (
    AutomorphismOutcome,
    ConjugateInput,
    GridSpec,
    MapSum,
    automorphism_suite,
    causal_equivalence_check,
    chronology_check,
    conformality_report,
    holomorphy_residual,
    log_factor_wave_residual,
    low_counterexample,
    wave_residual,
)
from .mwmap import MarzkeWheelerMap
from .observers import Inertial
from .propertime import (
    arc_length_proper_time,
    gravitational_dilation,
    proper_time_accelerated,
    proper_time_inertial,
    radar_trajectory_of,
    twin_consistency,
)
from .scenario import Scenario, load_scenario

_FMT = "%.17g"


def _fmt(value: float) -> str:
    return _FMT % float(value)


def _emit(lines, out_path):
    text = "\n".join(lines) + "\n"
    if out_path:
        with open(out_path, "w", encoding="utf-8") as handle:
            handle.write(text)
    else:
        sys.stdout.write(text)


def _grid_from_flag(text: str) -> GridSpec:
    parts = [p.strip() for p in text.split(",")]
    if len(parts) not in (6, 7):
        raise ScenarioError(
            "--grid needs 'tmin,tmax,xmin,xmax,nt,nx[,h]', got " + repr(text)
        )
    try:
        h = float(parts[6]) if len(parts) == 7 else None
        return GridSpec(
            float(parts[0]), float(parts[1]), float(parts[2]), float(parts[3]),
            int(parts[4]), int(parts[5]), h,
        )
    except ValueError as exc:
        raise ScenarioError(f"bad --grid: {exc}") from exc


def _grid_lines(grid: GridSpec):
    return [
        f"grid_t: [{_fmt(grid.t_min)}, {_fmt(grid.t_max)}] n={grid.n_t}",
        f"grid_x: [{_fmt(grid.x_min)}, {_fmt(grid.x_max)}] n={grid.n_x}",
        f"grid_h: {_fmt(grid.h)}",
    ]


def _witness_lines(witness):
    if witness is None:
        return ["witness: none"]
    return [
        f"witness_z1: {_fmt(witness.z1.t)} {_fmt(witness.z1.x)}",
        f"witness_z2: {_fmt(witness.z2.t)} {_fmt(witness.z2.x)}",
        f"relation_in: {witness.relation_in.value}",
        f"relation_out: {witness.relation_out.value}",
    ]


def _map_magnitude(m, grid: GridSpec) -> float:
    T, X = grid.meshes()
    out_t, out_x = m.components(T, X)
    return float(max(np.max(np.abs(out_t)), np.max(np.abs(out_x))))


def _rounding_floor(kind: str, m, grid: GridSpec) -> float:
    if kind == "loggwave":
        T, X = grid.meshes()
        mag = float(np.max(np.abs(np.log(m.conformal_components(T, X)))))
    else:
        mag = _map_magnitude(m, grid)
    k = 2 if kind in ("wave", "loggwave") else 1
    eps = float(np.finfo(float).eps)
    return 512.0 * eps * (1.0 + mag) / grid.h ** k


# -- verbs ---------------------------------------------------------------


def _cmd_eval(args, scenario: Scenario, grid: GridSpec) -> int:
    m = scenario.map(args.map)
    try:
        T, X = grid.meshes()
        out_t, out_x = m.components(T, X)
    except MwsyncError:
        _locate_eval_failure(m, grid)
        raise
    rows = ["t,x,out_t,out_x"]
    for i in range(grid.n_t):
        for j in range(grid.n_x):
            rows.append(
                ",".join(
                    (
                        _fmt(T[i, j]),
                        _fmt(X[i, j]),
                        _fmt(out_t[i, j]),
                        _fmt(out_x[i, j]),
                    )
                )
            )
    _emit(rows, args.out)
    return 0


def _locate_eval_failure(m, grid: GridSpec):
    # Rescan node by node so the error can name the first bad node.
    for tv in grid.t_nodes:
        for xv in grid.x_nodes:
            try:
                m.components(np.asarray(tv), np.asarray(xv))
            except MwsyncError as exc:
                raise MwsyncError(
                    f"evaluation failed at node t={_fmt(tv)} x={_fmt(xv)}: {exc}"
                ) from exc


_CHECKS = {
    "holo": lambda m, grid: holomorphy_residual(m, grid),
    "antiholo": lambda m, grid: holomorphy_residual(m, grid, anti=True),
    "wave": wave_residual,
    "conformal": conformality_report,
    "loggwave": log_factor_wave_residual,
}


def _cmd_check(args, scenario: Scenario, grid: GridSpec) -> int:
    m = scenario.map(args.map)
    if args.kind == "loggwave" and not hasattr(m, "conformal_components"):
        raise ScenarioError(
            f"map {args.map!r} has no conformal factor; loggwave applies "
            "to radar charts only"
        )
    report = _CHECKS[args.kind](m, grid)
    floor = _rounding_floor(args.kind, m, grid)
    order = report.convergence_order
    order_ok = order is not None and 1.6 <= order <= 2.4
    passed = report.max_abs <= floor or order_ok
    lines = [
        f"check: {args.kind}",
        f"map: {args.map}",
        *_grid_lines(grid),
        f"max_abs: {_fmt(report.max_abs)}",
        f"mean_abs: {_fmt(report.mean_abs)}",
        f"location_t: {_fmt(report.location_of_max[0])}",
        f"location_x: {_fmt(report.location_of_max[1])}",
        f"order: {'none' if order is None else _fmt(order)}",
        f"floor: {_fmt(floor)}",
    ]
    if args.kind == "conformal":
        lines += [
            f"factor_min: {_fmt(report.factor_min)}",
            f"factor_max: {_fmt(report.factor_max)}",
            f"n_nonpositive: {report.n_nonpositive}",
        ]
        passed = passed and report.n_nonpositive == 0
    lines.append(f"verdict: {'pass' if passed else 'fail'}")
    _emit(lines, args.out)
    return 0 if passed else 1


def _chronology_lines(label: str, rep) -> list:
    lines = [
        f"{label}_pairs: {rep.n_pairs}",
        f"{label}_seed: {rep.seed}",
        f"{label}_min_margin: {_fmt(rep.min_margin)}",
        f"{label}_passed: {str(rep.passed).lower()}",
    ]
    if rep.witness is not None:
        lines += [f"{label}_{line}" for line in _witness_lines(rep.witness)]
    return lines


def _cmd_causal(args, scenario: Scenario, grid: GridSpec) -> int:
    m = scenario.map(args.map)
    pairs = args.pairs
    seed = scenario.seed if args.seed is None else args.seed
    tol = scenario.tolerances.null_band
    lines = [f"map: {args.map}", *_grid_lines(grid)]
    if isinstance(m, MarzkeWheelerMap):
        rep = automorphism_suite(m, grid, pairs, seed)
        lines.append(f"status: {rep.outcome.value}")
        lines.append(f"lip: {rep.lip.verdict.value}")
        lines.append(f"lip_reason: {rep.lip.reason}")
        if rep.lip.null_window is not None:
            (plo, phi), (mlo, mhi) = rep.lip.null_window
            lines.append(
                f"lip_null_window: plus [{_fmt(plo)}, {_fmt(phi)}] "
                f"minus [{_fmt(mlo)}, {_fmt(mhi)}]"
            )
        if rep.outcome is AutomorphismOutcome.NOT_APPLICABLE:
            _emit(lines, args.out)
            return 0
        lines += _chronology_lines("forward", rep.forward)
        lines += _chronology_lines("inverse", rep.inverse)
        lines.append(f"roundtrip_max: {_fmt(rep.roundtrip_max)}")
        lines.append(f"orientation: {rep.orientation.value}")
        lines.append(f"axis_max: {_fmt(rep.axis_max)}")
        _emit(lines, args.out)
        return 0 if rep.outcome is AutomorphismOutcome.PASS else 1
    forward = chronology_check(m, grid, pairs, seed, tol)
    equivalence = causal_equivalence_check(m, grid, pairs, seed, tol)
    passed = forward.passed and equivalence.passed
    lines.append(f"status: {'pass' if passed else 'fail'}")
    lines += _chronology_lines("forward", forward)
    lines += _chronology_lines("equivalence", equivalence)
    _emit(lines, args.out)
    return 0 if passed else 1


def _need(args, names: list, mode: str):
    missing = [
        "--" + name.replace("_", "-")
        for name in names
        if getattr(args, name) is None
    ]
    if missing:
        raise ScenarioError(
            f"propertime mode {mode!r} needs {', '.join(missing)}"
        )


def _cmd_propertime(args, scenario: Scenario, grid: GridSpec) -> int:
    ctx = scenario.ctx
    quad_tol = scenario.tolerances.quad_tol
    tol = args.tol
    if args.mode == "dilation":
        _need(args, ["accel", "x1", "x2", "dt"], "dilation")
        value = gravitational_dilation(args.accel, args.x1, args.x2, args.dt, ctx)
        _emit(
            [
                "mode: dilation",
                f"dt_at_x1: {_fmt(args.dt)}",
                f"dt_at_x2: {_fmt(value)}",
                f"ratio: {_fmt(value / args.dt)}",
            ],
            args.out,
        )
        return 0
    if args.mode == "twin":
        _need(args, ["a", "b", "a0", "a1"], "twin")
        if (args.b0 is None) != (args.b1 is None):
            raise ScenarioError("give both --b0 and --b1 or neither")
        window_b = None if args.b0 is None else (args.b0, args.b1)
        rep = twin_consistency(
            scenario.observer(args.a),
            scenario.observer(args.b),
            (args.a0, args.a1),
            window_b,
            ctx,
            tol,
            args.n if args.n is not None else 2049,
            quad_tol,
        )
        _emit(
            [
                "mode: twin",
                f"observer_a: {args.a}",
                f"observer_b: {args.b}",
                f"window_a: [{_fmt(rep.window_a[0])}, {_fmt(rep.window_a[1])}]",
                f"window_b: [{_fmt(rep.window_b[0])}, {_fmt(rep.window_b[1])}]",
                f"tau_a: {_fmt(rep.tau_a)}",
                f"tau_b: {_fmt(rep.tau_b)}",
                f"tau_a_by_b: {_fmt(rep.tau_a_by_b)}",
                f"tau_b_by_a: {_fmt(rep.tau_b_by_a)}",
                f"younger: {rep.younger}",
                f"max_rel_disagreement: {_fmt(rep.max_rel_disagreement)}",
                f"consistent: {str(rep.consistent).lower()}",
            ],
            args.out,
        )
        return 0 if rep.consistent else 1
    # Dual-route modes: chart integral against direct arc length.
    _need(args, ["target", "s0", "s1"], args.mode)
    target = scenario.observer(args.target)
    n = args.n if args.n is not None else 129
    direct = arc_length_proper_time(target, args.s0, args.s1, ctx, quad_tol)
    if args.mode == "inertial":
        chart_obs = Inertial(0.0, ZERO, ctx)
        chart = scenario.chart(chart_obs)
        traj = radar_trajectory_of(chart, target, (args.s0, args.s1), n, ctx)
        via = proper_time_inertial(traj, ctx, quad_tol)
        chart_name = "lab"
    else:
        _need(args, ["observer"], "accelerated")
        chart = scenario.chart(scenario.observer(args.observer))
        traj = radar_trajectory_of(chart, target, (args.s0, args.s1), n, ctx)
        via = proper_time_accelerated(chart, traj, ctx, quad_tol)
        chart_name = args.observer
    rel = abs(via.tau - direct.tau) / abs(direct.tau)
    agree = rel <= tol
    _emit(
        [
            f"mode: {args.mode}",
            f"target: {args.target}",
            f"chart: {chart_name}",
            f"window: [{_fmt(args.s0)}, {_fmt(args.s1)}]",
            f"tau_direct: {_fmt(direct.tau)}",
            f"tau_chart: {_fmt(via.tau)}",
            f"rel_disagreement: {_fmt(rel)}",
            f"n_evals: {direct.n_evals + via.n_evals}",
            f"consistent: {str(agree).lower()}",
        ],
        args.out,
    )
    return 0 if agree else 1


def _cmd_counterexample(args, scenario: Scenario, grid: GridSpec) -> int:
    g1 = scenario.observer(args.g1)
    g2 = scenario.observer(args.g2)
    seed = scenario.seed if args.seed is None else args.seed
    rep = low_counterexample(g1, g2, grid, seed, args.pairs)
    F = MapSum([scenario.chart(g1), ConjugateInput(scenario.chart(g2))])
    wave_floor = _rounding_floor("wave", F, grid)
    wave_ok = rep.wave.max_abs <= wave_floor
    found = rep.equivalence.witness is not None
    ok = found and rep.axis_ok and wave_ok
    lines = [
        f"g1: {args.g1}",
        f"g2: {args.g2}",
        *_grid_lines(grid),
        f"wave_max_abs: {_fmt(rep.wave.max_abs)}",
        f"wave_floor: {_fmt(wave_floor)}",
        f"wave_ok: {str(wave_ok).lower()}",
        f"holo_max_abs: {_fmt(rep.holo.max_abs)}",
        f"antiholo_max_abs: {_fmt(rep.antiholo.max_abs)}",
        f"axis_max: {_fmt(rep.axis_max)}",
        f"axis_ok: {str(rep.axis_ok).lower()}",
        *_chronology_lines("forward", rep.forward),
        *_chronology_lines("equivalence", rep.equivalence),
        f"witness_found: {str(found).lower()}",
        f"status: {'pass' if ok else 'fail'}",
    ]
    _emit(lines, args.out)
    return 0 if ok else 1


# -- parser and entry point ----------------------------------------------


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="mwsync",
        description="Radar synchronization charts on the Minkowski plane",
    )
    sub = parser.add_subparsers(dest="verb", required=True)

    def common(p):
        p.add_argument("--scenario", required=True, help="scenario JSON file")
        p.add_argument("--out", default=None, help="write the report here")
        p.add_argument(
            "--grid", default=None,
            help="override grid: tmin,tmax,xmin,xmax,nt,nx[,h]",
        )

    p = sub.add_parser("eval", help="evaluate a map on the grid as CSV")
    common(p)
    p.add_argument("--map", required=True)

    p = sub.add_parser("check", help="residual certificate for a map")
    common(p)
    p.add_argument("--map", required=True)
    p.add_argument(
        "--kind", required=True,
        choices=["holo", "antiholo", "wave", "conformal", "loggwave"],
    )

    p = sub.add_parser("causal", help="chronology / automorphism checks")
    common(p)
    p.add_argument("--map", required=True)
    p.add_argument("--pairs", type=int, default=1000)
    p.add_argument("--seed", type=int, default=None)

    p = sub.add_parser("propertime", help="proper-time computations")
    common(p)
    p.add_argument(
        "--mode", required=True,
        choices=["inertial", "accelerated", "twin", "dilation"],
    )
    p.add_argument("--target", default=None, help="observer whose clock is timed")
    p.add_argument("--observer", default=None, help="observer carrying the chart")
    p.add_argument("--s0", type=float, default=None)
    p.add_argument("--s1", type=float, default=None)
    p.add_argument("--a", default=None, help="twin A observer name")
    p.add_argument("--b", default=None, help="twin B observer name")
    p.add_argument("--a0", type=float, default=None)
    p.add_argument("--a1", type=float, default=None)
    p.add_argument("--b0", type=float, default=None)
    p.add_argument("--b1", type=float, default=None)
    p.add_argument("--x1", type=float, default=None)
    p.add_argument("--x2", type=float, default=None)
    p.add_argument("--dt", type=float, default=None)
    p.add_argument("--accel", type=float, default=None)
    p.add_argument("--n", type=int, default=None)
    p.add_argument("--tol", type=float, default=1e-6)

    p = sub.add_parser(
        "counterexample", help="two-observer averaging construction"
    )
    common(p)
    p.add_argument("--g1", required=True)
    p.add_argument("--g2", required=True)
    p.add_argument("--pairs", type=int, default=100000)
    p.add_argument("--seed", type=int, default=None)

    return parser


_VERBS = {
    "eval": _cmd_eval,
    "check": _cmd_check,
    "causal": _cmd_causal,
    "propertime": _cmd_propertime,
    "counterexample": _cmd_counterexample,
}


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code) if exc.code is not None else 0
    try:
        scenario = load_scenario(args.scenario)
        grid = (
            _grid_from_flag(args.grid) if args.grid is not None else scenario.grid
        )
        return _VERBS[args.verb](args, scenario, grid)
    except ScenarioError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except MwsyncError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
