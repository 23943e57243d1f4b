"""Command-line entry point: ``mcstandards <subcommand> ...``."""

from __future__ import annotations

import argparse
import os
import sys
from dataclasses import dataclass, field

from . import formats, instances
from .circuits import (DEFAULT_CIRCUIT_CAP, PerCircuit, SumCost, build_circulation_problem,
                       enumerate_simple_circuits)
from .corpus import random_corpus
from .errors import (CircuitCapError, EvaluationError, GridCapError, InfeasibleCandidateError,
                     InfeasibleError, McsError, ParseError, ProblemError)
from .pareto import brute_force_front
from .problem import DEFAULT_TOL, Relation, default_grid_cap
from .scalarize import Method, ScalarizationKind
from .solver import DEFAULT_TIE_TOL, LexOrder, solve, solve_lexicographic, solve_normalized
from .standards import compute_standards
from .theorems import check_theorems

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_PARSE = 3
EXIT_INFEASIBLE = 4
EXIT_CAP = 5
EXIT_CERTIFY = 6
EXIT_INVALID = 7
EXIT_EVAL = 8

SUBCOMMANDS = ("standards", "solve", "front", "verify", "circuits", "build")


@dataclass
class RunConfig:
    subcommand: str
    inputs: list = field(default_factory=list)
    resolution: int = 10
    refine_rounds: int = 2
    tol: float = DEFAULT_TOL
    tie_tol: float = DEFAULT_TIE_TOL
    stage_tol: float = DEFAULT_TIE_TOL
    output_format: str = "text"
    grid_cap: int | None = None
    workers: int = 1
    kind: str = "gamma"
    squared: bool = False
    normalized: bool = False
    lex: str | None = None
    certify: bool = False
    random: int = 0
    seed: int = 0
    objectives: str = "per-circuit"
    relation: str = "le"

    def __post_init__(self):
        if self.subcommand not in SUBCOMMANDS:
            raise ValueError(f"unknown subcommand {self.subcommand!r}")
        if min(self.tol, self.tie_tol, self.stage_tol) < 0:
            raise ValueError("tolerances must be nonnegative")
        if self.resolution < 1:
            raise ValueError("resolution must be at least 1")
        if self.grid_cap is None:
            self.grid_cap = default_grid_cap()


def _fmt_num(x):
    x = float(x)
    return str(int(x)) if x.is_integer() and abs(x) < 1e15 else repr(x)


def _fmt_point(pt):
    return " ".join(f"{k}={_fmt_num(v)}" for k, v in pt.items()) if pt is not None else "-"


def _fmt_vec(v):
    return "(" + ", ".join(_fmt_num(x) for x in v) + ")"


def _load_problem(name):
    if name in instances.PROBLEMS:
        return instances.PROBLEMS[name]()
    return formats.load_problem(name)


def _load_graph(name):
    if name in instances.GRAPHS:
        return instances.GRAPHS[name]()
    return formats.load_graph(name)


def _point_json(pt):
    return None if pt is None else {k: v for k, v in pt.items()}


def _report_json(r):
    return {
        "kind": r.kind.method.value,
        "squared": r.kind.squared,
        "normalized": r.normalized,
        "lex_order": r.lex_order.value if r.lex_order else None,
        "resolution_used": r.resolution_used,
        "refine_rounds": r.refine_rounds,
        "best_value": r.best_value,
        "best_points": [_point_json(x) for x in r.best_points],
        "objective_vectors": [list(f) for f in r.objective_vectors],
        "tie_count_before_filter": r.tie_count_before_filter,
        "pareto_certified": r.pareto_certified,
    }


def _standards_json(p, s):
    return {
        "criteria": [o.name for o in p.objectives],
        "directions": [d.value for d in s.directions],
        "ideal": list(s.ideal),
        "anti_ideal": list(s.anti_ideal),
        "attained_at_ideal": [_point_json(x) for x in s.attained_at_ideal],
        "attained_at_anti_ideal": [_point_json(x) for x in s.attained_at_anti_ideal],
    }


def _cmd_standards(cfg):
    p = _load_problem(cfg.inputs[0])
    s = compute_standards(p, cfg.resolution, cfg.tol, cfg.grid_cap, cfg.workers)
    payload = {"input": cfg.inputs[0], "resolution": cfg.resolution,
               "standards": _standards_json(p, s)}
    rows = [("criterion", "sense", "ideal K", "anti-ideal W", "K attained at", "W attained at")]
    for o, k, w, xa, xb in zip(p.objectives, s.ideal, s.anti_ideal,
                               s.attained_at_ideal, s.attained_at_anti_ideal):
        rows.append((o.name, o.direction.value, _fmt_num(k), _fmt_num(w),
                     _fmt_point(xa), _fmt_point(xb)))
    widths = [max(len(r[i]) for r in rows) for i in range(len(rows[0]))]
    lines = ["  ".join(c.ljust(w) for c, w in zip(r, widths)).rstrip() for r in rows]
    lines += [f"K = {_fmt_vec(s.ideal)}", f"W = {_fmt_vec(s.anti_ideal)}"]
    return EXIT_OK, payload, "\n".join(lines)


def _solve_text(r):
    label = f"lexicographic {r.lex_order.value}" if r.lex_order else str(r.kind)
    if r.normalized:
        label += " (normalized)"
    lines = [f"kind: {label}",
             f"resolution: {r.resolution_used}  refine rounds: {r.refine_rounds}",
             f"best value: {_fmt_num(r.best_value)}",
             f"ties before filter: {r.tie_count_before_filter}",
             f"pareto certified: {'yes' if r.pareto_certified else 'no'}"]
    for i, (x, f) in enumerate(zip(r.best_points, r.objective_vectors), 1):
        lines.append(f"point {i}: {_fmt_point(x)}  F = {_fmt_vec(f)}")
    return "\n".join(lines)


def _cmd_solve(cfg):
    p = _load_problem(cfg.inputs[0])
    s = compute_standards(p, cfg.resolution, cfg.tol, cfg.grid_cap, cfg.workers)
    common = dict(tol=cfg.tol, tie_tol=cfg.tie_tol, certify=cfg.certify,
                  cap=cfg.grid_cap, workers=cfg.workers)
    if cfg.lex:
        r = solve_lexicographic(p, s, LexOrder(cfg.lex), cfg.resolution, cfg.stage_tol,
                                squared=cfg.squared, **common)
    else:
        kind = ScalarizationKind(Method(cfg.kind), cfg.squared)
        fn = solve_normalized if cfg.normalized else solve
        r = fn(p, s, kind, cfg.resolution, cfg.refine_rounds, **common)
    payload = {"input": cfg.inputs[0], "standards": _standards_json(p, s),
               "report": _report_json(r)}
    status = EXIT_CERTIFY if cfg.certify and not r.pareto_certified else EXIT_OK
    return status, payload, _solve_text(r)


def _cmd_front(cfg):
    p = _load_problem(cfg.inputs[0])
    front = brute_force_front(p, cfg.resolution, cfg.tol, cfg.grid_cap, cfg.workers)
    payload = {"input": cfg.inputs[0], "resolution": cfg.resolution,
               "total_feasible": front.total_feasible,
               "points": [_point_json(x) for x in front.points],
               "vectors": [list(v) for v in front.vectors],
               "multiplicity": list(front.multiplicity)}
    lines = [f"feasible grid points: {front.total_feasible}",
             f"front size: {len(front.points)}"]
    for x, v, m in zip(front.points, front.vectors, front.multiplicity):
        extra = f"  (x{m})" if m > 1 else ""
        lines.append(f"{_fmt_point(x)}  F = {_fmt_vec(v)}{extra}")
    return EXIT_OK, payload, "\n".join(lines)


def _cmd_verify(cfg):
    named = [(name, _load_problem(name)) for name in cfg.inputs]
    if cfg.random:
        corpus = random_corpus(cfg.seed, cfg.random)
        named += [(f"random[{cfg.seed}:{i}]", p) for i, p in enumerate(corpus)]
    if not named:
        raise ProblemError("verify needs a problem or --random N")
    summary = {}
    failures = []
    for name, p in named:
        for res in check_theorems(p, cfg.resolution, cfg.tol, cfg.tie_tol, cfg.grid_cap,
                                  cfg.workers):
            key = (res.theorem, res.check)
            summary.setdefault(key, [0, 0])
            summary[key][0 if res.passed else 1] += 1
            if not res.passed:
                failures.append({"problem": name, "theorem": res.theorem, "check": res.check,
                                 "counterexample": res.counterexample})
    checks = [{"theorem": t, "check": c, "passed": ok, "failed": bad}
              for (t, c), (ok, bad) in sorted(summary.items())]
    payload = {"problems": [n for n, _ in named], "resolution": cfg.resolution,
               "checks": checks, "failures": failures}
    lines = [f"theorem {c['theorem']}: {c['check']}: "
             f"{'PASS' if not c['failed'] else 'FAIL'} ({c['passed']}/{c['passed'] + c['failed']})"
             for c in checks]
    for f in failures:
        lines.append(f"  counterexample in {f['problem']}: {f['check']}: {f['counterexample']}")
    return (EXIT_CERTIFY if failures else EXIT_OK), payload, "\n".join(lines)


def _cmd_circuits(cfg):
    g = _load_graph(cfg.inputs[0])
    cs = enumerate_simple_circuits(g, DEFAULT_CIRCUIT_CAP)
    payload = {"input": cfg.inputs[0],
               "circuits": [{"variable": y, "vertices": list(c.vertices)}
                            for y, c in zip(cs.variables, cs.circuits)]}
    lines = [f"{len(cs)} simple circuits"]
    for y, c in zip(cs.variables, cs.circuits):
        lines.append(f"{y}: " + " -> ".join(str(v) for v in c.vertices + c.vertices[:1]))
    return EXIT_OK, payload, "\n".join(lines)


def _cmd_build(cfg):
    g = _load_graph(cfg.inputs[0])
    cs = enumerate_simple_circuits(g, DEFAULT_CIRCUIT_CAP)
    spec = SumCost() if cfg.objectives == "sum-cost" else PerCircuit()
    rel = Relation.EQ if cfg.relation == "eq" else Relation.LE
    text = formats.dumps_problem(build_circulation_problem(g, cs, spec, rel))
    return EXIT_OK, {"input": cfg.inputs[0], "problem": text}, text.rstrip("\n")


_COMMANDS = {"standards": _cmd_standards, "solve": _cmd_solve, "front": _cmd_front,
             "verify": _cmd_verify, "circuits": _cmd_circuits, "build": _cmd_build}


def run(cfg: RunConfig):
    """Execute one subcommand; returns ``(exit_status, document_text)``."""
    try:
        status, payload, text = _COMMANDS[cfg.subcommand](cfg)
    except ParseError as err:
        return EXIT_PARSE, f"error: {err}"
    except (InfeasibleError, InfeasibleCandidateError) as err:
        return EXIT_INFEASIBLE, f"error: {err}"
    except (GridCapError, CircuitCapError) as err:
        return EXIT_CAP, f"error: {err}"
    except EvaluationError as err:
        return EXIT_EVAL, f"error: {err}"
    except McsError as err:
        return EXIT_INVALID, f"error: {err}"
    if cfg.output_format == "json":
        return status, formats.dumps_report(cfg.subcommand, payload).rstrip("\n")
    return status, text


def build_parser():
    parser = argparse.ArgumentParser(
        prog="mcstandards",
        description="Scalarize multi-criteria problems with ideal/anti-ideal comparison standards.")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--resolution", type=int, default=10,
                        help="grid steps per interval variable (default 10)")
    common.add_argument("--tol", type=float, default=DEFAULT_TOL, help="feasibility tolerance")
    common.add_argument("--tie-tol", type=float, default=DEFAULT_TIE_TOL,
                        help="tie tolerance on squared scalar values")
    common.add_argument("--grid-cap", type=int, default=None,
                        help="maximum grid points (env MCSTANDARDS_GRID_CAP)")
    common.add_argument("--format", choices=("text", "json"), default="text", dest="output_format")
    common.add_argument("--workers", type=int, default=os.cpu_count() or 1)
    common.add_argument("--single-threaded", action="store_true",
                        help="force one worker (same output, easier debugging)")
    common.add_argument("-o", "--output", help="write the report here instead of stdout")

    sub = parser.add_subparsers(dest="subcommand", required=True)
    p = sub.add_parser("standards", parents=[common], help="ideal and anti-ideal points")
    p.add_argument("problem")
    p = sub.add_parser("solve", parents=[common], help="solve a scalarized problem")
    p.add_argument("problem")
    p.add_argument("--kind", choices=[m.value for m in Method], default="gamma")
    p.add_argument("--squared", action="store_true", help="report squared-form values")
    p.add_argument("--normalized", action="store_true")
    p.add_argument("--lex", choices=[o.value for o in LexOrder])
    p.add_argument("--refine", type=int, default=2, dest="refine_rounds")
    p.add_argument("--stage-tol", type=float, default=DEFAULT_TIE_TOL)
    p.add_argument("--certify", action="store_true")
    p = sub.add_parser("front", parents=[common], help="brute-force Pareto front")
    p.add_argument("problem")
    p = sub.add_parser("verify", parents=[common], help="run the Pareto-optimality checks")
    p.add_argument("problems", nargs="*")
    p.add_argument("--random", type=int, default=0, help="also check N random problems")
    p.add_argument("--seed", type=int, default=0)
    p = sub.add_parser("circuits", parents=[common], help="list simple circuits of a graph")
    p.add_argument("graph")
    p = sub.add_parser("build", parents=[common], help="emit a circulation problem file")
    p.add_argument("graph")
    p.add_argument("--objectives", choices=("per-circuit", "sum-cost"), default="per-circuit")
    p.add_argument("--relation", choices=("le", "eq"), default="le")
    return parser


def config_from_args(args) -> RunConfig:
    ns = vars(args)
    inputs = ns.pop("problems", None) or []
    for key in ("problem", "graph"):
        if ns.get(key) is not None:
            inputs = [ns.pop(key)]
    if ns.get("lex") and ns.get("normalized"):
        raise ValueError("--lex and --normalized cannot be combined")
    workers = 1 if ns.pop("single_threaded", False) else max(1, ns.pop("workers", 1))
    ns.pop("workers", None)
    ns.pop("output", None)
    return RunConfig(inputs=inputs, workers=workers, **ns)


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    output = args.output
    try:
        cfg = config_from_args(args)
    except ValueError as err:
        parser.error(str(err))
    status, text = run(cfg)
    stream = sys.stderr if text.startswith("error:") else sys.stdout
    if output and stream is sys.stdout:
        with open(output, "w") as fh:
            fh.write(text + "\n")
    else:
        print(text, file=stream)
    return status


if __name__ == "__main__":
    sys.exit(main())
