"""Command-line front end.  Every subcommand parses arguments, calls one
library function and prints the result; no numerics live here.

Exit codes: 0 success, 2 bad parameters, 3 size refusal, 4 soundness alarm
(a certified bound exceeded an exact value during a sweep).
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from dataclasses import dataclass
from datetime import datetime, timezone
from pathlib import Path

from . import berge as berge_mod
from . import bounds
from .anneal import local_search_satex
from .counting import count_subgraphs
from .families import FamilySpec, build_family
from .graph import Graph, GraphError
from .patterns import parse_pattern
from .phase import phase_transition_scan
from .search import SizeRefusal, exact_generalized_turan, exact_satex

EXIT_OK, EXIT_PARAM, EXIT_SIZE, EXIT_ALARM = 0, 2, 3, 4
MAX_EXACT_N = 9
MAX_HEURISTIC_N = 32
MAX_PHASE_N = 128


class SoundnessAlarm(Exception):
    def __init__(self, payload):
        super().__init__("a certified bound exceeded an exact value")
        self.payload = payload


@dataclass(frozen=True)
class RunConfig:
    command: str
    fmt: str
    seed: int
    timestamp: bool
    force: bool
    workers: int

    @classmethod
    def from_args(cls, args, default_fmt: str = "json") -> "RunConfig":
        if not 0 <= args.seed < 2 ** 64:
            raise ValueError("seed must be an unsigned 64-bit integer")
        if args.workers < 1:
            raise ValueError("workers must be positive")
        return cls(args.command, args.format or default_fmt, args.seed,
                   not args.no_timestamp, args.force, args.workers)


# -- input parsing ---------------------------------------------------------------


def load_graph(text: str) -> Graph:
    """A graph6 string, or a path to a JSON or graph6 file."""
    path = Path(text)
    if path.is_file():
        body = path.read_text().strip()
        return Graph.from_json(body) if body.startswith("{") else Graph.from_graph6(body)
    return Graph.from_graph6(text)


def load_hypergraph(text: str) -> berge_mod.Hypergraph:
    """complete-<r>-uniform-<n>, gadget-<n>, or a path to a JSON file."""
    if text.startswith("complete-") and "-uniform-" in text:
        r, n = text[len("complete-"):].split("-uniform-")
        return berge_mod.Hypergraph.complete(int(n), int(r))
    if text.startswith("gadget-"):
        return berge_mod.berge_gadget(int(text[len("gadget-"):]))
    path = Path(text)
    if path.is_file():
        return berge_mod.Hypergraph.from_json(path.read_text())
    raise ValueError(f"unknown hypergraph {text!r}")


def _number(text: str):
    try:
        return int(text)
    except ValueError:
        return float(text)


def _check_n(n: int, limit: int, cfg: RunConfig, what: str) -> None:
    if n > limit and not cfg.force:
        hint = "; use --heuristic for local_search" if limit == MAX_EXACT_N else ""
        raise SizeRefusal(f"{what} is limited to n <= {limit}; pass --force to override{hint}")


# -- output ---------------------------------------------------------------------------


def _stamp() -> str:
    return datetime.now(timezone.utc).isoformat(timespec="seconds")


def emit(cfg: RunConfig, payload: dict, rows: list[dict] | None = None, out=None) -> None:
    """JSON: one top-level object.  CSV: header plus ``rows`` (or the payload as one row)."""
    out = out or sys.stdout
    if cfg.fmt == "json":
        obj = {"command": cfg.command, "result": payload}
        if cfg.timestamp:
            obj["timestamp"] = _stamp()
        out.write(json.dumps(obj, sort_keys=True) + "\n")
        return
    rows = rows if rows is not None else [_flatten(payload)]
    fields = list(rows[0]) if rows else []
    if cfg.timestamp:
        stamp = _stamp()
        fields.append("timestamp")
        rows = [{**r, "timestamp": stamp} for r in rows]
    buf = io.StringIO()
    w = csv.DictWriter(buf, fieldnames=fields, lineterminator="\r\n")
    w.writeheader()
    w.writerows(rows)
    out.write(buf.getvalue())


def _flatten(d: dict) -> dict:
    return {k: json.dumps(v, sort_keys=True) if isinstance(v, (dict, list)) else v for k, v in d.items()}


# -- subcommands --------------------------------------------------------------------------


def cmd_count(args, cfg):
    pattern = parse_pattern(args.pattern)
    host = load_graph(args.host)
    _check_n(host.n, MAX_HEURISTIC_N, cfg, "counting")
    emit(cfg, {"pattern": pattern.name, "host": host.to_graph6(), "count": count_subgraphs(pattern, host)})


def cmd_build(args, cfg):
    if args.spec:
        spec = FamilySpec.from_json(Path(args.spec).read_text())
    else:
        params = {}
        for item in args.param or []:
            key, _, value = item.partition("=")
            params[key] = int(value)
        spec = FamilySpec(args.family, params)
    g = build_family(spec, args.n)
    emit(cfg, {**spec.to_json(), "n": g.n, "graph6": g.to_graph6()})


BOUND_EVALUATORS = {
    "csillag1": (bounds.csillag1_lower_bound, ("n", "m", "s", "a", "b")),
    "bollobas": (bounds.bollobas_interpolated_bound, ("n", "k", "r", "m")),
    "kruskal_katona": (bounds.kruskal_katona_bound, ("m", "k", "r")),
    "spanning": (bounds.spanning_satex_estimate, ("n", "H", "F", "m")),
    "pathpath": (bounds.pathpath_main_term, ("n", "k", "q", "m")),
    "fkr": (bounds.fkr_disjoint_pairs_bound, ("n", "k", "set_count")),
    "pathcycle": (bounds.pathcycle_lower_bound, ("n", "k", "m")),
    "pathcycle_corollary": (bounds.pathcycle_corollary_bound, ("n", "k", "q", "m")),
    "pk2t": (bounds.pk2t_lower_bound, ("n", "k", "t", "m")),
    "kqt": (bounds.kqt_projection_bound, ("n", "q", "t", "s", "r", "m")),
    "reiher_wagner": (bounds.reiher_wagner_max_stars, ("n", "m", "k")),
    "c2k_k2t": (bounds.c2k_k2t_reference, ("n", "k", "t")),
}


def evaluate_bound(name: str, params: dict) -> bounds.BoundReport:
    if name not in BOUND_EVALUATORS:
        raise ValueError(f"unknown bound {name!r}; choose from {sorted(BOUND_EVALUATORS)}")
    fn, keys = BOUND_EVALUATORS[name]
    missing = [k for k in keys if params.get(k) is None]
    if missing:
        raise ValueError(f"bound {name!r} needs {', '.join('--' + k.replace('_', '-') for k in missing)}")
    values = [parse_pattern(params[k]) if k in ("H", "F") else params[k] for k in keys]
    return fn(*values)


def cmd_bound(args, cfg):
    params = {k: getattr(args, k) for k in ("n", "k", "r", "m", "s", "a", "b", "q", "t", "set_count", "H", "F")}
    report = evaluate_bound(args.name, params)
    payload = {"name": args.name, **report.to_json()}
    emit(cfg, payload, [report.csv_row(args.name)])


def cmd_satex(args, cfg):
    F, G = parse_pattern(args.F), parse_pattern(args.G)
    if args.heuristic:
        _check_n(args.n, MAX_HEURISTIC_N, cfg, "local search")
        res = local_search_satex(args.n, F, args.m, G, budget=args.budget, seed=cfg.seed)
    else:
        _check_n(args.n, MAX_EXACT_N, cfg, "exact search")
        res = exact_satex(args.n, F, args.m, G, force=cfg.force, workers=cfg.workers)
    emit(cfg, {"n": args.n, "F": F.name, "m": args.m, "G": G.name, **res.to_json()})


def cmd_turan(args, cfg):
    F, G = parse_pattern(args.F), parse_pattern(args.G)
    _check_n(args.n, MAX_EXACT_N, cfg, "exact search")
    res = exact_generalized_turan(args.n, F, G, force=cfg.force, workers=cfg.workers)
    emit(cfg, {"n": args.n, "F": F.name, "G": G.name, **res.to_json()})


def cmd_phase(args, cfg):
    _check_n(args.n, MAX_PHASE_N, cfg, "phase scan")
    if args.grid:
        grid = [int(x) for x in args.grid.split(",")]
    else:
        top = count_subgraphs(parse_pattern(f"S{args.s}"), Graph.complete(args.n))
        grid = sorted({round(top * i / args.points) for i in range(args.points + 1)})
    scan = phase_transition_scan(args.n, args.s, args.a, args.b, grid)
    payload = {
        "n": scan.n, "s": scan.s, "a": scan.a, "b": scan.b,
        "points": [p.to_row() for p in scan.points],
        "zeta_hat": scan.zeta_hat, "crossing_m": scan.crossing_m,
        "crossing_fraction": scan.crossing_fraction,
        "exploratory": scan.exploratory, "notes": scan.notes,
    }
    emit(cfg, payload, [p.to_row() for p in scan.points])


def cmd_berge(args, cfg):
    pattern = parse_pattern(args.pattern)
    if args.sandwich:
        if args.n is None or args.r is None or args.m is None:
            raise ValueError("--sandwich needs --n, --r and --m")
        rep = berge_mod.berge_sandwich_check(args.n, args.r, args.m, pattern)
        emit(cfg, rep.to_json())
        if not rep.holds:
            raise SoundnessAlarm(rep.to_json())
        return
    if args.hyper is None:
        raise ValueError("--n1n2n3 needs --hyper")
    H = load_hypergraph(args.hyper)
    c = berge_mod.berge_counts(H, pattern)
    emit(cfg, {"hypergraph": args.hyper, "pattern": pattern.name, "n1": c.n1, "n2": c.n2, "n3": c.n3})


def run_sweep_job(job: dict, cfg: RunConfig) -> dict:
    """One job: {"bound": name, "params": {...}, "exact": {"n", "F", "m", "G"}}
    or {"satex": {"n", "F", "m", "G"}}.  Returns one CSV row."""
    if "satex" in job:
        spec = job["satex"]
        _check_n(spec["n"], MAX_EXACT_N, cfg, "exact search")
        res = exact_satex(spec["n"], parse_pattern(spec["F"]), spec["m"], parse_pattern(spec["G"]), force=cfg.force)
        return {"job": "satex", "name": "", "value": "", "kind": "", "exact": res.optimum,
                "holds": "", "params": json.dumps(spec, sort_keys=True)}
    if "bound" not in job:
        raise ValueError(f"sweep job needs a 'bound' or 'satex' key: {job}")
    report = evaluate_bound(job["bound"], job.get("params", {}))
    exact, holds = "", ""
    if "exact" in job:
        spec = job["exact"]
        _check_n(spec["n"], MAX_EXACT_N, cfg, "exact search")
        exact = exact_satex(spec["n"], parse_pattern(spec["F"]), spec["m"], parse_pattern(spec["G"]), force=cfg.force).optimum
        if report.certified and exact is not None:
            holds = float(report.value) <= exact + bounds.REL_TOL * max(1, exact)
    j = report.to_json()
    return {"job": "bound", "name": job["bound"], "value": j["value"], "kind": j["kind"],
            "exact": exact, "holds": holds, "params": json.dumps(job.get("params", {}), sort_keys=True)}


def cmd_sweep(args, cfg):
    jobs = json.loads(Path(args.file).read_text())
    if not isinstance(jobs, list):
        raise ValueError("a sweep file is a JSON array of job objects")
    rows = [run_sweep_job(job, cfg) for job in jobs]
    emit(cfg, {"rows": rows}, rows)
    if any(r["holds"] is False for r in rows):
        raise SoundnessAlarm(rows)


COMMANDS = {
    "count": cmd_count, "build": cmd_build, "bound": cmd_bound, "satex": cmd_satex,
    "turan": cmd_turan, "phase": cmd_phase, "berge": cmd_berge, "sweep": cmd_sweep,
}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("json", "csv"))
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--no-timestamp", action="store_true")
    common.add_argument("--force", action="store_true", help="lift the size guards")
    common.add_argument("--workers", type=int, default=1)

    p = argparse.ArgumentParser(prog="satex", description="Supersaturation-extremal workbench")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("count", parents=[common], help="copies of a pattern in a host graph")
    s.add_argument("--pattern", required=True)
    s.add_argument("--host", required=True, help="graph6 string or JSON/graph6 file")

    s = sub.add_parser("build", parents=[common], help="build a family member, print graph6")
    s.add_argument("--family")
    s.add_argument("--param", action="append", help="key=value, repeatable")
    s.add_argument("--spec", help="FamilySpec JSON file")
    s.add_argument("--n", type=int)

    s = sub.add_parser("bound", parents=[common], help="evaluate a closed-form bound")
    s.add_argument("--name", required=True, choices=sorted(BOUND_EVALUATORS))
    for flag in ("n", "k", "r", "s", "a", "b", "q", "t", "set-count"):
        s.add_argument(f"--{flag}", type=int)
    s.add_argument("--m", type=_number)
    s.add_argument("--H")
    s.add_argument("--F")

    s = sub.add_parser("satex", parents=[common], help="satex(n, F: m, G), exact or heuristic")
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--F", required=True)
    s.add_argument("--m", type=int, required=True)
    s.add_argument("--G", required=True)
    s.add_argument("--heuristic", action="store_true")
    s.add_argument("--budget", type=int, default=20000)

    s = sub.add_parser("turan", parents=[common], help="generalized Turan number ex(n, F, G)")
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--F", required=True)
    s.add_argument("--G", required=True)

    s = sub.add_parser("phase", parents=[common], help="quasi-clique vs quasi-star scan")
    for flag in ("n", "s", "a", "b"):
        s.add_argument(f"--{flag}", type=int, required=True)
    s.add_argument("--grid", help="comma-separated m values")
    s.add_argument("--points", type=int, default=40)

    s = sub.add_parser("berge", parents=[common], help="Berge copy counts or sandwich check")
    mode = s.add_mutually_exclusive_group(required=True)
    mode.add_argument("--n1n2n3", action="store_true")
    mode.add_argument("--sandwich", action="store_true")
    s.add_argument("--hyper")
    s.add_argument("--pattern", required=True)
    s.add_argument("--n", type=int)
    s.add_argument("--r", type=int)
    s.add_argument("--m", type=int)

    s = sub.add_parser("sweep", parents=[common], help="batch of bound/exact comparisons to CSV")
    s.add_argument("--file", required=True)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        cfg = RunConfig.from_args(args, "csv" if args.command in ("phase", "sweep") else "json")
        COMMANDS[args.command](args, cfg)
    except SizeRefusal as exc:
        print(f"satex: size refusal: {exc}", file=sys.stderr)
        return EXIT_SIZE
    except SoundnessAlarm as exc:
        print(f"satex: SOUNDNESS ALARM: {exc}", file=sys.stderr)
        return EXIT_ALARM
    except (ValueError, GraphError, NotImplementedError, KeyError, OSError) as exc:
        print(f"satex: error: {exc}", file=sys.stderr)
        return EXIT_PARAM
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
