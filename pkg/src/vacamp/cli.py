"""Command-line front end: `vacuum-amp`.

    vacuum-amp run <config.yaml> [--out DIR] [--jobs N]
    vacuum-amp sweep <config.yaml> --axis KEY --values a,b,c [--out DIR]
    vacuum-amp list-kinds
    vacuum-amp --version

Configs are YAML (see the shipped examples and README for the schema).
Exit code is 0 iff every scenario ran and all its invariant checks
passed.  The VACUUM_AMP_OUT environment variable overrides the default
output directory.
"""

from __future__ import annotations

import argparse
import concurrent.futures
import sys

from . import __version__
from .errors import ParseError, SchemaError, VacampError
from .scenarios import (SCHEMAS, parse_config, run_scenario, scenario_kinds,
                        sweep)

KIND_SUMMARIES = {
    "paramp": "degenerate/non-degenerate parametric amplifier evolution",
    "quench": "frequency quench of a single oscillator mode",
    "swing": "classical pumped pendulum",
    "unruh": "red-shifted waveform spectrum of an accelerated observer",
    "blackhole": "Schwarzschild thermodynamics and near-horizon profile",
    "dce_cavity": "driven-cavity photon production (moving-mirror solver)",
    "dce_receding": "receding-mirror thermal spectrum",
    "squid_horizon": "dc-SQUID array analogue horizon",
}


def _print_report(report):
    status = "ok" if report.passed else "FAILED"
    print(f"[{status}] {report.scenario.name} ({report.scenario.kind}) "
          f"in {report.wall_time:.2f}s")
    if report.error:
        print(f"    error: {report.error}")
    for key, value in report.headline.items():
        print(f"    {key} = {value}")
    for name, ok, detail in report.checks:
        print(f"    check {name}: {'pass' if ok else 'FAIL'} ({detail})")
    for path in report.outputs:
        print(f"    wrote {path}")


def _run_all(scenarios, out_dir, jobs):
    if jobs and jobs > 1:
        with concurrent.futures.ProcessPoolExecutor(max_workers=jobs) as pool:
            futures = [pool.submit(run_scenario, s, out_dir)
                       for s in scenarios]
            return [f.result() for f in futures]
    return [run_scenario(s, out_dir) for s in scenarios]


def _cmd_run(args) -> int:
    scenarios = parse_config(args.config)
    reports = _run_all(scenarios, args.out, args.jobs)
    for report in reports:
        _print_report(report)
    return 0 if all(r.passed for r in reports) else 1


def _cmd_sweep(args) -> int:
    scenarios = parse_config(args.config)
    values = [float(v) for v in args.values.split(",") if v.strip() != ""]
    ok = True
    for scenario in scenarios:
        reports = sweep(scenario, args.axis, values, args.out)
        for report in reports:
            _print_report(report)
        ok = ok and all(r.passed for r in reports)
    return 0 if ok else 1


def _cmd_list_kinds(_args) -> int:
    for kind in scenario_kinds():
        print(f"{kind}: {KIND_SUMMARIES[kind]}")
        for param in SCHEMAS[kind]:
            tag = "required" if param.required \
                else f"default {param.default!r}"
            print(f"    {param.name} ({param.type.__name__}, {tag}): "
                  f"{param.doc}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="vacuum-amp",
        description="Vacuum-amplification scenario runner")
    parser.add_argument("--version", action="version",
                        version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    run_p = sub.add_parser("run", help="run every scenario in a config file")
    run_p.add_argument("config")
    run_p.add_argument("--out", default=None, help="output directory")
    run_p.add_argument("--jobs", type=int, default=1,
                       help="parallel scenario processes (default serial)")
    run_p.set_defaults(func=_cmd_run)

    sweep_p = sub.add_parser("sweep",
                             help="rerun scenarios along one parameter axis")
    sweep_p.add_argument("config")
    sweep_p.add_argument("--axis", required=True,
                         help="numeric parameter to vary")
    sweep_p.add_argument("--values", required=True,
                         help="comma-separated values")
    sweep_p.add_argument("--out", default=None)
    sweep_p.add_argument("--jobs", type=int, default=1)
    sweep_p.set_defaults(func=_cmd_sweep)

    kinds_p = sub.add_parser("list-kinds",
                             help="list scenario kinds and their parameters")
    kinds_p.set_defaults(func=_cmd_list_kinds)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ParseError, SchemaError) as exc:
        print(f"config error: {exc}", file=sys.stderr)
        return 2
    except VacampError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
