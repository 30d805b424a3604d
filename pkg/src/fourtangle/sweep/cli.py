"""
INSTRUCTION HEADER

What this file does (plain English):
- Command-line front end (`cli_main(argv) -> exit code`):
    measure      one value: C4, a concurrence, a concurrence product,
                 the one-tangle or the residual tangle, for a mixture family
                 (--family, --p, --q) or a chain point (--lambda, --gamma, ...)
    scan         run a sweep plan and write its CSV
    residual     scan with mode = chain-residual
    validate     cross-validate ED and free fermions over a lambda grid and
                 print the largest deviation (fails above 1e-8)
    factorizing  print lambda_f = (1 - gamma^2)^(-1/2)
- Every plan key in config/schema.py is also a flag (`--lambda-step 0.01`,
  `--use-cache false`, ...). Precedence: defaults < --plan file < flags.
- Values print with 12 significant digits. CSVs go to --output or stdout;
  status lines and progress bars go to stderr.
- Exit codes: 0 success, 1 numerical failure, 2 usage / bad input.

Where it runs: Terminal, through tools/run/fourtangle.py.
How to run:
  python tools/run/fourtangle.py factorizing --gamma 0.6
  python tools/run/fourtangle.py measure c4 --family ghz-w --p 0.3
  python tools/run/fourtangle.py validate --gamma 1 --lambda 0.5 --n 10 --quad 1,1,1
  python tools/run/fourtangle.py scan --gamma 0.5 --quad 1,2,1 --output out/c4.csv
  python tools/run/fourtangle.py scan --plan plans/fig7.txt --workers 4
Common failures + fixes:
  - exit 2 "unknown key": see tools/admin/make_plan_file.py for every key.
  - exit 1 "convergence gate": raise --n-sites.
"""

from __future__ import annotations

import argparse
import logging
import sys
from typing import Any

from ..chain import (
    ChainConfig,
    SiteQuad,
    ed_rdm,
    factorizing_field,
    ff_correlators,
    ff_rdm_sites,
)
from ..config.load_plan import load_plan_file, merge_plan
from ..config.plan_echo import echo_line
from ..config.schema import MODES, PLAN_KEYS
from ..measures import concurrence, concurrence_product, fourtangle_mixed, one_tangle
from ..mixtures import FAMILIES, get_family
from ..numkernel import NumericalError, partial_trace
from .csv_io import emit_csv
from .plan import SweepPlan
from .runner import residual_point, run_sweep

MEASURES = ("c4", "c2", "c2-product", "tau1", "residual")
VALIDATE_TOL = 1e-8


# ---------------------------------------------------------------------------
# Parser
# ---------------------------------------------------------------------------

def _flag(key: str) -> str:
    return "--" + key.replace("_", "-")


def _add_plan_flags(parser: argparse.ArgumentParser, skip: tuple[str, ...] = ()) -> None:
    group = parser.add_argument_group("plan keys (override the plan file)")
    for key, spec in PLAN_KEYS.items():
        if key in skip:
            continue
        group.add_argument(_flag(key), dest=key, default=None, metavar=spec.kind.upper(),
                           help=f"{spec.help} (default: {spec.default!r})")
    parser.add_argument("--plan", default=None, help="plain-text key = value plan file")
    parser.add_argument("--lambda", dest="lambda_point", type=float, default=None,
                        help="single lambda (sets lambda-start = lambda-stop)")
    parser.add_argument("--quad", dest="quad_list", action="append", default=None,
                        help="quad n1,n2,n3; repeat for several")
    parser.add_argument("--n", dest="n_alias", type=int, default=None, help="chain length")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="fourtangle",
        description="4-tangle, concurrence and residual tangle of mixtures and XY-chain ground states.",
    )
    parser.add_argument("--quiet", action="store_true", help="no progress bars or status lines")
    parser.add_argument("--verbose", action="store_true", help="log gate results and repairs")
    sub = parser.add_subparsers(dest="command")

    m = sub.add_parser("measure", help="evaluate one measure at one point")
    m.add_argument("what", choices=MEASURES)
    m.add_argument("--family", choices=sorted(FAMILIES), default=None, help="mixture family")
    m.add_argument("--p", type=float, default=None)
    m.add_argument("--q", type=float, default=None)
    m.add_argument("--phi", type=float, default=None, help="phase for PhiPlusPhase families")
    m.add_argument("--lambda", dest="lam", type=float, default=None, help="chain coupling")
    m.add_argument("--gamma", type=float, default=1.0)
    m.add_argument("--quad", default="1,1,1", help="n1,n2,n3 for c4 and c2-product")
    m.add_argument("--distance", type=int, default=1, help="pair distance for c2")
    m.add_argument("--n", type=int, default=PLAN_KEYS["n_sites"].default, help="chain length")
    m.add_argument("--backend", choices=("freefermion", "ed"), default="freefermion")
    m.add_argument("--max-distance", type=int, default=PLAN_KEYS["max_distance"].default)
    m.set_defaults(handler=_cmd_measure)

    s = sub.add_parser("scan", help="run a sweep and write CSV")
    _add_plan_flags(s)
    s.set_defaults(handler=_cmd_scan, forced_mode=None)

    r = sub.add_parser("residual", help="one-tangle / residual tangle sweep")
    _add_plan_flags(r, skip=("mode",))
    r.set_defaults(handler=_cmd_scan, forced_mode="chain-residual")

    v = sub.add_parser("validate", help="cross-validate ED against free fermions")
    _add_plan_flags(v, skip=("mode",))
    v.set_defaults(handler=_cmd_validate, forced_mode="validate")

    f = sub.add_parser("factorizing", help="print the factorizing field for gamma")
    f.add_argument("--gamma", type=float, required=True)
    f.set_defaults(handler=_cmd_factorizing)
    return parser


# ---------------------------------------------------------------------------
# Plan assembly
# ---------------------------------------------------------------------------

def _plan_from_args(args: argparse.Namespace) -> SweepPlan:
    file_values = load_plan_file(args.plan) if args.plan else {}
    overrides: dict[str, Any] = {k: getattr(args, k, None) for k in PLAN_KEYS}
    if args.forced_mode:
        overrides["mode"] = args.forced_mode
    if args.lambda_point is not None:
        overrides["lambda_start"] = args.lambda_point
        overrides["lambda_stop"] = args.lambda_point
    if args.quad_list:
        overrides["quads"] = ";".join(args.quad_list)
    if args.n_alias is not None:
        overrides["oracle_sites" if args.forced_mode == "validate" else "n_sites"] = args.n_alias
    merged = merge_plan(file_values, overrides)
    if merged["mode"] not in MODES:
        raise ValueError(f"Unknown mode {merged['mode']!r}. Expected one of {', '.join(MODES)}.")
    return SweepPlan.from_dict(merged)


def _status(args: argparse.Namespace, message: str) -> None:
    if not args.quiet:
        print(message, file=sys.stderr, flush=True)


# ---------------------------------------------------------------------------
# Commands
# ---------------------------------------------------------------------------

def _cmd_scan(args: argparse.Namespace) -> int:
    plan = _plan_from_args(args)
    _status(args, f"Sweep: mode={plan.mode} workers={plan.workers}")
    rows = run_sweep(plan, progress=not args.quiet)
    emit_csv(rows, plan.output or None, plan.mode, echo_line(plan.as_dict()))
    _status(args, f"DONE: {len(rows)} rows" + (f" -> {plan.output}" if plan.output else ""))
    return 0


def _cmd_validate(args: argparse.Namespace) -> int:
    plan = _plan_from_args(args)
    rows = run_sweep(plan, progress=not args.quiet)
    if plan.output:
        emit_csv(rows, plan.output, plan.mode, echo_line(plan.as_dict()))
    worst = max((row["max_deviation"] for row in rows), default=0.0)
    print(f"max_deviation {worst:.3e}", flush=True)
    if worst > VALIDATE_TOL:
        raise NumericalError(f"backends differ by {worst:.3e} (> {VALIDATE_TOL:g}).")
    return 0


def _cmd_factorizing(args: argparse.Namespace) -> int:
    print(f"{factorizing_field(args.gamma):.12g}", flush=True)
    return 0


def _mixture_measure(args: argparse.Namespace) -> float:
    family = get_family(args.family)
    if args.p is None:
        raise ValueError(f"measure {args.what} with --family needs --p.")
    rho = family.density(args.p, args.q, args.phi)
    if args.what == "c4":
        return fourtangle_mixed(rho)
    if args.what == "c2-product":
        return concurrence_product(rho)
    raise ValueError(f"measure {args.what} is defined for chain points only; pass --lambda.")


def _chain_measure(args: argparse.Namespace) -> float:
    cfg = ChainConfig(args.lam, args.gamma, args.n, args.backend)
    if args.what == "residual":
        return float(residual_point(cfg.lam, cfg.gamma, cfg.n_sites, cfg.backend, args.max_distance)[0][5])

    table = ff_correlators(cfg) if cfg.backend == "freefermion" else None

    def rdm(sites):
        return ff_rdm_sites(table, sites) if table is not None else ed_rdm(cfg, sites)

    if args.what == "tau1":
        return one_tangle(rdm((cfg.central_site(),)))
    if args.what == "c2":
        if args.distance < 1 or args.distance >= cfg.n_sites:
            raise ValueError(f"--distance must be in [1, N-1], got {args.distance}.")
        first = (cfg.n_sites - 1 - args.distance) // 2
        return concurrence(rdm((first, first + args.distance)))
    rho = rdm(SiteQuad.parse(args.quad).centered_sites(cfg.n_sites))
    if args.what == "c4":
        return fourtangle_mixed(rho)
    return concurrence(partial_trace(rho, (0, 1))) * concurrence(partial_trace(rho, (2, 3)))


def _cmd_measure(args: argparse.Namespace) -> int:
    if args.family is not None and args.lam is not None:
        raise ValueError("Pass either --family (mixture) or --lambda (chain), not both.")
    if args.family is not None:
        value = _mixture_measure(args)
    elif args.lam is not None:
        value = _chain_measure(args)
    else:
        raise ValueError("measure needs --family for a mixture or --lambda for a chain point.")
    print(f"{value:.12g}", flush=True)
    return 0


# ---------------------------------------------------------------------------
# Entry point
# ---------------------------------------------------------------------------

def cli_main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code) if isinstance(exc.code, int) else 2
    if args.command is None:
        parser.print_help(sys.stderr)
        return 2

    logging.basicConfig(
        level=logging.INFO if args.verbose else logging.WARNING,
        format="%(levelname)s: %(name)s: %(message)s",
        stream=sys.stderr,
    )
    try:
        return args.handler(args)
    except NumericalError as exc:
        print(f"ERROR: {exc}", file=sys.stderr, flush=True)
        return 1
    except (ValueError, FileNotFoundError) as exc:
        print(f"ERROR: {exc}", file=sys.stderr, flush=True)
        return 2
