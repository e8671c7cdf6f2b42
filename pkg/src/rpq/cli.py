"""Command-line interface: tables, verification suites, brackets, toy model,
and the lattice simulator.

Output is deterministic for identical invocations: stable orderings, fixed
rational rendering, sorted JSON keys.  Exit status 0 means every asserted
identity passed; adjudication (residual) records are emitted to the ledger
and never change the exit status.  Usage errors exit with status 2,
internal inconsistencies with 1.
"""

from __future__ import annotations

import argparse
import csv
import json
import math
import sys
from fractions import Fraction
from typing import Optional, Sequence

from . import kdv as kdv_mod
from . import nbrackets as nb
from . import suites
from . import toymodel as toy
from . import witt as w
from .deformations import PRESETS, get_preset
from .ledger import FAIL, PASS, ledger_to_json, sort_records, summarize


def _out_stream(path: Optional[str]):
    return open(path, "w", encoding="utf-8") if path else sys.stdout


def _close(stream) -> None:
    if stream is not sys.stdout:
        stream.close()


# -- presets ------------------------------------------------------------

def cmd_presets(args) -> int:
    rows = []
    for name in sorted(PRESETS):
        preset = PRESETS[name]
        p, q = preset.base_names
        rows.append({
            "name": name,
            "eps1": preset.eps1.render((p, q)),
            "eps2": preset.eps2.render((p, q)),
            "normalization": preset.lam.render((p, q)),
        })
    stream = _out_stream(args.out)
    if args.format == "json":
        stream.write(json.dumps(rows, sort_keys=True, indent=2) + "\n")
    else:
        for row in rows:
            stream.write(
                f"{row['name']}: eps1={row['eps1']} eps2={row['eps2']} "
                f"lam={row['normalization']}\n"
            )
    _close(stream)
    return 0


# -- numbers ------------------------------------------------------------

def cmd_numbers(args) -> int:
    preset = get_preset(args.preset)
    names = preset.base_names
    rows = []
    for n in range(0, args.max + 1):
        rows.append({
            "n": n,
            "number": preset.display_number(n).render(names),
            "factorial": preset.factorial(n).render(names),
            "central": w.central_term(n, preset).value.render(names),
        })
    stream = _out_stream(args.out)
    if args.format == "json":
        stream.write(json.dumps(rows, sort_keys=True, indent=2) + "\n")
    elif args.format == "csv":
        writer = csv.DictWriter(stream, fieldnames=["n", "number", "factorial", "central"])
        writer.writeheader()
        for row in rows:
            writer.writerow(row)
    else:
        for row in rows:
            stream.write(
                f"[{row['n']}] = {row['number']}   "
                f"[{row['n']}]! = {row['factorial']}   "
                f"C({row['n']}) = {row['central']}\n"
            )
    _close(stream)
    return 0


def cmd_central(args) -> int:
    preset = get_preset(args.preset)
    value = w.central_term(args.n, preset).value
    stream = _out_stream(args.out)
    if args.format == "json":
        stream.write(json.dumps(
            {"n": args.n, "preset": preset.name,
             "central": value.render(preset.base_names)},
            sort_keys=True) + "\n")
    else:
        stream.write(f"C({args.n}) = {value.render(preset.base_names)}\n")
    _close(stream)
    return 0


# -- verify -------------------------------------------------------------

def cmd_verify(args) -> int:
    if args.range < 0:
        raise ValueError(f"--range must be nonnegative, got {args.range}")
    suite_names = sorted(suites.SUITES) if args.suite == "all" else [args.suite]
    preset_names = args.presets.split(",") if args.presets else None
    records = suites.run_suites(suite_names, args.range, preset_names)
    records = sort_records(records)
    stream = _out_stream(args.out)
    for rec in records:
        idx = ",".join(str(i) for i in rec.indices)
        tag = f"{rec.suite}/{rec.identity}[{rec.preset}]({idx})"
        if rec.status == PASS:
            stream.write(f"PASS {tag}\n")
        elif rec.status == FAIL:
            stream.write(f"FAIL {tag}: {rec.detail}\n")
        else:
            stream.write(f"LEDGER {tag}: {rec.detail}\n")
    n_pass, n_fail, n_res = summarize(records)
    stream.write(f"# pass={n_pass} fail={n_fail} ledger={n_res}\n")
    _close(stream)
    if args.ledger:
        with open(args.ledger, "w", encoding="utf-8") as handle:
            handle.write(ledger_to_json(records))
    return 0 if n_fail == 0 else 1


# -- bracket ------------------------------------------------------------

def cmd_bracket(args) -> int:
    preset = get_preset(args.preset)
    modes = [int(v) for v in args.modes.split(",")]
    n = len(modes)
    reports = [
        nb.compare_n_bracket(n, args.alpha, modes, preset, m_sign=sign)
        for sign in (1, -1)
    ]
    oracle = nb.n_bracket_oracle([nb.t_op(args.alpha, m, preset) for m in modes])
    names = preset.base_names
    stream = _out_stream(args.out)
    if args.format == "json":
        payload = {
            "alpha": args.alpha,
            "modes": modes,
            "preset": preset.name,
            "oracle": oracle.render(names),
            "readings": [
                {
                    "m_sign": rep.m_sign,
                    "match_on_unit": rep.match_on_unit,
                    "match_as_operator": rep.match_as_operator,
                    "residual_on_unit": rep.residual_on_unit,
                }
                for rep in reports
            ],
        }
        stream.write(json.dumps(payload, sort_keys=True, indent=2) + "\n")
    else:
        stream.write(f"oracle:\n{oracle.render(names)}\n")
        for rep in reports:
            verdict = "MATCH" if rep.match_on_unit else "RESIDUAL"
            stream.write(
                f"closed form (m_sign={rep.m_sign:+d}) on unit: {verdict}"
                + ("" if rep.match_on_unit else f": {rep.residual_on_unit}")
                + "\n"
            )
    _close(stream)
    return 0


# -- bell / toy ---------------------------------------------------------

def cmd_bell(args) -> int:
    stream = _out_stream(args.out)
    rows = []
    for n in range(0, args.n + 1):
        rows.append({"n": n, "bell": toy.bell_polynomial(n).render()})
    if args.format == "json":
        stream.write(json.dumps(rows, sort_keys=True, indent=2) + "\n")
    else:
        for row in rows:
            stream.write(f"B{row['n']} = {row['bell']}\n")
    _close(stream)
    return 0


def cmd_toy(args) -> int:
    preset = get_preset(args.preset)
    params = toy.ToyParams(gamma=Fraction(args.gamma), alpha=args.alpha,
                           k_x=args.kx)
    names = preset.base_names
    payload = {"preset": preset.name, "gamma": args.gamma, "alpha": args.alpha,
               "order": args.kx, "checks": []}
    for m in range(0, args.max_m + 1):
        res = toy.derivative_bracket_residual(m, params, preset)
        payload["checks"].append({
            "kind": "derivative-bracket",
            "m": m,
            "residual": res.render(names),
            "exact": res.exact,
        })
    rep = toy.product_equivalence(args.m, args.n, args.alpha, args.beta,
                                  params, preset)
    payload["checks"].append({
        "kind": "product-equivalence",
        "m": args.m, "n": args.n, "alpha": args.alpha, "beta": args.beta,
        "residual": rep.residual.render(names),
        "exact": rep.truncation_exact,
    })
    stream = _out_stream(args.out)
    if args.format == "json":
        stream.write(json.dumps(payload, sort_keys=True, indent=2) + "\n")
    else:
        for check in payload["checks"]:
            stream.write(f"{check['kind']} {json.dumps(check, sort_keys=True)}\n")
    _close(stream)
    return 0


# -- kdv ----------------------------------------------------------------

def cmd_kdv(args) -> int:
    if args.theta is not None:
        theta = args.theta
    else:
        preset = get_preset(args.preset)
        e1, e2 = preset.numeric_eps(args.p, args.q)
        theta = 1.0 / math.sqrt(e1 * e2)
    params = kdv_mod.KdVParams(
        tau=args.tau,
        theta=theta,
        central_c=args.central_c,
        grid_points=args.nx,
        shift_steps=args.s,
        dt=args.dt,
        steps=args.steps,
        nonlinear=not args.linear_only,
    )
    if args.init == "cosine":
        state = kdv_mod.cosine_profile(params, amplitude=args.amplitude)
    elif args.init == "soliton":
        state = kdv_mod.soliton_profile(params, amplitude=args.amplitude)
    else:
        if not args.init_file:
            raise ValueError("--init file requires --init-file PATH")
        with open(args.init_file, "r", encoding="utf-8") as handle:
            values = [float(line.strip()) for line in handle if line.strip()]
        if len(values) != params.grid_points:
            raise ValueError(
                f"init file holds {len(values)} values, grid wants "
                f"{params.grid_points}")
        import numpy as np
        state = kdv_mod.KdVState(np.asarray(values))
    meta = {
        "tau": params.tau, "theta": params.theta, "central_c": params.central_c,
        "nx": params.grid_points, "s": params.shift_steps, "dx": params.dx,
        "dt": params.dt, "steps": params.steps, "init": args.init,
        "nonlinear": params.nonlinear,
    }
    stream = _out_stream(args.out)
    stream.write("# " + json.dumps(meta, sort_keys=True) + "\n")
    writer = csv.writer(stream)
    writer.writerow(["t", "x", "v"])
    for snap in kdv_mod.run(state, params, snapshot_every=args.snapshot_every):
        for i, value in enumerate(snap.v):
            writer.writerow([f"{snap.t:.12g}", f"{i * params.dx:.12g}", f"{value:.15g}"])
    _close(stream)
    return 0


# -- parser -------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="rpq",
        description="Exact two-parameter deformed operator calculus and "
                    "lattice KdV simulator.",
    )
    parser.add_argument("--seed", type=int, default=0,
                        help="seed for randomized property sampling (reserved)")
    parser.add_argument("--jobs", type=int, default=1,
                        help="parallel workers (suites are deterministic; "
                             "serial execution is the reference)")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("presets", help="list deformation presets")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.add_argument("--out")
    p.set_defaults(func=cmd_presets)

    p = sub.add_parser("numbers", help="table of deformed integers/factorials")
    p.add_argument("--preset", default="jagannathan-srinivasa")
    p.add_argument("--max", type=int, default=8)
    p.add_argument("--format", choices=("text", "csv", "json"), default="csv")
    p.add_argument("--out")
    p.set_defaults(func=cmd_numbers)

    p = sub.add_parser("central", help="central term of one mode")
    p.add_argument("--preset", default="jagannathan-srinivasa")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.add_argument("--out")
    p.set_defaults(func=cmd_central)

    p = sub.add_parser("verify", help="run identity suites")
    p.add_argument("--suite", default="all",
                   choices=("all",) + tuple(sorted(suites.SUITES)))
    p.add_argument("--range", type=int, default=4,
                   help="half-width of symbolic index grids (clamped per suite)")
    p.add_argument("--presets", default="",
                   help="comma-separated preset names (default: the five named)")
    p.add_argument("--ledger", help="write residual records to this JSON file")
    p.add_argument("--out")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("bracket", help="n-bracket oracle vs closed form")
    p.add_argument("--alpha", type=int, default=1)
    p.add_argument("--modes", required=True, help="comma-separated mode list")
    p.add_argument("--preset", default="jagannathan-srinivasa")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.add_argument("--out")
    p.set_defaults(func=cmd_bracket)

    p = sub.add_parser("bell", help="print complete Bell polynomials")
    p.add_argument("--n", type=int, default=8)
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.add_argument("--out")
    p.set_defaults(func=cmd_bell)

    p = sub.add_parser("toy", help="constraint-operator residual reports")
    p.add_argument("--preset", default="symmetric-q")
    p.add_argument("--gamma", default="0", help="rational exponent, e.g. -3/2")
    p.add_argument("--alpha", type=int, default=1)
    p.add_argument("--beta", type=int, default=1)
    p.add_argument("--m", type=int, default=0)
    p.add_argument("--n", type=int, default=0)
    p.add_argument("--kx", type=int, default=6)
    p.add_argument("--max-m", type=int, default=2)
    p.add_argument("--format", choices=("text", "json"), default="json")
    p.add_argument("--out")
    p.set_defaults(func=cmd_toy)

    p = sub.add_parser("kdv", help="run the lattice simulator")
    p.add_argument("--preset", default="jagannathan-srinivasa")
    p.add_argument("--p", type=float, default=0.9)
    p.add_argument("--q", type=float, default=0.5)
    p.add_argument("--theta", type=float, default=None,
                   help="override the preset-derived multiplier")
    p.add_argument("--central-c", type=float, default=1.0)
    p.add_argument("--tau", type=float, default=0.05)
    p.add_argument("--s", type=int, default=2)
    p.add_argument("--nx", type=int, default=256)
    p.add_argument("--dt", type=float, default=0.001)
    p.add_argument("--steps", type=int, default=100)
    p.add_argument("--snapshot-every", type=int, default=10)
    p.add_argument("--init", choices=("cosine", "soliton", "file"), default="cosine")
    p.add_argument("--init-file")
    p.add_argument("--amplitude", type=float, default=1.0)
    p.add_argument("--linear-only", action="store_true",
                   help="drop the quadratic term (dispersion studies)")
    p.add_argument("--out")
    p.set_defaults(func=cmd_kdv)

    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ValueError, KeyError) as exc:
        # bad preset names, ranges, or parameter combinations
        print(f"usage error: {exc}", file=sys.stderr)
        return 2
    except (ZeroDivisionError, FloatingPointError, RuntimeError) as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
