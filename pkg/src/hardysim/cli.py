"""Command-line front end: ``hardysim {simulate,hardy,lhv,sweep,optimize}``.

Documents go to stdout (or ``--output``) as JSON or CSV.  Floats are written
with 17 significant digits so identical runs give identical bytes.

Exit status: 0 success, 2 bad arguments, 3 undefined conditional in ``hardy``.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import sys

from .fock import norm_sq
from .hardy import (OUTPUT_MODES, CanonicalCase, HardyAngles, canonical_setting,
                    hardy_report, output_state, psi_split)
from .lhv import ChainConstraints, enumerate_satisfying, lhv_max_case_d
from .optimize import optimize, sweep

EXIT_USAGE = 2
EXIT_UNDEFINED = 3


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def fmt_float(x: float) -> str:
    text = format(x, ".17g")
    if text.lstrip("-").isdigit():
        text += ".0"
    return text


def dumps(obj) -> str:
    """JSON text with fixed 17-significant-digit floats; NaN becomes null."""
    if obj is None or isinstance(obj, (bool, str)):
        return json.dumps(obj)
    if isinstance(obj, int):
        return str(obj)
    if isinstance(obj, float):
        return fmt_float(obj) if math.isfinite(obj) else "null"
    if isinstance(obj, dict):
        return "{" + ", ".join(f"{json.dumps(str(k))}: {dumps(v)}" for k, v in obj.items()) + "}"
    if isinstance(obj, (list, tuple)):
        return "[" + ", ".join(dumps(v) for v in obj) + "]"
    raise TypeError(f"cannot serialise {type(obj).__name__}")


def _csv_cell(v) -> str:
    if v is None:
        return ""
    if isinstance(v, bool):
        return "true" if v else "false"
    if isinstance(v, float):
        return fmt_float(v)
    return str(v)


def to_csv(header, rows) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf)
    writer.writerow(header)
    for row in rows:
        writer.writerow([_csv_cell(v) for v in row])
    return buf.getvalue()


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="hardysim", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    common = _Parser(add_help=False)
    common.add_argument("--degrees", action="store_true", help="angles are given in degrees")
    common.add_argument("--format", choices=("json", "csv"), default="json")
    common.add_argument("--output", help="write the document here instead of stdout")

    def angles(p, required):
        p.add_argument("--theta1", type=float, required=required)
        p.add_argument("--theta2", type=float, required=required)

    p = sub.add_parser("simulate", parents=[common], help="output-state amplitude table")
    angles(p, True)
    p.add_argument("--case", choices=[c.value for c in CanonicalCase], default="A")

    p = sub.add_parser("hardy", parents=[common], help="four-setting Hardy chain report")
    angles(p, True)

    p = sub.add_parser("lhv", parents=[common], help="local hidden-variable enumeration")
    angles(p, False)
    p.add_argument("--drop", action="append", choices=("a", "b", "c"), default=[],
                   help="disable one chain constraint (repeatable)")

    p = sub.add_parser("sweep", parents=[common], help="P over a grid of source angles")
    p.add_argument("--resolution", type=int, default=32)
    p.add_argument("--verify-chain", choices=("all", "sampled", "none"), default="sampled")
    p.add_argument("--jobs", type=int, default=None, help="worker processes (default: all CPUs)")

    p = sub.add_parser("optimize", parents=[common], help="maximise P over the source angles")
    p.add_argument("--resolution", type=int, default=64)
    p.add_argument("--tolerance", type=float, default=1e-10)
    return parser


def _angles(args) -> HardyAngles | None:
    if getattr(args, "theta1", None) is None or args.theta2 is None:
        if getattr(args, "theta1", None) is not None or getattr(args, "theta2", None) is not None:
            raise UsageError("--theta1 and --theta2 must be given together")
        return None
    t1, t2 = args.theta1, args.theta2
    if not (math.isfinite(t1) and math.isfinite(t2)):
        raise UsageError("angles must be finite")
    if args.degrees:
        t1, t2 = math.radians(t1), math.radians(t2)
    return HardyAngles(t1, t2)


def _echo(angles, case=None) -> dict:
    return {
        "theta1": angles.theta1 if angles else None,
        "theta2": angles.theta2 if angles else None,
        "case": case,
    }


def _amplitudes(state):
    return [{"occupation": list(occ), "re": amp.real, "im": amp.imag}
            for occ, amp in sorted(state.items())]


def cmd_simulate(args):
    angles = _angles(args)
    setting = canonical_setting(args.case, angles)
    state = output_state(angles, setting)
    psi1, psi2 = psi_split(state)
    if args.format == "csv":
        rows = [(*occ, amp.real, amp.imag) for occ, amp in sorted(state.items())]
        return to_csv(["n0", "n1", "n2", "n3", "re", "im"], rows), 0
    doc = _echo(angles, args.case)
    doc.update({
        "mode_labels": OUTPUT_MODES,
        "setting": {"theta3": setting.theta3, "phi3": setting.phi3,
                    "theta4": setting.theta4, "phi4": setting.phi4},
        "norm_sq": norm_sq(state),
        "norm_sq_psi1": norm_sq(psi1),
        "norm_sq_psi2": norm_sq(psi2),
        "amplitudes": _amplitudes(state),
    })
    return dumps(doc), 0


def cmd_hardy(args):
    angles = _angles(args)
    report = hardy_report(angles)
    status = EXIT_UNDEFINED if report.undefined else 0
    fields = report.as_dict()
    if args.format == "csv":
        return to_csv(["theta1", "theta2", *fields], [(angles.theta1, angles.theta2, *fields.values())]), status
    doc = _echo(angles)
    doc.update(fields)
    return dumps(doc), status


def cmd_lhv(args):
    angles = _angles(args)
    quantum_d = None
    if angles is not None:
        report = hardy_report(angles)
        constraints = ChainConstraints.from_report(report)
        quantum_d = report.p_joint_d
    else:
        constraints = ChainConstraints()
    drop = {"a": "forbid_joint_a", "b": "implication_b", "c": "implication_c"}
    flags = constraints.as_dict()
    for key in args.drop:
        flags[drop[key]] = False
    constraints = ChainConstraints(**flags)
    strategies = enumerate_satisfying(constraints)
    best = lhv_max_case_d(constraints)

    if args.format == "csv":
        return to_csv(list(strategies[0]._fields), strategies), 0
    summary = (f"local strategies obeying the constraints reach at most {best} "
               f"for the case-D coincidence")
    if quantum_d is not None:
        verdict = "contradicts" if quantum_d > best else "does not contradict"
        summary += f"; quantum value {fmt_float(quantum_d)} {verdict} local realism"
    doc = _echo(angles)
    doc.update({
        "constraints": constraints.as_dict(),
        "satisfying_strategies": [s._asdict() for s in strategies],
        "lhv_max_case_d": int(best) if best.denominator == 1 else float(best),
        "quantum_case_d": quantum_d,
        "summary": summary,
    })
    return dumps(doc), 0


def cmd_sweep(args):
    if args.jobs is not None and args.jobs < 1:
        raise UsageError("--jobs must be >= 1")
    grid = sweep(args.resolution, verify_chain=args.verify_chain, jobs=args.jobs)
    rows = list(grid.rows())
    if args.format == "csv":
        return to_csv(["theta1", "theta2", "P", "chain_ok"], rows), 0
    doc = _echo(None)
    doc.update({
        "resolution": args.resolution,
        "verify_chain": args.verify_chain,
        "points": [{"theta1": t1, "theta2": t2, "P": p, "chain_ok": ok} for t1, t2, p, ok in rows],
    })
    return dumps(doc), 0


def cmd_optimize(args):
    res = optimize(args.resolution, args.tolerance)
    fields = {"theta1_star": res.theta1_star, "theta2_star": res.theta2_star,
              "p_star": res.p_star, "iterations": res.iterations,
              "grid_resolution": res.grid_resolution}
    if args.format == "csv":
        return to_csv(list(fields), [fields.values()]), 0
    doc = _echo(None)
    doc.update(fields)
    return dumps(doc), 0


COMMANDS = {
    "simulate": cmd_simulate,
    "hardy": cmd_hardy,
    "lhv": cmd_lhv,
    "sweep": cmd_sweep,
    "optimize": cmd_optimize,
}


def main(argv=None) -> int:
    try:
        args = build_parser().parse_args(argv)
        text, status = COMMANDS[args.command](args)
    except (UsageError, ValueError) as exc:
        print(f"hardysim: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    if not text.endswith("\n"):
        text += "\n"
    if args.output:
        with open(args.output, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return status


if __name__ == "__main__":
    sys.exit(main())
