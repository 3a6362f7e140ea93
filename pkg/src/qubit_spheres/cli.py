"""Command-line interface: map, run, render, verify.

Exit codes: 0 success, 1 verification failure, 2 usage/parse error.
All human-facing angles are degrees; JSON field names carry _deg suffixes.
"""

from __future__ import annotations

import argparse
import sys

from . import records, render, verify
from .gates import ParseError, parse_circuit, run
from .jsonfmt import dumps
from .state import (
    BASIS_NAMES,
    BELL_NAMES,
    NormOutOfTolerance,
    NotNormalizable,
    TwoQubitState,
)

USAGE_EXIT = 2
VERIFY_FAIL_EXIT = 1


def _add_state_args(p: argparse.ArgumentParser, required: bool = True):
    g = p.add_mutually_exclusive_group(required=required)
    g.add_argument("--state", metavar="RE,IM,...",
                   help="8 comma-separated reals: re,im pairs of the four amplitudes")
    g.add_argument("--bell", choices=BELL_NAMES, help="a Bell state")
    g.add_argument("--basis", choices=BASIS_NAMES, help="a computational basis state")
    return g


def _parse_state(args) -> tuple[TwoQubitState, dict]:
    if args.bell is not None:
        return TwoQubitState.bell(args.bell), {"kind": "bell", "name": args.bell}
    if args.basis is not None:
        return TwoQubitState.basis(args.basis), {"kind": "basis", "label": args.basis}
    fields = args.state.split(",")
    if len(fields) != 8:
        raise ValueError(f"--state needs 8 comma-separated reals, got {len(fields)}")
    try:
        vals = [float(f) for f in fields]
    except ValueError as exc:
        raise ValueError(f"--state: {exc}") from None
    amps = [complex(vals[2 * i], vals[2 * i + 1]) for i in range(4)]
    s = TwoQubitState.from_amplitudes(*amps, policy="renormalize")
    return s, {"kind": "state", "amplitudes": records.amplitude_list(s)}


def _assignments(flag: str) -> tuple[str, ...]:
    return ("A", "B") if flag == "both" else (flag,)


def _print_text_record(record: dict, out) -> None:
    amps = record["amplitudes"]
    names = ("alpha", "beta", "gamma", "delta")
    print("amplitudes:", file=out)
    for i, name in enumerate(names):
        print(f"  {name:<6} {amps[2 * i]:+.9f} {amps[2 * i + 1]:+.9f}i", file=out)
    for label, block in record["assignments"].items():
        base, ent, fib = block["base"], block["entanglement"], block["fiber"]
        print(f"assignment {label}:", file=out)
        print(f"  base          theta={base['theta_deg']:9.4f} deg  "
              f"phi={base['phi_deg']:9.4f} deg  "
              f"(x1,b,x0)=({base['x1']:.6f}, {base['b']:.6f}, {base['x0']:.6f})",
              file=out)
        print(f"  entanglement  chi={ent['chi_deg']:11.4f} deg  "
              f"xi={ent['xi_deg']:10.4f} deg  c={ent['c']:.6f}  "
              f"(x2,x3,x4)=({ent['x2']:.6f}, {ent['x3']:.6f}, {ent['x4']:.6f})",
              file=out)
        bloch = ", ".join(f"{v:.6f}" for v in fib["bloch"])
        print(f"  fiber         theta_f={fib['theta_f_deg']:7.4f} deg  "
              f"phi_f={fib['phi_f_deg']:8.4f} deg  "
              f"zeta_f={fib['zeta_f_deg']:8.4f} deg  bloch=({bloch})", file=out)
    print(f"concurrence:   {record['concurrence']:.9f}", file=out)
    print(f"coherence d_A: {record['coherence_d_A']:.9f}", file=out)
    print(f"coherence d_B: {record['coherence_d_B']:.9f}", file=out)


def _cmd_map(args) -> int:
    s, input_block = _parse_state(args)
    chosen = _assignments(args.assignment)
    record = records.state_record(s, chosen)
    if args.format == "text":
        _print_text_record(record, sys.stdout)
    else:
        doc = records.document(input_block, [record])
        sys.stdout.write(dumps(doc))
    return 0


def _circuit_input_block(circuit) -> dict:
    return {
        "kind": "circuit",
        "initial": circuit.initial,
        "gates": [g.describe() for g in circuit.gates],
    }


def _cmd_run(args) -> int:
    with open(args.circuit, "r", encoding="utf-8") as fh:
        circuit = parse_circuit(fh.read())
    steps = run(circuit)
    chosen = _assignments(args.assignment)
    if args.steps:
        recs = [records.step_record(step, chosen) for step in steps]
    else:
        recs = [records.step_record(steps[-1], chosen)]
    doc = records.document(_circuit_input_block(circuit), recs)
    sys.stdout.write(dumps(doc))
    return 0


def _cmd_render(args) -> int:
    if args.circuit is not None:
        with open(args.circuit, "r", encoding="utf-8") as fh:
            circuit = parse_circuit(fh.read())
        steps = run(circuit)
        s = steps[-1].state
        title = "circuit: " + "; ".join(g.describe() for g in circuit.gates)
    else:
        s, input_block = _parse_state(args)
        if input_block["kind"] == "bell":
            title = f"bell {input_block['name']}"
        elif input_block["kind"] == "basis":
            title = f"basis |{input_block['label']}>"
        else:
            title = "state " + ",".join(f"{v:.4g}" for v in input_block["amplitudes"])
    render.render_to_file(args.out, s, assignments=_assignments(args.assignment),
                          title=title)
    return 0


def _cmd_verify(args) -> int:
    report = verify.run_suite(seed=args.seed, samples=args.samples)
    sys.stdout.write(dumps(report.to_dict()))
    return 0 if report.all_passed else VERIFY_FAIL_EXIT


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="qubit-spheres",
        description="Three-sphere coordinates, circuits and renderings "
                    "for two-qubit pure states.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("map", help="map a state to sphere coordinates")
    _add_state_args(p)
    p.add_argument("--assignment", choices=("A", "B", "both"), default="both")
    p.add_argument("--format", choices=("json", "text"), default="json")
    p.set_defaults(func=_cmd_map)

    p = sub.add_parser("run", help="run a circuit file and emit the trajectory")
    p.add_argument("circuit", help="circuit file (one gate per line, degrees)")
    p.add_argument("--steps", action="store_true",
                   help="emit every step instead of the final state only")
    p.add_argument("--assignment", choices=("A", "B", "both"), default="both")
    p.set_defaults(func=_cmd_run)

    p = sub.add_parser("render", help="render the spheres of a state to SVG")
    g = _add_state_args(p, required=False)
    g.add_argument("--circuit", help="render the final state of this circuit file")
    p.add_argument("--out", required=True, help="output SVG path")
    p.add_argument("--assignment", choices=("A", "B", "both"), default="both")
    p.set_defaults(func=_cmd_render)

    p = sub.add_parser("verify", help="run the invariant suite")
    p.add_argument("--seed", type=int, default=verify.DEFAULT_SEED)
    p.add_argument("--samples", type=int, default=verify.DEFAULT_SAMPLES)
    p.set_defaults(func=_cmd_verify)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command == "render" and args.circuit is None and args.state is None \
            and args.bell is None and args.basis is None:
        parser.error("render needs --state, --bell, --basis or --circuit")
    if args.command == "verify" and args.samples < 1:
        parser.error(f"--samples must be >= 1, got {args.samples}")
    try:
        return args.func(args)
    except (ParseError, NotNormalizable, NormOutOfTolerance, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE_EXIT


if __name__ == "__main__":
    sys.exit(main())
