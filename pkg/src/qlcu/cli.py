"""Command-line front end.

Exit codes: 0 pass, 1 verification or synthesis failure, 2 usage or parse error.
Randomized inputs (teleport and kitaev demos) are drawn from ``QLCU_SEED``
(default 0), so every report is reproducible byte for byte.
"""

import argparse
import json
import os
import sys

import numpy as np

from . import catalog
from .circuit import cost_report, parse, serialize
from .errors import (
    MissingCostError,
    NonUnitaryCirculantError,
    NonUnitaryTargetError,
    NotInSpanError,
    ParseError,
    PhaseRecoveryError,
    SizeCapError,
)
from .formats import load_json, synthesize_request
from .linalg import matrix_from_json
from .simulator import MAX_QUBITS, verify_realizes

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2
DEMOS = ("hartley", "fractional", "teleport", "kitaev")


class _Usage(Exception):
    pass


def seed_from_env():
    raw = os.environ.get("QLCU_SEED", "0")
    try:
        return int(raw)
    except ValueError:
        raise _Usage(f"QLCU_SEED must be an integer, got {raw!r}") from None


def random_unitary(dim, rng):
    """Haar-random unitary via QR with the phase fix on R's diagonal."""
    z = (rng.standard_normal((dim, dim)) + 1j * rng.standard_normal((dim, dim))) / np.sqrt(2)
    q, r = np.linalg.qr(z)
    d = np.diag(r)
    return q * (d / np.abs(d))


def _dump(obj):
    return json.dumps(obj, sort_keys=True, indent=1)


def _read(path):
    try:
        with open(path) as fh:
            return fh.read()
    except OSError as exc:
        raise _Usage(f"cannot read {path}: {exc.strerror}") from None


def _cap(total, what):
    if total > MAX_QUBITS:
        raise _Usage(f"{what} needs {total} qubits; the simulation cap is {MAX_QUBITS}")


def _run_demo(args):
    name = args.name
    rng = np.random.default_rng(seed_from_env())
    if name == "hartley":
        n = args.qubits if args.qubits is not None else 3
        _cap(n + 1, f"hartley on {n} data qubits")
        bundle = catalog.hartley_demo(n, args.tol)
    elif name == "fractional":
        n = args.qubits if args.qubits is not None else 3
        _cap(n + 2, f"fractional on {n} data qubits")
        theta = args.theta if args.theta is not None else 0.3
        bundle = catalog.fractional_demo(n, theta, args.tol)
    elif name == "teleport":
        bundle = catalog.teleportation_demo(random_unitary(2, rng), args.tol)
    else:
        k = args.qubits if args.qubits is not None else 2
        _cap(k, f"kitaev on {k} qubits")
        bundle = catalog.kitaev_demo(k, np.exp(2j * np.pi * rng.random(1 << k)))
    return bundle


def cmd_demo(args, out):
    if args.name not in DEMOS:
        raise _Usage(f"unknown demo {args.name!r}; choose from {', '.join(DEMOS)}")
    try:
        bundle = _run_demo(args)
    except ValueError as exc:
        raise _Usage(str(exc)) from None
    if args.json:
        out.write(_dump(bundle.to_json()) + "\n")
    else:
        for key, c in bundle.checks.items():
            out.write(f"{key}: {'PASS' if c.passed else 'FAIL'} value={c.value!r} tol={c.tol!r}\n")
        out.write(f"demo {bundle.name}: {'PASS' if bundle.passed else 'FAIL'}\n")
    return EXIT_OK if bundle.passed else EXIT_FAIL


def cmd_synth(args, out):
    request = load_json(_read(args.spec))
    try:
        circuit, alpha = synthesize_request(request)
    except (NotInSpanError, NonUnitaryCirculantError, NonUnitaryTargetError, PhaseRecoveryError) as exc:
        name = type(exc).__name__
        msg = str(exc)
        sys.stderr.write(msg if msg.startswith(name) else f"{name}: {msg}")
        sys.stderr.write("\n")
        return EXIT_FAIL
    text = serialize(circuit)
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text + "\n")
        out.write(
            f"wrote {args.out}: {circuit.num_data_qubits} data + {circuit.num_ancilla_qubits} ancilla qubits, "
            f"{len(circuit.gates)} gates\n"
        )
    else:
        out.write(text + "\n")
    return EXIT_OK


def cmd_verify(args, out):
    circuit = parse(_read(args.circuit))
    target = matrix_from_json(load_json(_read(args.target)), "target")
    dim = 1 << circuit.num_data_qubits
    if target.shape != (dim, dim):
        raise _Usage(f"target is {target.shape[0]}x{target.shape[1]} but the circuit has {dim}-dimensional data")
    _cap(circuit.num_qubits, "verification")
    report = verify_realizes(circuit, target, args.tol)
    if args.json:
        out.write(_dump(report.to_json()) + "\n")
    else:
        out.write(
            f"{'PASS' if report.passed else 'FAIL'} max_deviation={report.max_deviation!r} "
            f"max_leakage={report.max_leakage!r} tol={report.tol!r}\n"
        )
    return EXIT_OK if report.passed else EXIT_FAIL


def cmd_report(args, out):
    circuit = parse(_read(args.circuit))
    costs = {}
    if args.costs:
        costs = load_json(_read(args.costs))
        if not isinstance(costs, dict) or not all(isinstance(v, int) and not isinstance(v, bool) for v in costs.values()):
            raise ParseError("costs must map labels to integers", args.costs)
    try:
        report = cost_report(circuit, costs)
    except MissingCostError as exc:
        raise _Usage(str(exc)) from None
    if args.json:
        out.write(_dump(report.to_json()) + "\n")
    else:
        for row in report.breakdown:
            out.write(f"{row['index']:4d} {row['kind']:<17} {row['label'] or '':<16} {row['cost']}\n")
        for a in report.assumptions:
            out.write(f"assumption: {a}\n")
        out.write(f"elementary gate upper bound: {report.bound}\n")
    return EXIT_OK


def build_parser():
    p = argparse.ArgumentParser(prog="qlcu", description="Linear-combination circuit synthesis over finite 2-groups.")
    sub = p.add_subparsers(dest="command", required=True)

    d = sub.add_parser("demo", help="run a worked example and its checks")
    d.add_argument("name", help="|".join(DEMOS))
    d.add_argument("--qubits", type=int, help="data qubits (kitaev: register size k)")
    d.add_argument("--theta", type=float, help="fractional angle (default 0.3)")
    d.add_argument("--tol", type=float, default=1e-9)
    d.add_argument("--json", action="store_true")
    d.set_defaults(func=cmd_demo)

    s = sub.add_parser("synth", help="synthesize a circuit from a JSON request")
    s.add_argument("spec")
    s.add_argument("--out")
    s.set_defaults(func=cmd_synth)

    v = sub.add_parser("verify", help="check that a circuit realizes a target matrix")
    v.add_argument("circuit")
    v.add_argument("target")
    v.add_argument("--tol", type=float, default=1e-9)
    v.add_argument("--json", action="store_true")
    v.set_defaults(func=cmd_verify)

    r = sub.add_parser("report", help="elementary gate cost bound")
    r.add_argument("circuit")
    r.add_argument("--costs", help="JSON object mapping block labels to costs")
    r.add_argument("--json", action="store_true")
    r.set_defaults(func=cmd_report)
    return p


def main(argv=None, out=None):
    out = out if out is not None else sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        return args.func(args, out)
    except (_Usage, ParseError, SizeCapError) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
