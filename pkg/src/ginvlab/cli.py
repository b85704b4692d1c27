"""Command-line dispatcher: compute / oracle / law / suite with stable exit codes.

The exit-code contract (no other codes are produced):

====  ==========================================================
code  meaning
====  ==========================================================
0     success; the property holds / the inverse was produced
1     a counterexample was found (law or suite)
2     input or parse error (bad flags, files, specs, witnesses)
3     the inverse does not exist / the witness set is empty
====  ==========================================================

Every JSON report embeds the tool version plus the carrier specs, seed,
and budget that produced it, and identical inputs with the same seed
yield byte-identical output. Reports carry no timestamps. ``--format
text`` prints a human summary instead; the JSON form is the contract.
The environment variable ``GINV_THREADS`` caps parallelism in the
layers underneath (default 1, fully deterministic either way).

>>> main(["oracle", "--ring", "Zn:6", "--element", "2", "--kind", "wd",
...       "--format", "text"])
wd witnesses of 2 in Zn:6 (k=1): {2, 5}
0
>>> main(["oracle", "--ring", "Zn:4", "--element", "2", "--kind", "wd",
...       "--format", "text"])
wd witnesses of 2 in Zn:4 (k=2): ∅
3
>>> main(["oracle", "--ring", "Zn:6", "--element", "1", "--kind", "mp",
...       "--format", "text"])
mp witnesses of 1 in Zn:6 (k=1): {1}
0
"""

import argparse
import json
import sys

from ._version import __version__
from .catalog import InapplicableCarrier, UnknownTheorem, run_all
from .engine import (
    IndexTooLarge,
    InvalidWitness,
    InverseKind,
    InverseResult,
    MissingWitness,
    core_inverse,
    dmp_inverse,
    drazin_inverse,
    group_inverse,
    mp_inverse,
    pseudo_core_inverse,
    right_pseudo_core_inverse,
    verify_definition,
    wd_canonical,
    wdmp_inverse,
)
from .laws import LawSyntaxError, evaluate_law, necessity_probe, parse_law
from .matrices import ExactMatrix, MatrixFormatError
from .rings import RingFormatError, TooLarge, ring_build
from .sampling import MatrixSampler, MatrixSpecError, parse_matrix_spec
from .scalars import FIELD_RATIONAL, FIELDS


class _CliError(Exception):
    """An error with a contractual exit code and a one-line message."""

    def __init__(self, code, message):
        super().__init__(message)
        self.code = code


def _dump(data):
    return json.dumps(data, indent=2, sort_keys=True) + "\n"


def _emit(args, data, text_lines):
    """Print per --format and mirror the JSON to --out when given."""
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(_dump(data))
    if args.format == "json":
        sys.stdout.write(_dump(data))
    else:
        for line in text_lines:
            print(line)


def _matrix_text(matrix):
    from .scalars import format_scalar

    return ["[" + " ".join(format_scalar(v) for v in row) + "]" for row in matrix.rows]


def _load_matrix(path, field):
    try:
        with open(path, encoding="utf-8") as fh:
            data = json.load(fh)
    except OSError as exc:
        raise _CliError(2, f"cannot read matrix file {path!r}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise _CliError(2, f"matrix file {path!r} is not valid JSON: {exc}") from exc
    try:
        if isinstance(data, list):
            return ExactMatrix.from_rows(data, field)
        return ExactMatrix.from_json(data)
    except (MatrixFormatError, ValueError) as exc:
        raise _CliError(2, f"matrix file {path!r}: {exc}") from exc


# ``inner`` is served by the Moore-Penrose value, which satisfies the
# single inner equation; it is re-verified against that system alone.
_CONSTRUCTORS = {
    "mp": mp_inverse,
    "d": drazin_inverse,
    "grp": group_inverse,
    "core": core_inverse,
    "pc": pseudo_core_inverse,
    "rpc": right_pseudo_core_inverse,
    "dmp": dmp_inverse,
    "wd": wd_canonical,
}


def _cmd_compute(args):
    a = _load_matrix(args.matrix, args.field)
    witness = _load_matrix(args.witness, args.field) if args.witness else None
    if witness is not None and args.kind != "wdmp":
        raise _CliError(2, "--witness is only meaningful for --kind wdmp")
    try:
        if args.kind == "wdmp":
            result = wdmp_inverse(a, witness=witness)
        elif args.kind == "inner":
            value = mp_inverse(a).value
            if not verify_definition(InverseKind.INNER, a, value):
                raise _CliError(2, "internal error: inner verification failed")
            result = InverseResult(InverseKind.INNER, 1, value)
        else:
            result = _CONSTRUCTORS[args.kind](a)
    except IndexTooLarge as exc:
        data = {"version": __version__, "kind": args.kind, "exists": False,
                "reason": str(exc)}
        _emit(args, data, [f"no {args.kind} inverse: {exc}"])
        return 3
    except (MissingWitness, InvalidWitness) as exc:
        raise _CliError(2, str(exc)) from exc
    data = {"version": __version__, **result.to_json()}
    text = [f"{result.kind.value} inverse verified (k={result.k})"]
    text.extend(_matrix_text(result.value))
    _emit(args, data, text)
    return 0


def _cmd_oracle(args):
    try:
        ring = ring_build(args.ring)
    except (RingFormatError, TooLarge) as exc:
        raise _CliError(2, str(exc)) from exc
    if not 0 <= args.element < ring.size:
        raise _CliError(
            2, f"element {args.element} out of range for {args.ring} (size {ring.size})"
        )
    ws = ring.witness_set(args.element, InverseKind(args.kind))
    data = {"version": __version__, "ring": args.ring, **ws.to_json()}
    body = "∅" if not ws.witnesses else "{" + ", ".join(map(str, ws.witnesses)) + "}"
    text = [f"{args.kind} witnesses of {args.element} in {args.ring} "
            f"(k={ws.k_used}): {body}"]
    _emit(args, data, text)
    return 0 if ws.witnesses else 3


def _law_carrier(args):
    if (args.ring is None) == (args.matrices is None):
        raise _CliError(2, "exactly one of --ring or --matrices is required")
    if args.ring is not None:
        try:
            return ring_build(args.ring), "exhaustive"
        except (RingFormatError, TooLarge) as exc:
            raise _CliError(2, str(exc)) from exc
    try:
        dimension, field = parse_matrix_spec(args.matrices)
    except MatrixSpecError as exc:
        raise _CliError(2, str(exc)) from exc
    return MatrixSampler(dimension, field, seed=args.seed), "sampled"


def _cmd_law(args):
    try:
        with open(args.law, encoding="utf-8") as fh:
            law = parse_law(fh.read())
    except OSError as exc:
        raise _CliError(2, f"cannot read law file {args.law!r}: {exc}") from exc
    except LawSyntaxError as exc:
        raise _CliError(2, str(exc)) from exc
    carrier, default_mode = _law_carrier(args)
    mode = args.mode or default_mode
    try:
        if mode == "probe":
            report = necessity_probe(law, carrier, budget=args.budget)
        else:
            report = evaluate_law(
                carrier=carrier,
                law=law,
                mode=mode,
                budget=args.budget,
                samples=args.samples,
                seed=args.seed,
            )
    except ValueError as exc:
        raise _CliError(2, str(exc)) from exc
    data = {"version": __version__, **report.to_json()}
    if mode == "probe":
        text = [f"probe {report.status}: {report.conclusion_failures} binding(s) "
                "where the conclusion holds but a hypothesis fails"]
        _emit(args, data, text)
        return 0
    text = [f"law {report.status}: {report.bindings_satisfying} binding(s) "
            f"satisfied the hypotheses, {report.conclusion_failures} failure(s)"]
    for cx in report.counterexamples[:3]:
        text.append(f"  counterexample: {cx}")
    _emit(args, data, text)
    return 1 if report.status == "fail" else 0


def _cmd_suite(args):
    carriers = None if not args.rings else [s for s in args.rings.split(",") if s]
    ids = None
    if args.ids and args.ids != "all":
        ids = [s for s in args.ids.split(",") if s]
    try:
        report = run_all(
            carriers=carriers,
            budget=args.budget,
            samples=args.samples,
            seed=args.seed,
            ids=ids,
        )
    except (UnknownTheorem, InapplicableCarrier, ValueError) as exc:
        raise _CliError(2, str(exc)) from exc
    text = []
    for row in report["entries"]:
        text.append(f"{row['id']:<16} {row['carrier']:<8} {row['status']:<8} "
                    f"checked={row['bindings_checked']}")
        for warning in row["warnings"]:
            text.append(f"    warning: {warning}")
    text.append(f"failures: {report['failures']}")
    _emit(args, report, text)
    return 1 if report["failures"] else 0


def _parser():
    kinds = [kind.value for kind in InverseKind]
    top = argparse.ArgumentParser(
        prog="ginvlab",
        description="Exact generalized-inverse constructions, finite-ring "
        "witness oracles, law evaluation, and the theorem suite.",
    )
    top.add_argument("--version", action="version", version=f"ginvlab {__version__}")
    sub = top.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--out", help="also write the JSON report to this path")
        p.add_argument("--format", choices=("json", "text"), default="json",
                       help="stdout format (JSON is the stable contract)")

    p = sub.add_parser("compute", help="construct and verify one inverse")
    p.add_argument("matrix", help="path to a matrix JSON file (a row list, or "
                   "the {n, field, entries} object this tool writes)")
    p.add_argument("--kind", required=True, choices=kinds)
    p.add_argument("--field", choices=FIELDS, default=FIELD_RATIONAL,
                   help="field for row-list matrix files (default Q)")
    p.add_argument("--witness", help="wd witness file for --kind wdmp")
    common(p)

    p = sub.add_parser("oracle", help="exhaustive witness set in a finite ring")
    p.add_argument("--ring", required=True, help="ring spec, e.g. Zn:6 or M2:Z2")
    p.add_argument("--element", required=True, type=int,
                   help="element code in the ring's enumeration")
    p.add_argument("--kind", required=True, choices=kinds)
    common(p)

    p = sub.add_parser("law", help="evaluate a law file on one carrier")
    p.add_argument("law", help="path to a law file")
    p.add_argument("--ring", help="finite-ring carrier spec, e.g. Zn:6")
    p.add_argument("--matrices", help="matrix carrier spec, e.g. 4:Q or 2:Q(i)")
    p.add_argument("--mode", choices=("exhaustive", "sampled", "probe"),
                   help="default: exhaustive on rings, sampled on matrices; "
                   "probe hunts hypothesis-violating bindings whose "
                   "conclusion still holds (rings only, informational)")
    p.add_argument("--budget", type=int, default=10,
                   help="max counterexamples/hits recorded (default 10)")
    p.add_argument("--samples", type=int, default=200,
                   help="sampled-mode binding count (default 200)")
    p.add_argument("--seed", type=int, default=0)
    common(p)

    p = sub.add_parser("suite", help="run the theorem catalog and report")
    p.add_argument("--rings", help="comma-separated carrier specs (ring or "
                   "matrix form); default: the standard roster")
    p.add_argument("--ids", help="comma-separated theorem ids, or 'all'")
    p.add_argument("--budget", type=int, default=10)
    p.add_argument("--samples", type=int, default=200)
    p.add_argument("--seed", type=int, default=0)
    common(p)
    return top


_DISPATCH = {
    "compute": _cmd_compute,
    "oracle": _cmd_oracle,
    "law": _cmd_law,
    "suite": _cmd_suite,
}


def main(argv=None):
    try:
        args = _parser().parse_args(argv)
        return _DISPATCH[args.command](args)
    except _CliError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return exc.code
    except SystemExit:
        raise
    except Exception as exc:  # keep the exit-code contract even for bugs
        print(f"internal error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
