"""Command-line surface: table, classify, enumerate, tm, encode, experiment.

Exit codes follow one contract everywhere: 0 success, 1 domain error
(guards, validation violations, out-of-range values), 2 usage error
(malformed arguments or unparsable input files).  Usage errors never
produce partial domain output.

Every command prints human-readable text by default and a structured JSON
document under ``--json``; the JSON forms parse back into the library
types (see ``table_from_obj``, ``outcome_from_obj``,
``harness.report_from_obj``).
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from . import harness, logic, radix
from .machinefile import MachineFileError, parse_machine_file
from .turing import (
    InstantaneousDescription,
    RunOutcome,
    accepts_within,
    accepts_within_space,
    run_deterministic,
    validate,
)


class UsageError(Exception):
    """Bad command usage; reported on stderr with exit code 2."""


# ---------------------------------------------------------------------------
# Structured forms

def table_to_obj(
    index: logic.UnaryIndex | logic.BinaryIndex,
    table: logic.UnaryTable | logic.BinaryTable,
) -> dict:
    """Structured document: {modulus, kind, index, outputs} (exponents only)."""
    if isinstance(table, logic.UnaryTable):
        return {
            "modulus": table.modulus,
            "kind": "unary",
            "index": list(index.indices),
            "outputs": [v.exponent for v in table.outputs],
        }
    return {
        "modulus": table.modulus,
        "kind": "binary",
        "index": [list(row) for row in index.matrix],
        "outputs": [[v.exponent for v in row] for row in table.outputs],
    }


def table_from_obj(obj: dict) -> tuple[logic.UnaryIndex | logic.BinaryIndex,
                                       logic.UnaryTable | logic.BinaryTable]:
    n = obj["modulus"]
    if obj["kind"] == "unary":
        idx = logic.UnaryIndex(n, tuple(obj["index"]))
        table = logic.UnaryTable(n, tuple(logic.LogicValue(n, e) for e in obj["outputs"]))
        return idx, table
    idx = logic.BinaryIndex(n, tuple(tuple(row) for row in obj["index"]))
    table = logic.BinaryTable(
        n, tuple(tuple(logic.LogicValue(n, e) for e in row) for row in obj["outputs"])
    )
    return idx, table


def id_to_obj(desc: InstantaneousDescription) -> dict:
    return {
        "state": desc.state,
        "tapes": [list(t) for t in desc.tapes],
        "heads": list(desc.heads),
    }


def id_from_obj(obj: dict) -> InstantaneousDescription:
    return InstantaneousDescription(
        obj["state"],
        tuple(tuple(t) for t in obj["tapes"]),
        tuple(obj["heads"]),
    )


def outcome_to_obj(outcome: RunOutcome) -> dict:
    return {
        "verdict": outcome.verdict,
        "steps_used": outcome.steps_used,
        "max_head_position": outcome.max_head_position,
        "trace": None if outcome.trace is None else [id_to_obj(d) for d in outcome.trace],
    }


def outcome_from_obj(obj: dict) -> RunOutcome:
    trace = obj["trace"]
    return RunOutcome(
        obj["verdict"],
        obj["steps_used"],
        obj["max_head_position"],
        None if trace is None else tuple(id_from_obj(d) for d in trace),
    )


# ---------------------------------------------------------------------------
# Text rendering

def _value_grid_unary(table: logic.UnaryTable) -> str:
    n = table.modulus
    lines = ["a\tout"]
    for a in range(n):
        lines.append(f"z{n}^{a}\t{table.outputs[a]}")
    return "\n".join(lines)


def _value_grid_binary(table: logic.BinaryTable) -> str:
    n = table.modulus
    header = "a\\b\t" + "\t".join(f"z{n}^{b}" for b in range(n))
    lines = [header]
    for a in range(n):
        lines.append(f"z{n}^{a}\t" + "\t".join(str(v) for v in table.outputs[a]))
    return "\n".join(lines)


def _classification_lines(
    kind: str,
    flat_index: tuple[int, ...],
    table: logic.UnaryTable | logic.BinaryTable,
    conv: logic.TruthConvention,
) -> list[str]:
    if table.modulus != 2:
        return []
    if kind == "unary":
        computed = logic.classify_unary(table, conv)  # type: ignore[arg-type]
    else:
        computed = logic.classify_binary(table, conv)  # type: ignore[arg-type]
    lines = [f"classification: {computed}"]
    label = logic.catalog_label(kind, flat_index)  # type: ignore[arg-type]
    if label is not None:
        normalized = logic.CATALOG_TO_CONNECTIVE[label]
        verdict = "agrees" if normalized == computed else "disagrees"
        lines.append(f"catalog label: {label} ({verdict})")
    return lines


def _parse_index(kind: str, n: int, text: str):
    try:
        values = tuple(int(part) for part in text.split(","))
    except ValueError:
        raise UsageError(f"malformed index {text!r}; expected comma-separated integers")
    expected = n if kind == "unary" else n * n
    if len(values) != expected:
        raise UsageError(
            f"{kind} index for n={n} needs {expected} entries, got {len(values)}"
        )
    try:
        if kind == "unary":
            return logic.UnaryIndex(n, values)
        rows = tuple(values[r * n : (r + 1) * n] for r in range(n))
        return logic.BinaryIndex(n, rows)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def _build_table(args) -> tuple:
    idx = _parse_index(args.kind, args.n, args.index)
    if args.kind == "unary":
        return idx, logic.unary_from_index(idx)
    return idx, logic.binary_from_index(idx)


def _flat_index(idx) -> tuple[int, ...]:
    if isinstance(idx, logic.UnaryIndex):
        return idx.indices
    return tuple(v for row in idx.matrix for v in row)


# ---------------------------------------------------------------------------
# Commands

def cmd_table(args) -> int:
    idx, table = _build_table(args)
    conv = logic.TruthConvention(args.true_exponent)
    if args.json:
        obj = table_to_obj(idx, table)
        if table.modulus == 2:
            if args.kind == "unary":
                obj["classification"] = logic.classify_unary(table, conv)
            else:
                obj["classification"] = logic.classify_binary(table, conv)
            label = logic.catalog_label(args.kind, _flat_index(idx))
            obj["catalog_label"] = label
            obj["catalog_agrees"] = (
                None if label is None
                else logic.CATALOG_TO_CONNECTIVE[label] == obj["classification"]
            )
        print(json.dumps(obj))
        return 0
    grid = (
        _value_grid_unary(table)
        if args.kind == "unary"
        else _value_grid_binary(table)
    )
    print(f"{args.kind} table, n={args.n}, index {args.index}")
    print(grid)
    for line in _classification_lines(args.kind, _flat_index(idx), table, conv):
        print(line)
    return 0


def cmd_classify(args) -> int:
    idx, table = _build_table(args)
    conv = logic.TruthConvention(args.true_exponent)
    if args.kind == "unary":
        computed = logic.classify_unary(table, conv)
    else:
        computed = logic.classify_binary(table, conv)
    if args.json:
        label = logic.catalog_label(args.kind, _flat_index(idx))
        print(json.dumps({
            "classification": computed,
            "catalog_label": label,
            "catalog_agrees": (
                None if label is None
                else logic.CATALOG_TO_CONNECTIVE[label] == computed
            ),
        }))
        return 0
    print(computed)
    for line in _classification_lines(args.kind, _flat_index(idx), table, conv)[1:]:
        print(line)
    return 0


def cmd_enumerate(args) -> int:
    sink = sys.stdout if args.output is None else open(args.output, "w", encoding="utf-8")
    try:
        if args.distinct_only:
            total, distinct = logic.distinctness_report(args.n, args.kind, args.allow_large)
            print(f"{total} {distinct}", file=sink)
            return 0
        pairs = (
            logic.enumerate_unary(args.n, args.allow_large)
            if args.kind == "unary"
            else logic.enumerate_binary(args.n, args.allow_large)
        )
        if args.json:
            objs = [table_to_obj(idx, table) for idx, table in pairs]
            print(json.dumps(objs), file=sink)
            return 0
        for idx, table in pairs:
            flat = _flat_index(idx)
            if args.kind == "unary":
                outs = ",".join(str(v.exponent) for v in table.outputs)
            else:
                outs = ",".join(str(v.exponent) for row in table.outputs for v in row)
            print(f"{','.join(str(i) for i in flat)}\t{outs}", file=sink)
        return 0
    finally:
        if sink is not sys.stdout:
            sink.close()


def cmd_tm(args) -> int:
    try:
        machine = parse_machine_file(args.machine)
    except OSError as exc:
        raise UsageError(f"cannot read machine file: {exc}")
    except MachineFileError as exc:
        raise UsageError(str(exc))
    findings = validate(machine)
    errors = [v for v in findings if v.severity == "error"]
    if errors:
        for v in errors:
            print(f"violation: {v.message}", file=sys.stderr)
        return 1
    word = tuple(args.word)
    if args.mode == "run":
        outcome = run_deterministic(machine, word, args.steps, want_trace=args.trace)
    elif args.mode == "accept":
        outcome = accepts_within(machine, word, args.steps)
    else:  # accept-space
        if args.space is None:
            raise UsageError("mode accept-space needs --space")
        outcome = accepts_within_space(machine, word, args.steps, args.space)
    if args.json:
        obj = outcome_to_obj(outcome)
        if not args.trace:
            obj["trace"] = None
        print(json.dumps(obj))
        return 0
    print(f"{outcome.verdict} {outcome.steps_used}")
    if args.trace and outcome.trace is not None:
        for desc in outcome.trace:
            print(str(desc))
    return 0


def _parse_word_arg(text: str) -> radix.RadixWord:
    try:
        return radix.parse_word(text)
    except radix.WordSpecError as exc:
        raise UsageError(str(exc)) from None
    # digit-out-of-range ValueError propagates as a domain error (exit 1)


def cmd_encode(args) -> int:
    word = _parse_word_arg(args.word)
    action = args.action
    rest = args.args
    if action == "value":
        _expect_args(rest, 0, "value")
        result: object = radix.word_value(word)
    elif action == "rebase":
        _expect_args(rest, 1, "rebase <new-base>")
        result = radix.format_word(radix.rebase(word, _int_arg(rest[0])))
    elif action == "shift":
        _expect_args(rest, 2, "shift <digit-index> <amount>")
        result = radix.format_word(
            radix.symbol_shift(word, _int_arg(rest[0]), _int_arg(rest[1]))
        )
    else:  # check
        _expect_args(rest, 2, "check <other-word> <modulus>")
        other = _parse_word_arg(rest[0])
        result = radix.exponent_identity_check(word, other, _int_arg(rest[1]))
    if args.json:
        print(json.dumps({"word": radix.format_word(word), "action": action,
                          "result": result}))
        return 0
    print(str(result).lower() if isinstance(result, bool) else result)
    return 0


def _expect_args(rest: list[str], count: int, usage: str) -> None:
    if len(rest) != count:
        raise UsageError(f"encode action usage: {usage}")


def _int_arg(text: str) -> int:
    try:
        return int(text)
    except ValueError:
        raise UsageError(f"expected an integer, got {text!r}") from None


def cmd_experiment(args) -> int:
    try:
        spec = harness.load_spec(args.spec)
    except OSError as exc:
        raise UsageError(f"cannot read spec file: {exc}")
    except (json.JSONDecodeError, ValueError) as exc:
        raise UsageError(f"bad experiment spec: {exc}")
    report = harness.run_experiment(spec)
    if args.output is not None:
        with open(args.output, "w", encoding="utf-8", newline="") as fh:
            harness.emit_report(report, args.format, fh)
    else:
        harness.emit_report(report, args.format, sys.stdout)
    print(harness.summary_line(report))
    return 0


# ---------------------------------------------------------------------------
# Parser

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cyclogic",
        description="roots-of-unity logic tables, Turing machine runs, "
                    "radix encodings, and step-count experiments",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_table_args(p):
        p.add_argument("--n", type=int, required=True, help="logic arity")
        p.add_argument("--kind", choices=("unary", "binary"), required=True)
        p.add_argument("--index", required=True,
                       help="comma-separated index entries (n or n*n of them)")
        p.add_argument("--true-exponent", type=int, default=0, choices=(0, 1))
        p.add_argument("--json", action="store_true")

    p_table = sub.add_parser("table", help="print one generated truth table")
    add_table_args(p_table)
    p_table.set_defaults(func=cmd_table)

    p_classify = sub.add_parser("classify", help="classification only")
    add_table_args(p_classify)
    p_classify.set_defaults(func=cmd_classify)

    p_enum = sub.add_parser("enumerate", help="stream a whole function family")
    p_enum.add_argument("--n", type=int, required=True)
    p_enum.add_argument("--kind", choices=("unary", "binary"), required=True)
    p_enum.add_argument("--distinct-only", action="store_true",
                        help="print only 'total distinct' counts")
    p_enum.add_argument("--allow-large", action="store_true",
                        help="override the enumeration size guard")
    p_enum.add_argument("--output", default=None, help="write to a file instead of stdout")
    p_enum.add_argument("--json", action="store_true")
    p_enum.set_defaults(func=cmd_enumerate)

    p_tm = sub.add_parser("tm", help="run a machine from a description file")
    p_tm.add_argument("machine", help="machine description file")
    p_tm.add_argument("--word", default="", help="input word (one character per symbol)")
    p_tm.add_argument("--mode", choices=("run", "accept", "accept-space"), default="run")
    p_tm.add_argument("-t", "--steps", type=int, default=10_000, help="step bound")
    p_tm.add_argument("-s", "--space", type=int, default=None, help="head-position bound")
    p_tm.add_argument("--trace", action="store_true", help="print the witness path")
    p_tm.add_argument("--json", action="store_true")
    p_tm.set_defaults(func=cmd_tm)

    p_enc = sub.add_parser("encode", help="radix word operations")
    p_enc.add_argument("word", help="word spec, e.g. b:16|3,10 (digits LSB first)")
    p_enc.add_argument("action", choices=("value", "rebase", "shift", "check"))
    p_enc.add_argument("args", nargs="*", help="action arguments")
    p_enc.add_argument("--json", action="store_true")
    p_enc.set_defaults(func=cmd_encode)

    p_exp = sub.add_parser("experiment", help="run a step-count experiment")
    p_exp.add_argument("spec", help="JSON experiment spec file")
    p_exp.add_argument("--format", choices=("csv", "json"), default="csv")
    p_exp.add_argument("--output", default=None, help="report file (default: stdout)")
    p_exp.set_defaults(func=cmd_experiment)

    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:  # argparse already printed the usage message
        return exc.code if isinstance(exc.code, int) else 2
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 2
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


def entry() -> None:
    sys.exit(main())
