#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""
equiparity – command-line surface for equi-partition parity queries.

Subcommands:
- parity-partition / parity-observable: equi-partition of the m-qubit basis by
  parity and the observable built from it by spectral decomposition.
- function-table / span-analysis: sign tables of all n-bit Boolean functions
  and the exact verdict on whether one query can separate the parity classes.
- oracle / deutsch: the standard oracle U_f and the one-query circuit for n = 1.
- factorizable / is-equipartition: the two-qubit product-state test and the
  equi-partition check for hand-written classes.

Every command renders the same document as text, CSV or JSON; identical
invocations give byte-identical output. Exit codes: 0 ok, 2 usage/parse
errors, 3 size-limit errors.
"""

from __future__ import annotations

import argparse
import logging
import sys
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any, Callable, Dict, List, Optional, Sequence

from rich.console import Console

from .config import (
    DEFAULT_LOG_LEVEL,
    DEFAULT_TRACE_LEVEL,
    get_max_function_bits,
    get_max_print_qubits,
    get_max_qubits,
    get_norm_tolerance,
    get_tolerance,
    get_trace_path,
)
from .core.types import BitString, StateVector
from .errors import EquipartitionError, ParseError, UnnormalizedState, UsageError, require_range
from .functions import (
    BooleanFunction,
    ancilla_extended_span_analysis,
    deutsch_trace,
    enumerate_functions,
    functional_parity,
    oracle_matrix,
    oracle_permutation,
    paper_order,
    span_analysis,
)
from .functions.extensions import DEFAULT_SCHEME
from .observables import (
    EquiPartition,
    factorizability_determinant,
    is_equi_partition,
    is_factorizable,
    observable_from_partition,
    parity_partition,
)
from .reporting import (
    OutputDocument,
    TableView,
    fmt_complex,
    fmt_float,
    fmt_sign,
    parse_amplitudes,
    parse_classes,
    render_csv,
    render_text,
)
from .utils.trace import TraceLogger, build_trace_logger

err_console = Console(stderr=True, highlight=False, markup=False, emoji=False)
logger = logging.getLogger("equipartition_query")


@dataclass
class CommandOutput:
    command: str
    params: Dict[str, Any]
    result: Dict[str, Any]
    heading: str
    summary: List[str] = field(default_factory=list)
    views: List[TableView] = field(default_factory=list)
    csv_view: Optional[TableView] = None

    def render(self, fmt: str) -> str:
        if fmt == "json":
            return OutputDocument.build(self.command, self.params, self.result, "json").to_json()
        if fmt == "csv":
            return render_csv(self.csv_view or self.views[0])
        return render_text(self.heading, self.summary, self.views)


# --------------------------------------------------------------------
# Argument parsing
# --------------------------------------------------------------------
def _global_flags(default: Callable[[Any], Any]) -> argparse.ArgumentParser:
    # Shared by the top-level parser and every subparser, so the flags work
    # on either side of the subcommand. Subparsers use SUPPRESS defaults to
    # keep top-level values.
    parent = argparse.ArgumentParser(add_help=False)
    parent.add_argument(
        "--format",
        choices=["text", "csv", "json"],
        default=default("text"),
        help="Output format.",
    )
    parent.add_argument(
        "--output",
        type=str,
        default=default(None),
        help="Write the output to this path instead of stdout.",
    )
    parent.add_argument(
        "--tol",
        type=float,
        default=default(get_tolerance()),
        help="Amplitude-level tolerance (factorizability threshold).",
    )
    parent.add_argument(
        "--log-level",
        choices=["CRITICAL", "ERROR", "WARNING", "INFO", "DEBUG"],
        default=default(DEFAULT_LOG_LEVEL.upper()),
        help="Logging level for diagnostics on stderr.",
    )
    parent.add_argument(
        "--trace-path",
        type=str,
        default=default(None),
        help="Append a JSONL trace of the run to this file.",
    )
    parent.add_argument(
        "--trace-level",
        choices=["pipeline", "verbose", "debug"],
        default=default(DEFAULT_TRACE_LEVEL),
        help="Trace verbosity: 'pipeline' records results, 'verbose' adds witnesses, 'debug' adds timings.",
    )
    return parent


def build_parser() -> argparse.ArgumentParser:
    top_flags = _global_flags(lambda value: value)
    sub_flags = _global_flags(lambda value: argparse.SUPPRESS)

    parser = argparse.ArgumentParser(
        prog="equiparity",
        description=(
            "Equi-partition parity queries: parity observables over m-partite binary states and "
            "single-query analysis of functional parity over all Boolean functions of n bits."
        ),
        parents=[top_flags],
        formatter_class=argparse.ArgumentDefaultsHelpFormatter,
    )
    sub = parser.add_subparsers(dest="command", metavar="COMMAND")
    sub.required = True

    p = sub.add_parser("parity-partition", parents=[sub_flags], help="Equi-partition of the m-qubit basis by parity.")
    p.add_argument("--qubits", "-m", type=int, required=True, help="Number of qubits m (1..20).")

    p = sub.add_parser(
        "parity-observable", parents=[sub_flags], help="Parity observable P = 1*P_odd + 0*P_even and its projectors."
    )
    p.add_argument("--qubits", "-m", type=int, required=True, help="Number of qubits m (1..10).")

    p = sub.add_parser("function-table", parents=[sub_flags], help="Sign table of all Boolean functions of n bits.")
    p.add_argument("--n", type=int, required=True, help="Number of input bits (1..4).")
    p.add_argument(
        "--order",
        choices=["paper", "canonical"],
        default="paper",
        help="'paper': parity-major then canonical index; 'canonical': canonical index only.",
    )

    p = sub.add_parser(
        "span-analysis", parents=[sub_flags], help="Exact ranks and orthogonality of the parity-class spans."
    )
    p.add_argument("--n", type=int, required=True, help="Number of input bits (1..4; 1..3 with ancillas).")
    p.add_argument("--ancillas", type=int, default=0, help="Ancilla bits appended to every sign signature (0..2).")
    p.add_argument("--scheme", type=str, default=DEFAULT_SCHEME, help="Ancilla extension scheme id.")

    truth_help = "Truth table string: character k is f(canonical input k), f(0...0) first."
    p = sub.add_parser("oracle", parents=[sub_flags], help="The oracle U_f|x>|y> = |x>|y xor f(x)>.")
    p.add_argument("--truth-table", "-t", type=str, required=True, help=truth_help)

    p = sub.add_parser("deutsch", parents=[sub_flags], help="One-query parity circuit for a one-bit function.")
    p.add_argument("truth_table", type=str, help=truth_help + " Exactly two characters.")

    p = sub.add_parser("factorizable", parents=[sub_flags], help="Two-qubit product-state test a00*a11 = a01*a10.")
    p.add_argument(
        "amplitudes",
        type=str,
        help="Four comma-separated amplitudes in |00>,|01>,|10>,|11> order; 'a+bi' tokens allowed.",
    )
    p.add_argument("--auto-normalize", action="store_true", help="Normalize the amplitudes instead of rejecting them.")

    p = sub.add_parser("is-equipartition", parents=[sub_flags], help="Check hand-written classes of basis labels.")
    p.add_argument("--classes", type=str, required=True, help="Classes as '00,11;01,10'.")

    return parser


# --------------------------------------------------------------------
# Commands
# --------------------------------------------------------------------
def _members(labels: Sequence[BitString]) -> List[str]:
    return [str(b) for b in labels]


def cmd_parity_partition(args: argparse.Namespace, trace: TraceLogger) -> CommandOutput:
    m = args.qubits
    require_range("qubits", m, 1, get_max_qubits())
    p = parity_partition(m)
    equi = is_equi_partition(p)

    classes_view = TableView("Classes", ["outcome", "size", "members"], right_align=("size",))
    csv_view = TableView("Labels", ["label", "index", "outcome"])
    classes = []
    for outcome, members in zip(p.class_labels, p.classes):
        classes.append({"outcome": outcome, "size": len(members), "members": _members(members)})
        classes_view.add_row(outcome, len(members), " ".join(_members(members)))
        for b in members:
            csv_view.add_row(str(b), b.value, outcome)
    csv_view.rows.sort(key=lambda r: r[1])

    return CommandOutput(
        command="parity-partition",
        params={"qubits": m},
        result={"qubits": m, "classes": classes, "equi_partition": equi},
        heading=f"parity-partition (qubits={m})",
        summary=[f"equi-partition: {'yes' if equi else 'no'}"],
        views=[classes_view],
        csv_view=csv_view,
    )


def cmd_parity_observable(args: argparse.Namespace, trace: TraceLogger) -> CommandOutput:
    m = args.qubits
    cap = get_max_print_qubits()
    if not 1 <= m <= cap:
        raise UsageError(f"--qubits must be in 1..{cap} for matrix printing, got {m}")
    p = parity_partition(m)
    observable = observable_from_partition(p, [0.0, 1.0])

    diagonals = [[int(round(x.real)) for x in t.projector.diagonal()] for t in observable.terms]
    terms = []
    for t, diag in zip(observable.terms, diagonals):
        terms.append(
            {
                "eigenvalue": t.eigenvalue,
                "outcome": t.label,
                "members": _members(p.as_dict()[t.label]),
                "diagonal": diag,
                "support": [i for i, v in enumerate(diag) if v],
            }
        )

    classes_view = TableView("Spectral terms", ["eigenvalue", "members", "diagonal"])
    for term in terms:
        classes_view.add_row(
            fmt_float(term["eigenvalue"]),
            " ".join(term["members"]),
            "(" + ",".join(str(v) for v in term["diagonal"]) + ")",
        )
    diag_columns = [f"P[{fmt_float(t.eigenvalue)}]" for t in observable.terms]
    diag_view = TableView("Projector diagonals", ["index", "label", "outcome"] + diag_columns)
    for idx in range(1 << m):
        label = BitString.from_int(idx, m)
        diag_view.add_row(idx, str(label), label.parity, *[d[idx] for d in diagonals])

    return CommandOutput(
        command="parity-observable",
        params={"qubits": m},
        result={"qubits": m, "dimension": observable.dim, "terms": terms},
        heading=f"parity-observable (qubits={m}): P = 1*P[1] + 0*P[0]",
        summary=[f"dimension: {observable.dim}"],
        views=[classes_view, diag_view],
        csv_view=diag_view,
    )


def cmd_function_table(args: argparse.Namespace, trace: TraceLogger) -> CommandOutput:
    n = args.n
    require_range("n", n, 1, get_max_function_bits())
    universe = enumerate_functions(n)
    functions = paper_order(universe) if args.order == "paper" else list(universe)

    inputs = [str(BitString.from_int(x, n)) for x in range(1 << n)]
    view = TableView("Functions", ["index", "parity"] + [f"f({x})" for x in inputs], right_align=("index",))
    rows = []
    sizes = [0, 0]
    for f in functions:
        parity = functional_parity(f)
        sizes[parity] += 1
        signs = list(f.sign_signature.entries)
        rows.append({"index": f.canonical_index, "parity": parity, "signs": signs})
        view.add_row(f.canonical_index, parity, *[fmt_sign(s) for s in signs])

    return CommandOutput(
        command="function-table",
        params={"n": n, "order": args.order},
        result={"n": n, "order": args.order, "row_count": len(rows), "class_sizes": sizes, "rows": rows},
        heading=f"function-table (n={n}, order={args.order})",
        summary=[f"functions: {len(rows)}", f"class sizes (parity 0/1): {sizes[0]}/{sizes[1]}"],
        views=[view],
    )


def cmd_span_analysis(args: argparse.Namespace, trace: TraceLogger) -> CommandOutput:
    n, k = args.n, args.ancillas
    if k == 0:
        report = span_analysis(n, trace=trace)
    else:
        report = ancilla_extended_span_analysis(n, k, args.scheme, trace=trace)
    verdict = "SEPARABLE" if report.orthogonal else "NOT-SEPARABLE"

    view = TableView("Parity classes", ["parity", "size", "rank"], right_align=("size", "rank"))
    csv_view = TableView("Parity classes", ["parity", "size", "rank", "dimension", "orthogonal"])
    for parity in (0, 1):
        view.add_row(parity, report.class_sizes[parity], report.ranks[parity])
        csv_view.add_row(
            parity, report.class_sizes[parity], report.ranks[parity], report.dimension, str(report.orthogonal).lower()
        )
    summary = [
        f"verdict: {verdict}",
        f"ranks: {report.ranks[0]}/{report.ranks[1]} in dimension {report.dimension}",
    ]
    if k:
        summary.append(f"ancillas: {k} (scheme {report.scheme})")
    if report.witness:
        w = report.witness
        summary.append(
            f"witness: f{w.index_a} {w.vector_a} . f{w.index_b} {w.vector_b} = {w.inner_product}"
        )

    result = {"verdict": verdict, **report.to_dict()}
    return CommandOutput(
        command="span-analysis",
        params={"n": n, "ancillas": k, "scheme": report.scheme},
        result=result,
        heading=f"span-analysis (n={n}, ancillas={k})",
        summary=summary,
        views=[view],
        csv_view=csv_view,
    )


def cmd_oracle(args: argparse.Namespace, trace: TraceLogger) -> CommandOutput:
    f = BooleanFunction.parse(args.truth_table)
    u = oracle_matrix(f)
    perm = oracle_permutation(f)
    width = f.n + 1
    involution = all(perm[j] == i for i, j in enumerate(perm))

    view = TableView("Basis map |x>|y> -> |x>|y xor f(x)>", ["in", "|x y>", "out", "|x y'>"], right_align=("in", "out"))
    mapping = []
    for i, j in enumerate(perm):
        src, dst = str(BitString.from_int(i, width)), str(BitString.from_int(j, width))
        mapping.append({"input": src, "output": dst})
        view.add_row(i, src, j, dst)

    checks = {"permutation": u.is_permutation(), "unitary": u.is_unitary(), "involution": involution}
    return CommandOutput(
        command="oracle",
        params={"truth_table": str(f)},
        result={
            "n": f.n,
            "truth_table": str(f),
            "canonical_index": f.canonical_index,
            "parity": functional_parity(f),
            "dimension": u.dim,
            "permutation": list(perm),
            "mapping": mapping,
            "checks": checks,
        },
        heading=f"oracle (truth table {f}, n={f.n}, dimension {u.dim})",
        summary=[f"{name}: {'yes' if ok else 'no'}" for name, ok in checks.items()],
        views=[view],
    )


def cmd_deutsch(args: argparse.Namespace, trace: TraceLogger) -> CommandOutput:
    raw = (args.truth_table or "").strip()
    if len(raw) != 2:
        raise ParseError(f"the one-query circuit needs a 2-character truth table, got {args.truth_table!r}")
    f = BooleanFunction.parse(raw)
    run = deutsch_trace(f, trace=trace)
    parity = functional_parity(f)

    labels = [str(BitString.from_int(i, 2)) for i in range(4)]
    view = TableView("Circuit trace", ["stage"] + [f"a({x})" for x in labels])
    stages = []
    for stage in run.stages:
        amps = [complex(a) for a in stage.state.amplitudes]
        stages.append({"stage": stage.name, "amplitudes": amps})
        view.add_row(stage.name, *[fmt_complex(a) for a in amps])

    return CommandOutput(
        command="deutsch",
        params={"truth_table": str(f)},
        result={
            "truth_table": str(f),
            "stages": stages,
            "measured_parity": run.outcome,
            "probability": run.probability,
            "functional_parity": parity,
            "agrees": run.outcome == parity,
        },
        heading=f"deutsch (truth table {f})",
        summary=[f"measured parity: {run.outcome} (probability {fmt_float(run.probability)})"],
        views=[view],
    )


def cmd_factorizable(args: argparse.Namespace, trace: TraceLogger) -> CommandOutput:
    amps = parse_amplitudes(args.amplitudes)
    if len(amps) != 4:
        raise ParseError(f"expected exactly 4 comma-separated amplitudes, got {len(amps)}")
    state = StateVector(amps, normalized=False)
    norm_sq = state.norm_squared
    was_normalized = abs(norm_sq - 1.0) <= get_norm_tolerance()
    if not was_normalized:
        if not args.auto_normalize:
            raise UnnormalizedState(
                f"sum of |amplitude|^2 is {fmt_float(norm_sq)}; pass --auto-normalize to rescale"
            )
        state = state.normalize()
    det = factorizability_determinant(state)
    ok = is_factorizable(state, args.tol)
    verdict = "factorizable" if ok else "NOT factorizable"

    view = TableView("Amplitudes", ["basis", "amplitude"])
    for i, a in enumerate(state.amplitudes):
        view.add_row(str(BitString.from_int(i, 2)), fmt_complex(complex(a)))
    csv_view = TableView("Verdict", ["determinant", "abs_determinant", "tolerance", "factorizable"])
    csv_view.add_row(fmt_complex(det), fmt_float(abs(det)), fmt_float(args.tol), str(ok).lower())

    return CommandOutput(
        command="factorizable",
        params={"amplitudes": args.amplitudes, "tol": args.tol, "auto_normalize": bool(args.auto_normalize)},
        result={
            "amplitudes": [complex(a) for a in state.amplitudes],
            "input_norm_squared": norm_sq,
            "normalized_input": was_normalized,
            "determinant": det,
            "abs_determinant": abs(det),
            "factorizable": ok,
            "verdict": verdict,
        },
        heading="factorizable (a00*a11 - a01*a10)",
        summary=[f"determinant: {fmt_complex(det)}", f"verdict: {verdict}"],
        views=[view],
        csv_view=csv_view,
    )


def cmd_is_equipartition(args: argparse.Namespace, trace: TraceLogger) -> CommandOutput:
    classes = parse_classes(args.classes)
    p = EquiPartition.over_bitstrings(classes)
    equi = is_equi_partition(p)

    view = TableView("Classes", ["class", "size", "members"], right_align=("size",))
    out_classes = []
    for k, members in enumerate(p.classes):
        out_classes.append({"class": k, "size": len(members), "members": _members(members)})
        view.add_row(k, len(members), " ".join(_members(members)))

    return CommandOutput(
        command="is-equipartition",
        params={"classes": args.classes},
        result={"classes": out_classes, "sizes": list(p.sizes()), "equi_partition": equi},
        heading="is-equipartition",
        summary=[f"equi-partition: {'yes' if equi else 'no'}"],
        views=[view],
    )


COMMANDS: Dict[str, Callable[[argparse.Namespace, TraceLogger], CommandOutput]] = {
    "parity-partition": cmd_parity_partition,
    "parity-observable": cmd_parity_observable,
    "function-table": cmd_function_table,
    "span-analysis": cmd_span_analysis,
    "oracle": cmd_oracle,
    "deutsch": cmd_deutsch,
    "factorizable": cmd_factorizable,
    "is-equipartition": cmd_is_equipartition,
}


# --------------------------------------------------------------------
# Main
# --------------------------------------------------------------------
def _write_output(text: str, output: Optional[str], trace: TraceLogger) -> None:
    if output:
        path = Path(output)
        path.parent.mkdir(parents=True, exist_ok=True)
        path.write_text(text, encoding="utf-8")
        logger.info("Wrote output to %s", path)
        trace.event("output_written", data={"path": str(path), "bytes": len(text.encode("utf-8"))})
    else:
        sys.stdout.write(text)
        sys.stdout.flush()


def _fail(command: str, message: str, exit_code: int, trace: TraceLogger) -> int:
    logger.debug("%s failed", command, exc_info=True)
    err_console.print(f"error: {message}")
    trace.log("command_failed", {"command": command, "error": message, "exit_code": exit_code})
    return exit_code


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)

    logging.basicConfig(
        level=getattr(logging, args.log_level.upper(), logging.WARNING),
        format="%(asctime)s [%(levelname)s] %(name)s - %(message)s",
        handlers=[logging.StreamHandler(sys.stderr)],
    )
    logger.debug("CLI arguments: %s", args)

    trace = build_trace_logger(args.trace_path or get_trace_path(), level=args.trace_level)
    trace.log("command_start", {"command": args.command, "format": args.format})

    try:
        out = COMMANDS[args.command](args, trace)
        text = out.render(args.format)
    except EquipartitionError as ex:
        return _fail(args.command, str(ex), ex.exit_code, trace)
    try:
        _write_output(text, args.output, trace)
    except OSError as ex:
        return _fail(args.command, f"cannot write output: {ex}", UsageError.exit_code, trace)

    trace.log("command_done", {"command": args.command, "result": out.result if trace.is_verbose else None})
    return 0


if __name__ == "__main__":
    sys.exit(main())
