"""Command-line front end.

Exit codes: 0 when a verdict is proved/refuted or a command completes, 1 on
input or constraint errors, 2 when the maximality verdict stays unknown.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import crosscheck as xcheck
from .core import AutomatonError, compact_word, format_word
from .criteria import Budget, enumerate_rank_words
from .document import AutomatonDocument, DocumentError, load, serialize
from .dot import automaton_dot, power_dot
from .families import FAMILIES, build_family
from .oracle import ORACLE_CAP
from .powerset import CapExceededError, resolve_cap
from .report import analyze, exit_code, render_text

EXIT_OK = 0
EXIT_INPUT = 1
EXIT_UNKNOWN = 2


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_INPUT, f"{self.prog}: error: {message}\n")


def _nonneg(text: str) -> int:
    value = int(text)
    if value < 0:
        raise argparse.ArgumentTypeError(f"expected a non-negative integer, got {text}")
    return value


def _add_format(p):
    p.add_argument("--format", choices=("text", "structured"), default="structured",
                   help="output format (default: structured JSON)")


def _add_analysis_flags(p):
    p.add_argument("--oracle", action="store_true",
                   help="fall back to exact 2-set distinguishability when the criteria fail")
    p.add_argument("--word-budget", type=_nonneg, default=None,
                   help="longest word tried in criterion roles (default 2n+2)")
    p.add_argument("--cap", type=int, default=None,
                   help="largest n for power-set constructions (default $SYNCRO_CAP or 20)")
    _add_format(p)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="syncro", description="Synchronization analysis of complete deterministic semi-automata.")
    sub = parser.add_subparsers(dest="verb", required=True, parser_class=_Parser)

    p = sub.add_parser("analyze", help="analyze an automaton document")
    p.add_argument("input", help="document path, or - for stdin")
    _add_analysis_flags(p)

    p = sub.add_parser("family", help="build and analyze a named family member")
    p.add_argument("name", help=f"one of {', '.join(FAMILIES)}")
    p.add_argument("--n", type=int, default=None, help="number of states")
    p.add_argument("--output", default=None, help="also write the automaton document here")
    _add_analysis_flags(p)

    p = sub.add_parser("rank-words", help="one shortest word per transformation of a given rank")
    p.add_argument("input")
    p.add_argument("--rank", type=int, required=True)
    p.add_argument("--max-len", type=_nonneg, default=None, help="word length bound (default 2n+2)")
    _add_format(p)

    p = sub.add_parser("export-dot", help="Graphviz rendering of an automaton or its power automaton")
    p.add_argument("input")
    p.add_argument("--target", choices=("automaton", "power"), default="automaton")
    p.add_argument("--cap", type=int, default=None)
    p.add_argument("--output", default=None)

    p = sub.add_parser("crosscheck", help="seeded oracle and property suites")
    p.add_argument("--samples", type=_nonneg, default=200)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--nmax", type=int, default=6)
    p.add_argument("--jobs", type=int, default=1)
    _add_format(p)
    return parser


def _emit(text: str, path: str | None = None) -> None:
    if path is None:
        sys.stdout.write(text)
    else:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)


def _budget(args) -> Budget:
    cap = resolve_cap(args.cap)
    return Budget(word_len=args.word_budget, use_oracle=args.oracle, cap=cap)


def _report_out(report: dict, fmt: str) -> int:
    if fmt == "text":
        _emit(render_text(report))
    else:
        _emit(json.dumps(report, indent=2, ensure_ascii=False) + "\n")
    return exit_code(report)


def cmd_analyze(args) -> int:
    doc = load(args.input)
    A = doc.automaton()
    return _report_out(analyze(A, _budget(args), name=doc.name), args.format)


def cmd_family(args) -> int:
    A = build_family(args.name, args.n)
    name = args.name if args.n is None else f"{args.name}_{A.n}"
    if args.output:
        doc = AutomatonDocument.from_automaton(A, name=name, source=f"syncro family {args.name} --n {A.n}")
        _emit(serialize(doc), args.output)
    return _report_out(analyze(A, _budget(args), name=name), args.format)


def cmd_rank_words(args) -> int:
    A = load(args.input).automaton()
    if not 1 <= args.rank <= A.n:
        raise AutomatonError(f"--rank must lie in [1, {A.n}], got {args.rank}")
    rows = enumerate_rank_words(A, args.rank, args.max_len)
    if args.format == "text":
        width = max((len(compact_word(A, w)) for w, _ in rows), default=1)
        _emit("".join(f"{compact_word(A, w):<{width}}  {f}\n" for w, f in rows))
    else:
        data = {"rank": args.rank, "count": len(rows),
                "rows": [{"word": format_word(A, w), "compact": compact_word(A, w), "length": len(w),
                          "image": list(f.image)} for w, f in rows]}
        _emit(json.dumps(data, indent=2, ensure_ascii=False) + "\n")
    return EXIT_OK


def cmd_export_dot(args) -> int:
    doc = load(args.input)
    A = doc.automaton()
    name = doc.name or "automaton"
    if args.target == "power":
        text = power_dot(A, name, resolve_cap(args.cap))
    else:
        text = automaton_dot(A, name)
    _emit(text, args.output)
    return EXIT_OK


def cmd_crosscheck(args) -> int:
    if not 2 <= args.nmax <= ORACLE_CAP:
        raise AutomatonError(f"--nmax {args.nmax} outside [2, {ORACLE_CAP}]: "
                             f"the brute-force oracle is capped at n = {ORACLE_CAP}")
    summary = xcheck.run(args.samples, args.seed, args.nmax, max(1, args.jobs))
    if args.format == "structured":
        data = {"samples": summary.samples, "seed": summary.seed, "nmax": summary.nmax, "ok": summary.ok,
                "suites": {}}
        for name, res in summary.suites.items():
            entry = {"checked": res.checked, "failed": res.failed, "ok": res.ok}
            if res.first_failure is not None:
                index, A, note = res.first_failure
                entry["first_counterexample"] = {"sample": index, "note": note,
                                                 "document": AutomatonDocument.from_automaton(A).to_dict()}
            data["suites"][name] = entry
        _emit(json.dumps(data, indent=2, ensure_ascii=False) + "\n")
    else:
        lines = [f"crosscheck: samples={summary.samples} seed={summary.seed} nmax={summary.nmax}"]
        for name, res in summary.suites.items():
            status = "ok" if res.ok else "FAIL"
            lines.append(f"{name:<28} checked={res.checked:<6} failed={res.failed:<4} {status}")
        for name, res in summary.suites.items():
            if res.first_failure is not None:
                index, A, note = res.first_failure
                lines.append(f"first counterexample for {name} (sample {index}) {note}".rstrip())
                lines.append(serialize(AutomatonDocument.from_automaton(A, name=f"{name}-{index}")).rstrip())
        _emit("\n".join(lines) + "\n")
    return EXIT_OK if summary.ok else EXIT_INPUT


COMMANDS = {
    "analyze": cmd_analyze,
    "family": cmd_family,
    "rank-words": cmd_rank_words,
    "export-dot": cmd_export_dot,
    "crosscheck": cmd_crosscheck,
}


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return COMMANDS[args.verb](args)
    except (DocumentError, AutomatonError, CapExceededError, ValueError) as exc:
        print(f"syncro {args.verb}: error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
