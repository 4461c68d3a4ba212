"""Command-line interface: ``regtensor run``, ``regtensor corpus`` and ``regtensor fmt``.

Exit codes: 0 when every query completed (whatever the mathematical verdicts),
1 when a corpus case disagrees with its golden report, 2 on input or engine errors.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .corpus import corpus_json, corpus_table, run_corpus, write_goldens
from .dsl import DslError, Session, parse_session
from .render import dumps, render_text
from .runner import Report, run_session

__all__ = ["main", "parse_session", "run_session", "Session", "Report", "DslError"]

EXIT_OK, EXIT_MISMATCH, EXIT_ERROR = 0, 1, 2


def _read(path: str) -> tuple[str, str]:
    if path == "-":
        return sys.stdin.read(), "<stdin>"
    return Path(path).read_text(encoding="utf-8"), path


def _cmd_run(args) -> int:
    try:
        text, label = _read(args.file)
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR
    try:
        session = parse_session(text)
    except DslError as err:
        print(err.render(label), file=sys.stderr)
        return EXIT_ERROR
    report = run_session(session)
    out = dumps(report.to_json()) if args.format == "json" else render_text(report)
    sys.stdout.write(out)
    for err in report.errors:
        print(err.render(label), file=sys.stderr)
    return report.exit_code


def _cmd_fmt(args) -> int:
    try:
        text, label = _read(args.file)
        sys.stdout.write(parse_session(text).to_text())
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR
    except DslError as err:
        print(err.render(label), file=sys.stderr)
        return EXIT_ERROR
    return EXIT_OK


def _cmd_corpus(args) -> int:
    golden = Path(args.golden_dir) if args.golden_dir else None
    results = run_corpus(args.filter, golden_dir=golden)
    if not results:
        print(f"no corpus case matches {args.filter!r}", file=sys.stderr)
        return EXIT_ERROR
    if args.write_golden:
        write_goldens(results, golden or Path(args.write_golden))
        for r in results:
            r.mismatches = []
    sys.stdout.write(dumps(corpus_json(results)) if args.format == "json" else corpus_table(results))
    if any(r.errors for r in results):
        return EXIT_ERROR
    if args.write_golden:
        return EXIT_OK
    return EXIT_OK if all(r.passed for r in results) else EXIT_MISMATCH


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="regtensor",
                                 description="Decide regularity of tensor products of field extensions.")
    sub = ap.add_subparsers(dest="command", required=True)
    r = sub.add_parser("run", help="run a session file ('-' reads stdin)")
    r.add_argument("file")
    r.add_argument("--format", choices=("text", "json"), default="text")
    r.set_defaults(func=_cmd_run)
    f = sub.add_parser("fmt", help="print a session in canonical form")
    f.add_argument("file")
    f.set_defaults(func=_cmd_fmt)
    c = sub.add_parser("corpus", help="replay the bundled example sessions against golden reports")
    c.add_argument("--filter", help="only cases whose name contains this text")
    c.add_argument("--format", choices=("text", "json"), default="text")
    c.add_argument("--golden-dir", help="read golden reports from this directory")
    c.add_argument("--write-golden", metavar="DIR",
                   help="write the current reports as goldens into DIR (or into --golden-dir if given)")
    c.set_defaults(func=_cmd_corpus)
    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
