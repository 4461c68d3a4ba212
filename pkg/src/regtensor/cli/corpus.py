"""Bundled example sessions replayed against golden reports."""

from __future__ import annotations

import json
import time
from dataclasses import dataclass, field
from importlib import resources
from pathlib import Path
from typing import Optional

from .dsl import DslError, parse_session
from .render import dumps
from .runner import SCHEMA_VERSION, run_session

# Record fields compared against the golden report. Everything a query returns is a
# regression target, witnesses included.
COMPARED_FIELDS = ("query", "verdict", "noetherian", "dim", "rule_chain", "witnesses", "assumptions", "details", "error")


def bundled_dir() -> Path:
    return Path(str(resources.files("regtensor.cli") / "corpus"))


def case_names(directory: Optional[Path] = None) -> list[str]:
    d = directory or bundled_dir()
    return sorted(p.stem for p in d.glob("*.session"))


@dataclass
class CaseResult:
    name: str
    report: Optional[dict]
    mismatches: list = field(default_factory=list)
    errors: list = field(default_factory=list)
    seconds: float = 0.0

    @property
    def passed(self) -> bool:
        return not self.mismatches and not self.errors

    def to_json(self) -> dict:
        # no timings: the structured corpus output must be byte-identical across runs
        return {"name": self.name, "status": "pass" if self.passed else "fail",
                "queries": len(self.report["records"]) if self.report else 0,
                "mismatches": self.mismatches, "errors": self.errors, "report": self.report}


def compare(actual: dict, golden: dict) -> list[str]:
    out = []
    if golden.get("schema_version") != actual.get("schema_version"):
        out.append(f"schema_version: golden {golden.get('schema_version')} vs {actual.get('schema_version')}")
    if golden.get("bindings") != actual.get("bindings"):
        out.append("bindings differ")
    a_recs, g_recs = actual.get("records", []), golden.get("records", [])
    if len(a_recs) != len(g_recs):
        out.append(f"record count: golden {len(g_recs)} vs {len(a_recs)}")
    for i, (a, g) in enumerate(zip(a_recs, g_recs)):
        for key in COMPARED_FIELDS:
            if a.get(key) != g.get(key):
                out.append(f"record {i + 1} ({g.get('query')}): {key} differs")
    return out


def run_case(name: str, session_dir: Path, golden_dir: Path) -> CaseResult:
    t0 = time.perf_counter()
    src = (session_dir / f"{name}.session").read_text(encoding="utf-8")
    try:
        rep = run_session(parse_session(src))
    except DslError as err:
        return CaseResult(name, None, errors=[err.render(f"{name}.session")], seconds=time.perf_counter() - t0)
    res = CaseResult(name, rep.to_json(), errors=[e.render(f"{name}.session") for e in rep.errors])
    res.seconds = time.perf_counter() - t0
    gpath = golden_dir / f"{name}.json"
    if not gpath.exists():
        res.mismatches.append(f"missing golden file {gpath.name}")
    else:
        res.mismatches = compare(res.report, json.loads(gpath.read_text(encoding="utf-8")))
    return res


def run_corpus(filter_: Optional[str] = None, golden_dir: Optional[Path] = None,
               session_dir: Optional[Path] = None) -> list[CaseResult]:
    session_dir = session_dir or bundled_dir()
    golden_dir = golden_dir or session_dir
    names = [n for n in case_names(session_dir) if not filter_ or filter_ in n]
    return [run_case(n, session_dir, golden_dir) for n in names]


def write_goldens(results: list[CaseResult], golden_dir: Path) -> None:
    golden_dir.mkdir(parents=True, exist_ok=True)
    for r in results:
        if r.report is not None and not r.errors:
            (golden_dir / f"{r.name}.json").write_text(dumps(r.report), encoding="utf-8")


def corpus_json(results: list[CaseResult]) -> dict:
    return {"schema_version": SCHEMA_VERSION, "passed": sum(r.passed for r in results),
            "total": len(results), "cases": [r.to_json() for r in results]}


def corpus_table(results: list[CaseResult]) -> str:
    width = max([len(r.name) for r in results] + [4])
    lines = [f"{'case':<{width}}  status  queries  seconds"]
    for r in results:
        q = len(r.report["records"]) if r.report else 0
        lines.append(f"{r.name:<{width}}  {'pass' if r.passed else 'FAIL':<6}  {q:>7}  {r.seconds:7.2f}")
        for m in r.mismatches + r.errors:
            lines.append(f"{'':<{width}}    {m}")
    lines.append(f"{sum(r.passed for r in results)}/{len(results)} passed")
    return "\n".join(lines) + "\n"
