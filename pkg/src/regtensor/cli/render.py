"""Text and JSON rendering of reports. Both are deterministic."""

from __future__ import annotations

import json


def dumps(obj) -> str:
    return json.dumps(obj, indent=2, ensure_ascii=False, default=str) + "\n"


def _value(v) -> str:
    if isinstance(v, str):
        return v
    return json.dumps(v, ensure_ascii=False, default=str)


def _witness_line(w: dict) -> str:
    rest = ", ".join(f"{k}={_value(v)}" for k, v in w.items() if k != "kind")
    return f"{w.get('kind', 'data')}: {rest}"


def render_record(rec: dict) -> list[str]:
    out = [f"query {rec['query']}  (line {rec['line']})"]
    if "error" in rec:
        out.append(f"  error [{rec['error']['kind']}]: {rec['error']['message']}")
        return out
    head = []
    if rec.get("verdict") is not None:
        head.append(f"verdict: {rec['verdict']}")
    if rec.get("noetherian") is not None:
        head.append(f"noetherian: {rec['noetherian']}")
    if rec.get("dim") is not None:
        head.append(f"dim: {rec['dim']}")
    if head:
        out.append("  " + "   ".join(head))
    if rec.get("rule_chain"):
        out.append("  rules:")
        for i, r in enumerate(rec["rule_chain"], 1):
            out.append(f"    {i}. {r['rule']}" + (f": {r['detail']}" if r["detail"] else ""))
    if rec.get("witnesses"):
        out.append("  witnesses:")
        out.extend(f"    - {_witness_line(w)}" for w in rec["witnesses"])
    if rec.get("assumptions"):
        out.append("  assumptions:")
        out.extend(f"    - {a}" for a in rec["assumptions"])
    if rec.get("details"):
        out.append("  details:")
        for k, v in rec["details"].items():
            out.append(f"    {k}: {_value(v)}")
    return out


def render_text(report) -> str:
    lines = []
    for b in report.bindings:
        if b["kind"] == "base":
            lines.append(f"{b['name']} = {b['field']}")
        elif b["kind"] == "field":
            lines.append(f"{b['name']} = {b['tower']}   [degree {b['degree_over_base']}, "
                         f"td {b['transcendence_degree']}]")
            lines.extend(f"  note: {n}" for n in b.get("notes", ()))
        else:
            lines.append(f"{b['name']} = {b['descriptor']}")
    for rec in report.records:
        lines.append("")
        lines.extend(render_record(rec))
    return "\n".join(lines) + "\n"
