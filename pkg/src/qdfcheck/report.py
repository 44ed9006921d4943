"""Text and structured renderings of a :class:`Report`."""

from __future__ import annotations

import json

FORMATS = ("text", "json-like-structured")


def as_structured(report, timings: bool = False) -> dict:
    return {
        "config": report.config,
        "claims": [r.as_dict(timings) for r in report.results],
        "summary": report.summary,
    }


def emit_report(report, fmt: str = "text", timings: bool = False) -> bytes:
    if fmt == "json-like-structured":
        text = json.dumps(as_structured(report, timings), sort_keys=True, indent=2, ensure_ascii=False)
        return (text + "\n").encode("utf-8")
    if fmt != "text":
        raise ValueError(f"unknown report format {fmt!r}")
    width = max((len(r.id) for r in report.results), default=0)
    lines = []
    for r in report.results:
        tag = {"pass": "PASS", "fail": "FAIL", "resource-limited": "LIMIT"}[r.status]
        line = f"{tag:5s} {r.id:{width}s}  {'[' + r.field + ']':11s}"
        if timings and r.ms is not None:
            line += f" {r.ms:8.1f} ms"
        if r.status != "pass" and r.witness:
            line += "  witness: " + "; ".join(str(w) for w in r.witness[:4])
        lines.append(line.rstrip())
    s = report.summary
    lines.append(f"{s['pass']} passed, {s['fail']} failed, {s['limited']} resource-limited")
    return ("\n".join(lines) + "\n").encode("utf-8")
