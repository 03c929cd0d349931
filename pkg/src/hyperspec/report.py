"""Deterministic report envelopes in JSON, CSV and plain text.

Floats are written with 17 significant digits so every value parses back to
the same double; non-finite floats become ``null``. Keys are sorted and no
timestamps are recorded, so identical invocations give identical bytes.
"""

from __future__ import annotations

import csv
import hashlib
import io
import json
import math
from importlib import resources
from typing import Any

import numpy as np

from ._version import __version__

TOOL = "hyperspec"


def digest(data: bytes) -> str:
    return hashlib.sha256(data).hexdigest()


def envelope(command: str, argv: list[str], params: dict[str, Any], source: str, data: bytes,
             payload: dict[str, Any]) -> dict[str, Any]:
    return {
        "tool": TOOL,
        "version": __version__,
        "command": command,
        "argv": list(argv),
        "params": params,
        "input": {"source": source, "sha256": digest(data)},
        "payload": payload,
    }


def plain(obj: Any) -> Any:
    """Convert numpy scalars/arrays, tuples and sets into JSON-ready Python values."""
    if isinstance(obj, dict):
        return {str(k): plain(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [plain(v) for v in obj]
    if isinstance(obj, (set, frozenset)):
        return sorted(plain(v) for v in obj)
    if isinstance(obj, np.ndarray):
        return plain(obj.tolist())
    if isinstance(obj, (np.bool_, bool)):
        return bool(obj)
    if isinstance(obj, np.integer):
        return int(obj)
    if isinstance(obj, (np.floating, float)):
        x = float(obj)
        return x if math.isfinite(x) else None
    return obj


def _float_text(x: float) -> str:
    if not math.isfinite(x):
        return "null"
    text = format(x, ".17g")
    # keep integral values (and -0.0) parsing back as floats
    return text if any(ch in text for ch in ".e") else text + ".0"


def _emit(obj: Any, out: list[str]) -> None:
    if obj is None:
        out.append("null")
    elif obj is True:
        out.append("true")
    elif obj is False:
        out.append("false")
    elif isinstance(obj, int):
        out.append(str(obj))
    elif isinstance(obj, float):
        out.append(_float_text(obj))
    elif isinstance(obj, str):
        out.append(json.dumps(obj, ensure_ascii=False))
    elif isinstance(obj, list):
        out.append("[")
        for k, v in enumerate(obj):
            if k:
                out.append(", ")
            _emit(v, out)
        out.append("]")
    elif isinstance(obj, dict):
        out.append("{")
        for k, key in enumerate(sorted(obj)):
            if k:
                out.append(", ")
            out.append(json.dumps(key, ensure_ascii=False) + ": ")
            _emit(obj[key], out)
        out.append("}")
    else:
        raise TypeError(f"cannot serialize {type(obj).__name__}")


def to_json(report: dict[str, Any]) -> str:
    out: list[str] = []
    _emit(plain(report), out)
    return "".join(out) + "\n"


def from_json(text: str) -> dict[str, Any]:
    return json.loads(text)


def _fmt(x: Any) -> str:
    if isinstance(x, float):
        return format(x, ".17g") if math.isfinite(x) else ""
    if x is None:
        return ""
    if isinstance(x, (list, dict)):
        return json.dumps(x, sort_keys=True)
    return str(x)


def _rows(payload: dict[str, Any]) -> tuple[list[str], list[list[Any]]]:
    kind = payload["kind"]
    if kind == "spectrum":
        return ["index", "eigenvalue"], [[k + 1, v] for k, v in enumerate(payload["eigenvalues"])]
    if kind == "audit":
        cols = ["bound_id", "relation", "verdict", "must_hold", "subject", "bound", "margin", "reasons"]
        return cols, [[r[c] if c != "reasons" else "; ".join(r[c]) for c in cols] for r in payload["reports"]]
    if kind == "curvature" and payload.get("pairs"):
        cols = ["x", "y", "kappa", "w1"]
        return cols, [[p["pair"][0], p["pair"][1], p["kappa"], p["w1"]] for p in payload["pairs"]]
    if kind == "walk" and "path" in payload:
        return ["t", "vertex"], [[t, v] for t, v in enumerate(payload["path"])]
    if kind == "walk" and "certificates" in payload:
        cols = ["t", "lhs", "rhs", "holds"]
        return cols, [[c[k] for k in cols] for c in payload["certificates"]]
    flat = {k: v for k, v in payload.items() if k != "kind"}
    return ["key", "value"], [[k, flat[k]] for k in sorted(flat)]


def to_csv(report: dict[str, Any]) -> str:
    cols, rows = _rows(plain(report["payload"]))
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(cols)
    for row in rows:
        w.writerow([_fmt(x) for x in row])
    return buf.getvalue()


def to_text(report: dict[str, Any]) -> str:
    rep = plain(report)
    head = f"{rep['tool']} {rep['version']} {rep['command']}  input sha256 {rep['input']['sha256'][:16]}"
    cols, rows = _rows(rep["payload"])
    table = [cols] + [[_fmt(x) for x in row] for row in rows]
    widths = [max(len(r[k]) for r in table) for k in range(len(cols))]
    lines = [head] + ["  ".join(v.ljust(w) for v, w in zip(r, widths)).rstrip() for r in table]
    return "\n".join(lines) + "\n"


def render(report: dict[str, Any], fmt: str) -> str:
    if fmt == "json":
        return to_json(report)
    if fmt == "csv":
        return to_csv(report)
    if fmt == "text":
        return to_text(report)
    raise ValueError(f"unknown format {fmt!r}")


def schema() -> dict[str, Any]:
    """The JSON Schema every JSON report validates against."""
    text = resources.files("hyperspec").joinpath("schema/report.schema.json").read_text(encoding="utf-8")
    return json.loads(text)
