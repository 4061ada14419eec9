"""Serialising verification checks as JSON or as a plain-text table."""

from __future__ import annotations

import json
from typing import Iterable

from .pipelines import Check, exit_code

# every anchor a check may carry, with the statement it verifies
ANCHORS = {
    "nef-duality": "dual nef partition vertex sets and the Minkowski sum of the dual parts",
    "normal-fan-rays": "primitive ray generators of the normal fan of the Minkowski sum",
    "normal-fan-cones": "maximal cones of that normal fan",
    "mpcp-refinement": "simplicial refinement of the normal fan using only its rays",
    "mpcp-table": "comparison of the refinement with a tabulated cone list",
    "lt-cox-quotient": "Cox quotient data of the fan for P^5 modulo the order 81 group",
    "total-space-fans": "ray lists of the line bundle total spaces",
    "dual-cone-generators": "generators of the dual cone of each total space support",
    "superpotential-monomials": "monomials of the global function read off the dual cone points",
    "weighted-subdivision": "regular subdivision from the weights (2^6, 5^6, 1, 1)",
    "subdivision-cell-containment": "cells of that subdivision hold no extra configuration points",
    "lt-chamber-triangulation": "refined triangulation: T0 simplices, conditions (A)/(B), regularity",
    "bb-star-triangulation": "star triangulation over the bundle points, regularity and I = J",
    "containment-certificate": "explicit polynomial identities placing key monomials in sqrt(<dw>)",
    "lt-radical-containment": "I contained in sqrt(<dw> + J) for the refined triangulation",
    "bb-radical-containment": "I contained in sqrt(<dw> + J) for the star triangulation",
    "n2-replica": "the same chain for the pair of quadrics in P^3",
}


def bundle(command: str, checks: Iterable[Check], params: dict | None = None,
           timings: bool = False) -> dict:
    checks = list(checks)
    counts = {s: sum(c.status == s for c in checks) for s in ("pass", "fail", "undecided")}
    return {"command": command, "parameters": params or {},
            "checks": [c.to_json(timings) for c in checks],
            "summary": {**counts, "errata": sum(c.erratum for c in checks),
                        "exit_code": exit_code(checks)}}


def dumps(data) -> str:
    return json.dumps(data, indent=2, ensure_ascii=False) + "\n"


def text_table(report: dict) -> str:
    """One line per check: status, anchor and name, then the summary."""
    rows = []
    for c in report.get("checks", []):
        status = c["status"] + ("*" if c.get("erratum") else "")
        line = f"{status:<10} {c['anchor']:<30} {c['check']}"
        if "wall_time" in c:
            line += f"  ({c['wall_time']:.3f} s)"
        rows.append(line)
    s = report.get("summary")
    if s:
        rows.append(f"pass {s['pass']}  fail {s['fail']}  undecided {s['undecided']}"
                    f"  exit {s['exit_code']}")
        if s.get("errata"):
            rows.append("* compares against a misprinted source value; not counted in the exit code")
    return "\n".join(rows) + "\n"


def render(data, fmt: str = "json") -> str:
    if fmt == "json":
        return dumps(data)
    if isinstance(data, dict) and "checks" in data:
        return text_table(data)
    return _plain(data)


def _plain(data, indent: int = 0) -> str:
    pad = "  " * indent
    if isinstance(data, dict):
        out = []
        for k, v in data.items():
            if isinstance(v, (dict, list)) and v and not _flat(v):
                out.append(f"{pad}{k}:")
                out.append(_plain(v, indent + 1).rstrip("\n"))
            else:
                out.append(f"{pad}{k}: {_inline(v)}")
        return "\n".join(out) + "\n"
    if isinstance(data, list):
        return "".join(f"{pad}{_inline(v)}\n" for v in data)
    return f"{pad}{data}\n"


def _flat(v) -> bool:
    return isinstance(v, list) and all(not isinstance(x, (dict, list)) for x in v)


def _inline(v) -> str:
    if isinstance(v, list):
        return " ".join(_inline(x) for x in v) if _flat(v) else json.dumps(v)
    if isinstance(v, dict):
        return json.dumps(v)
    return str(v)
