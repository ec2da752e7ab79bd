"""JSON serialization for groups, braces, solutions, graphs and census reports."""

from __future__ import annotations

import json
from pathlib import Path

import numpy as np

from .brace import SkewBrace, validate_brace
from .census import CensusReport
from .graphs import graph_from_json, graph_to_json  # noqa: F401  re-exported
from .groups import CayleyGroup, validate_group
from .ybe import SolutionMap


def group_to_json(G: CayleyGroup) -> dict:
    return {"order": G.order, "name": G.name, "table": G.op.tolist()}


def group_from_json(data: dict) -> CayleyGroup:
    return validate_group(data["table"], name=data.get("name"))


def brace_to_json(A: SkewBrace) -> dict:
    return {"n": A.n, "name": A.name, "add": A.add.op.tolist(), "circ": A.circ.op.tolist()}


def brace_from_json(data: dict) -> SkewBrace:
    A = validate_brace(data["add"], data["circ"], data.get("name"))
    if A.n != data.get("n", A.n):
        raise ValueError(f"declared n={data['n']} but tables have order {A.n}")
    return A


def solution_to_json(S: SolutionMap) -> dict:
    return S.as_dict()


def solution_from_json(data: dict) -> SolutionMap:
    n = int(data["n"])
    lam = np.asarray(data["lambda"], dtype=np.int64)
    rho = np.asarray(data["rho"], dtype=np.int64)
    if lam.shape != (n, n) or rho.shape != (n, n):
        raise ValueError("solution tables must be n x n")
    return SolutionMap(n, lam, rho)


def report_to_json(report: CensusReport, tables: bool = True) -> dict:
    """Census report; with ``tables`` each brace also carries its two tables."""
    data = report.as_dict()
    if tables:
        for entry, B in zip(data["braces"], report.braces):
            entry["add"] = B.add.op.tolist()
            entry["circ"] = B.circ.op.tolist()
    return data


def report_from_json(data: dict) -> CensusReport:
    braces = []
    names = []
    for entry in data["braces"]:
        if "add" not in entry:
            raise ValueError("census JSON was written without tables")
        braces.append(validate_brace(entry["add"], entry["circ"], f"SB({data['n']},{entry['index']})"))
        names.append(entry["additive"])
    return CensusReport(int(data["n"]), tuple(braces), tuple(names), float(data.get("seconds", 0.0)))


def dumps(data) -> str:
    """Deterministic JSON text (sorted keys, no trailing spaces)."""
    return json.dumps(data, sort_keys=True, indent=1, ensure_ascii=False)


def write_json(path, data) -> Path:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(dumps(data) + "\n", encoding="utf-8")
    return path


def read_json(path):
    return json.loads(Path(path).read_text(encoding="utf-8"))
