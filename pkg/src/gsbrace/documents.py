"""Canonical JSON documents for tables, solutions and semilattice systems.

Loading validates shape only (integers in range, square tables, matching
orders); algebraic properties are left to the verifiers.
"""
from __future__ import annotations

import json
from typing import Any

from .errors import AlgebraError
from .finalg import (
    CarrierMap,
    CompletelyRegularStructure,
    FiniteSemigroup,
    Semilattice,
    as_table,
)
from .semibrace import GeneralizedLeftSemiBrace, make_semibrace
from .sslattice import SemilatticeSystem
from .ybesol import SetSolution

SCHEMA_VERSION = "1.0"
KINDS = ("semigroup", "group", "semibrace", "solution", "semilattice_system")


class DocumentError(Exception):
    """Unreadable or malformed document."""


def dumps(doc: dict) -> str:
    return json.dumps(doc, sort_keys=True, separators=(",", ":")) + "\n"


def _rows(t) -> list[list[int]]:
    return [list(map(int, r)) for r in t]


def semigroup_document(s, kind: str = "semigroup", meta=None) -> dict:
    base = s.base if isinstance(s, CompletelyRegularStructure) else s
    doc = {"schema_version": SCHEMA_VERSION, "kind": kind, "order": base.order,
           "mul_table": _rows(base.table)}
    if meta:
        doc["meta"] = meta
    return doc


def semibrace_document(s: GeneralizedLeftSemiBrace, meta=None) -> dict:
    doc = {"schema_version": SCHEMA_VERSION, "kind": "semibrace", "order": s.order,
           "add_table": _rows(s.add.table), "mul_table": _rows(s.mul.table)}
    if meta:
        doc["meta"] = meta
    return doc


def solution_document(r: SetSolution, meta=None) -> dict:
    """``lam_table[x][y] = lambda_x(y)``, ``rho_table[y][x] = rho_y(x)``."""
    doc = {"schema_version": SCHEMA_VERSION, "kind": "solution", "order": r.order,
           "lam_table": _rows(r.lam), "rho_table": _rows(r.rho)}
    if meta:
        doc["meta"] = meta
    return doc


def payload_document(p) -> dict:
    if isinstance(p, SetSolution):
        return solution_document(p)
    return semibrace_document(p)


def system_document(sys: SemilatticeSystem, meta=None) -> dict:
    phi = [{"from": a, "to": b, "map": list(f.map)} for (a, b), f in sys.phi.items() if a != b]
    doc = {"schema_version": SCHEMA_VERSION, "kind": "semilattice_system", "order": sys.order,
           "semilattice": _rows(sys.y.table), "payloads": [payload_document(p) for p in sys.payloads],
           "phi": phi, "offsets": list(sys.offsets)}
    if meta:
        doc["meta"] = meta
    return doc


def document_of(obj, meta=None) -> dict:
    if isinstance(obj, SemilatticeSystem):
        return system_document(obj, meta)
    if isinstance(obj, SetSolution):
        return solution_document(obj, meta)
    if isinstance(obj, GeneralizedLeftSemiBrace):
        return semibrace_document(obj, meta)
    return semigroup_document(obj, meta=meta)


# loading

def _need(doc: dict, key: str):
    if key not in doc:
        raise DocumentError(f"missing field {key!r}")
    return doc[key]


def _table(doc: dict, key: str, order: int):
    try:
        return as_table(_need(doc, key), order)
    except AlgebraError as exc:
        raise DocumentError(f"{key}: {exc}") from None


def _check_header(doc) -> str:
    if not isinstance(doc, dict):
        raise DocumentError("document is not a JSON object")
    if _need(doc, "schema_version") != SCHEMA_VERSION:
        raise DocumentError(f"unsupported schema_version {doc['schema_version']!r}")
    kind = _need(doc, "kind")
    if kind not in KINDS:
        raise DocumentError(f"unknown kind {kind!r}")
    order = _need(doc, "order")
    if not isinstance(order, int) or isinstance(order, bool) or order < 1:
        raise DocumentError("order must be a positive integer")
    return kind


def validate(doc: Any) -> dict:
    """Shape check; returns the document unchanged."""
    kind = _check_header(doc)
    n = doc["order"]
    if kind in ("semigroup", "group"):
        _table(doc, "mul_table", n)
    elif kind == "semibrace":
        _table(doc, "add_table", n)
        _table(doc, "mul_table", n)
    elif kind == "solution":
        _table(doc, "lam_table", n)
        _table(doc, "rho_table", n)
    else:
        y = _table(doc, "semilattice", None)
        payloads = _need(doc, "payloads")
        if not isinstance(payloads, list) or len(payloads) != len(y):
            raise DocumentError("need one payload per semilattice element")
        kinds = set()
        for p in payloads:
            validate(p)
            if p["kind"] not in ("semibrace", "solution"):
                raise DocumentError("payloads must be semibrace or solution documents")
            kinds.add(p["kind"])
        if len(kinds) > 1:
            raise DocumentError("payloads of mixed kinds")
        sizes = [p["order"] for p in payloads]
        if sum(sizes) != n:
            raise DocumentError("order is not the sum of the payload orders")
        if "offsets" in doc:
            offs = [sum(sizes[:i]) for i in range(len(sizes))]
            if doc["offsets"] != offs:
                raise DocumentError(f"offsets must be {offs}")
        phi = _need(doc, "phi")
        if not isinstance(phi, list):
            raise DocumentError("phi must be a list")
        for e in phi:
            if not isinstance(e, dict):
                raise DocumentError("phi entries are objects")
            a, b, m = _need(e, "from"), _need(e, "to"), _need(e, "map")
            if not all(isinstance(v, int) and 0 <= v < len(y) for v in (a, b)):
                raise DocumentError(f"phi entry {a}->{b} names an unknown element")
            if (not isinstance(m, list) or len(m) != sizes[a]
                    or not all(isinstance(v, int) and not isinstance(v, bool) and 0 <= v < sizes[b]
                               for v in m)):
                raise DocumentError(f"phi map {a}->{b} does not fit the carriers")
    return doc


def loads(text: str) -> dict:
    try:
        doc = json.loads(text)
    except (json.JSONDecodeError, UnicodeDecodeError) as exc:
        raise DocumentError(f"not valid JSON: {exc}") from None
    return validate(doc)


def load(path) -> dict:
    try:
        with open(path, encoding="utf-8") as fh:
            return loads(fh.read())
    except OSError as exc:
        raise DocumentError(str(exc)) from None


def build_system(doc: dict) -> SemilatticeSystem:
    """Turn a validated system document into a system; algebraic failures surface as AlgebraError."""
    y = Semilattice.from_table(doc["semilattice"])
    payloads = []
    for p in doc["payloads"]:
        if p["kind"] == "solution":
            payloads.append(SetSolution(p["lam_table"], p["rho_table"]))
        else:
            payloads.append(make_semibrace(p["add_table"], FiniteSemigroup(p["mul_table"])))
    sizes = [p.order for p in payloads]
    phi = {(e["from"], e["to"]): CarrierMap(sizes[e["from"]], sizes[e["to"]], tuple(e["map"]))
           for e in doc["phi"]}
    return SemilatticeSystem(y, tuple(payloads), phi)
