"""``gsbrace`` command line: verify, build, solution, semilattice, index-period, enumerate.

Exit status is 0 when every required check passes, 1 when a property or a
constructor precondition fails, and 2 for unreadable or malformed input or an
out-of-range request.
"""
from __future__ import annotations

import argparse
import json
import sys
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field

from . import documents as docs
from .errors import (
    AlgebraError,
    ComponentNotSolution,
    ConditionFailed,
    EquivarianceFailed,
    NotHomomorphism,
    SystemMalformed,
)
from .finalg import (
    CarrierMap,
    FiniteSemigroup,
    as_group,
    check_associative,
    classify_band,
    complete_regular_inverses,
    is_clifford,
    is_band,
)
from .groups import named_group, named_map
from .search import crypto_counterexample, fg_pairs, groups_up_to, semibrace_tables
from .semibrace import (
    LeftSemiBrace,
    as_completely_regular,
    associated_solution,
    build_clifford_semibrace,
    build_fg_family,
    build_leftzero_semibrace,
    build_rightzero_semibrace,
    build_zappa_szep,
    check_zero_clauses,
    check_rho_antihom,
    check_solution_condition,
    inversion_actions,
    make_semibrace,
    trivial_actions,
    verify_generalized_left,
)
from .sslattice import (
    build_generalized_semibrace,
    build_solution,
    composed_index_period,
    predicted_index_period,
    semibrace_semilattice_solution,
    solution_system,
)
from .ybesol import SetSolution, classify, index_period, is_solution

OK, FAIL, BAD = 0, 1, 2
DEFAULT_BOUND = 6


@dataclass
class Check:
    name: str
    ok: bool
    witness: object = None
    required: bool = False


@dataclass
class Report:
    command: str
    checks: list = field(default_factory=list)
    values: dict = field(default_factory=dict)
    error: str | None = None

    def add(self, name, verdict, required=False):
        ok = bool(verdict)
        self.checks.append(Check(name, ok, getattr(verdict, "witness", None), required))
        return ok

    @property
    def ok(self) -> bool:
        return self.error is None and all(c.ok for c in self.checks if c.required)

    def render(self, fmt: str) -> str:
        if fmt == "json":
            out = {"command": self.command, "ok": self.ok, "checks": [asdict(c) for c in self.checks],
                   "values": self.values}
            if self.error:
                out["error"] = self.error
            return json.dumps(out, sort_keys=True, default=list) + "\n"
        lines = []
        for c in self.checks:
            line = f"{c.name}: {'yes' if c.ok else 'no'}"
            if not c.ok and c.witness is not None:
                line += f" (witness {tuple(c.witness)})"
            lines.append(line)
        lines += [f"{k}: {v}" for k, v in self.values.items()]
        if self.error:
            lines.append(f"error: {self.error}")
        lines.append("result: " + ("pass" if self.ok else "fail"))
        return "\n".join(lines) + "\n"


def _emit(report: Report, args, stream=None) -> int:
    (stream or sys.stdout).write(report.render(args.format))
    return OK if report.ok else FAIL


def _write_doc(doc: dict, path=None):
    text = docs.dumps(doc)
    if path:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


# verify

def _verify_semigroup(doc, kind, rep: Report):
    v = check_associative(doc["mul_table"])
    if not rep.add("associative", v, required=True):
        return
    s = FiniteSemigroup(doc["mul_table"])
    try:
        as_group(s)
        is_group = True
    except AlgebraError:
        is_group = False
    rep.add("group", is_group, required=kind == "group")
    try:
        c = complete_regular_inverses(s)
    except AlgebraError as exc:
        rep.checks.append(Check("completely regular", False, exc.witness,
                                kind in ("completely-regular", "clifford")))
    else:
        rep.add("completely regular", True)
        rep.add("clifford", is_clifford(c), required=kind == "clifford")
    if is_band(s):
        rep.values["band"] = classify_band(s)


def _verify_semibrace(doc, kind, require, rep: Report):
    a_ok = rep.add("additive associativity", check_associative(doc["add_table"]), required=True)
    m_ok = rep.add("multiplicative associativity", check_associative(doc["mul_table"]), required=True)
    if not (a_ok and m_ok):
        return
    try:
        mul = as_completely_regular(doc["mul_table"])
    except AlgebraError as exc:
        rep.checks.append(Check("multiplicatively completely regular", False, exc.witness, True))
        return
    sv = verify_generalized_left(doc["add_table"], mul, strict=False)
    wit = sv.witnesses
    want = {
        "generalized-left": "generalized_left", "semibrace": "generalized_left",
        "left-semibrace": "left_semibrace", "generalized-right": "generalized_right",
        "two-sided": "generalized_two_sided",
    }.get(kind, "generalized_left")
    for tag, label in (("generalized_left", "generalized left semi-brace"),
                       ("left_semibrace", "left semi-brace"),
                       ("generalized_right", "generalized right semi-brace"),
                       ("left_cancellative", "additively left cancellative"),
                       ("completely_simple_additive", "additively completely simple")):
        rep.checks.append(Check(label, tag in sv, wit.get(tag), tag == want))
    if "generalized_left" not in sv:
        return
    s = make_semibrace(doc["add_table"], mul)
    r = associated_solution(s)
    if isinstance(s, LeftSemiBrace):
        rep.add("solution condition", check_solution_condition(s), required="solution-condition" in require)
        report = check_zero_clauses(s)
        for clause, v in report.clauses.items():
            rep.add(f"middle-unit clause {clause}", v, required="zero-clauses" in require)
    rep.add("rho anti-homomorphism", check_rho_antihom(s), required="rho-antihom" in require)
    rep.add("YBE", is_solution(r), required="ybe" in require)


def _verify_solution(doc, rep: Report):
    r = SetSolution(doc["lam_table"], doc["rho_table"])
    rep.add("YBE", is_solution(r), required=True)
    p = classify(r)
    for k in ("left_nondegenerate", "right_nondegenerate", "bijective", "involutive", "idempotent", "cubic",
              "r3_is_r2"):
        rep.values[k.replace("_", " ")] = getattr(p, k)
    rep.values["index, period"] = (p.index, p.period)


def cmd_verify(args) -> int:
    doc = docs.load(args.path)
    kind = args.kind or doc["kind"]
    rep = Report("verify")
    rep.values["kind"] = kind
    require = set(args.require or ())
    if doc["kind"] in ("semigroup", "group"):
        _verify_semigroup(doc, kind, rep)
    elif doc["kind"] == "semibrace":
        _verify_semibrace(doc, kind, require, rep)
    elif doc["kind"] == "solution":
        _verify_solution(doc, rep)
    else:
        mode = "solution" if doc["payloads"][0]["kind"] == "solution" else "semibrace"
        _semilattice_report(doc, mode, rep)
    return _emit(rep, args)


# build

def _group_or_table(args):
    if getattr(args, "group", None):
        return named_group(args.group)
    if getattr(args, "table", None):
        d = docs.load(args.table)
        if d["kind"] not in ("semigroup", "group"):
            raise docs.DocumentError("expected a semigroup or group document")
        return as_completely_regular(d["mul_table"])
    raise docs.DocumentError("give --group or --table")


def cmd_build(args) -> int:
    fam = args.family
    try:
        if fam == "fg":
            g = named_group(args.group)
            s = build_fg_family(g, named_map(args.group, args.f), named_map(args.group, args.g))
            meta = {"family": "fg", "group": args.group, "f": args.f, "g": args.g}
        elif fam == "zappa-szep":
            G, H = named_group(args.g), named_group(args.h)
            acts = trivial_actions(G, H) if args.action == "trivial" else inversion_actions(G, H)
            phi = named_map_between(G, H, args.phi)
            s = build_zappa_szep(G, H, *acts, phi)
            meta = {"family": "zappa-szep", "g": args.g, "h": args.h, "action": args.action,
                    "phi": args.phi}
        else:
            c = _group_or_table(args)
            builder = {"clifford": build_clifford_semibrace, "rightzero": build_rightzero_semibrace,
                       "leftzero": build_leftzero_semibrace}[fam]
            s = builder(c)
            meta = {"family": fam}
            if args.group:
                meta["group"] = args.group
    except AlgebraError as exc:
        sys.stderr.write(f"{type(exc).__name__}: {exc}\n")
        return FAIL
    _write_doc(docs.semibrace_document(s, meta), args.output)
    return OK


def named_map_between(G, H, text: str):
    """``one`` for the constant map to the identity, else comma-separated images."""
    if text in ("one", "1", "zero"):
        return CarrierMap.constant(G.order, H.order, H.identity)
    images = [int(x) for x in text.split(",")]
    return CarrierMap(G.order, H.order, tuple(images))


# solution / index-period

def _load_solution(doc) -> SetSolution:
    if doc["kind"] == "solution":
        return SetSolution(doc["lam_table"], doc["rho_table"])
    if doc["kind"] == "semibrace":
        s = make_semibrace(doc["add_table"], as_completely_regular(doc["mul_table"]))
        return associated_solution(s)
    raise docs.DocumentError(f"expected a solution or semibrace document, got {doc['kind']}")


def cmd_solution(args) -> int:
    doc = docs.load(args.path)
    rep = Report("solution")
    try:
        r = _load_solution(doc)
    except AlgebraError as exc:
        rep.error = f"{type(exc).__name__}: {exc}"
        return _emit(rep, args)
    _verify_solution(docs.solution_document(r), rep)
    if args.output:
        _write_doc(docs.solution_document(r), args.output)
    return _emit(rep, args)


def cmd_index_period(args) -> int:
    doc = docs.load(args.path)
    rep = Report("index-period")
    if doc["kind"] == "semilattice_system":
        mode = "solution" if doc["payloads"][0]["kind"] == "solution" else "semibrace"
        _semilattice_report(doc, mode, rep)
        return _emit(rep, args)
    try:
        r = _load_solution(doc)
    except AlgebraError as exc:
        rep.error = f"{type(exc).__name__}: {exc}"
        return _emit(rep, args)
    i, p = index_period(r)
    rep.values["index"], rep.values["period"] = i, p
    return _emit(rep, args)


# semilattice

def _failure_message(exc: AlgebraError) -> str:
    if isinstance(exc, SystemMalformed) and exc.condition:
        return f"condition {exc.condition} fails at {exc.witness}"
    if isinstance(exc, EquivarianceFailed):
        return f"condition 3 fails at {exc.witness}"
    if isinstance(exc, ComponentNotSolution):
        return f"payload {exc.alpha} is not a solution (witness {exc.witness})"
    if isinstance(exc, NotHomomorphism):
        return f"homomorphism: {exc}"
    if isinstance(exc, ConditionFailed):
        return f"solution condition fails for payload {exc.alpha} (witness {exc.witness})"
    return f"{type(exc).__name__}: {exc}"


def _semilattice_report(doc, mode, rep: Report):
    """Fill ``rep``; returns the combined structure or None on failure."""
    try:
        system = docs.build_system(doc)
        if mode == "semibrace":
            if system.holds_solutions:
                raise SystemMalformed("semibrace mode needs semibrace payloads")
            combined = build_generalized_semibrace(system)
            r = semibrace_semilattice_solution(system)
        else:
            combined = r = build_solution(solution_system(system))
        rep.values["predicted index, period"] = predicted_index_period(system)
        rep.values["index, period"] = composed_index_period(system)
    except AlgebraError as exc:
        rep.error = _failure_message(exc)
        return None
    rep.add("YBE", is_solution(r), required=True)
    prof = classify(r)
    rep.values["r^3 = r"] = prof.cubic
    rep.values["r^3 = r^2"] = prof.r3_is_r2
    return combined


def cmd_semilattice(args) -> int:
    doc = docs.load(args.path)
    if doc["kind"] != "semilattice_system":
        raise docs.DocumentError("expected a semilattice_system document")
    rep = Report("semilattice")
    combined = _semilattice_report(doc, args.mode, rep)
    if combined is not None:
        _write_doc(docs.document_of(combined), args.output)
    return _emit(rep, args, sys.stderr)


# enumerate

def _semibrace_docs(name: str) -> list[str]:
    g = named_group(name)
    out = []
    for add in semibrace_tables(g):
        s = LeftSemiBrace(add, g)
        out.append(docs.dumps(docs.semibrace_document(s, {"group": name})))
    return out


def _fg_docs(name: str) -> list[str]:
    g = named_group(name)
    out = []
    for f, h in fg_pairs(g):
        s = build_fg_family(g, f, h)
        out.append(docs.dumps(docs.semibrace_document(s, {"group": name, "f": list(f.map),
                                                          "g": list(h.map)})))
    return out


def cmd_enumerate(args) -> int:
    n = args.max_order
    if n < 1 or n > args.bound:
        sys.stderr.write(f"max order {n} outside 1..{args.bound}\n")
        return BAD
    if args.target == "crypto-counterexample":
        c = crypto_counterexample(n)
        if c is not None:
            sys.stdout.write(docs.dumps(docs.semigroup_document(c, meta={"violates": "(ab)^0 = (a^0 b)^0"})))
        return OK
    names = [args.group] if args.group else [name for name, _ in groups_up_to(n)]
    if args.group and named_group(args.group).order > n:
        sys.stderr.write(f"{args.group} has order above {n}\n")
        return BAD
    work = _semibrace_docs if args.target == "semibrace" else _fg_docs
    if args.jobs > 1:
        with ProcessPoolExecutor(args.jobs) as ex:
            chunks = list(ex.map(work, names))
    else:
        chunks = [work(name) for name in names]
    for chunk in chunks:
        for line in chunk:
            # every emitted document re-verifies
            d = docs.loads(line)
            LeftSemiBrace(d["add_table"], as_group(d["mul_table"]))
            sys.stdout.write(line)
    return OK


def make_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="gsbrace", description=__doc__.splitlines()[0])
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--seed", type=int, default=None, help="accepted for compatibility; unused")
    sub = p.add_subparsers(dest="command", required=True)

    v = sub.add_parser("verify")
    v.add_argument("path")
    v.add_argument("--kind", choices=("semigroup", "group", "completely-regular", "clifford",
                                      "semibrace", "generalized-left", "left-semibrace",
                                      "generalized-right", "two-sided", "solution",
                                      "semilattice_system"))
    v.add_argument("--require", action="append",
                   choices=("ybe", "solution-condition", "rho-antihom", "zero-clauses"))
    v.set_defaults(func=cmd_verify)

    b = sub.add_parser("build")
    bsub = b.add_subparsers(dest="family", required=True)
    fg = bsub.add_parser("fg")
    fg.add_argument("--group", required=True)
    fg.add_argument("--f", required=True)
    fg.add_argument("--g", required=True)
    zs = bsub.add_parser("zappa-szep")
    zs.add_argument("--g", required=True)
    zs.add_argument("--h", required=True)
    zs.add_argument("--action", choices=("trivial", "inversion"), default="trivial")
    zs.add_argument("--phi", default="one")
    for fam in ("clifford", "rightzero", "leftzero"):
        q = bsub.add_parser(fam)
        q.add_argument("--table")
        q.add_argument("--group")
    for q in bsub.choices.values():
        q.add_argument("-o", "--output")
    b.set_defaults(func=cmd_build)

    s = sub.add_parser("solution")
    s.add_argument("path")
    s.add_argument("-o", "--output")
    s.set_defaults(func=cmd_solution)

    sl = sub.add_parser("semilattice")
    sl.add_argument("path")
    sl.add_argument("--mode", choices=("solution", "semibrace"), default="solution")
    sl.add_argument("-o", "--output")
    sl.set_defaults(func=cmd_semilattice)

    ip = sub.add_parser("index-period")
    ip.add_argument("path")
    ip.set_defaults(func=cmd_index_period)

    e = sub.add_parser("enumerate")
    e.add_argument("--max-order", type=int, required=True)
    e.add_argument("--target", choices=("semibrace", "crypto-counterexample", "fg-pairs"),
                   default="semibrace")
    e.add_argument("--group")
    e.add_argument("--bound", type=int, default=DEFAULT_BOUND)
    e.set_defaults(func=cmd_enumerate)
    return p


def main(argv=None) -> int:
    parser = make_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return BAD if exc.code else OK
    try:
        return args.func(args)
    except docs.DocumentError as exc:
        sys.stderr.write(f"malformed input: {exc}\n")
        return BAD
    except AlgebraError as exc:
        # unknown group names and similar parameter errors
        sys.stderr.write(f"{type(exc).__name__}: {exc}\n")
        return BAD if args.command == "enumerate" else FAIL


if __name__ == "__main__":
    sys.exit(main())
