"""Command-line entry point: ``hessideals <subcommand> [options]``.

Exit status is 0 on success, 1 when a verification finds a counterexample
(its witness is printed as JSON) and 2 for usage errors such as an invalid
Hessenberg function.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import logging
import sys
from contextlib import contextmanager
from typing import List, Optional

from .claims import ALIASES, CLAIMS, UnknownClaim, _report, identity_cases, run_claim
from .groebner import is_groebner
from .hessenberg import (
    InvalidHessenbergFunction,
    count_maximal_chains,
    enumerate_hessenberg,
    enumeration_records,
    hasse_diagram,
    hessenberg_diagram,
    parse_hessenberg,
)
from .ideals import generator_containment_edges, groebner_basis, h_ferrers, presentation
from .poly import MonomialOrder, format_monomial
from .quotient import monomial_basis, quotient_record

log = logging.getLogger("hessideals")


class UsageError(Exception):
    pass


# -- output helpers -----------------------------------------------------------


@contextmanager
def _sink(path: Optional[str]):
    if path is None:
        yield sys.stdout
    else:
        with open(path, "w", encoding="utf-8", newline="\n") as fh:
            yield fh


def _csv(rows: List[list]) -> str:
    buf = io.StringIO()
    csv.writer(buf, lineterminator="\n").writerows(rows)
    return buf.getvalue()


def _json(data) -> str:
    return json.dumps(data, indent=2, ensure_ascii=False) + "\n"


def _require_format(args, allowed) -> None:
    if args.format not in allowed:
        raise UsageError(f"{args.command} does not support --format {args.format} (use one of {', '.join(allowed)})")


def _resolve(args):
    """Validate ``--n``/``--h`` together and return the Hessenberg function, if any."""
    h = None
    if getattr(args, "h", None):
        h = parse_hessenberg(args.h, args.n)
        args.n = len(h)
    if args.n is None:
        raise UsageError(f"{args.command} needs --n or --h")
    if args.n < 1:
        raise UsageError("--n must be positive")
    return h


def _need_h(args):
    h = _resolve(args)
    if h is None:
        raise UsageError(f"{args.command} needs --h")
    return h


# -- subcommands --------------------------------------------------------------


def cmd_enumerate(args) -> str:
    _resolve(args)
    _require_format(args, ("text", "json", "csv"))
    records = enumeration_records(args.n)
    if args.format == "json":
        return _json(records)
    if args.format == "csv":
        rows = [["index", "h", "beta", "dyck"]]
        rows += [[r["catalan_index"], "".join(map(str, r["h"])), "".join(map(str, r["beta"])), r["dyck"]] for r in records]
        return _csv(rows)
    lines = [
        f"{r['catalan_index']:>4}  h={','.join(map(str, r['h']))}  beta={','.join(map(str, r['beta']))}  {r['dyck']}"
        for r in records
    ]
    return "\n".join(lines) + "\n"


def cmd_hasse(args) -> str:
    _resolve(args)
    d = hasse_diagram(args.n)
    if args.mark_containment:
        d.marked = generator_containment_edges(args.n, d)
    if args.format == "dot":
        return d.to_dot()
    if args.format == "json":
        return d.to_json() + "\n"
    if args.format == "csv":
        rows = [["from", "to", "generator_containment"]]
        rows += [[a.label(), b.label(), d.marked.get((a, b), "")] for a, b in d.edges]
        return _csv(rows)
    lines = []
    for a, b in d.edges:
        mark = "  [contained]" if d.marked.get((a, b)) else ""
        lines.append(f"{a.label()} -> {b.label()}{mark}")
    return "\n".join(lines) + "\n"


def cmd_gens(args) -> str:
    h = _need_h(args)
    _require_format(args, ("text", "json", "csv"))
    p = presentation(args.ideal, h, MonomialOrder.from_name(args.order))
    if args.format == "json":
        data = p.to_dict()
        if args.ideal.upper() != "J":
            data["ferrers"] = [list(col) for col in h_ferrers(h).columns]
        return _json(data)
    if args.format == "csv":
        rows = [["label", "generator"]]
        rows += [[":".join(map(str, lab)), g.to_text(p.order)] for lab, g in zip(p.labels, p.generators)]
        return _csv(rows)
    return "\n".join(g.to_text(p.order) for g in p.generators) + "\n"


def cmd_groebner(args) -> str:
    h = _need_h(args)
    _require_format(args, ("text", "json"))
    order = MonomialOrder.from_name(args.order)
    p = presentation(args.ideal, h, order)
    gb = groebner_basis(p, order)
    check = is_groebner(p.distinct(), order)
    data = gb.to_dict()
    data.update({"ideal": p.name, "h": list(h), "generators_certificate": check.certificate})
    if args.format == "json":
        return _json(data)
    lines = [f"# reduced Groebner basis of {p.name}_{h.label()} ({order.name})"]
    lines += gb.to_text()
    lines.append(f"# generators are a Groebner basis: {check.certificate or 'no'}")
    return "\n".join(lines) + "\n"


def cmd_basis(args) -> str:
    h = _need_h(args)
    _require_format(args, ("text", "json", "csv"))
    basis = monomial_basis(h)
    if args.format == "json":
        return _json({"h": list(h), "beta": list(basis.beta), "rank": basis.rank,
                      "monomials": [format_monomial(m) for m in basis.monomials]})
    if args.format == "csv":
        return _csv([["degree", "monomial"]] + [[sum(m), format_monomial(m)] for m in basis.monomials])
    return "\n".join(format_monomial(m) for m in basis.monomials) + "\n"


def cmd_rank(args) -> str:
    h = _resolve(args)
    _require_format(args, ("text", "json", "csv"))
    hs = enumerate_hessenberg(args.n) if h is None else [h]
    records = [quotient_record(x) for x in hs]
    if args.format == "json":
        return _json(records if h is None else records[0])
    if args.format == "csv":
        rows = [["h", "beta", "rank", "graded_dims"]]
        rows += [["".join(map(str, r["h"])), "".join(map(str, r["beta"])), r["rank"],
                  " ".join(map(str, r["graded_dims"]))] for r in records]
        return _csv(rows)
    lines = [
        f"h={','.join(map(str, r['h']))}  rank={r['rank']}  graded={' '.join(map(str, r['graded_dims']))}"
        for r in records
    ]
    if h is not None:
        lines.append(hessenberg_diagram(h))
    return "\n".join(lines) + "\n"


def cmd_chains(args) -> str:
    _resolve(args)
    _require_format(args, ("text", "json"))
    cc = count_maximal_chains(args.n)
    for w in cc.warnings():
        log.warning(w)
    if args.format == "json":
        return _json(cc.to_dict())
    return f"n={cc.n} maximal chains: {cc.dfs} (closed form {cc.formula}, printed form {cc.printed_formula})\n"


def _render_reports(reports, args) -> str:
    if args.format == "json":
        return _json([r.to_dict(timings=args.timings) for r in reports])
    if args.format == "csv":
        rows = [["claim", "h", "status", "witness"]]
        rows += [[r.claim, "".join(map(str, r.h)) if r.h else "", r.status, r.witness or ""] for r in reports]
        return _csv(rows)
    lines = []
    for r in reports:
        where = f" h={','.join(map(str, r.h))}" if r.h else ""
        detail = f" ({r.detail})" if r.detail else ""
        lines.append(f"{r.status.upper()} {r.claim}{where}{detail}")
    failed = sum(not r.passed for r in reports)
    lines.append(f"# {len(reports) - failed} passed, {failed} failed")
    return "\n".join(lines) + "\n"


def cmd_verify(args):
    _resolve(args)
    _require_format(args, ("text", "json", "csv"))
    try:
        reports = run_claim(args.claim, args.n)
    except UnknownClaim:
        names = sorted(CLAIMS) + sorted(ALIASES) + ["all"]
        raise UsageError(f"unknown claim {args.claim!r}; known claims: {', '.join(names)}") from None
    if args.timings:
        for r in reports:
            log.info("%s %s %.3f ms", r.claim, r.h, r.elapsed_ms or 0.0)
    return _render_reports(reports, args), reports


def cmd_identities(args):
    _resolve(args)
    _require_format(args, ("text", "json", "csv"))
    reports = []
    for m in range(1, args.n + 1):
        families = {}
        witness = {}
        for name, params, lhs, rhs in identity_cases(m):
            families[name] = families.get(name, 0) + 1
            if lhs != rhs and name not in witness:
                witness[name] = f"{name}{params}: lhs={lhs} rhs={rhs}"
        for name, count in families.items():
            rep = _report(name, None, witness.get(name))
            rep.detail = f"n={m}, {count} instances"
            reports.append(rep)
    return _render_reports(reports, args), reports


COMMANDS = {
    "enumerate": cmd_enumerate,
    "hasse": cmd_hasse,
    "gens": cmd_gens,
    "groebner": cmd_groebner,
    "basis": cmd_basis,
    "rank": cmd_rank,
    "chains": cmd_chains,
    "verify": cmd_verify,
    "identities": cmd_identities,
}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--n", type=int, help="number of variables / length of h")
    common.add_argument("--h", help="Hessenberg function, comma separated, e.g. 3,3,3,4")
    common.add_argument("--ideal", default="J", choices=["C", "AD", "J"], help="generating set (default J)")
    common.add_argument("--order", default="lex", choices=["lex", "grlex"], help="monomial order")
    common.add_argument("--format", default="text", choices=["text", "json", "dot", "csv"])
    common.add_argument("--output", help="write to this file (UTF-8) instead of stdout")
    common.add_argument("--timings", action="store_true", help="log per-item timings to stderr and JSON")

    parser = argparse.ArgumentParser(prog="hessideals", description="Hessenberg functions and their ideals.")
    sub = parser.add_subparsers(dest="command", required=True)
    sub.add_parser("enumerate", parents=[common], help="list Hessenberg functions with beta and Dyck path")
    hp = sub.add_parser("hasse", parents=[common], help="Hasse diagram of the poset (text, json, dot, csv)")
    hp.add_argument("--mark-containment", action="store_true", help="mark generator-containment edges")
    sub.add_parser("gens", parents=[common], help="generators of C_h, AD_h or J_h")
    sub.add_parser("groebner", parents=[common], help="reduced Groebner basis of an ideal")
    sub.add_parser("basis", parents=[common], help="monomial basis of the quotient by J_h")
    sub.add_parser("rank", parents=[common], help="rank and graded dimensions of the quotient")
    sub.add_parser("chains", parents=[common], help="count maximal chains in the poset")
    vp = sub.add_parser("verify", parents=[common], help="run a named verification claim")
    vp.add_argument("claim", help="claim ID, e.g. thm-6.8, equality, identities or all")
    sub.add_parser("identities", parents=[common], help="check the symmetric-function identities")
    return parser


def main(argv: Optional[List[str]] = None) -> int:
    logging.basicConfig(level=logging.INFO, format="%(asctime)s %(levelname)s %(message)s", stream=sys.stderr)
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        result = COMMANDS[args.command](args)
    except (UsageError, InvalidHessenbergFunction, ValueError) as exc:
        print(f"hessideals {args.command}: error: {exc}", file=sys.stderr)
        return 2
    status = 0
    if isinstance(result, tuple):
        text, reports = result
        failures = [r for r in reports if not r.passed]
        if failures:
            status = 1
            print(_json({"failures": [r.to_dict() for r in failures]}), end="", file=sys.stderr)
    else:
        text = result
    with _sink(args.output) as out:
        out.write(text)
    return status


if __name__ == "__main__":
    sys.exit(main())
