"""Command-line front end.

    tdpoly compute --family cycle:6 --format json
    tdpoly roots --graph6 Bw
    tdpoly generate --order 10 --degree 3 --connected-only
    tdpoly study-cubic10 --format json

Exit status: 0 success, 1 computation error (or failed checks under
``verify``), 2 usage error.  Errors go to stderr as one JSON line:
``{"error": <kind>, "message": <text>}``.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
from typing import Sequence, TextIO

from . import families as fam
from .analysis import (
    Corpus, CorpusEntry, IDENTITY_CHECKS, IMPLICATION_CHECKS, classify_two_root, cubic10_study,
    partition_by_polynomial, root_bound_check, verify_identity_suite,
)
from .engine import (
    ENUMERATION_LIMIT, count_all, gamma_t, is_essential, is_irrelevant_edge, is_td_covered,
    sufficient_irrelevant_rule,
)
from .errors import ParameterError, TdpError
from .generate import generate_connected, generate_regular
from .graph import Graph, supports_and_leaves
from .graph6 import decode, encode, iter_lines, read_edge_list
from .poly import DEFAULT_TOL, IntPoly, summarize_roots
from .recurrence import RecurrenceEngine

SCHEMA_VERSION = 1


class UsageError(TdpError):
    pass


# -- family specs ------------------------------------------------------------------

_INT_FAMILIES = {
    "path": (1, lambda a: fam.Path(*a)),
    "cycle": (1, lambda a: fam.Cycle(*a)),
    "complete": (1, lambda a: fam.Complete(*a)),
    "star": (1, lambda a: fam.Star(*a)),
    "firecracker": (2, lambda a: fam.Firecracker(*a)),
    "gfirecracker": (None, lambda a: fam.GeneralizedFirecracker(tuple(a))),
    "hfamily": (1, lambda a: fam.HFamily(*a)),
    "gpetersen": (2, lambda a: fam.GeneralizedPetersen(*a)),
}
_GRAPH6_FAMILIES = {
    "h3": lambda G: fam.H3(G),
    "corona-k1": lambda G: fam.Corona(G, Graph.empty(1)),
}


def parse_family_spec(text: str) -> fam.GraphFamilySpec:
    """Parse ``name[:param[,param...]]`` into a validated family spec."""
    name, _, rest = text.strip().partition(":")
    name = name.lower()
    if name in _GRAPH6_FAMILIES:
        if not rest:
            raise UsageError(f"family {name!r} needs a graph6 payload, e.g. {name}:Bw")
        try:
            spec = _GRAPH6_FAMILIES[name](decode(rest))
        except TdpError as exc:
            raise UsageError(f"bad graph6 payload {rest!r} for {name}: {exc}") from None
    elif name in _INT_FAMILIES:
        arity, make = _INT_FAMILIES[name]
        tokens = [t for t in rest.split(",")] if rest else []
        params = []
        for tok in tokens:
            try:
                params.append(int(tok))
            except ValueError:
                raise UsageError(f"parameter {tok!r} of {name!r} is not an integer") from None
        if arity is not None and len(params) != arity:
            raise UsageError(f"family {name!r} takes {arity} parameter(s), got {len(params)}")
        if arity is None and not params:
            raise UsageError(f"family {name!r} needs at least one parameter")
        spec = make(params)
    else:
        known = sorted(_INT_FAMILIES) + sorted(_GRAPH6_FAMILIES)
        raise UsageError(f"unknown family {name!r}; known: {', '.join(known)}")
    try:
        fam.validate(spec)
    except ParameterError as exc:
        raise UsageError(f"{text!r}: {exc}") from None
    return spec


# -- input -------------------------------------------------------------------------


def _read_source(value: str, stdin: TextIO) -> str:
    if value == "-":
        return stdin.read()
    with open(value) as fh:
        return fh.read()


def load_inputs(args: argparse.Namespace, stdin: TextIO) -> list[tuple[str, Graph]]:
    sources = [s for s in ("family", "graph6", "edge_list") if getattr(args, s, None)]
    if len(sources) != 1:
        raise UsageError("give exactly one of --family, --graph6, --edge-list")
    if args.family:
        spec = parse_family_spec(args.family)
        return [(args.family, fam.build(spec))]
    if args.edge_list:
        G = read_edge_list(_read_source(args.edge_list, stdin))
        return [(encode(G), G)]
    value = args.graph6
    if value == "-" or os.path.exists(value):
        lines = list(iter_lines(_read_source(value, stdin).splitlines()))
    else:
        lines = [value]
    out = []
    seen: dict[str, int] = {}
    for line in lines:
        G = decode(line)
        gid = line
        if gid in seen:
            seen[gid] += 1
            gid = f"{line}#{seen[line]}"
        else:
            seen[gid] = 0
        out.append((gid, G))
    return out


# -- output ------------------------------------------------------------------------


def _dump_json(command: str, payload: dict) -> str:
    doc = {"schema": f"tdpoly.{command}/{SCHEMA_VERSION}", **payload}
    return json.dumps(doc, indent=2, sort_keys=True) + "\n"


def _dump_csv(header: Sequence[str], rows: Sequence[Sequence]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    w.writerows(rows)
    return buf.getvalue()


def _compute_polynomial(G: Graph, method: str, max_n: int, engine: RecurrenceEngine) -> tuple[IntPoly, str]:
    if method == "enumerate" or (method == "auto" and G.n <= max_n):
        return count_all(G, max_n).polynomial(), "enumerate"
    return engine.compute(G)[0], "recurrence"


# -- commands ----------------------------------------------------------------------


def cmd_compute(args, inputs) -> tuple[int, str]:
    engine = RecurrenceEngine(max_n=args.max_n)
    rows = []
    for gid, G in inputs:
        p, method = _compute_polynomial(G, args.method, args.max_n, engine)
        g = gamma_t(G) if not G.has_isolated_vertex() and G.n else None
        rows.append({"id": gid, "n": G.n, "m": G.num_edges, "polynomial": p.to_json(),
                     "gamma_t": g, "method": method, "text": str(p)})
    if args.format == "json":
        return 0, _dump_json("compute", {"graphs": rows})
    if args.format == "csv":
        return 0, _dump_csv(["id", "n", "m", "gamma_t", "coefficients"],
                            [[r["id"], r["n"], r["m"], r["gamma_t"], " ".join(r["polynomial"])] for r in rows])
    return 0, "".join(f"{r['id']}: D_t = {r['text']}\n" for r in rows)


def cmd_roots(args, inputs) -> tuple[int, str]:
    rows = []
    for gid, G in inputs:
        p = count_all(G, args.max_n).polynomial()
        if p.degree < 1:
            raise ParameterError(f"{gid}: D_t = {p} has no roots to report")
        s = summarize_roots(p, args.tol)
        bound_ok = root_bound_check(G, p=p) if not G.has_isolated_vertex() else None
        rows.append({"id": gid, "polynomial": p.to_json(), **s.to_json(),
                     "root_set": classify_two_root(G, p).root_set, "within_root_bound": bound_ok})
    if args.format == "json":
        return 0, _dump_json("roots", {"graphs": rows})
    if args.format == "csv":
        return 0, _dump_csv(["id", "integer_roots", "root_set", "within_root_bound"],
                            [[r["id"], " ".join(f"{a}^{m}" for a, m in r["integer_roots"]), r["root_set"],
                              r["within_root_bound"]] for r in rows])
    out = []
    for r in rows:
        ints = ", ".join(f"{a} (x{m})" for a, m in r["integer_roots"])
        nums = ", ".join(f"{re:.6g}{(im if abs(im) > 1e-12 else 0.0):+.6g}i" for re, im in r["numeric_roots"])
        out.append(f"{r['id']}: integer roots {ints or 'none'}; root set {r['root_set']}; "
                   f"within bound {r['within_root_bound']}\n  numeric: {nums}\n")
    return 0, "".join(out)


def cmd_edges(args, inputs) -> tuple[int, str]:
    rows = []
    for gid, G in inputs:
        for u, v in G.edges():
            rows.append({"id": gid, "edge": [u, v],
                         "irrelevant": is_irrelevant_edge(G, (u, v), "exact", args.max_n),
                         "sufficient_rule": sufficient_irrelevant_rule(G, u, v)})
    if args.format == "json":
        return 0, _dump_json("edges", {"edges": rows})
    if args.format == "csv":
        return 0, _dump_csv(["id", "u", "v", "irrelevant", "sufficient_rule"],
                            [[r["id"], *r["edge"], r["irrelevant"], r["sufficient_rule"] or ""] for r in rows])
    return 0, "".join(f"{r['id']} {r['edge'][0]}-{r['edge'][1]}: irrelevant={r['irrelevant']}"
                      f" rule={r['sufficient_rule'] or '-'}\n" for r in rows)


def cmd_vertices(args, inputs) -> tuple[int, str]:
    rows = []
    for gid, G in inputs:
        leaves, supports = supports_and_leaves(G)
        for v in range(G.n):
            rows.append({"id": gid, "vertex": v, "degree": G.degree(v), "leaf": bool(leaves >> v & 1),
                         "support": bool(supports >> v & 1), "essential": is_essential(G, v),
                         "covered_sufficient": is_td_covered(G, v, "sufficient"),
                         "covered_exact": is_td_covered(G, v, "exact", args.max_n)})
    keys = ["degree", "leaf", "support", "essential", "covered_sufficient", "covered_exact"]
    if args.format == "json":
        return 0, _dump_json("vertices", {"vertices": rows})
    if args.format == "csv":
        return 0, _dump_csv(["id", "vertex", *keys], [[r["id"], r["vertex"], *(r[k] for k in keys)] for r in rows])
    return 0, "".join(f"{r['id']} v{r['vertex']}: " + " ".join(f"{k}={r[k]}" for k in keys) + "\n" for r in rows)


def cmd_family(args, inputs) -> tuple[int, str]:
    from .engine import closed_form

    if not args.family:
        raise UsageError("family needs --family")
    spec = parse_family_spec(args.family)
    G = fam.build(spec)
    p, method = _compute_polynomial(G, "auto", args.max_n, RecurrenceEngine(max_n=args.max_n))
    try:
        cf = closed_form(spec)
    except TdpError:
        cf = None
    row = {"family": args.family, "graph6": encode(G), "n": G.n, "m": G.num_edges,
           "polynomial": p.to_json(), "method": method,
           "closed_form": None if cf is None else cf.to_json(),
           "closed_form_matches": None if cf is None else cf == p}
    if args.format == "json":
        return 0, _dump_json("family", row)
    if args.format == "csv":
        return 0, _dump_csv(list(row), [[" ".join(v) if isinstance(v, list) else v for v in row.values()]])
    lines = [f"{args.family}: n={G.n} m={G.num_edges} graph6={row['graph6']}", f"D_t = {p}"]
    if cf is not None:
        lines.append(f"closed form {cf} matches: {cf == p}")
    return 0, "\n".join(lines) + "\n"


def cmd_generate(args, inputs) -> tuple[int, str]:
    if args.order is None:
        raise UsageError("generate needs --order")
    if args.degree is None:
        graphs = generate_connected(args.order)
    else:
        graphs = generate_regular(args.order, args.degree, args.connected_only)
    lines = [encode(G) for G in graphs]
    if args.format == "json":
        return 0, _dump_json("generate", {"order": args.order, "degree": args.degree,
                                          "connected_only": bool(args.connected_only or args.degree is None),
                                          "count": len(lines), "graph6": lines})
    if args.format == "csv":
        return 0, _dump_csv(["graph6"], [[s] for s in lines])
    return 0, "".join(s + "\n" for s in lines)


def _corpus(inputs, args) -> Corpus:
    engine = RecurrenceEngine(max_n=args.max_n)
    return Corpus([CorpusEntry(gid, G, _compute_polynomial(G, "auto", args.max_n, engine)[0])
                   for gid, G in inputs])


def cmd_classes(args, inputs) -> tuple[int, str]:
    report = partition_by_polynomial(_corpus(inputs, args))
    if args.format == "json":
        return 0, _dump_json("classes", report.to_json())
    if args.format == "csv":
        return 0, _dump_csv(["class", "id", "unique"],
                            [[k, i, len(c) == 1] for k, c in enumerate(report.classes) for i in c])
    return 0, "".join(f"[{len(c)}] {' '.join(c)}: {p}\n" for c, p in zip(report.classes, report.polynomials))


def cmd_verify(args, inputs) -> tuple[int, str]:
    corpus = _corpus(inputs, args)
    report = verify_identity_suite(corpus, IDENTITY_CHECKS + IMPLICATION_CHECKS, workers=args.workers)
    code = 0 if report.passed else 1
    if args.format == "json":
        return code, _dump_json("verify", {"passed": report.passed, **report.to_json()})
    rows = [[t, c, f] for t, (c, f) in report.summary().items()]
    if args.format == "csv":
        return code, _dump_csv(["theorem", "checks", "failures"], rows)
    out = [f"{t}: {c} checks, {f} failures\n" for t, c, f in rows]
    out += [f"FAIL {r.theorem} {r.subject} {r.parameter}: expected {r.expected}, got {r.actual}\n"
            for r in report.failures]
    return code, "".join(out)


def cmd_study(args, inputs) -> tuple[int, str]:
    rep = cubic10_study(workers=args.workers)
    if args.format == "json":
        return 0, _dump_json("study-cubic10", rep.to_json())
    if args.format == "csv":
        return 0, _dump_csv(["class", "size", "ids", "polynomial"],
                            [[k, len(c), " ".join(c), " ".join(p.to_json())]
                             for k, (c, p) in enumerate(zip(rep.equivalence.classes, rep.equivalence.polynomials))])
    lines = [
        f"cubic graphs of order 10: {rep.graph_count} ({rep.connected_count} connected)",
        f"class sizes: {rep.class_sizes}",
        f"Petersen class ({len(rep.petersen_class)}): {' '.join(rep.petersen_class)}"
        f" [canonical-form confirmed: {rep.petersen_confirmed}]",
    ]
    lines += [f"other class ({len(c)}): {' '.join(c)}" for c in rep.other_nontrivial_classes]
    lines.append(f"D_t-unique graphs: {rep.singleton_count}")
    lines += [f"finding: {f.rule}: {f.actual}" for f in rep.findings]
    return 0, "\n".join(lines) + "\n"


COMMANDS = {
    "compute": cmd_compute, "roots": cmd_roots, "edges": cmd_edges, "vertices": cmd_vertices,
    "family": cmd_family, "generate": cmd_generate, "classes": cmd_classes, "verify": cmd_verify,
    "study-cubic10": cmd_study,
}
_NO_INPUT = {"generate", "study-cubic10", "family"}


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # route argparse failures through the usage-error path
        raise UsageError(message)


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="tdpoly", description="Exact total domination polynomials.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)
    for name in COMMANDS:
        sp = sub.add_parser(name)
        sp.add_argument("--family", help="family spec, e.g. firecracker:2,3 or h3:Bw")
        sp.add_argument("--graph6", help="graph6 string, a file of graph6 lines, or - for stdin")
        sp.add_argument("--edge-list", dest="edge_list", help="edge-list file, or - for stdin")
        sp.add_argument("--format", choices=("text", "json", "csv"), default="text")
        sp.add_argument("--tol", type=float, default=DEFAULT_TOL)
        sp.add_argument("--max-n", dest="max_n", type=int, default=ENUMERATION_LIMIT)
        sp.add_argument("--workers", type=int, default=1)
        sp.add_argument("--connected-only", dest="connected_only", action="store_true")
        if name == "compute":
            sp.add_argument("--method", choices=("auto", "enumerate", "recurrence"), default="auto")
        if name == "generate":
            sp.add_argument("--order", type=int)
            sp.add_argument("--degree", type=int)
    return p


def run(argv: Sequence[str], stdin: TextIO | None = None, stderr: TextIO | None = None) -> tuple[int, str]:
    """Execute one invocation; returns (exit code, stdout text)."""
    stdin = stdin if stdin is not None else sys.stdin
    stderr = stderr if stderr is not None else sys.stderr

    def fail(code: int, kind: str, message: str) -> tuple[int, str]:
        stderr.write(json.dumps({"error": kind, "message": message}) + "\n")
        return code, ""

    try:
        args = build_parser().parse_args(list(argv))
        if args.tol <= 0:
            raise UsageError("--tol must be positive")
        if not 0 <= args.max_n <= 40:
            raise UsageError("--max-n must be within 0..40")
        if args.workers < 1:
            raise UsageError("--workers must be >= 1")
        inputs = [] if args.command in _NO_INPUT else load_inputs(args, stdin)
        return COMMANDS[args.command](args, inputs)
    except UsageError as exc:
        return fail(2, "usage", str(exc))
    except TdpError as exc:
        return fail(1, type(exc).__name__, str(exc))
    except OSError as exc:
        return fail(1, "io", str(exc))


def main(argv: Sequence[str] | None = None) -> int:
    code, out = run(sys.argv[1:] if argv is None else argv)
    sys.stdout.write(out)
    return code


if __name__ == "__main__":
    raise SystemExit(main())


__all__ = ["run", "main", "parse_family_spec", "UsageError"]
