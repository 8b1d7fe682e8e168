"""``minconn`` command line: witnesses, verification, bound tables, oracle runs.

Machine output (CSV, JSON, graphs) goes to stdout and human summaries go
to stderr. Exit codes: 0 ok, 1 verification failed or graph not minimal,
2 infeasible input or envelope error, 3 parse error.
"""

from __future__ import annotations

import argparse
import csv
import json
import sys
from dataclasses import asdict, dataclass, fields
from pathlib import Path

from . import bounds, constructions, oracle
from .connectivity import is_minimally_k_connected, vertex_connectivity
from .graph_io import FORMATS, GraphParseError, encode, read_graph, to_graph6
from .structure import oxley_identity_check, structure_report

EXIT_OK, EXIT_FAIL, EXIT_INFEASIBLE, EXIT_PARSE = 0, 1, 2, 3


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_PARSE, f"{self.prog}: error: {message}\n")


def _say(*parts) -> None:
    print(*parts, file=sys.stderr)


@dataclass
class SweepRow:
    k: int
    n: int
    m: int
    regime: str
    simple: int
    oxley: int
    tight: int
    mader_num: int
    mader_den: int
    threshold_num: int
    threshold_den: int
    parity_feasible: int
    i: int | None
    l: int | None
    j: int | None
    witness_verified: int | None


SWEEP_COLUMNS = [f.name for f in fields(SweepRow)]
ENUM_COLUMNS = ["m", "min_vk", "tight_lower", "equal", "witness_graph6"]


def sweep_row(m: int, n: int, k: int, witness: bool = False) -> SweepRow:
    """One CSV row; ``witness=True`` builds and verifies at tight-feasible m."""
    rep = bounds.bound_report(m, n, k)
    pc = bounds.classify_parity(m, n, k)
    feasible = pc.feasible and pc.n_condition_met
    l = j = None
    if n > 2 * k and constructions.constructible(m, n, k):
        plan = constructions.plan_for(m, n, k)
        l, j = plan.l, plan.j
    verified = None
    if witness and feasible:
        try:
            verified = int(constructions.construct_witness(m, n, k).verified)
        except (constructions.ConstructionError, constructions.VerificationError):
            verified = 0
    return SweepRow(k, n, m, pc.regime, rep.simple, rep.oxley, rep.tight,
                    rep.mader.numerator, rep.mader.denominator,
                    rep.threshold_m0.numerator, rep.threshold_m0.denominator,
                    int(feasible), pc.i, l, j, verified)


def _write_csv(columns: list[str], rows: list[dict]) -> None:
    w = csv.DictWriter(sys.stdout, fieldnames=columns, lineterminator="\n")
    w.writeheader()
    for r in rows:
        w.writerow({c: "" if r[c] is None else r[c] for c in columns})


def _m_values(args) -> list[int]:
    if args.m is not None:
        return [args.m]
    if args.m_range:
        try:
            a, b = (int(x) for x in args.m_range.split(":"))
        except ValueError:
            raise GraphParseError(f"--m-range expects A:B, got {args.m_range!r}") from None
        return list(range(a, b + 1))
    lo, hi = bounds.edge_range(args.n, args.k)
    return list(range(lo, hi + 1))


def cmd_construct(args) -> int:
    try:
        w = constructions.construct_witness(args.m, args.n, args.k)
    except constructions.InfeasibleParameters as exc:
        _say(f"infeasible: {exc}")
        if exc.suggestions:
            _say("nearest feasible m: " + ", ".join(map(str, exc.suggestions)))
        return EXIT_INFEASIBLE
    except constructions.VerificationError as exc:
        _say(f"verification failed: {exc}")
        return EXIT_FAIL
    except constructions.ConstructionError as exc:
        _say(f"no construction: {exc}")
        return EXIT_INFEASIBLE
    text = encode(w.graph, args.format)
    if args.out:
        out = Path(args.out)
        out.write_text(text)
        Path(f"{out}.plan.json").write_text(json.dumps(w.plan.to_dict(), indent=2) + "\n")
    else:
        sys.stdout.write(text)
    vk = structure_report(w.graph, args.k).vk
    _say(f"n={w.graph.n} m={w.graph.m} |V_{args.k}|={vk} "
         f"bound={bounds.tight_lower(args.m, args.n, args.k)} regime={w.plan.regime}")
    return EXIT_OK


def verify_report(g, k: int) -> dict:
    """Connectivity, minimality, structure and bound values of ``g`` as a dict."""
    cert = vertex_connectivity(g) if g.n else None
    mini = is_minimally_k_connected(g, k)
    rep = structure_report(g, k)
    out = {
        "kappa": cert.kappa if cert else 0,
        "witness_separator": list(cert.witness_separator) if cert and cert.witness_separator else None,
        "k_connected": mini.is_k_connected,
        "minimal": mini.is_minimal,
        "violating_edge": list(mini.violating_edge) if mini.violating_edge else None,
        "structure": rep.to_dict(),
    }
    if k >= 2:
        b = bounds.bound_report(g.m, g.n, k).to_dict()
        gen = bounds.mader_generalized_lower(g.n, k, rep.c_f, rep.ek, rep.delta)
        b["mader_generalized"] = [gen.numerator, gen.denominator]
        out["bounds"] = b
        values = {"mader": bounds.mader_lower(g.n, k), "mader_generalized": gen,
                  "oxley": b["oxley"], "simple": b["simple"], "tight": b["tight"]}
        out["equality"] = sorted(name for name, v in values.items() if v == rep.vk)
        out["identity_holds"] = oxley_identity_check(g, k)[2]
    return out


def cmd_verify(args) -> int:
    try:
        g = read_graph(args.file, args.format)
    except GraphParseError as exc:
        _say(f"parse error: {exc}")
        return EXIT_PARSE
    report = verify_report(g, args.k)
    print(json.dumps(report, indent=2))
    verdict = "minimal" if report["minimal"] else "not minimal"
    _say(f"{args.file}: kappa={report['kappa']} {verdict} k={args.k} "
         f"|V_k|={report['structure']['vk']}")
    return EXIT_OK if report["minimal"] else EXIT_FAIL


def cmd_bounds(args) -> int:
    try:
        ms = _m_values(args)
    except GraphParseError as exc:
        _say(str(exc))
        return EXIT_PARSE
    _write_csv(SWEEP_COLUMNS, [asdict(sweep_row(m, args.n, args.k)) for m in ms])
    return EXIT_OK


def cmd_sweep(args) -> int:
    lo, hi = bounds.edge_range(args.n, args.k)
    rows = [sweep_row(m, args.n, args.k, args.witness) for m in range(lo, hi + 1)]
    _write_csv(SWEEP_COLUMNS, [asdict(r) for r in rows])
    if args.witness:
        tried = [r for r in rows if r.witness_verified is not None]
        bad = [r.m for r in tried if not r.witness_verified]
        _say(f"witnesses verified: {len(tried) - len(bad)}/{len(tried)}"
             + (f"; failed at m={bad}" if bad else ""))
        return EXIT_FAIL if bad else EXIT_OK
    return EXIT_OK


def enumerate_rows(table: oracle.TightnessTable) -> list[dict]:
    rows = []
    for m, r in sorted(table.rows.items()):
        tight = bounds.tight_lower(m, table.n, table.k) if table.k >= 2 else None
        rows.append({"m": m, "min_vk": r.min_vk, "tight_lower": tight,
                     "equal": None if tight is None else int(r.min_vk == tight),
                     "witness_graph6": to_graph6(r.witness).strip()})
    return rows


def cmd_enumerate(args) -> int:
    try:
        if args.check:
            report = oracle.verify_tightness(args.n, args.k, args.workers)
            table = report.table
        else:
            table = oracle.min_vk_table(args.n, args.k, args.workers)
    except (oracle.EnvelopeError, ValueError) as exc:
        _say(f"envelope error: {exc}")
        return EXIT_INFEASIBLE
    rows = enumerate_rows(table)
    if args.json:
        print(json.dumps({"n": args.n, "k": args.k, "rows": rows}, indent=2))
    else:
        _write_csv(ENUM_COLUMNS, rows)
    if args.check:
        for g6, msg in report.violations:
            _say(f"violation: {msg} {g6}")
        _say(f"checked {report.graphs_checked} graphs, equality at m={report.equality_checked}, "
             f"{len(report.violations)} violations")
        return EXIT_OK if report.ok else EXIT_FAIL
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="minconn", description="Minimally k-connected graphs and the tight |V_k| bound")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    c = sub.add_parser("construct", help="build and verify a witness attaining the bound")
    c.add_argument("--k", type=int, required=True)
    c.add_argument("--n", type=int, required=True)
    c.add_argument("--m", type=int, required=True)
    c.add_argument("--out", help="graph file; a FILE.plan.json sidecar is written next to it")
    c.add_argument("--format", choices=FORMATS, default="graph6")
    c.set_defaults(func=cmd_construct)

    v = sub.add_parser("verify", help="check minimal k-connectivity and report bounds")
    v.add_argument("file")
    v.add_argument("--k", type=int, required=True)
    v.add_argument("--format", choices=FORMATS, default=None, help="default: by suffix or content")
    v.set_defaults(func=cmd_verify)

    b = sub.add_parser("bounds", help="bound values as CSV")
    b.add_argument("--k", type=int, required=True)
    b.add_argument("--n", type=int, required=True)
    grp = b.add_mutually_exclusive_group()
    grp.add_argument("--m", type=int)
    grp.add_argument("--m-range", metavar="A:B")
    b.set_defaults(func=cmd_bounds)

    s = sub.add_parser("sweep", help="one CSV row per m over the edge range")
    s.add_argument("--k", type=int, required=True)
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--witness", action="store_true", help="build a witness at every feasible m")
    s.set_defaults(func=cmd_sweep)

    e = sub.add_parser("enumerate", help="exhaustive minimum |V_k| table for n <= 8")
    e.add_argument("--n", type=int, required=True)
    e.add_argument("--k", type=int, required=True)
    e.add_argument("--check", action="store_true", help="audit every graph and check equality")
    e.add_argument("--json", action="store_true", help="JSON instead of CSV")
    e.add_argument("--workers", type=int, default=None, help="default: MINCONN_THREADS or 1")
    e.set_defaults(func=cmd_enumerate)
    return p


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    if getattr(args, "k", 2) < 2 and args.command in ("construct", "bounds", "sweep"):
        _say("k must be at least 2")
        return EXIT_INFEASIBLE
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
