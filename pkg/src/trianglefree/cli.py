"""Command-line front end: ``classify``, ``check``, ``enumerate`` and ``verify``.

Records go to stdout, diagnostics and timings to stderr. Exit codes:
0 success, 1 violations (or counterexample verdicts) found, 2 usage,
capacity or input errors.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from typing import Iterable, Optional, TextIO

from . import graph6
from .enumeration import ENUMERATION_CAP, GenFilter, enumerate_all
from .families import recognize_family
from .graph import CapacityError, GraphError, stats
from .matching import maximum_matching
from .properties import find_triangle, has_hamiltonian_path, is_bipartite
from .theorems import THEOREMS, TheoremReport, main_classify, scan

EXIT_OK, EXIT_VIOLATION, EXIT_ERROR = 0, 1, 2
CHECKS = ("stats", "triangle", "bipartite", "matching", "hampath", "family")


class UsageError(Exception):
    pass


def _dump(record: dict) -> str:
    return json.dumps(record, separators=(",", ":"))


def _open_input(path: Optional[str]) -> TextIO:
    if path is None or path == "-":
        return sys.stdin
    return open(path, encoding="ascii", errors="replace")


def _filter_from(args: argparse.Namespace) -> Optional[GenFilter]:
    if not (args.triangle_free or args.min_degree is not None or args.connected):
        return None
    return GenFilter(
        triangle_free=args.triangle_free,
        min_degree_target=args.min_degree,
        connected_only=args.connected,
    )


def _n_values(args: argparse.Namespace) -> list[int]:
    if args.n is not None:
        lo = hi = args.n
    else:
        if args.min_n is None and args.max_n is None:
            raise UsageError("give --n or --min-n/--max-n")
        lo = args.min_n if args.min_n is not None else args.max_n
        hi = args.max_n if args.max_n is not None else args.min_n
    if lo > hi:
        raise UsageError(f"--min-n {lo} exceeds --max-n {hi}")
    if lo < 1 or hi > ENUMERATION_CAP:
        raise UsageError(f"n range must lie within 1..{ENUMERATION_CAP}")
    return list(range(lo, hi + 1))


def _write_table(out: TextIO, header: list[str], rows: Iterable[list], fmt: str) -> None:
    if fmt == "csv":
        writer = csv.writer(out, lineterminator="\n")
        writer.writerow(header)
        writer.writerows(rows)
        return
    rows = [[str(c) for c in r] for r in rows]
    widths = [max([len(h)] + [len(r[i]) for r in rows]) for i, h in enumerate(header)]
    out.write("  ".join(h.ljust(w) for h, w in zip(header, widths)).rstrip() + "\n")
    for r in rows:
        out.write("  ".join(c.ljust(w) for c, w in zip(r, widths)).rstrip() + "\n")


# --- classify ----------------------------------------------------------------

def cmd_classify(args: argparse.Namespace, out: TextIO) -> int:
    status = EXIT_OK
    records = []
    with _open_input(args.input) as stream:
        for lineno, line in enumerate(graph6.read_lines(stream), start=1):
            try:
                g = graph6.decode(line)
            except graph6.Graph6Error as exc:
                records.append({"line": lineno, "graph6": line, "error": str(exc), "offset": exc.offset})
                status = EXIT_ERROR
                continue
            record = {"line": lineno, "graph6": line.strip()}
            record.update(main_classify(g).as_dict())
            if record["verdict"] == "Counterexample" and status == EXIT_OK:
                status = EXIT_VIOLATION
            records.append(record)
    if args.format == "jsonl":
        for r in records:
            out.write(_dump(r) + "\n")
    else:
        rows = [[r["line"], r["graph6"], r.get("verdict", "error"),
                 r.get("reason", r.get("error", "")), _dump(r["witness"]) if "witness" in r else
                 (_dump(r["parts"]) if "parts" in r else "")] for r in records]
        _write_table(out, ["line", "graph6", "verdict", "reason", "detail"], rows, args.format)
    return status


# --- check -------------------------------------------------------------------

def _property_record(g, which: list[str]) -> dict:
    record: dict = {}
    if "stats" in which:
        st = stats(g)
        record["stats"] = {"n": st.n, "m": st.m, "delta": st.delta, "Delta": st.Delta,
                           "diam": st.diam if st.diam is not None else "disconnected",
                           "regular_r": st.regular_r}
    if "triangle" in which:
        tri = find_triangle(g)
        record["triangle"] = list(tri.as_tuple()) if tri else None
    if "bipartite" in which:
        cert = is_bipartite(g)
        if cert.bipartite:
            record["bipartite"] = {"two_coloring": [v for v in range(g.n) if cert.side >> v & 1]}
        else:
            record["bipartite"] = {"odd_cycle": list(cert.odd_cycle)}
    if "matching" in which:
        mm = maximum_matching(g)
        record["matching"] = {"size": mm.size, "edges": [list(e) for e in mm.edges]}
    if "hampath" in which:
        try:
            record["hampath"] = has_hamiltonian_path(g)
        except CapacityError as exc:
            record["hampath"] = {"error": str(exc)}
    if "family" in which:
        record["family"] = str(recognize_family(g))
    return record


def cmd_check(args: argparse.Namespace, out: TextIO) -> int:
    which = args.properties.split(",") if args.properties else list(CHECKS)
    unknown = [w for w in which if w not in CHECKS]
    if unknown:
        raise UsageError(f"unknown properties {unknown}; choose from {', '.join(CHECKS)}")
    status = EXIT_OK
    with _open_input(args.input) as stream:
        for lineno, line in enumerate(graph6.read_lines(stream), start=1):
            try:
                g = graph6.decode(line)
            except graph6.Graph6Error as exc:
                record = {"line": lineno, "graph6": line, "error": str(exc), "offset": exc.offset}
                status = EXIT_ERROR
            else:
                record = {"line": lineno, "graph6": line.strip()}
                record.update(_property_record(g, which))
                if isinstance(record.get("hampath"), dict):
                    status = EXIT_ERROR
            if args.format == "jsonl":
                out.write(_dump(record) + "\n")
            else:
                for key, value in record.items():
                    out.write(f"{key}: {value if isinstance(value, (str, int)) else _dump(value)}\n")
                out.write("\n")
    return status


# --- enumerate ---------------------------------------------------------------

def cmd_enumerate(args: argparse.Namespace, out: TextIO) -> int:
    (n,) = _n_values(args) if args.n is not None else (None,)
    if n is None:
        raise UsageError("enumerate needs --n")
    filt = _filter_from(args) or GenFilter()
    try:
        filt.validate(n)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    graphs = enumerate_all(n, filt, jobs=args.jobs)
    for g in graphs:
        code = graph6.encode(g)
        out.write((_dump({"graph6": code}) if args.format == "jsonl" else code) + "\n")
    print(f"enumerate n={n}: {len(graphs)} classes", file=sys.stderr)
    return EXIT_OK


# --- verify ------------------------------------------------------------------

def _report_rows(reports: list[TheoremReport]) -> list[list]:
    return [[r.theorem, r.n_min, r.graphs_scanned, r.hypothesis_satisfied, len(r.violations),
             " ".join(r.counterexamples)] for r in reports]


def cmd_verify(args: argparse.Namespace, out: TextIO) -> int:
    theorem = args.theorem_opt or args.theorem
    if theorem is None:
        raise UsageError("verify needs a theorem")
    if theorem not in THEOREMS:
        raise UsageError(f"unknown theorem {theorem!r}; choose from {', '.join(THEOREMS)}")
    n_values = _n_values(args)
    reports, summary = scan(theorem, n_values, jobs=args.jobs, overrides=_filter_from(args))
    for r in reports:
        print(f"verify {theorem} n={r.n_min}: {r.graphs_scanned} graphs, {r.elapsed:.2f}s", file=sys.stderr)
    if args.format == "jsonl":
        for r in reports:
            out.write(_dump({"type": "report", **r.as_dict()}) + "\n")
        out.write(_dump({"type": "summary", **summary.as_dict()}) + "\n")
    elif args.format == "csv":
        header = ["theorem", "n", "graphs_scanned", "hypothesis_satisfied", "violations", "counterexamples"]
        _write_table(out, header, _report_rows(reports), "csv")
    else:
        header = ["theorem", "n", "scanned", "hypothesis", "violations"]
        _write_table(out, header, [row[:5] for row in _report_rows(reports)], "human")
        out.write(f"total: {summary.graphs_scanned} scanned, {summary.hypothesis_satisfied} satisfy the "
                  f"hypotheses, {len(summary.violations)} violations\n")
        for r in reports:
            for g6, label in r.witnesses:
                out.write(f"  n={r.n_min} witness {g6} {label}\n")
            for v in r.violations:
                out.write(f"  n={r.n_min} VIOLATION {v.graph6} {_dump(v.details)}\n")
    return EXIT_VIOLATION if summary.violations else EXIT_OK


# --- entry point -------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="trianglefree", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p: argparse.ArgumentParser, formats=("human", "jsonl", "csv")) -> None:
        p.add_argument("--format", choices=formats, default="human")

    def filters(p: argparse.ArgumentParser) -> None:
        p.add_argument("--triangle-free", action="store_true")
        p.add_argument("--min-degree", type=int, metavar="K")
        p.add_argument("--connected", action="store_true")
        p.add_argument("--jobs", type=int, default=1, metavar="W")

    def n_range(p: argparse.ArgumentParser) -> None:
        p.add_argument("--n", type=int)
        p.add_argument("--min-n", type=int)
        p.add_argument("--max-n", type=int)

    p = sub.add_parser("classify", help="main-theorem verdict for each graph6 line")
    p.add_argument("--input", metavar="PATH")
    common(p)
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("check", help="structural properties of each graph6 line")
    p.add_argument("--input", metavar="PATH")
    p.add_argument("--properties", metavar="LIST", help=f"comma list from {','.join(CHECKS)}")
    common(p, ("human", "jsonl"))
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("enumerate", help="one graph6 line per isomorphism class")
    n_range(p)
    filters(p)
    common(p, ("human", "jsonl"))
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("verify", help="exhaustive theorem scan")
    p.add_argument("theorem", nargs="?", choices=THEOREMS)
    p.add_argument("--theorem", dest="theorem_opt", choices=THEOREMS)
    n_range(p)
    filters(p)
    common(p)
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv: Optional[list[str]] = None, out: Optional[TextIO] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_ERROR if exc.code else EXIT_OK
    if getattr(args, "jobs", 1) < 1:
        print("error: --jobs must be at least 1", file=sys.stderr)
        return EXIT_ERROR
    out = out or sys.stdout
    try:
        return args.func(args, out)
    except (UsageError, CapacityError, GraphError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR


def run(argv: list[str]) -> tuple[int, str]:
    """Invoke :func:`main` and capture stdout; convenient for tests and notebooks."""
    buf = io.StringIO()
    code = main(argv, buf)
    return code, buf.getvalue()


if __name__ == "__main__":
    sys.exit(main())
