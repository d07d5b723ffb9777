"""Command-line interface: ``alphatough {rho,tough,verify,scan,audit,family}``.

Exit status is 0 on success, 1 when a verify/scan/audit finds a failure, and
2 for bad input (unparseable graph, missing file, parameter out of range).

CSV columns per command:

* rho:    graph, n, m, alpha, rho, edge_bound, bound_slack
* tough:  graph, n, m, toughness, witness, components
* verify: graph, theorem, n, alpha, t, rho, threshold, margin, hypothesis,
          conclusion, extremal, consistent
* scan:   theorem, n, alpha, graphs, connected, hypothesis_true, extremal,
          max_extremal_margin, inconsistencies, rejected
* audit:  audit, n, s_or_c, t, alpha, check, lhs, relation, rhs, margin, passed
* family: family, graph6, n, m, alpha, rho, toughness
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
from fractions import Fraction

from . import formats
from .audit import audit_claim1_section3, audit_theorem12_chain
from .graph import Graph, complete, family_g2, family_g3, family_gs2
from .scan import exhaustive_scan_theorem_1_1, scan_graph_stream
from .spectral import EPS, alpha_edge_bound, spectral_radius
from .theorems import PreconditionError, check_theorem_1_1, check_theorem_1_2
from .toughness import DEFAULT_CAP, toughness

COLUMNS = {
    "rho": ["graph", "n", "m", "alpha", "rho", "edge_bound", "bound_slack"],
    "tough": ["graph", "n", "m", "toughness", "witness", "components"],
    "verify": ["graph", "theorem", "n", "alpha", "t", "rho", "threshold", "margin",
               "hypothesis", "conclusion", "extremal", "consistent"],
    "scan": ["theorem", "n", "alpha", "graphs", "connected", "hypothesis_true", "extremal",
             "max_extremal_margin", "inconsistencies", "rejected"],
    "audit": ["audit", "n", "s_or_c", "t", "alpha", "check", "lhs", "relation", "rhs",
              "margin", "passed"],
    "family": ["family", "graph6", "n", "m", "alpha", "rho", "toughness"],
}


class InputError(Exception):
    pass


def parse_alpha(text: str) -> Fraction:
    """Accept ``0.5``, ``2/3`` and the like; kept exact until used numerically."""
    try:
        a = Fraction(text.strip())
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"invalid alpha {text!r}") from None
    if not 0 <= a <= 1:
        raise argparse.ArgumentTypeError(f"alpha must lie in [0, 1], got {text}")
    return a


def parse_range(text: str) -> list[int]:
    """``"7"`` or ``"6:12"`` (inclusive)."""
    try:
        if ":" in text:
            lo, hi = text.split(":", 1)
            return list(range(int(lo), int(hi) + 1))
        return [int(text)]
    except ValueError:
        raise argparse.ArgumentTypeError(f"invalid integer or range {text!r}") from None


def _fmt(x) -> str:
    if isinstance(x, bool):
        return str(x).lower()
    if isinstance(x, float):
        return f"{x:.12g}"
    if x is None:
        return ""
    return str(x)


def _jsonable(x):
    if isinstance(x, float):
        return float(f"{x:.12g}")
    if isinstance(x, Fraction):
        return str(x)
    return x


def render(rows: list[dict], command: str, fmt: str) -> str:
    cols = COLUMNS[command]
    if fmt == "json":
        return json.dumps([{c: _jsonable(r.get(c)) for c in cols} for r in rows], indent=2) + "\n"
    if fmt == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(cols)
        for r in rows:
            w.writerow([_fmt(r.get(c)) for c in cols])
        return buf.getvalue()
    table = [cols] + [[_fmt(r.get(c)) for c in cols] for r in rows]
    widths = [max(len(row[i]) for row in table) for i in range(len(cols))]
    return "".join(
        "  ".join(cell.ljust(w) for cell, w in zip(row, widths)).rstrip() + "\n" for row in table
    )


def load_graphs(args) -> list[tuple[str, Graph]]:
    """Graphs named by --g6 (inline code or file of codes) and --edges (file)."""
    out: list[tuple[str, Graph]] = []
    try:
        if args.g6:
            if os.path.isfile(args.g6):
                with open(args.g6, "rb") as fh:
                    lines = [ln for ln in fh.read().splitlines() if ln.strip()]
                for line in lines:
                    g = formats.parse_graph6(line)
                    out.append((formats.emit_graph6(g).decode(), g))
            else:
                g = formats.parse_graph6(args.g6)
                out.append((formats.emit_graph6(g).decode(), g))
        if args.edges:
            with open(args.edges) as fh:
                g = formats.parse_edge_list(fh.read())
            out.append((args.edges, g))
    except FileNotFoundError as exc:
        raise InputError(f"no such file: {exc.filename}") from None
    except formats.FormatError as exc:
        if args.g6 and not os.path.exists(args.g6) and ("/" in args.g6 or "." in args.g6):
            raise InputError(f"no such file: {args.g6}") from None
        raise InputError(f"cannot parse graph: {exc}") from None
    if not out:
        raise InputError("no graph given (use --g6 or --edges)")
    return out


def cmd_rho(args) -> tuple[list[dict], bool]:
    rows = []
    for name, g in load_graphs(args):
        for a in args.alpha or [Fraction(0)]:
            af = float(a)
            rho = spectral_radius(g, af)
            row = {"graph": name, "n": g.n, "m": g.m, "alpha": af, "rho": rho}
            if a >= Fraction(1, 2) and g.n >= 2 and min(g.degrees()) > 0:
                bound = alpha_edge_bound(g.n, g.m, af)
                row.update(edge_bound=bound, bound_slack=bound - rho)
            rows.append(row)
    return rows, True


def _check_cap(g: Graph, args) -> None:
    if g.n > DEFAULT_CAP and not args.cap_override:
        raise InputError(
            f"graph has {g.n} vertices, above the exact-toughness cap of {DEFAULT_CAP}; "
            "pass --cap-override to run anyway"
        )


def cmd_tough(args) -> tuple[list[dict], bool]:
    rows = []
    for name, g in load_graphs(args):
        _check_cap(g, args)
        t = toughness(g)
        witness = "" if t.witness is None else "{" + ",".join(map(str, sorted(t.witness))) + "}"
        rows.append({"graph": name, "n": g.n, "m": g.m, "toughness": str(t),
                     "witness": witness, "components": t.components})
    return rows, True


def cmd_verify(args) -> tuple[list[dict], bool]:
    rows, ok = [], True
    for name, g in load_graphs(args):
        for a in args.alpha or [Fraction(1, 2)]:
            if args.theorem == "1.1":
                v = check_theorem_1_1(g, a, args.tol, lazy=True)
                t = 1
            else:
                v = check_theorem_1_2(g, a, args.t, args.tol, lazy=True)
                t = args.t
            ok &= v.consistent
            rows.append({
                "graph": name, "theorem": args.theorem, "n": g.n, "alpha": float(a),
                "t": t, "rho": v.rho, "threshold": v.threshold, "margin": v.hypothesis_margin,
                "hypothesis": v.hypothesis_holds, "conclusion": v.conclusion_holds,
                "extremal": v.is_extremal, "consistent": v.consistent,
            })
    return rows, ok


def cmd_scan(args):
    rows, ok, notes = [], True, []
    alphas = args.alpha or [Fraction(1, 2)]
    if args.g6 or args.edges:
        graphs = [g for _, g in load_graphs(args)]
        runs = [(None, a, scan_graph_stream(graphs, a, args.theorem, args.t, args.tol))
                for a in alphas]
    else:
        if args.theorem != "1.1":
            raise InputError("built-in enumeration covers --theorem 1.1 only; pass --g6 graphs for 1.2")
        if not args.n:
            raise InputError("scan needs --n or a graph6 stream")
        runs = [(n, a, exhaustive_scan_theorem_1_1(n, a, jobs=args.jobs, eps=args.tol))
                for n in args.n for a in alphas]
    for n, a, rep in runs:
        ok &= rep.ok
        rows.append({
            "theorem": args.theorem, "n": n if n is not None else "stream",
            "alpha": float(a), "graphs": rep.graphs_seen, "connected": rep.connected,
            "hypothesis_true": rep.hypothesis_true, "extremal": rep.extremal,
            "max_extremal_margin": rep.max_extremal_margin,
            "inconsistencies": len(rep.inconsistencies), "rejected": len(rep.rejected),
        })
        notes.append(f"alpha={float(a):.12g}: {rep.summary()}")
        notes += [f"  counterexample {rec.graph6} margin={rec.margin:.3e}"
                  for rec in rep.inconsistencies]
        notes += [f"  rejected graph #{i}: {why}" for i, why in rep.rejected]
    return rows, ok, notes


def cmd_audit(args) -> tuple[list[dict], bool]:
    if not args.n:
        raise InputError("audit needs --n")
    rows, ok = [], True
    for a in args.alpha or [Fraction(1, 2)]:
        for n in args.n:
            if args.kind == "claim1":
                svals = args.s or list(range(2, (n - 1) // 2 + 1))
                reports = [audit_claim1_section3(n, s, a, args.tol) for s in svals]
                idx, t = "s", ""
            else:
                cvals = args.c or list(range(3, (n + 1) // (args.t + 1) + 1))
                reports = [audit_theorem12_chain(n, args.t, a, c, args.tol) for c in cvals]
                idx, t = "c", args.t
            for rep in reports:
                ok &= rep.passed
                for chk in rep.checks:
                    rows.append({
                        "audit": args.kind, "n": n, "s_or_c": rep.params[idx], "t": t,
                        "alpha": float(a), "check": chk.name, "lhs": chk.lhs,
                        "relation": chk.relation, "rhs": chk.rhs, "margin": chk.margin,
                        "passed": chk.passed,
                    })
    return rows, ok


def cmd_family(args) -> tuple[list[dict], bool]:
    if not args.n:
        raise InputError("family needs --n")
    rows = []
    for n in args.n:
        if args.kind == "gs2":
            g = family_gs2(n, args.s[0] if args.s else 1)
        elif args.kind == "g2":
            g = family_g2(n, args.t, args.c[0] if args.c else 2)
        elif args.kind == "g3":
            g = family_g3(n, args.t)
        else:
            g = complete(n)
        tough = str(toughness(g)) if g.n <= DEFAULT_CAP or args.cap_override else "skipped"
        for a in args.alpha or [Fraction(1, 2)]:
            rows.append({
                "family": args.kind, "graph6": formats.emit_graph6(g).decode(), "n": g.n,
                "m": g.m, "alpha": float(a), "rho": spectral_radius(g, float(a)),
                "toughness": tough,
            })
    return rows, True


COMMANDS = {
    "rho": cmd_rho, "tough": cmd_tough, "verify": cmd_verify,
    "scan": cmd_scan, "audit": cmd_audit, "family": cmd_family,
}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--g6", help="graph6 code, or a file with one code per line")
    common.add_argument("--edges", help="edge-list file: first line n, then 'u v' lines")
    common.add_argument("--alpha", action="append", type=parse_alpha,
                        help="alpha value (decimal or p/q); repeatable")
    common.add_argument("--t", type=int, default=1, help="toughness level t (positive integer)")
    common.add_argument("--n", type=parse_range, default=None, help="order n or range lo:hi")
    common.add_argument("--s", type=parse_range, default=None, help="clique size s or range")
    common.add_argument("--c", type=parse_range, default=None, help="component count c or range")
    common.add_argument("--format", choices=["text", "csv", "json"], default="text")
    common.add_argument("--out", help="write output here instead of standard output")
    common.add_argument("--jobs", type=int, default=1, help="worker processes for scans")
    common.add_argument("--tol", type=float, default=EPS, help=f"comparison tolerance (default {EPS})")
    common.add_argument("--cap-override", action="store_true",
                        help=f"allow exact toughness above {DEFAULT_CAP} vertices")

    p = argparse.ArgumentParser(prog="alphatough", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)
    sub.add_parser("rho", parents=[common], help="A_alpha spectral radius and edge bound")
    sub.add_parser("tough", parents=[common], help="exact toughness with witness")
    for name, helptext in [("verify", "check one graph against a theorem"),
                           ("scan", "exhaustive or streamed theorem verification")]:
        sp = sub.add_parser(name, parents=[common], help=helptext)
        sp.add_argument("--theorem", choices=["1.1", "1.2"], default="1.1")
    sp = sub.add_parser("audit", parents=[common], help="numerical proof-chain audits")
    sp.add_argument("kind", choices=["claim1", "t12"])
    sp = sub.add_parser("family", parents=[common], help="build an extremal-family graph")
    sp.add_argument("kind", choices=["gs2", "g2", "g3", "complete"])
    return p


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        result = COMMANDS[args.command](args)
    except (InputError, PreconditionError, ValueError) as exc:
        print(f"alphatough {args.command}: error: {exc}", file=sys.stderr)
        return 2
    rows, ok, *rest = result
    text = render(rows, args.command, args.format)
    if args.format == "text" and rest:
        text += "".join(line + "\n" for line in rest[0])
    if args.out:
        with open(args.out, "w", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return 0 if ok else 1


if __name__ == "__main__":
    sys.exit(main())
