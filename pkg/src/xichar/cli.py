"""Command-line interface: ``xichar {info,table,xi,artin,verify,scan}``."""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .artin import artin_decompose
from .catalog import build_group, default_catalog, parse_specifier
from .chartable import character_table
from .exceptions import ClosureCapExceeded, XiCharError
from .permgroup import DEFAULT_CAP, cyclic_subgroups_up_to_conjugacy, psi
from .scan import ALL_CHECKS, ScanJob, analyze_group, run_scan
from .xi import linear_moebius_multiplicity, theorem_b_multiplicity, xi_multiplicities

EXIT_OK, EXIT_FAIL, EXIT_INPUT = 0, 1, 2


def _write_json(path: str | None, payload) -> None:
    if path:
        Path(path).write_text(json.dumps(payload, indent=2) + "\n", encoding="utf-8")


def cmd_info(args) -> int:
    G = build_group(args.group, cap=args.cap)
    cd = G.conjugacy
    out = {
        "group": G.name,
        "order": G.order,
        "degree": G.degree,
        "exponent": G.exponent,
        "psi": psi(G),
        "num_classes": len(cd),
        "class_sizes": list(cd.class_sizes),
        "class_orders": list(cd.rep_orders),
        "cyclic_subgroup_classes": len(cyclic_subgroups_up_to_conjugacy(G)),
    }
    for k, v in out.items():
        print(f"{k:24s} {v}")
    _write_json(args.json, out)
    return EXIT_OK


def cmd_table(args) -> int:
    G = build_group(args.group, cap=args.cap)
    table = character_table(G)
    print(table.format())
    _write_json(args.json, table.to_json())
    return EXIT_OK


def cmd_xi(args) -> int:
    G = build_group(args.group, cap=args.cap)
    table = character_table(G)
    rep = xi_multiplicities(G, table)
    linear = set(table.linear_rows())
    rows = []
    print(f"{G.name}: |G| = {G.order}, psi(G) = {rep.psi}")
    print(f"{'row':>4} {'deg':>4} {'[Xi,chi]':>10} {'fibres':>10} {'moebius':>10}")
    for i, m in enumerate(rep.multiplicities):
        fib, _ = theorem_b_multiplicity(G, table, i)
        mob = linear_moebius_multiplicity(G, table, i)[0] if i in linear else None
        rows.append({"row": i, "degree": table.degrees[i], "multiplicity": m,
                     "fibre_formula": fib, "moebius_formula": mob})
        print(f"{i:>4} {table.degrees[i]:>4} {m:>10} {fib:>10} {'' if mob is None else mob:>10}")
    print(f"zero rows: {rep.zero_rows or 'none'}; least multiplicity {rep.min_multiplicity}")
    _write_json(args.json, {"group": G.name, "order": G.order, "psi": rep.psi,
                            "zero_rows": rep.zero_rows, "rows": rows})
    return EXIT_OK


def cmd_artin(args) -> int:
    G = build_group(args.group, cap=args.cap)
    dec = artin_decompose(G)
    rows = []
    print(f"{'gen order':>9} {'|C|':>6} {'coefficient':>12}")
    for C, coeff in zip(dec.subgroups, dec.coefficients):
        gen_order = G.orders[C.generators[0]]
        rows.append({"generator_order": gen_order, "subgroup_order": C.order, "coefficient": coeff})
        print(f"{gen_order:>9} {C.order:>6} {coeff:>12}")
    verdict = "verified" if dec.verified else "FAILED"
    print(f"sum of coefficient * (1_C)^G == Xi on every class: {verdict}")
    _write_json(args.json, {"group": G.name, "terms": rows, "verified": dec.verified})
    return EXIT_OK if dec.verified else EXIT_FAIL


def cmd_verify(args) -> int:
    G = build_group(args.group, cap=args.cap)
    rec = analyze_group(G, ALL_CHECKS)
    for key in ("identities_ok", "theorem_a_ok", "theorem_b_ok", "artin_ok", "zeros_ok"):
        print(f"{key:14s} {'pass' if rec[key] else 'FAIL'}")
    print(f"m(G) = {rec['m_of_G']}, |G| = {rec['order']}, zero rows: {rec['zero_rows']}")
    _write_json(args.json, rec)
    ok = all(rec[k] for k in ("identities_ok", "theorem_a_ok", "theorem_b_ok", "artin_ok", "zeros_ok"))
    return EXIT_OK if ok else EXIT_FAIL


def cmd_scan(args) -> int:
    specs = [parse_specifier(s) for s in args.groups] if args.groups else default_catalog()
    for spec in specs:
        if spec.path is not None and not Path(spec.path).is_file():
            raise FileNotFoundError(f"group file not found: {spec.path}")
    checks = frozenset(ALL_CHECKS if "all" in args.checks else args.checks)
    job = ScanJob(specs, checks=checks, output=Path(args.json) if args.json else None,
                  workers=args.workers, cap=args.cap)
    _, summary, code = run_scan(job, stream=None if args.json else sys.stdout)
    if args.json:
        print(json.dumps(summary))
    return code


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="xichar",
        description="Character-theoretic checks of Xi(g) = |G| o(g) for small finite groups.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, help_text, group=True):
        p = sub.add_parser(name, help=help_text)
        if group:
            p.add_argument("group", help="group specifier, e.g. S:4, C:3xC:4, SL23, file:gens.txt")
        p.add_argument("--json", metavar="PATH", help="also write the result as JSON")
        p.add_argument("--cap", type=int, default=DEFAULT_CAP, help="maximum group order")
        p.set_defaults(func=func)
        return p

    add("info", cmd_info, "orders, classes and psi")
    add("table", cmd_table, "exact character table")
    add("xi", cmd_xi, "multiplicities [Xi, chi] by three routes")
    add("artin", cmd_artin, "Xi as an integer combination of (1_C)^G")
    add("verify", cmd_verify, "run every check on one group")
    p = add("scan", cmd_scan, "batch checks, JSON-lines report", group=False)
    p.add_argument("groups", nargs="*", help="specifiers (default: built-in catalog)")
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--checks", nargs="+", default=["all"], choices=list(ALL_CHECKS) + ["all"])
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (XiCharError, OSError) as exc:
        if isinstance(exc, XiCharError) and not isinstance(exc, (ValueError, ClosureCapExceeded)):
            print(f"error: {exc}", file=sys.stderr)
            return EXIT_FAIL
        print(f"input error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
