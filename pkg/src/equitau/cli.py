"""Command-line interface: exact text and JSON output for every computation.

Subcommands: chi, weyl, pushforward, sectors, support, segal, selftest.
Common flags: --trunc N (default 16, overridable via EQUITAU_TRUNC) and
--format text|json.  Output is deterministic for fixed flags; rationals are
rendered as exact strings, never floats.  Exit status is 0 iff every embedded
check passes, 1 on a check failure, 2 on bad flags.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from fractions import Fraction

from .charclass import LineTwist, mu_model, torus_model
from .finitestab import (
    ktheory_free_module_dimension,
    sector_dimensions,
    support_subgroup,
    vistoli_kernel_dimension,
)
from .gradedring import GradedSeries, odd_part_quotient, pushforward, reduce
from .lattice import GroupDescriptor, TorsionCharacterPoint
from .reprring import RepRingElement
from .riemannroch import chi_with_oracle, verify_weyl, weyl_closed_form
from .selftest import run_all, segal_certificate

DEFAULT_TRUNCATION = 16


# ---------------------------------------------------------------------------
# JSON encoding of the exact value types


def fraction_str(value) -> str:
    return str(Fraction(value))


def series_to_json(s: GradedSeries):
    by_degree: dict[int, list] = {}
    for exps, coeff in s.sorted_terms():
        by_degree.setdefault(sum(exps), []).append(
            {"exponents": list(exps), "coeff": fraction_str(coeff)}
        )
    return [
        {"degree": d, "monomials": monos} for d, monos in sorted(by_degree.items())
    ]


def rep_to_json(a: RepRingElement):
    return [
        {"exponents": list(k), "coeff": fraction_str(c)} for k, c in a.sorted_terms()
    ]


def group_to_json(g: GroupDescriptor):
    return {
        "free_rank": g.free_rank,
        "torsion_orders": list(g.torsion_orders),
        "name": str(g),
    }


def render_json(doc: dict) -> str:
    return json.dumps(doc, indent=2, sort_keys=True)


# ---------------------------------------------------------------------------
# Flag parsing helpers


def parse_weights(text: str):
    """"1,-1" -> scalar weights; "0,1;1,0" -> coordinate-vector weights."""
    if ";" in text:
        return [tuple(int(x) for x in part.split(",")) for part in text.split(";")]
    return [int(x) for x in text.split(",")]


def parse_orders(args) -> tuple[int, ...]:
    if args.orders is not None:
        return tuple(int(x) for x in args.orders.split(","))
    if args.order is not None:
        return (args.order,)
    raise ValueError("one of --order or --orders is required")


def resolve_truncation(args) -> int:
    if args.trunc is not None:
        return args.trunc
    env = os.environ.get("EQUITAU_TRUNC")
    if env is not None:
        return int(env)
    return DEFAULT_TRUNCATION


def make_document(command, inputs, truncation, results, checks):
    return {
        "command": command,
        "inputs": inputs,
        "truncation": truncation,
        "results": results,
        "checks": [{"name": name, "pass": bool(ok)} for name, ok in checks],
    }


def emit(doc: dict, text_lines, fmt: str) -> int:
    if fmt == "json":
        print(render_json(doc))
    else:
        print(f"command: {doc['command']}")
        print(f"truncation: {doc['truncation']}")
        for line in text_lines:
            print(line)
        for check in doc["checks"]:
            print(f"check [{'pass' if check['pass'] else 'FAIL'}] {check['name']}")
    return 0 if all(c["pass"] for c in doc["checks"]) else 1


# ---------------------------------------------------------------------------
# Subcommands


def cmd_chi(args) -> int:
    trunc = resolve_truncation(args)
    weights = parse_weights(args.weights)
    model = torus_model(weights, trunc)
    character = tuple(int(x) for x in args.char.split(",")) if args.char else None
    result = chi_with_oracle(model, LineTwist(args.twist, character))
    checks = []
    if result.matches_oracle is not None:
        checks.append(("section-oracle agreement up to truncation", result.matches_oracle))
    is_weyl_model = model.rank == 1 and model.weight_vectors() == ((1,), (-1,)) and not character
    if is_weyl_model:
        closed = weyl_closed_form(args.twist, trunc)
        checks.append(("closed-form agreement up to truncation", closed == result.series))
    results = {
        "series": series_to_json(result.series),
        "series_text": str(result.series),
        "degree_zero": fraction_str(result.series.constant_term()),
        "oracle_character": None
        if result.oracle_character is None
        else rep_to_json(result.oracle_character),
        "oracle_character_text": None
        if result.oracle_character is None
        else str(result.oracle_character),
    }
    inputs = {"weights": args.weights, "twist": args.twist, "char": args.char}
    doc = make_document("chi", inputs, trunc, results, checks)
    lines = [
        f"series: {results['series_text']}",
        f"degree-0 term: {results['degree_zero']}",
    ]
    if result.oracle_character is not None:
        lines.append(f"sections character: {results['oracle_character_text']}")
    return emit(doc, lines, args.format)


def cmd_weyl(args) -> int:
    trunc = resolve_truncation(args)
    report = verify_weyl(args.nmax, trunc)
    rows = []
    checks = []
    lines = []
    for row in report.rows:
        rows.append(
            {
                "twist": row.twist,
                "series": series_to_json(row.pipeline),
                "series_text": str(row.pipeline),
                "closed_form_text": str(row.closed_form),
                "sections_series_text": str(row.oracle_series),
                "sections_text": str(row.oracle_character),
                "pass": row.ok,
            }
        )
        checks.append((f"n={row.twist} three-way agreement up to truncation", row.ok))
        lines.append(
            f"n={row.twist:>3} [{'pass' if row.ok else 'FAIL'}] chi = {row.pipeline}"
        )
    doc = make_document(
        "weyl", {"nmax": args.nmax}, trunc, {"rows": rows, "all_pass": report.all_pass}, checks
    )
    return emit(doc, lines, args.format)


def cmd_pushforward(args) -> int:
    trunc = resolve_truncation(args)
    weights = parse_weights(args.weights)
    model = torus_model(weights, trunc)
    coeffs = [int(x) for x in args.poly.split(",")]
    reduced = reduce(coeffs, model.weight_vectors(), model.rank, trunc)
    series = pushforward(reduced)
    checks = []
    if model.rank == 1 and model.weight_vectors() == ((1,), (-1,)):
        closed = odd_part_quotient(coeffs, trunc)
        checks.append(("odd-part closed form agreement up to truncation", closed == series))
    results = {
        "reduced_text": str(reduced),
        "series": series_to_json(series),
        "series_text": str(series),
    }
    doc = make_document(
        "pushforward", {"weights": args.weights, "poly": args.poly}, trunc, results, checks
    )
    lines = [f"reduced class: {results['reduced_text']}", f"pushforward: {results['series_text']}"]
    return emit(doc, lines, args.format)


def cmd_sectors(args) -> int:
    trunc = resolve_truncation(args)
    orders = parse_orders(args)
    weights = parse_weights(args.weights)
    model = mu_model(orders, weights, trunc)
    decomp = sector_dimensions(model)
    free_module_dim = ktheory_free_module_dimension(model)
    rows = []
    lines = []
    ncoords = len(model.weights)
    partition_ok = True
    for s in decomp.sectors:
        covered = sorted(i for c in s.components for i in c.indices)
        partition_ok = partition_ok and covered == list(range(ncoords))
        rows.append(
            {
                "order": s.order,
                "residue_degree": s.residue_degree,
                "point": [fraction_str(v) for v in s.point.values],
                "support": group_to_json(s.support),
                "components": [list(c.indices) for c in s.components],
                "dimension": s.dimension,
            }
        )
        comps = " + ".join(f"P^{c.dim}" for c in s.components)
        lines.append(
            f"e={s.order:>3}  residue degree {s.residue_degree}  support {s.support}  "
            f"fixed {comps}  dim {s.dimension}"
        )
    total = decomp.total_dimension
    results = {
        "rows": rows,
        "total_dimension": total,
        "untwisted_dimension": decomp.untwisted_dimension,
        "vistoli_kernel_dimension": vistoli_kernel_dimension(decomp),
        "free_module_dimension": free_module_dim,
    }
    checks = [
        ("fixed components partition the coordinates", partition_ok),
        ("total equals the free-module dimension (rank dim V over the group algebra)",
         total == free_module_dim),
    ]
    inputs = {"order": args.order, "orders": args.orders, "weights": args.weights}
    doc = make_document("sectors", inputs, trunc, results, checks)
    lines.append(f"total {total}, untwisted {decomp.untwisted_dimension}, "
                 f"localization kernel {results['vistoli_kernel_dimension']}")
    return emit(doc, lines, args.format)


def cmd_support(args) -> int:
    trunc = resolve_truncation(args)
    orders = parse_orders(args)
    group = GroupDescriptor(0, tuple(d for d in orders if d != 1))
    values = tuple(Fraction(x) for x in args.point.split(","))
    point = TorsionCharacterPoint(group, values)
    support = support_subgroup(group, point)
    checks = [("support order equals the order of the character point",
               support.order() == point.order())]
    results = {
        "support": group_to_json(support),
        "support_text": f"H = {support}",
        "point_order": point.order(),
    }
    inputs = {"order": args.order, "orders": args.orders, "point": args.point}
    doc = make_document("support", inputs, trunc, results, checks)
    return emit(doc, [results["support_text"]], args.format)


def cmd_segal(args) -> int:
    trunc = resolve_truncation(args)
    target, generators, cofactors, bound = segal_certificate(args.n, args.degree, args.bound)
    found = cofactors is not None
    verified = False
    if found:
        combo = RepRingElement.zero(target.group)
        for c, g in zip(cofactors, generators):
            combo = combo + c * g
        verified = combo == target
    results = {
        "target_text": str(target),
        "generators_text": [str(g) for g in generators],
        "bound": bound,
        "found": found,
        "cofactors": None if not found else [rep_to_json(c) for c in cofactors],
        "cofactors_text": None if not found else [str(c) for c in cofactors],
    }
    checks = [
        ("certificate found within the search bound", found),
        ("certificate re-verifies by exact expansion", verified),
    ]
    inputs = {"n": args.n, "degree": args.degree, "bound": args.bound}
    doc = make_document("segal", inputs, trunc, results, checks)
    lines = [f"target: {results['target_text']}"]
    for i, g in enumerate(results["generators_text"]):
        lines.append(f"generator {i + 1}: {g}")
    if found:
        for i, c in enumerate(results["cofactors_text"]):
            lines.append(f"cofactor {i + 1}: {c}")
    else:
        lines.append(
            f"no certificate within bound {bound} (not a proof of non-membership)"
        )
    return emit(doc, lines, args.format)


def cmd_selftest(args) -> int:
    trunc = resolve_truncation(args)
    results = run_all(report=None)
    rows = [
        {"name": name, "pass": passed, "detail": detail}
        for name, passed, detail in results
    ]
    checks = [(name, passed) for name, passed, _ in results]
    doc = make_document("selftest", {}, trunc, {"criteria": rows}, checks)
    lines = [
        f"{'pass' if passed else 'FAIL'}  {name}  ({detail})"
        for name, passed, detail in results
    ]
    return emit(doc, lines, args.format)


# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="equitau",
        description="Exact equivariant Riemann-Roch computations on projective-space models.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--trunc", type=int, default=None,
                       help="series truncation degree (default 16; env EQUITAU_TRUNC)")
        p.add_argument("--format", choices=("text", "json"), default="text")

    p = sub.add_parser("chi", help="equivariant Euler characteristic of O(n) on P(V)")
    p.add_argument("--weights", required=True,
                   help="action weights, e.g. 1,-1 (use ; to separate coordinate vectors)")
    p.add_argument("--twist", type=int, required=True, help="the twist n of O(n)")
    p.add_argument("--char", default=None, help="extra character twist, e.g. 2 or 1,0")
    common(p)
    p.set_defaults(func=cmd_chi)

    p = sub.add_parser("weyl", help="three-way Weyl character table on P^1 (1,-1)")
    p.add_argument("--nmax", type=int, required=True)
    common(p)
    p.set_defaults(func=cmd_weyl)

    p = sub.add_parser("pushforward", help="pushforward of an h-polynomial class")
    p.add_argument("--weights", required=True)
    p.add_argument("--poly", required=True,
                   help="integer coefficients c0,c1,... of p(h) = sum c_k h^k")
    common(p)
    p.set_defaults(func=cmd_pushforward)

    p = sub.add_parser("sectors", help="twisted-sector table for a finite diagonalizable action")
    p.add_argument("--order", type=int, default=None, help="cyclic group order d")
    p.add_argument("--orders", default=None, help="cyclic factors d1,d2,...")
    p.add_argument("--weights", required=True)
    common(p)
    p.set_defaults(func=cmd_sectors)

    p = sub.add_parser("support", help="support subgroup of a character point")
    p.add_argument("--order", type=int, default=None)
    p.add_argument("--orders", default=None)
    p.add_argument("--point", required=True, help="rational values per generator, e.g. 1/3")
    common(p)
    p.set_defaults(func=cmd_support)

    p = sub.add_parser("segal", help="ideal-membership certificate for (t1-1)^d in the GL_n ideal")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--degree", type=int, required=True)
    p.add_argument("--bound", type=int, default=None,
                   help="cofactor exponent box bound (default degree-1)")
    common(p)
    p.set_defaults(func=cmd_segal)

    p = sub.add_parser("selftest", help="run the full acceptance suite")
    common(p)
    p.set_defaults(func=cmd_selftest)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ValueError as exc:
        print(f"equitau: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
