"""Command-line front end: compute, family, stability, verify.

Exit codes: 0 success, 1 usage error, 2 parse error, 3 must-hold claim
failure, 4 budget exhaustion under --strict. CZI_JOBS mirrors --jobs.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from . import families as fam
from .generators import FamilySpecError, generate, parse_family_spec
from .graph import Graph
from .indices import Budget, IndexReport, full_report, thorn_base_data
from .io import GraphParseError, load_graph
from .stability import stability_report
from .verify import (
    CorpusConfig,
    UnknownClaimError,
    build_report,
    claim_ids,
    report_to_csv,
    report_to_json,
    run_claims,
)

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_PARSE = 2
EXIT_CLAIM_FAILURE = 3
EXIT_BUDGET_STRICT = 4


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # argparse defaults to status 2; usage errors are 1 here
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(EXIT_USAGE)


def _default_jobs() -> int:
    raw = os.environ.get("CZI_JOBS", "1")
    try:
        return max(1, int(raw))
    except ValueError:
        return 1


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="czi", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    p_compute = sub.add_parser(
        "compute", help="classical and chromatic Zagreb indices for one graph"
    )
    src = p_compute.add_argument_group("input (exactly one)")
    src.add_argument("--input", metavar="FILE",
                     help="graph file; format by extension: .g6, .col, .txt")
    src.add_argument("--family", metavar="SPEC",
                     help="family spec, e.g. complete:4 or thorn(path:4;2)")
    p_compute.add_argument("--semantics", choices=("all", "permutation"), default="all")
    p_compute.add_argument("--paper-compat", choices=("on", "off"), default="off",
                           help="report the conventional order-1 defaults (default off)")
    p_compute.add_argument("--witness", action="store_true",
                           help="include witness colorings in JSON output")
    p_compute.add_argument("--format", choices=("json", "csv"), default="json")
    p_compute.add_argument("--out", metavar="PATH", help="write output here instead of stdout")
    p_compute.add_argument("--budget-order", type=int, default=Budget.max_order,
                           help="order cap for full enumeration")
    p_compute.add_argument("--budget-colorings", type=int, default=Budget.max_colorings,
                           help="coloring-count cap for full enumeration")
    p_compute.add_argument("--strict", action="store_true",
                           help="exit 4 when results fall back to bounds")

    p_family = sub.add_parser(
        "family", help="closed-form family values, with an enumeration column when cheap"
    )
    p_family.add_argument("spec", metavar="SPEC",
                          help="complete:n, tree:n, multipartite:sizes, "
                               "equal-multipartite:n,r, complete-bipartite:a,b, "
                               "thorn(base;m)")
    p_family.add_argument("--variant", choices=("as_printed", "corrected", "both"),
                          default="both")
    p_family.add_argument("--format", choices=("table", "json", "csv"), default="table")
    p_family.add_argument("--oracle-max-order", type=int, default=9,
                          help="enumerate the instance when its order is at most this")
    p_family.add_argument("--out", metavar="PATH")

    p_stab = sub.add_parser("stability", help="chromatic stability verdict and number")
    p_stab.add_argument("--input", metavar="FILE")
    p_stab.add_argument("--family", metavar="SPEC")
    p_stab.add_argument("--rho-budget", type=int, default=9,
                        help="order cap for the brute-force stability number")
    p_stab.add_argument("--format", choices=("line", "json"), default="line")
    p_stab.add_argument("--out", metavar="PATH", help="also write the JSON report here")

    ids = claim_ids()
    id_lines = [", ".join(ids[i:i + 5]) for i in range(0, len(ids), 5)]
    p_verify = sub.add_parser(
        "verify",
        help="run the claim registry over seeded corpora and write a report",
        epilog="claim ids:\n  " + "\n  ".join(id_lines),
        formatter_class=argparse.RawDescriptionHelpFormatter,
    )
    p_verify.add_argument("--max-order", type=int, default=8)
    p_verify.add_argument("--seed", type=int, default=0)
    p_verify.add_argument("--claims", default="all",
                          help="comma list of ids, prefixes, or ranges like obs-i..obs-xii")
    p_verify.add_argument("--out", metavar="PATH",
                          help="write the JSON report here (default: stdout)")
    p_verify.add_argument("--format", choices=("json", "csv"), default="json")
    p_verify.add_argument("--jobs", type=int, default=_default_jobs(),
                          help="worker cap for claim execution (env CZI_JOBS)")
    p_verify.add_argument("--strict", action="store_true",
                          help="exit 4 when any instance was skipped for budget")
    p_verify.add_argument("--random-graphs", type=int, default=200)
    p_verify.add_argument("--random-trees", type=int, default=100)
    p_verify.add_argument("--samples", type=int, default=2,
                          help="random instances per order in the monotonicity suites")
    p_verify.add_argument("--tree-max-order", type=int, default=10)
    return parser


def _emit(text: str, out_path: str | None) -> None:
    if out_path:
        with open(out_path, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _load_one_graph(args, parser: argparse.ArgumentParser) -> tuple[Graph, str]:
    if bool(args.input) == bool(args.family):
        parser.error("exactly one of --input and --family is required")
    if args.input:
        try:
            return load_graph(args.input), args.input
        except OSError as exc:
            raise GraphParseError(f"cannot read {args.input}: {exc}") from None
    spec = parse_family_spec(args.family)
    return generate(spec), spec.label()


def _cmd_compute(args, parser) -> int:
    g, label = _load_one_graph(args, parser)
    budget = Budget(max_order=args.budget_order, max_colorings=args.budget_colorings)
    report = full_report(
        g,
        semantics=args.semantics,
        paper_compat=(args.paper_compat == "on"),
        budget=budget,
        label=label,
    )
    if args.format == "csv":
        text = IndexReport.csv_header() + "\n" + report.to_csv_row() + "\n"
    else:
        text = json.dumps(report.to_json_dict(include_witnesses=args.witness),
                          indent=2, sort_keys=True) + "\n"
    _emit(text, args.out)
    if args.strict and report.status != "exact":
        return EXIT_BUDGET_STRICT
    return EXIT_OK


_FAMILY_FIELDS = ("cm1_min", "cm1_max", "cm2_min", "cm2_max", "cm3_min", "cm3_max")


def _family_records(spec_text: str, variants: list[str], oracle_max: int) -> list[dict]:
    """One record per variant: IndexReport-shaped fields plus formula_variant."""
    s = spec_text.strip()
    kind, _, params = s.partition(":")
    records = []
    if s.startswith("thorn("):
        spec = parse_family_spec(s)
        base_graph = generate(spec.base)
        base_report = full_report(base_graph)
        data = thorn_base_data(base_graph, base_report)
        if len(spec.sizes) != 1:
            raise FamilySpecError("closed thorn forms need a uniform pendant count")
        forms = fam.thorn_forms(data, spec.sizes[0])
        for variant in variants:
            records.append({
                "label": spec.label(), "formula_variant": variant,
                "order": spec.order(), "size": None, "m1": None, "m2": None, "m3": None,
                **{f: getattr(forms, f) for f in _FAMILY_FIELDS},
            })
        instance = spec
    elif kind == "tree":
        n = int(params)
        forms = fam.tree_forms(n)
        for variant in variants:
            records.append({
                "label": s, "formula_variant": variant,
                "order": n, "size": n - 1, "m1": None, "m2": None, "m3": None,
                "cm1_min": forms.cm1_lo, "cm1_max": forms.cm1_hi,
                "cm2_min": forms.cm2, "cm2_max": forms.cm2,
                "cm3_min": forms.cm3, "cm3_max": forms.cm3,
            })
        instance = None  # bounds over every tree of this order, nothing to enumerate
    elif kind == "complete":
        n = int(params)
        forms = fam.complete_graph_forms(n)
        for variant in variants:
            records.append({
                "label": s, "formula_variant": variant,
                "order": n, "size": n * (n - 1) // 2,
                "m1": forms.m1, "m2": forms.m2, "m3": forms.m3,
                "cm1_min": forms.cm1, "cm1_max": forms.cm1,
                "cm2_min": forms.cm2, "cm2_max": forms.cm2,
                "cm3_min": forms.cm3, "cm3_max": forms.cm3,
            })
        instance = parse_family_spec(s)
    elif kind == "equal-multipartite":
        spec = parse_family_spec(s)
        n, r = spec.sizes[0], len(spec.sizes)
        forms = fam.equal_multipartite_forms(n, r)
        for variant in variants:
            cm3 = forms.cm3_printed if variant == "as_printed" else forms.cm3_pairsum
            records.append({
                "label": s, "formula_variant": variant,
                "order": n * r, "size": None, "m1": None, "m2": None, "m3": None,
                "cm1_min": forms.cm1, "cm1_max": forms.cm1,
                "cm2_min": forms.cm2, "cm2_max": forms.cm2,
                "cm3_min": cm3, "cm3_max": cm3,
            })
        instance = spec
    elif kind in ("multipartite", "complete-bipartite", "complete_multipartite"):
        spec = parse_family_spec(s if kind != "complete_multipartite"
                                 else "multipartite:" + params)
        for variant in variants:
            forms = fam.multipartite_forms(spec.sizes, variant)
            records.append({
                "label": spec.label(), "formula_variant": variant,
                "order": spec.order(), "size": None, "m1": None, "m2": None, "m3": None,
                "cm1_min": forms.cm1_min, "cm1_max": forms.cm1_max,
                "cm2_min": forms.cm2_min, "cm2_max": forms.cm2_max,
                "cm3_min": forms.cm3, "cm3_max": forms.cm3,
            })
        instance = spec
    else:
        raise FamilySpecError(
            f"no closed forms for kind {kind!r}; supported: complete, tree, "
            "multipartite, complete-bipartite, equal-multipartite, thorn(base;m)"
        )
    oracle = None
    if instance is not None and instance.order() <= oracle_max:
        g = generate(instance)
        rep = full_report(g)
        oracle = {f: getattr(rep, f) for f in _FAMILY_FIELDS}
        oracle.update({"m1": rep.m1, "m2": rep.m2, "m3": rep.m3, "size": rep.size})
    for rec in records:
        rec["oracle"] = oracle
    return records


def _family_table(records: list[dict]) -> str:
    lines = [f"family: {records[0]['label']}   order: {records[0]['order']}"]
    oracle = records[0]["oracle"]
    header = ["field"] + [r["formula_variant"] for r in records]
    header.append("enumeration" if oracle else "enumeration (n/a)")
    rows = [header]
    for f in _FAMILY_FIELDS:
        row = [f] + [str(r[f]) for r in records]
        row.append(str(oracle[f]) if oracle else "-")
        rows.append(row)
    widths = [max(len(r[i]) for r in rows) for i in range(len(header))]
    for r in rows:
        lines.append("  ".join(cell.ljust(w) for cell, w in zip(r, widths)))
    return "\n".join(lines) + "\n"


def _cmd_family(args, parser) -> int:
    variants = ["as_printed", "corrected"] if args.variant == "both" else [args.variant]
    records = _family_records(args.spec, variants, args.oracle_max_order)
    if args.format == "json":
        text = json.dumps(records, indent=2, sort_keys=True) + "\n"
    elif args.format == "csv":
        cols = ["label", "formula_variant", "order"] + list(_FAMILY_FIELDS)
        lines = [",".join(cols + [f"oracle_{f}" for f in _FAMILY_FIELDS])]
        for r in records:
            row = [str(r[c]) for c in cols]
            row += [str(r["oracle"][f]) if r["oracle"] else "" for f in _FAMILY_FIELDS]
            lines.append(",".join(row))
        text = "\n".join(lines) + "\n"
    else:
        text = _family_table(records)
    _emit(text, args.out)
    return EXIT_OK


def _cmd_stability(args, parser) -> int:
    g, label = _load_one_graph(args, parser)
    report = stability_report(g, rho_order_budget=args.rho_budget, label=label)
    json_text = json.dumps(report.to_json_dict(), indent=2, sort_keys=True) + "\n"
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(json_text)
    if args.format == "json":
        sys.stdout.write(json_text)
    else:
        print(f"{label}: {report.verdict_line()}")
    return EXIT_OK


def _cmd_verify(args, parser) -> int:
    config = CorpusConfig(
        max_order=args.max_order,
        seed=args.seed,
        random_graph_count=args.random_graphs,
        random_tree_count=args.random_trees,
        monotonicity_samples=args.samples,
        tree_max_order=args.tree_max_order,
    )
    try:
        results = run_claims(config, args.claims, jobs=max(1, args.jobs))
    except UnknownClaimError as exc:
        print(f"czi verify: {exc}", file=sys.stderr)
        return EXIT_USAGE
    report = build_report(config, results)
    if args.format == "csv":
        text = report_to_csv(results)
    else:
        text = report_to_json(report)
    summary = report["summary"]
    summary_line = (
        f"verified {summary['verified']}, "
        f"counterexample {summary['counterexample']}, "
        f"skipped {summary['skipped_budget']}"
    )
    if args.out:
        _emit(text, args.out)
        print(summary_line)
    else:
        sys.stdout.write(text)
        print(summary_line, file=sys.stderr)
    if summary["must_hold_failures"]:
        print(
            "must-hold failures: " + ", ".join(summary["must_hold_failures"]),
            file=sys.stderr,
        )
        return EXIT_CLAIM_FAILURE
    if args.strict and summary["skipped_budget"] > 0:
        return EXIT_BUDGET_STRICT
    return EXIT_OK


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if args.command == "compute":
            return _cmd_compute(args, parser)
        if args.command == "family":
            return _cmd_family(args, parser)
        if args.command == "stability":
            return _cmd_stability(args, parser)
        if args.command == "verify":
            return _cmd_verify(args, parser)
    except (GraphParseError, FamilySpecError) as exc:
        print(f"czi: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except ValueError as exc:
        print(f"czi: {exc}", file=sys.stderr)
        return EXIT_USAGE
    raise AssertionError("unreachable")


def entrypoint() -> None:
    raise SystemExit(main())


if __name__ == "__main__":
    raise SystemExit(main())
