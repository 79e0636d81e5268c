"""Command-line front end.

Exit codes: 0 success/agreement, 1 a sweep found what should not exist
(disagreement or a non-abelian CSA group), 2 usage/validation error,
3 resource cap exceeded (partial or no report).
"""

from __future__ import annotations

import argparse
import json
import sys

from .decomp import classify, label_to_json
from .lattice import all_subgroups, lattice_to_dot
from .limits import effective_cap
from .specs import SpecParseError, build_group, canonical_spec, parse_spec, spec_order
from .verify import run_csa_check, run_survey, run_verification

EXIT_OK = 0
EXIT_FOUND = 1
EXIT_USAGE = 2
EXIT_CAP = 3


def _parse_families(raw: str | None) -> tuple[str, ...] | None:
    if raw is None:
        return None
    return tuple(f.strip() for f in raw.split(",") if f.strip())


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="indecomp",
        description="Classify and verify finite groups whose subgroups are all "
        "direct-product-indecomposable.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_classify = sub.add_parser("classify", help="classify one group spec")
    p_classify.add_argument("spec", help='group spec, e.g. "Q(4)" or "PQ(5,1,2,2,2)"')
    p_classify.add_argument("--json", action="store_true")

    p_verify = sub.add_parser(
        "verify", help="sweep the corpus, comparing classifier and brute-force oracle"
    )
    p_verify.add_argument("--max-order", type=int, required=True)
    p_verify.add_argument("--families", type=str, default=None)
    p_verify.add_argument("--json", action="store_true")

    p_survey = sub.add_parser("survey", help="subgroup lattice statistics for one group")
    p_survey.add_argument("spec")
    p_survey.add_argument("--dot", type=str, default=None, metavar="PATH")
    p_survey.add_argument("--json", action="store_true")

    p_csa = sub.add_parser("csa-check", help="sweep the corpus for CSA groups")
    p_csa.add_argument("--max-order", type=int, required=True)
    p_csa.add_argument("--families", type=str, default=None)
    p_csa.add_argument("--json", action="store_true")

    return parser


def _cmd_classify(args) -> int:
    try:
        node = parse_spec(args.spec)
        group = build_group(node)
    except SpecParseError as exc:
        print(f"indecomp classify: bad spec: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ValueError as exc:
        print(f"indecomp classify: {exc}", file=sys.stderr)
        return EXIT_USAGE
    label = classify(group)
    spec = canonical_spec(node)
    if args.json:
        payload = {
            "report_version": 1,
            "spec": spec,
            "order": group.order,
            "classification": label_to_json(label),
        }
        print(json.dumps(payload, indent=2, sort_keys=True))
    else:
        print(f"{spec} (order {group.order}) -> {label.describe()}")
    return EXIT_OK


def _cmd_verify(args) -> int:
    if args.max_order < 1:
        print("indecomp verify: --max-order must be positive", file=sys.stderr)
        return EXIT_USAGE
    families = _parse_families(args.families)
    cap = effective_cap()
    effective = min(args.max_order, cap)
    partial = args.max_order > cap
    try:
        report = run_verification(effective, families)
    except ValueError as exc:
        print(f"indecomp verify: {exc}", file=sys.stderr)
        return EXIT_USAGE
    report.partial = partial
    if args.json:
        print(json.dumps(report.to_json_dict(), indent=2, sort_keys=True))
    else:
        print(report.render_text())
    if partial:
        return EXIT_CAP
    return EXIT_OK if not report.disagreements else EXIT_FOUND


def _cmd_survey(args) -> int:
    try:
        node = parse_spec(args.spec)
    except SpecParseError as exc:
        print(f"indecomp survey: bad spec: {exc}", file=sys.stderr)
        return EXIT_USAGE
    cap = effective_cap()
    if spec_order(node) > cap:
        print(
            f"indecomp survey: order {spec_order(node)} exceeds the cap of {cap}",
            file=sys.stderr,
        )
        return EXIT_CAP
    try:
        group = build_group(node)
    except ValueError as exc:
        print(f"indecomp survey: {exc}", file=sys.stderr)
        return EXIT_USAGE
    spec = canonical_spec(node)
    report = run_survey(group, spec)
    if args.dot:
        with open(args.dot, "w", encoding="utf-8") as fh:
            fh.write(lattice_to_dot(all_subgroups(group)))
    if args.json:
        print(json.dumps(report.to_json_dict(), indent=2, sort_keys=True))
    else:
        print(report.render_text())
    return EXIT_OK


def _cmd_csa_check(args) -> int:
    if args.max_order < 1:
        print("indecomp csa-check: --max-order must be positive", file=sys.stderr)
        return EXIT_USAGE
    families = _parse_families(args.families)
    cap = effective_cap()
    effective = min(args.max_order, cap)
    partial = args.max_order > cap
    try:
        report = run_csa_check(effective, families)
    except ValueError as exc:
        print(f"indecomp csa-check: {exc}", file=sys.stderr)
        return EXIT_USAGE
    report.partial = partial
    if args.json:
        print(json.dumps(report.to_json_dict(), indent=2, sort_keys=True))
    else:
        print(report.render_text())
    if partial:
        return EXIT_CAP
    return EXIT_OK if not report.non_abelian_csa else EXIT_FOUND


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code not in (0, None) else EXIT_OK
    handlers = {
        "classify": _cmd_classify,
        "verify": _cmd_verify,
        "survey": _cmd_survey,
        "csa-check": _cmd_csa_check,
    }
    return handlers[args.command](args)


def entrypoint() -> None:
    raise SystemExit(main())


if __name__ == "__main__":
    entrypoint()
