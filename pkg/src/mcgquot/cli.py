"""Command-line verifier.

Subcommands:
    order NAME            exact order, simplicity, canonical form, g(K)
    enumerate             simple groups below a bound (--bound N or sp:g)
    pipeline --genus G    the exclusion pipeline at one genus
    flagscan N Q          exhaustive invariant-flag scan over GL_N(GF(Q))
    verify                the full verification battery

Every command accepts --json and prints a report document; all numbers are
serialized as decimal strings (orders exceed native integer ranges).  Text
and JSON modes report the same pass/fail set, and output is byte-identical
across runs for identical inputs.

Exit codes: 0 all checks pass, 1 verification failure, 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import __version__, catalog, flags, pipeline
from .catalog import GroupId, GroupParseError, format_group_name, parse_group_name
from .enumeration import BoundTooLarge, ENUMERATION_BOUND_LIMIT, enumerate_simple_below, g_of
from .ff import field_of_size, get_field

SCHEMA_VERSION = "1"

USAGE_ERROR = 2


def _dec(value):
    """Serialize numbers as decimal strings, recursing through containers."""
    if isinstance(value, bool):
        return value
    if isinstance(value, int):
        return str(value)
    if isinstance(value, (list, tuple)):
        return [_dec(v) for v in value]
    if isinstance(value, dict):
        return {k: _dec(v) for k, v in value.items()}
    if isinstance(value, GroupId):
        return format_group_name(value)
    return value


def _check(check_id: str, ok: bool | None, detail: str = "", witnesses=None, citation: str = ""):
    status = "info" if ok is None else ("pass" if ok else "fail")
    out = {"id": check_id, "status": status, "detail": detail}
    if witnesses:
        out["witnesses"] = _dec(witnesses)
    if citation:
        out["citation"] = citation
    return out


def _document(command: str, checks: list, data: dict | None = None) -> dict:
    status = "fail" if any(c["status"] == "fail" for c in checks) else "pass"
    return {
        "command": command,
        "version": __version__,
        "schema_version": SCHEMA_VERSION,
        "status": status,
        "checks": checks,
        "data": _dec(data or {}),
    }


def _emit(doc: dict, as_json: bool) -> int:
    if as_json:
        print(json.dumps(doc, indent=2))
    else:
        print(f"# {doc['command']} (mcgquot {doc['version']})")
        for check in doc["checks"]:
            line = f"[{check['status'].upper():4}] {check['id']}"
            if check.get("detail"):
                line += f": {check['detail']}"
            print(line)
        for key, value in doc["data"].items():
            if isinstance(value, list):
                print(f"{key}:")
                for item in value:
                    print(f"  {item}")
            else:
                print(f"{key}: {value}")
        print(f"result: {doc['status'].upper()}")
    return 0 if doc["status"] == "pass" else 1


# ---------------------------------------------------------------------------
# subcommands

def _cmd_order(args) -> int:
    gid = parse_group_name(args.name)
    canonical = catalog.canonicalize(gid)
    data = {
        "group": format_group_name(gid),
        "canonical": format_group_name(canonical),
        "order": catalog.order(gid),
        "simple": catalog.is_simple(gid),
        "g_of": g_of(gid),
    }
    checks = [_check("order-computed", True, f"|{format_group_name(gid)}| = {catalog.order(gid)}")]
    return _emit(_document(f"order {args.name}", checks, data), args.json)


def _parse_bound(text: str) -> int:
    if text.startswith("sp:"):
        return catalog.sp_order(int(text[3:]))
    return int(text)


def _cmd_enumerate(args) -> int:
    bound = _parse_bound(args.bound)
    result = enumerate_simple_below(bound)
    rows = []
    for gid, value in result.groups:
        if gid.kind == "lie":
            if args.max_q and gid.q > args.max_q:
                continue
            if args.max_rank and gid.rank > args.max_rank:
                continue
        rows.append(f"{format_group_name(gid)} ({value})")
    checks = [_check("enumeration-complete", True, f"{len(rows)} groups with order <= {bound}")]
    data = {"bound": bound, "groups": rows}
    return _emit(_document(f"enumerate {args.bound}", checks, data), args.json)


def _verdict_json(v: pipeline.Verdict) -> dict:
    out = {"status": v.status, "witness": _dec(v.witness)}
    if v.citation:
        out["citation"] = v.citation
    if v.factors:
        out["factors"] = [
            {
                "factor": format_group_name(f.factor),
                "genus": str(f.genus),
                "rule": f.rule,
                "witness": _dec(f.witness),
            }
            for f in v.factors
        ]
    return out


def _cmd_pipeline(args) -> int:
    report = pipeline.run_pipeline(args.genus)
    survivors = [format_group_name(s) for s in report.survivors]
    checks = [
        _check(
            "survivor-set",
            survivors == [format_group_name(GroupId.lie("C", args.genus, 2))],
            f"survivors: {', '.join(survivors)}",
        )
    ]
    data = {
        "genus": report.genus,
        "bound": report.bound,
        "survivors": survivors,
        "individuals": [
            {
                "group": format_group_name(gid),
                "order": str(catalog.order(gid)),
                **_verdict_json(verdict),
            }
            for gid, verdict in report.individuals
        ],
        "family_cells": [
            {
                "family": cell.family,
                "rank": str(cell.rank),
                "rule": cell.rule,
                "citation": cell.citation,
                "witness": _dec(cell.witness),
                "min_member": format_group_name(cell.min_member),
                "min_member_order": str(cell.min_member_order),
            }
            for cell in report.cells
        ],
        "family_notes": [
            {
                "family": note.family,
                "rank": "-" if note.rank is None else str(note.rank),
                "rule": note.rule,
                "detail": note.detail,
                "witness": _dec(note.witness),
            }
            for note in report.notes
        ],
    }
    return _emit(_document(f"pipeline genus={args.genus}", checks, data), args.json)


def _cmd_flagscan(args) -> int:
    report = flags.scan_flags(args.n, args.q)
    detail = f"{report.gl_size} matrices scanned, {len(report.violations)} violations"
    checks = [_check("flag-invariance", report.ok, detail)]
    data = {
        "gl_size": report.gl_size,
        "eligible": report.eligible,
        "skipped_large_eigenspace": report.skipped_large_eigenspace,
        "full_group_checks": report.full_group_checks,
        "backend": report.backend,
        "violations": list(report.violations),
    }
    return _emit(_document(f"flagscan {args.n} {args.q}", checks, data), args.json)


# ---------------------------------------------------------------------------
# the verification battery

def _verify_checks(quick: bool) -> list:
    checks = []

    ok = all(
        str(catalog.sp_order(g)) == catalog.SP_TABLE_ROWS[g] for g in range(2, 11)
    )
    checks.append(
        _check(
            "sp-orders-vs-table",
            ok,
            "2^(g^2) prod(2^(2i)-1) reproduces the tabulated |Sp_2g(2)| digits, g=2..10",
        )
    )
    if not ok:  # fail fast: everything downstream keys off these values
        return checks

    try:
        table = catalog.sporadic_table()
        checks.append(
            _check(
                "sporadic-table-integrity",
                len(table) == 26,
                "26 rows, factorizations multiply out to the stated decimal orders",
            )
        )
    except catalog.DataIntegrityError as exc:
        checks.append(_check("sporadic-table-integrity", False, str(exc)))
        return checks

    checks.append(
        _check(
            "sp-order-vs-catalog",
            all(
                catalog.sp_order(g) == catalog.order(GroupId.lie("C", g, 2))
                for g in range(2, 11)
            ),
            "sp_order(g) equals the C_g(2) catalog order, g=2..10",
        )
    )
    checks.append(
        _check(
            "tits-order",
            catalog.order(GroupId.tits()) == catalog.TITS_ORDER
            and 2 * catalog.TITS_ORDER == catalog.order(GroupId.lie("2F4", 4, 2, "universal")),
            f"|Tits| = {catalog.TITS_ORDER} = |2F4(2)| / 2",
        )
    )

    chain_ok = True
    for g in range(3, 13):
        try:
            pipeline.verify_alt_chain(g)
        except pipeline.ChainStepFailed as exc:
            chain_ok = False
            checks.append(_check("alternating-chain", False, f"g={g}: {exc}"))
            break
    if chain_ok:
        checks.append(
            _check(
                "alternating-chain",
                True,
                "exact surrogate chain g=3..12; literal factorial comparisons g=3..8",
            )
        )

    ineq = pipeline.verify_exceptional_inequalities()
    checks.append(
        _check(
            "exceptional-order-support",
            ineq.support_all_ok,
            "every family-level order fact the pipeline consumes holds exactly",
            {p.label: f"{p.lhs_name}={p.lhs} > {p.rhs_name}={p.rhs}" for p in ineq.support_parts},
        )
    )
    stated_bad = [p for p in ineq.stated_parts if not p.ok]
    checks.append(
        _check(
            "exceptional-order-stated-chains",
            None,
            "adjoint-order evaluation of the five stated chains; "
            + (
                "all hold"
                if not stated_bad
                else "note: "
                + "; ".join(
                    f"{p.label} fails ({p.lhs_name}={p.lhs} vs {p.rhs_name}={p.rhs}, {p.version})"
                    for p in stated_bad
                )
                + " -- the simple group 2E6(2) is smaller than Sp_12(2); the pipeline "
                "excludes the 2E6 family by its BN-rank 4 instead"
            ),
            {p.label: p.ok for p in ineq.stated_parts},
        )
    )

    table = catalog.sporadic_table()
    gk_ok = all(
        record.g_k == g_of(GroupId.sporadic(name))
        for name, record in table.items()
        if record.g_k is not None
    )
    checks.append(
        _check("sporadic-gk-column", gk_ok, "tabulated g(K) equals the computed order bracketing")
    )

    for g in range(3, 11):
        report = pipeline.run_pipeline(g)
        expected = (GroupId.lie("C", g, 2),)
        checks.append(
            _check(
                f"pipeline-genus-{g}",
                report.survivors == expected,
                f"survivors: {', '.join(format_group_name(s) for s in report.survivors)}",
            )
        )

    spot = enumerate_simple_below(720)
    expected_720 = (
        GroupId.alternating(5),
        GroupId.lie("A", 1, 7),
        GroupId.alternating(6),
        GroupId.lie("A", 1, 8),
        GroupId.lie("A", 1, 11),
    )
    checks.append(
        _check(
            "enumeration-spot-720",
            spot.ids() == expected_720,
            "groups of order <= 720: " + ", ".join(format_group_name(g) for g in spot.ids()),
        )
    )

    scans = [(3, 2)] if quick else [(3, 2), (3, 3), (4, 2)]
    for n, q in scans:
        report = flags.scan_flags(n, q)
        checks.append(
            _check(
                f"flag-scan-{n}-{q}",
                report.ok,
                f"{report.gl_size} matrices scanned, {len(report.violations)} violations "
                f"({report.eligible} eligible, backend {report.backend})",
            )
        )

    triple = flags.triple_product_scan(get_field(7))
    checks.append(
        _check(
            "triple-product-identity-gf7",
            triple.ok,
            f"{triple.pairs_checked} unit pairs checked, {len(triple.violations)} violations",
        )
    )

    braid_ok = True
    braid_details = []
    for q in (2, 3, 5, 7, 9):
        scan = flags.golden_braid_scan(field_of_size(q))
        braid_ok = braid_ok and scan.matches_sixth_root_equation
        braid_details.append(
            f"GF({q}): pairs at mu={list(scan.mus_with_pairs)}, "
            f"mu^2-mu+1 roots {list(scan.sixth_root_equation_roots)}, "
            f"mu^2-mu-1 roots {list(scan.golden_equation_roots)}"
        )
    checks.append(
        _check(
            "braid-pair-characterization",
            braid_ok,
            "unequal braid pairs occur exactly at the roots of mu^2 - mu + 1; " + "; ".join(braid_details),
        )
    )
    golden_matches = all(
        flags.golden_braid_scan(field_of_size(q)).matches_golden_equation for q in (2, 3, 5, 7, 9)
    )
    checks.append(
        _check(
            "braid-pair-golden-equation",
            None,
            "comparison against mu^2 - mu - 1 = 0: "
            + ("matches" if golden_matches else "does not match (see braid-pair-characterization)"),
        )
    )
    return checks


def _cmd_verify(args) -> int:
    checks = _verify_checks(args.quick)
    return _emit(_document("verify", checks), args.json)


# ---------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="mcgquot",
        description=__doc__,
        formatter_class=argparse.RawDescriptionHelpFormatter,
    )
    parser.add_argument("--version", action="version", version=f"mcgquot {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p_order = sub.add_parser("order", help="order/simplicity/canonical form of one group")
    p_order.add_argument("name", help='group name, e.g. "Sp(6,2)", "A(1,7)", "M11", "Tits"')
    p_order.add_argument("--json", action="store_true")

    p_enum = sub.add_parser("enumerate", help="simple groups below a bound")
    p_enum.add_argument("--bound", required=True, help='decimal bound or "sp:g"')
    p_enum.add_argument("--max-q", type=int, default=0, help="restrict listed field sizes")
    p_enum.add_argument("--max-rank", type=int, default=0, help="restrict listed Lie ranks")
    p_enum.add_argument("--json", action="store_true")

    p_pipe = sub.add_parser("pipeline", help="run the exclusion pipeline at one genus")
    p_pipe.add_argument("--genus", type=int, required=True)
    p_pipe.add_argument("--json", action="store_true")

    p_scan = sub.add_parser("flagscan", help="exhaustive flag scan over GL_n(GF(q))")
    p_scan.add_argument("n", type=int)
    p_scan.add_argument("q", type=int)
    p_scan.add_argument("--json", action="store_true")

    p_verify = sub.add_parser("verify", help="full verification battery")
    p_verify.add_argument("--json", action="store_true")
    p_verify.add_argument(
        "--quick", action="store_true", help="skip the two larger flag scans (dev shortcut)"
    )
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if args.command == "order":
            return _cmd_order(args)
        if args.command == "enumerate":
            return _cmd_enumerate(args)
        if args.command == "pipeline":
            return _cmd_pipeline(args)
        if args.command == "flagscan":
            return _cmd_flagscan(args)
        if args.command == "verify":
            return _cmd_verify(args)
    except GroupParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE_ERROR
    except (BoundTooLarge, ValueError) as exc:
        if isinstance(exc, BoundTooLarge):
            print(
                f"error: {exc} (supported: 60 <= bound <= {ENUMERATION_BOUND_LIMIT})",
                file=sys.stderr,
            )
        else:
            print(f"error: {exc}", file=sys.stderr)
        return USAGE_ERROR
    raise AssertionError("unreachable")  # pragma: no cover


if __name__ == "__main__":
    sys.exit(main())
