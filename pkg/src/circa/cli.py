"""Command-line interface: every library operation as a subcommand.

Subcommands
    check           decide one row (or a file of rows) and print the verdict
    det             exact determinant by either or both routes
    conditions      divisor-condition catalog for a size n
    ramanujan-table TSV table of C_d(n) values
    maillet         power-product family: build, decide, verify, residue scan
    table1          decided-parameter tag grid for the power-product family
    zeroone         zero/one circulant scan with the ones-count cross-check

Exit codes: 0 success, 1 invalid input, 2 internal inconsistency (two exact
routes disagreed - must never happen).  The environment variable
CIRCA_THREADS caps the worker count of any parallel scan.  Text output is
for humans; pass --json where available to get stable machine-readable
documents.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from typing import Optional, Sequence

from .circulant import (
    FirstRow,
    det_bareiss,
    det_resultant,
    matrix_csv,
    parse_row,
)
from .conditions import (
    Certificate,
    Verdict,
    decide,
    generate_conditions,
    template_conditions,
    template_deviations,
)
from .errors import InputError, InternalInconsistencyError
from .families import (
    DEFAULT_SEED,
    MailletSpec,
    four_q_plus_one_scan,
    maillet_row,
    render_tag_grid,
    tag_grid,
    verify_permutation_similarity,
    zeroone_scan,
)
from .numtheory import is_prime_power
from .ramanujan import ramanujan_table_tsv

__all__ = ["main"]


class _Parser(argparse.ArgumentParser):
    """argparse variant whose usage errors map to exit code 1."""

    def error(self, message: str):  # noqa: D102 - argparse hook
        raise InputError(message)


def _thread_count(requested: int) -> int:
    """Requested worker count, capped by the CIRCA_THREADS variable."""
    if requested < 1:
        raise InputError(f"thread count must be >= 1, got {requested}")
    cap_text = os.environ.get("CIRCA_THREADS")
    if cap_text is None:
        return requested
    try:
        cap = int(cap_text)
    except ValueError as exc:
        raise InputError(f"CIRCA_THREADS={cap_text!r} is not an integer") from exc
    if cap < 1:
        raise InputError(f"CIRCA_THREADS={cap} must be >= 1")
    return min(requested, cap)


def _verdict_line(cert: Certificate) -> str:
    if cert.verdict is Verdict.SINGULAR:
        return f"SINGULAR witness d={cert.witness_d} det=0"
    if cert.decided_by == "screen":
        return "NONSINGULAR (screen)"
    return f"NONSINGULAR (oracle) det={cert.determinant}"


def _print_certificate_text(cert: Certificate, out) -> None:
    print(f"n = {cert.n}", file=out)
    for d in sorted(cert.screen_values):
        print(f"condition d={d}: {cert.screen_values[d]}", file=out)
    print(_verdict_line(cert), file=out)


def _rows_from_args(args) -> list[FirstRow]:
    if args.row is not None and args.row_file is not None:
        raise InputError("pass either --row or --row-file, not both")
    if args.row is not None:
        return [parse_row(args.row)]
    if args.row_file is not None:
        try:
            with open(args.row_file, "r", encoding="utf-8") as fh:
                lines = [line.strip() for line in fh]
        except OSError as exc:
            raise InputError(f"cannot read row file: {exc}") from exc
        rows = [parse_row(line) for line in lines if line and not line.startswith("#")]
        if not rows:
            raise InputError(f"no rows found in {args.row_file}")
        return rows
    raise InputError("one of --row or --row-file is required")


def _cmd_check(args) -> int:
    rows = _rows_from_args(args)
    certs = [decide(row)[1] for row in rows]
    if args.certificate is not None:
        doc = certs[0].to_json_dict() if len(certs) == 1 else [c.to_json_dict() for c in certs]
        with open(args.certificate, "w", encoding="utf-8") as fh:
            json.dump(doc, fh, indent=2)
            fh.write("\n")
    if args.json:
        doc = certs[0].to_json_dict() if len(certs) == 1 else [c.to_json_dict() for c in certs]
        print(json.dumps(doc, indent=2))
    elif len(certs) == 1:
        _print_certificate_text(certs[0], sys.stdout)
    else:
        for row, cert in zip(rows, certs):
            print(f"{','.join(row.as_strings())}: {_verdict_line(cert)}")
    return 0


def _cmd_det(args) -> int:
    rows = _rows_from_args(args)
    if args.expand_csv is not None and len(rows) != 1:
        raise InputError("--expand-csv needs a single row")
    for row in rows:
        if args.method == "bareiss":
            value = det_bareiss(row)
        elif args.method == "resultant":
            value = det_resultant(row)
        else:
            value = det_bareiss(row)
            other = det_resultant(row)
            if value != other:
                raise InternalInconsistencyError(
                    f"determinant routes disagree on n={row.n}: "
                    f"bareiss={value} resultant={other}"
                )
        prefix = f"{','.join(row.as_strings())}: " if len(rows) > 1 else ""
        print(f"{prefix}det = {value}")
    if args.expand_csv is not None:
        csv_text = matrix_csv(rows[0])
        if args.expand_csv == "-":
            sys.stdout.write(csv_text)
        else:
            with open(args.expand_csv, "w", encoding="utf-8") as fh:
                fh.write(csv_text)
    return 0


def _cmd_conditions(args) -> int:
    if args.n < 1:
        raise InputError(f"need n >= 1, got {args.n}")
    deviations = []
    if args.templates:
        conds = template_conditions(args.n)
        if conds is None:
            raise InputError(f"no template catalog covers n={args.n}")
        deviations = template_deviations(args.n)
        source = "templates"
    else:
        conds = generate_conditions(args.n)
        source = "generic"
    if args.json:
        doc = {
            "n": args.n,
            "source": source,
            "conditions": [
                {"d": c.d, "coefficients": list(c.coeffs)} for c in conds
            ],
            "deviations": [
                {
                    "d": dev.d,
                    "first_difference": dev.first_difference,
                    "printed": list(dev.printed),
                    "corrected": list(dev.corrected),
                    "note": dev.note,
                }
                for dev in deviations
            ],
        }
        print(json.dumps(doc, indent=2))
        return 0
    print(f"n = {args.n} ({source})")
    for cond in conds:
        print(f"d={cond.d}: {','.join(str(c) for c in cond.coeffs)}")
    for dev in deviations:
        print(
            f"# printed-form deviation at d={dev.d}, "
            f"first differing index {dev.first_difference}: {dev.note}"
        )
    return 0


def _cmd_ramanujan_table(args) -> int:
    sys.stdout.write(ramanujan_table_tsv(args.dmax, args.nmax))
    return 0


def _cmd_maillet(args) -> int:
    if args.scan_qmax is not None:
        if args.p is not None or args.m is not None:
            raise InputError("--scan-qmax does not take --p/--m")
        records = four_q_plus_one_scan(args.scan_qmax)
        for rec in records:
            print(
                f"q={rec.q} p={rec.p} r={rec.residue} r%4={rec.residue_mod_4} "
                f"qualifies={'yes' if rec.qualifies else 'no'}"
            )
        qualifying = sum(1 for r in records if r.qualifies)
        rem2 = sum(1 for r in records if r.residue_mod_4 == 2)
        rem3 = sum(1 for r in records if r.residue_mod_4 == 3)
        print(
            f"total pairs: {len(records)}, qualifying (r%4 in {{0,1}}): {qualifying}, "
            f"r%4==2: {rem2}, r%4==3: {rem3}"
        )
        return 0
    if args.p is None or args.m is None:
        raise InputError("matrix mode needs --p and --m (or use --scan-qmax)")
    spec = MailletSpec(args.p, args.m, args.h)
    row = maillet_row(spec)
    print(f"p={spec.p} m={spec.m} h={spec.h}")
    print(f"row: {','.join(row.as_strings())}")
    if args.verify_similarity:
        if not verify_permutation_similarity(spec):
            raise InternalInconsistencyError(
                f"permutation similarity failed for p={spec.p}, m={spec.m}, h={spec.h}"
            )
        print("permutation similarity: verified")
    if args.decide:
        _, cert = decide(row)
        _print_certificate_text(cert, sys.stdout)
    return 0


def _cmd_table1(args) -> int:
    grid = tag_grid(args.pmax, args.mmax)
    sys.stdout.write(render_tag_grid(grid, markdown=args.markdown))
    return 0


def _cmd_zeroone(args) -> int:
    if is_prime_power(args.n) is None:
        raise InputError(f"n={args.n} is not a prime power")
    report = zeroone_scan(
        args.n,
        args.ones,
        samples=args.samples,
        seed=args.seed,
        threads=_thread_count(args.threads),
    )
    predicate = "none" if report.predicate is None else str(report.predicate).lower()
    line = f"n={report.n} ones={report.m} predicate={predicate} mode={report.mode}"
    if report.draws is not None:
        line += f" draws={report.draws}"
    print(line)
    print(f"classes tested: {report.classes_tested}")
    print(f"arrangements covered: {report.arrangements_covered}")
    print(f"singular classes: {len(report.singular_classes)}")
    for positions in report.singular_classes:
        print(f"singular class: {','.join(str(p) for p in positions)}")
    print(f"nonsingular classes: {report.nonsingular_classes}")
    if not report.cross_check_ok:
        raise InternalInconsistencyError(
            f"ones-count criterion asserts nonsingularity for n={report.n}, "
            f"m={report.m}, but the scan found singular arrangements"
        )
    return 0


def _build_parser() -> _Parser:
    parser = _Parser(
        prog="circa",
        description="Exact invertibility certificates for rational circulant matrices.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_row_args(p: _Parser) -> None:
        p.add_argument("--row", help="comma-separated rational entries, e.g. '1,2/3,-5'")
        p.add_argument(
            "--row-file",
            help="file with one row per line (same grammar; '#' lines ignored)",
        )

    p_check = sub.add_parser("check", help="decide invertibility with a certificate")
    add_row_args(p_check)
    p_check.add_argument("--certificate", metavar="PATH", help="write the JSON certificate here")
    p_check.add_argument("--json", action="store_true", help="print the certificate as JSON")
    p_check.set_defaults(func=_cmd_check)

    p_det = sub.add_parser("det", help="exact determinant")
    add_row_args(p_det)
    p_det.add_argument(
        "--method",
        choices=("bareiss", "resultant", "both"),
        default="both",
        help="elimination route, resultant route, or both with cross-check (default)",
    )
    p_det.add_argument(
        "--expand-csv",
        metavar="PATH",
        help="also write the expanded matrix as CSV ('-' for stdout)",
    )
    p_det.set_defaults(func=_cmd_det)

    p_cond = sub.add_parser("conditions", help="divisor-condition catalog for size n")
    p_cond.add_argument("--n", type=int, required=True)
    p_cond.add_argument(
        "--templates",
        action="store_true",
        help="use the hand-expanded templates instead of the generic generator",
    )
    p_cond.add_argument("--json", action="store_true")
    p_cond.set_defaults(func=_cmd_conditions)

    p_tab = sub.add_parser("ramanujan-table", help="TSV of C_d(n) values")
    p_tab.add_argument("--dmax", type=int, required=True)
    p_tab.add_argument("--nmax", type=int, required=True)
    p_tab.set_defaults(func=_cmd_ramanujan_table)

    p_mai = sub.add_parser("maillet", help="power-product family tools")
    p_mai.add_argument("--p", type=int, help="odd prime modulus")
    p_mai.add_argument("--m", type=int, help="entry exponent")
    p_mai.add_argument("--h", type=int, help="generator of Z_p (default: smallest)")
    p_mai.add_argument("--decide", action="store_true", help="decide the circulant row")
    p_mai.add_argument(
        "--verify-similarity",
        action="store_true",
        help="verify the permutation similarity cell by cell",
    )
    p_mai.add_argument(
        "--scan-qmax",
        type=int,
        metavar="Q",
        help="scan primes q <= Q with 4q+1 prime and classify 2^q mod (4q+1)",
    )
    p_mai.set_defaults(func=_cmd_maillet)

    p_t1 = sub.add_parser("table1", help="decided-parameter tag grid")
    p_t1.add_argument("--pmax", type=int, required=True)
    p_t1.add_argument("--mmax", type=int, required=True)
    p_t1.add_argument("--markdown", action="store_true")
    p_t1.set_defaults(func=_cmd_table1)

    p_zo = sub.add_parser("zeroone", help="zero/one circulant scan")
    p_zo.add_argument("--n", type=int, required=True, help="size (must be a prime power)")
    p_zo.add_argument("--ones", type=int, required=True, help="number of ones in the row")
    p_zo.add_argument(
        "--samples",
        type=int,
        help="sample this many arrangements instead of exhausting all of them",
    )
    p_zo.add_argument("--seed", type=int, default=DEFAULT_SEED)
    p_zo.add_argument("--threads", type=int, default=1)
    p_zo.set_defaults(func=_cmd_zeroone)

    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    try:
        args = _build_parser().parse_args(argv)
        return args.func(args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except InternalInconsistencyError as exc:
        print(f"internal inconsistency: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
