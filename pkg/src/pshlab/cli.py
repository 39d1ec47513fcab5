"""Batch front end: analyze arrangements, render reports, run the checks.

Exit codes: 0 all requested checks pass, 1 a mathematical claim failed,
2 usage or IO error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from datetime import datetime, timezone
from pathlib import Path

import numpy as np

from . import __version__
from .arrangement import (
    ArrangementError,
    WeightedArrangement,
    lct,
    load_arrangement,
    preset,
)
from .bergman import (
    QuadratureSpec,
    curve_scan,
    diagonal_curve,
    gram_matrix,
    lelong_estimate,
    ray_curve,
)
from .multiplier_ideal import generator_strings, generators
from .sequence import (
    check_subsequence,
    entry,
    monotonicity_report,
    resolve_claims,
    verify_paper,
)
from .singularity import compare, lelong


class UsageError(Exception):
    """Bad flags or unusable input files (exit code 2)."""


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="pshlab",
        description=(
            "Multiplier ideals, singularity classes and approximation-"
            "sequence monotonicity for weighted line arrangements in C^2."
        ),
    )
    parser.add_argument("--version", action="version",
                        version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_source(p: argparse.ArgumentParser) -> None:
        p.add_argument("--preset", default=None,
                       help="built-in arrangement: theorem1, smooth, point")
        p.add_argument("--file", default=None, metavar="JSON",
                       help="arrangement file (see README for the schema)")

    def add_output(p: argparse.ArgumentParser) -> None:
        p.add_argument("--format", choices=["json", "csv", "md"],
                       default="json")
        p.add_argument("--output", default=None, metavar="PATH",
                       help="write the report here instead of stdout")
        p.add_argument("--no-timestamp", action="store_true",
                       help="omit the generated_at field from JSON reports")

    p = sub.add_parser("analyze",
                       help="ideal, generators, class and Lelong number per m")
    add_source(p)
    p.add_argument("--m", type=int, nargs="+", default=None)
    p.add_argument("--m-max", type=int, default=None)
    add_output(p)

    p = sub.add_parser("sequence",
                       help="monotonicity report for m = 1..m_max or a subsequence")
    add_source(p)
    p.add_argument("--m-max", type=int, default=12)
    p.add_argument("--indices", default=None,
                   help="pow2 | 3k+2 | comma list, checked as a subsequence")
    p.add_argument("--k-max", type=int, default=10,
                   help="range of k for pow2 / 3k+2 index families")
    add_output(p)

    p = sub.add_parser("compare",
                       help="compare the classes of two sequence entries")
    add_source(p)
    p.add_argument("--m1", type=int, required=True)
    p.add_argument("--m2", type=int, required=True)
    add_output(p)

    p = sub.add_parser("lct", help="log canonical threshold")
    add_source(p)
    add_output(p)

    p = sub.add_parser("verify-paper",
                       help="run the reproduction claim registry")
    p.add_argument("--claims", nargs="+", default=None,
                   help="claim ids or aliases; default runs all")
    add_output(p)

    p = sub.add_parser("bergman",
                       help="numeric kernel reports: gram audit, ray slopes, scans")
    add_source(p)
    p.add_argument("--m", type=int, default=None,
                   help="single index: ray-slope estimate (with --rays)")
    p.add_argument("--m1", type=int, default=None)
    p.add_argument("--m2", type=int, default=None)
    p.add_argument("--curve", default="x=y",
                   help='"x=y" or "dir:re,im,re,im" for a fixed ray')
    p.add_argument("--tmin", type=float, default=1e-3)
    p.add_argument("--tmax", type=float, default=1e-1)
    p.add_argument("--points", type=int, default=25)
    p.add_argument("--samples", type=int, default=100_000)
    p.add_argument("--seed", type=int, default=42)
    p.add_argument("--max-degree", type=int, default=12)
    p.add_argument("--radius", type=float, default=1.0)
    p.add_argument("--rays", type=int, default=8)
    p.add_argument("--slope-tol", type=float, default=0.02,
                   help="|slope| below this counts as flat")
    p.add_argument("--audit-gram", action="store_true",
                   help="dump the full Gram estimate (JSON only)")
    add_output(p)

    return parser


def _resolve_arrangement(args) -> WeightedArrangement:
    if getattr(args, "preset", None) and getattr(args, "file", None):
        raise UsageError("use either --preset or --file, not both")
    if getattr(args, "file", None):
        try:
            return load_arrangement(args.file)
        except ArrangementError as exc:
            raise UsageError(str(exc)) from exc
    name = getattr(args, "preset", None) or "theorem1"
    try:
        return preset(name)
    except ArrangementError as exc:
        raise UsageError(str(exc)) from exc


def _emit(args, payload: dict, csv_rows: list[list] | None,
          markdown: str | None) -> None:
    if args.format == "json":
        if not args.no_timestamp:
            payload = dict(payload)
            payload["generated_at"] = datetime.now(timezone.utc).isoformat()
        text = json.dumps(payload, indent=2, sort_keys=True) + "\n"
    elif args.format == "csv":
        if csv_rows is None:
            raise UsageError(f"command {args.command} has no CSV form")
        buffer = io.StringIO()
        writer = csv.writer(buffer, lineterminator="\n")
        writer.writerows(csv_rows)
        text = buffer.getvalue()
    else:
        if markdown is None:
            raise UsageError(f"command {args.command} has no markdown form")
        text = markdown + "\n"
    if args.output:
        Path(args.output).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)


def _cmd_analyze(args) -> int:
    arr = _resolve_arrangement(args)
    if args.m is not None and args.m_max is not None:
        raise UsageError("use either --m or --m-max")
    if args.m_max is not None:
        ms = list(range(1, args.m_max + 1))
    else:
        ms = args.m if args.m else [1]
    if any(m < 1 for m in ms):
        raise UsageError("approximation indices must be >= 1")
    results = []
    for m in ms:
        ent = entry(arr, m)
        results.append({
            "m": m,
            "ideal": ent.ideal.to_dict(),
            "generators": generator_strings(arr, ent.ideal),
            "generator_terms": [g.to_term_list()
                                for g in generators(arr, ent.ideal)],
            "class": ent.cls.to_dict(),
            "lelong": str(lelong(ent.cls)),
        })
    payload = {
        "command": "analyze",
        "arrangement": arr.describe(),
        "results": results,
    }
    csv_rows = [["m", "b", "p", "gamma", "delta", "nu"]]
    for r in results:
        csv_rows.append([
            r["m"],
            ";".join(str(v) for v in r["ideal"]["b"]),
            r["ideal"]["p"],
            ";".join(r["class"]["gamma"]),
            r["class"]["delta"],
            r["lelong"],
        ])
    md_lines = ["| m | ideal (b; p) | generators | gamma | delta | nu |",
                "|---|--------------|------------|-------|-------|----|"]
    for r in results:
        md_lines.append(
            f"| {r['m']} | {r['ideal']['b']}; {r['ideal']['p']} "
            f"| {', '.join(r['generators'])} "
            f"| ({', '.join(r['class']['gamma'])}) "
            f"| {r['class']['delta']} | {r['lelong']} |"
        )
    _emit(args, payload, csv_rows, "\n".join(md_lines))
    return 0


def _parse_indices(args) -> list[int] | None:
    if args.indices is None:
        return None
    spec = args.indices.strip().lower()
    if spec == "pow2":
        return [2 ** k for k in range(1, args.k_max + 1)]
    if spec in {"3k+2", "3k2"}:
        return [3 * k + 2 for k in range(0, args.k_max + 1)]
    try:
        return [int(v) for v in spec.split(",") if v.strip()]
    except ValueError as exc:
        raise UsageError(f"cannot parse --indices {args.indices!r}") from exc


def _cmd_sequence(args) -> int:
    arr = _resolve_arrangement(args)
    if args.m_max < 2:
        raise UsageError("--m-max must be >= 2")
    indices = _parse_indices(args)
    try:
        report = monotonicity_report(arr, args.m_max, indices)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    payload = {"command": "sequence", **report.to_dict()}
    _emit(args, payload, report.to_csv_rows(), report.to_markdown())
    return 0


def _cmd_compare(args) -> int:
    arr = _resolve_arrangement(args)
    if args.m1 < 1 or args.m2 < 1:
        raise UsageError("indices must be >= 1")
    e1, e2 = entry(arr, args.m1), entry(arr, args.m2)
    result = compare(e1.cls, e2.cls)
    payload = {
        "command": "compare",
        "arrangement": arr.describe(),
        "m1": args.m1,
        "m2": args.m2,
        "class1": e1.cls.to_dict(),
        "class2": e2.cls.to_dict(),
        "comparison": result.to_dict(),
    }
    md = (
        f"phi_{args.m1} vs phi_{args.m2}: {result.relation.value}"
        + (
            "\nwitness: " + "; ".join(str(w) for w in result.witnesses)
            if result.witnesses else ""
        )
    )
    _emit(args, payload, None, md)
    return 0


def _cmd_lct(args) -> int:
    arr = _resolve_arrangement(args)
    try:
        value = lct(arr)
    except ArrangementError as exc:
        raise UsageError(str(exc)) from exc
    payload = {
        "command": "lct",
        "arrangement": arr.describe(),
        "lct": str(value),
    }
    _emit(args, payload, [["lct"], [str(value)]], f"lct = {value}")
    return 0


def _cmd_verify_paper(args) -> int:
    try:
        names = resolve_claims(args.claims)
    except KeyError as exc:
        raise UsageError(str(exc.args[0])) from exc
    report = verify_paper(names)
    payload = {"command": "verify-paper", **report.to_dict()}
    csv_rows = [["claim", "passed"]]
    csv_rows += [[r.claim_id, str(r.passed)] for r in report.results]
    _emit(args, payload, csv_rows, report.to_markdown())
    return 0 if report.all_passed else 1


def _parse_curve(spec: str):
    spec = spec.strip().lower()
    if spec in {"x=y", "diag", "diagonal"}:
        return diagonal_curve, "x=y"
    if spec.startswith("dir:"):
        parts = spec[4:].split(",")
        if len(parts) != 4:
            raise UsageError('ray curve must be "dir:re,im,re,im"')
        try:
            values = [float(v) for v in parts]
        except ValueError as exc:
            raise UsageError(f"cannot parse curve {spec!r}") from exc
        direction = (complex(values[0], values[1]),
                     complex(values[2], values[3]))
        return ray_curve(direction), spec
    raise UsageError(f"unknown curve {spec!r}; use x=y or dir:re,im,re,im")


def _cmd_bergman(args) -> int:
    arr = _resolve_arrangement(args)
    try:
        quad = QuadratureSpec(
            max_degree=args.max_degree,
            sphere_samples=args.samples,
            seed=args.seed,
            radius=args.radius,
        )
    except ValueError as exc:
        raise UsageError(str(exc)) from exc

    scan_mode = args.m1 is not None or args.m2 is not None
    if scan_mode and (args.m1 is None or args.m2 is None):
        raise UsageError("curve scans need both --m1 and --m2")
    if not scan_mode and args.m is None:
        raise UsageError("give --m for slope estimates or --m1/--m2 for a scan")

    if scan_mode:
        if min(args.m1, args.m2) < 1:
            raise UsageError("indices must be >= 1")
        curve, curve_name = _parse_curve(args.curve)
        if not (0 < args.tmin < args.tmax):
            raise UsageError("need 0 < tmin < tmax")
        t = np.geomspace(args.tmin, args.tmax, args.points)
        scan = curve_scan(arr, args.m1, args.m2, curve, t, quad)
        verdict = "UNBOUNDED" if scan.slope < -args.slope_tol else "BOUNDED"
        payload = {
            "command": "bergman-scan",
            "arrangement": arr.describe(),
            "curve": curve_name,
            "seed": args.seed,
            "sphere_samples": args.samples,
            "verdict": verdict,
            **scan.to_dict(),
        }
        csv_rows = [["t", "phi_m1", "phi_m2", "delta"]]
        csv_rows += [[repr(v) for v in row] for row in scan.rows()]
        md = (
            f"Delta = phi_{args.m2} - phi_{args.m1} along {curve_name}: "
            f"slope {scan.slope:+.4f} vs log t -> {verdict}"
        )
        _emit(args, payload, csv_rows, md)
        return 0

    if args.m < 1:
        raise UsageError("--m must be >= 1")
    est = lelong_estimate(arr, args.m, quad, rays=args.rays)
    symbolic = lelong(entry(arr, args.m).cls)
    payload = {
        "command": "bergman-rays",
        "arrangement": arr.describe(),
        "seed": args.seed,
        "sphere_samples": args.samples,
        "symbolic_lelong": str(symbolic),
        **est.to_dict(),
    }
    if args.audit_gram:
        result = gram_matrix(
            arr, args.m, quad.with_max_degree(est.max_degree_used)
        )
        payload["gram"] = result.to_dict()
    csv_rows = [["ray", "slope"]]
    csv_rows += [[i, repr(s)] for i, s in enumerate(est.per_ray)]
    md = (
        f"lelong(phi_{args.m}) ~ {est.value:.4f} over {args.rays} rays "
        f"(symbolic {symbolic})"
    )
    _emit(args, payload, csv_rows, md)
    return 0


_HANDLERS = {
    "analyze": _cmd_analyze,
    "sequence": _cmd_sequence,
    "compare": _cmd_compare,
    "lct": _cmd_lct,
    "verify-paper": _cmd_verify_paper,
    "bergman": _cmd_bergman,
}


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse exits 2 on usage errors and 0 on --help/--version
        return int(exc.code or 0)
    try:
        return _HANDLERS[args.command](args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ArrangementError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
