"""Command-line driver: series computation, identity verification, oracle
comparison, and count tables, with machine-readable output.

Exit codes: 0 = success / all checks pass, 1 = verification mismatch,
2 = usage error.
"""

from __future__ import annotations

import argparse
import csv
import json
import sys

from .rings import LaurentPoly, affine_class, projective_class
from .series import TruncatedSeries
from .quiver import Quiver, nakajima_motive_series, nilpotent_motive_series, verify_heine
from .plethystic import verify_power_axioms
from . import oracle, quot, specialize

SERIES_FORMAT = "quotmotives.series/1"
CSV_FORMAT = "quotmotives.csv/1"

NAMED_SPACES = {
    "point": LaurentPoly.one(),
    "A1": affine_class(1),
    "A2": affine_class(2),
    "P1": projective_class(1),
    "P2": projective_class(2),
}


def _parse_space(text: str) -> LaurentPoly:
    if text in NAMED_SPACES:
        return NAMED_SPACES[text]
    try:
        return LaurentPoly.from_json_obj(json.loads(text))
    except (json.JSONDecodeError, KeyError, TypeError, ValueError):
        raise ValueError(
            f"unknown space {text!r}: use one of {sorted(NAMED_SPACES)} or a JSON "
            'object like {"terms": [[0, "1"], [1, "1"]]}')


def _emit_series(s: TruncatedSeries, out) -> None:
    s = s.map_coefficients(
        lambda c: c if isinstance(c, LaurentPoly) else LaurentPoly({0: c}))
    obj = {"format": SERIES_FORMAT} | s.to_json_obj()
    json.dump(obj, out, indent=2)
    out.write("\n")


def _cmd_series(args) -> int:
    order = args.order
    if args.target == "punctual":
        s = quot.punctual_quot_series(args.rank, args.dim, order)
    elif args.target == "quot":
        s = quot.quot_series(_parse_space(args.space), args.dim, args.rank, order)
    elif args.target == "nakajima-M":
        s = quot.nakajima_framed_series(args.rank, order)
    elif args.target == "nakajima-L":
        s = quot.punctual_quot_series(args.rank, 2, order)
    else:  # nakajima-general
        with open(args.quiver) as fh:
            quiver = Quiver.from_json_obj(json.load(fh))
        w = tuple(int(x) for x in args.framing.split(","))
        fn = nilpotent_motive_series if args.nilpotent else nakajima_motive_series
        s = fn(quiver, w, order)
    _emit_series(s, sys.stdout)
    return 0


def _cmd_verify(args) -> int:
    name = args.identity
    if name == "heine":
        report = verify_heine(args.order)
    elif name == "product-vs-exp":
        report = quot.verify_product_vs_exp(args.rank, args.order)
    elif name == "class1-vs-closed":
        report = quot.verify_class1_closed(args.rank, args.order)
    elif name == "duality":
        report = quot.verify_duality(args.rank, args.nmax)
    elif name == "zeta-curve":
        report = specialize.verify_zeta_product_curve(
            _parse_space(args.space), args.rank, args.q, args.order)
    elif name == "zeta-surface":
        report = specialize.verify_zeta_product_surface(
            _parse_space(args.space), args.rank, args.q, args.order)
    else:  # power-axioms
        report = verify_power_axioms(samples=args.samples, order=args.order)
    print(report)
    return 0 if report.passed else 1


def _formula_count(n: int, r: int, q: int, d: int, punctual: bool) -> int:
    if punctual:
        s = quot.punctual_quot_series(r, d, n)
    else:
        s = quot.quot_series(affine_class(d), d, r, n)
    return specialize.point_count_series(s, q)[n]


def _cmd_oracle(args) -> int:
    raw = oracle.raw_stable_count(args.n, args.rank, args.q, args.dim, args.punctual)
    g = oracle.gl_order(args.n, args.q)
    count = raw // g
    formula = _formula_count(args.n, args.rank, args.q, args.dim, args.punctual)
    ok = raw % g == 0 and count == formula
    writer = csv.writer(sys.stdout)
    writer.writerow(["format", "n", "r", "q", "dim", "punctual",
                     "raw_stable_count", "gl_order", "count", "formula", "status"])
    writer.writerow([CSV_FORMAT, args.n, args.rank, args.q, args.dim,
                     int(args.punctual), raw, g, count, formula,
                     "pass" if ok else "FAIL"])
    return 0 if ok else 1


def _cmd_counts(args) -> int:
    space = _parse_space(args.space)
    s = quot.quot_series(space, args.dim, args.rank, args.order)
    counts = specialize.point_count_series(s, args.q)
    writer = csv.writer(sys.stdout)
    writer.writerow(["format", "n", "count"])
    for n, c in enumerate(counts):
        writer.writerow([CSV_FORMAT, n, c])
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="quotmotives",
        description="Exact motive series of Quot schemes and quiver varieties")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("series", help="emit a generating series as JSON")
    p.add_argument("--target", required=True,
                   choices=["punctual", "quot", "nakajima-M", "nakajima-L",
                            "nakajima-general"])
    p.add_argument("--rank", type=int, default=1)
    p.add_argument("--dim", type=int, default=2, choices=[1, 2])
    p.add_argument("--order", type=int, required=True)
    p.add_argument("--space", default="point",
                   help="named space (point, A1, A2, P1, P2) or JSON terms")
    p.add_argument("--quiver", help="path to a quiver JSON file "
                                    '({"vertices": k, "arrows": [[s, t], ...]})')
    p.add_argument("--framing", help="comma-separated framing vector, one entry "
                                     "per vertex")
    p.add_argument("--nilpotent", action="store_true",
                   help="emit the nilpotent (central-fiber) series instead")
    p.set_defaults(fn=_cmd_series)

    p = sub.add_parser("verify", help="run an identity check")
    p.add_argument("identity",
                   choices=["heine", "product-vs-exp", "class1-vs-closed",
                            "duality", "zeta-curve", "zeta-surface",
                            "power-axioms"])
    p.add_argument("--order", type=int, default=8)
    p.add_argument("--rank", type=int, default=1)
    p.add_argument("--nmax", type=int, default=4)
    p.add_argument("--q", type=int, default=2)
    p.add_argument("--space", default="P1")
    p.add_argument("--samples", type=int, default=50)
    p.set_defaults(fn=_cmd_verify)

    p = sub.add_parser("oracle", help="compare a brute-force count with the formula")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--rank", type=int, required=True)
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--dim", type=int, required=True, choices=[1, 2])
    p.add_argument("--punctual", action="store_true")
    p.set_defaults(fn=_cmd_oracle)

    p = sub.add_parser("counts", help="emit a point-count table as CSV")
    p.add_argument("--space", required=True)
    p.add_argument("--rank", type=int, default=1)
    p.add_argument("--dim", type=int, default=2, choices=[1, 2])
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--order", type=int, required=True)
    p.set_defaults(fn=_cmd_counts)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command == "series" and args.target == "nakajima-general":
        if not args.quiver or not args.framing:
            parser.error("nakajima-general needs --quiver and --framing")
    try:
        return args.fn(args)
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def console_main() -> None:
    sys.exit(main())


if __name__ == "__main__":
    console_main()
