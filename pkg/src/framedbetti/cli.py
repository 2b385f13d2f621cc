"""Command-line front end.  Every command renders text, JSON, or CSV."""

import argparse
import csv
import json
import sys

from .graded import GradedDims
from .homology import betti_sym_component, macdonald_sym
from .moduli import betti_report, betti_table, enumerate_components, min_balanced_l, splitting_types
from .partitions import Partition, enumerate_pairs, enumerate_partitions
from .shiftindex import shift_closed, shift_oracle
from .weights import DEFAULT_WEIGHTS, WeightTriple, ext_weight_families

VERIFY_TRIPLES = (WeightTriple(1, 2, 10), WeightTriple(1, 3, 100), WeightTriple(2, 5, 1000))


def _partition_flag(text):
    try:
        return Partition.parse(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc))


def _print_json(obj):
    print(json.dumps(obj, indent=2))


def _csv_writer():
    return csv.writer(sys.stdout, lineterminator="\n")


def _poincare_json(gd):
    return {str(k): v for k, v in gd.as_dict().items()}


def cmd_betti(args):
    if args.format == "json":
        _print_json(betti_report(args.lprime, args.c2, args.l_min, args.l_max))
        return 0
    if args.format == "csv":
        table = betti_table(args.lprime, args.c2, args.l_min, args.l_max)
        w = _csv_writer()
        w.writerow(["degree", "dimension"])
        for deg, dim in table.as_dict().items():
            w.writerow([deg, dim])
        return 0
    report = betti_report(args.lprime, args.c2, args.l_min, args.l_max)
    if args.verbose:
        floor = min_balanced_l(args.lprime)
        for comp in report["components"]:
            poly = GradedDims({int(k): v for k, v in comp["poincare"].items()})
            mark = "  (l below balanced floor)" if comp["l"] < floor else ""
            print(f"l={comp['l']} alpha={_fmt_parts(comp['alpha'])} "
                  f"beta={_fmt_parts(comp['beta'])} shift={comp['shift']} "
                  f"poincare={poly.poly_string()}{mark}")
    total = GradedDims({int(k): v for k, v in report["total"].items()})
    print(total.poly_string())
    return 0


def _fmt_parts(parts):
    return "[" + ",".join(str(p) for p in parts) + "]"


def cmd_verify(args):
    max_c2 = args.max_c2
    l_lo, l_hi = args.l_range
    lp_lo, lp_hi = args.lprime_range
    if max_c2 < 0:
        raise ValueError(f"--max-c2 must be non-negative, got {max_c2}")
    if l_lo > l_hi or lp_lo > lp_hi:
        raise ValueError("empty verification range")
    cases = 0
    pairs = []
    for n in range(max_c2 + 1):
        pairs.extend(enumerate_pairs(n))
    for alpha, beta in pairs:
        for l in range(l_lo, l_hi + 1):
            for lprime in range(lp_lo, lp_hi + 1):
                closed = shift_closed(alpha, beta, l, lprime)
                for triple in VERIFY_TRIPLES:
                    cases += 1
                    oracle = shift_oracle(alpha, beta, l, lprime, triple)
                    if closed != oracle:
                        print(f"MISMATCH shift index: alpha={alpha} beta={beta} "
                              f"l={l} lprime={lprime} "
                              f"W=({triple.w1},{triple.w2},{triple.w3}) "
                              f"closed={closed} oracle={oracle}")
                        return 1
    for n in range(max_c2 + 1):
        for alpha in enumerate_partitions(n):
            cases += 1
            lhs = betti_sym_component(alpha, Partition())
            rhs = GradedDims.unit()
            for _, m in alpha.items():
                rhs = rhs * macdonald_sym(m)
            if lhs != rhs:
                print(f"MISMATCH symmetric product: alpha={alpha} "
                      f"fibration={lhs.poly_string()} series={rhs.poly_string()}")
                return 1
    print(f"OK: 0 mismatches / {cases} cases")
    return 0


def cmd_components(args):
    comps = enumerate_components(args.c2, args.l_min, args.l_max)
    if args.format == "json":
        _print_json({
            "c2": args.c2,
            "l_window": [args.l_min, args.l_max],
            "components": [{"l": c.l, "alpha": c.alpha.parts(), "beta": c.beta.parts()}
                           for c in comps],
        })
    elif args.format == "csv":
        w = _csv_writer()
        w.writerow(["l", "alpha", "beta"])
        for c in comps:
            w.writerow([c.l, str(c.alpha), str(c.beta)])
    else:
        for c in comps:
            print(f"l={c.l} alpha={c.alpha} beta={c.beta}")
    return 0


def cmd_shift_index(args):
    value = shift_closed(args.alpha, args.beta, args.l, args.lprime)
    if args.format == "json":
        _print_json({"alpha": args.alpha.parts(), "beta": args.beta.parts(),
                     "l": args.l, "lprime": args.lprime, "shift": value})
    elif args.format == "csv":
        w = _csv_writer()
        w.writerow(["shift"])
        w.writerow([value])
    else:
        print(value)
    return 0


def cmd_symprod(args):
    table = betti_sym_component(args.alpha, args.beta)
    if args.format == "json":
        _print_json({"alpha": args.alpha.parts(), "beta": args.beta.parts(),
                     "poincare": _poincare_json(table)})
    elif args.format == "csv":
        w = _csv_writer()
        w.writerow(["degree", "dimension"])
        for deg, dim in table.as_dict().items():
            w.writerow([deg, dim])
    else:
        print(table.poly_string())
    return 0


def cmd_splitting_types(args):
    types = splitting_types(args.dege, args.F, args.c2)
    if args.format == "json":
        _print_json({
            "deg_e": args.dege,
            "fiber_deg": args.F,
            "c2": args.c2,
            "types": [{"d": t.d, "dprime": t.dprime, "deg_b1": t.deg_b1,
                       "c2_i1": t.c2_i1, "c2_i2": t.c2_i2} for t in types],
        })
    elif args.format == "csv":
        w = _csv_writer()
        w.writerow(["d", "dprime", "deg_b1", "c2_i1", "c2_i2"])
        for t in types:
            w.writerow([t.d, t.dprime, t.deg_b1, t.c2_i1, t.c2_i2])
    else:
        for t in types:
            print(f"d={t.d} dprime={t.dprime} deg_b1={t.deg_b1} "
                  f"c2_i1={t.c2_i1} c2_i2={t.c2_i2}")
    return 0


def cmd_weights(args):
    triple = WeightTriple(*args.weights) if args.weights else DEFAULT_WEIGHTS
    ms = ext_weight_families(args.alpha, args.beta, args.l, args.lprime, triple)
    if args.format == "json":
        _print_json({str(w): m for w, m in ms.items()})
    elif args.format == "csv":
        w = _csv_writer()
        w.writerow(["weight", "multiplicity"])
        for weight, mult in ms.items():
            w.writerow([weight, mult])
    else:
        for line in ms.lines():
            print(line)
    return 0


def _add_format(parser):
    parser.add_argument("--format", choices=["text", "json", "csv"], default="text")


def build_parser():
    parser = argparse.ArgumentParser(
        prog="framedbetti",
        description="Exact Betti tables of framed-sheaf moduli on a ruled "
                    "surface over an elliptic curve.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("betti", help="Betti table of an l-window")
    p.add_argument("--lprime", type=int, required=True)
    p.add_argument("--c2", type=int, required=True)
    p.add_argument("--l-min", type=int, required=True)
    p.add_argument("--l-max", type=int, required=True)
    p.add_argument("--verbose", action="store_true",
                   help="print the per-component breakdown")
    _add_format(p)
    p.set_defaults(func=cmd_betti)

    p = sub.add_parser("verify", help="cross-check closed forms against oracles")
    p.add_argument("--max-c2", type=int, default=4)
    p.add_argument("--l-range", type=int, nargs=2, default=(-8, 8),
                   metavar=("LO", "HI"))
    p.add_argument("--lprime-range", type=int, nargs=2, default=(-3, 3),
                   metavar=("LO", "HI"))
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("components", help="list fixed components")
    p.add_argument("--c2", type=int, required=True)
    p.add_argument("--l-min", type=int, required=True)
    p.add_argument("--l-max", type=int, required=True)
    _add_format(p)
    p.set_defaults(func=cmd_components)

    p = sub.add_parser("shift-index", help="closed-form shift index")
    p.add_argument("--alpha", type=_partition_flag, required=True)
    p.add_argument("--beta", type=_partition_flag, required=True)
    p.add_argument("--l", type=int, required=True)
    p.add_argument("--lprime", type=int, required=True)
    _add_format(p)
    p.set_defaults(func=cmd_shift_index)

    p = sub.add_parser("symprod", help="Betti vector of a symmetric-product component")
    p.add_argument("--alpha", type=_partition_flag, required=True)
    p.add_argument("--beta", type=_partition_flag, required=True)
    _add_format(p)
    p.set_defaults(func=cmd_symprod)

    p = sub.add_parser("splitting-types", help="enumerate splitting types")
    p.add_argument("--dege", type=int, required=True)
    p.add_argument("--F", type=int, required=True, dest="F",
                   help="generic fiber degree d + dprime (must be <= 0)")
    p.add_argument("--c2", type=int, required=True)
    _add_format(p)
    p.set_defaults(func=cmd_splitting_types)

    p = sub.add_parser("weights", help="torus weight multiset at a fixed point")
    p.add_argument("--alpha", type=_partition_flag, required=True)
    p.add_argument("--beta", type=_partition_flag, required=True)
    p.add_argument("--l", type=int, required=True)
    p.add_argument("--lprime", type=int, required=True)
    p.add_argument("--weights", type=int, nargs=3, metavar=("W1", "W2", "W3"))
    _add_format(p)
    p.set_defaults(func=cmd_weights)

    return parser


def main(argv=None):
    """Parse argv and dispatch.  Returns the process exit code: 0 on
    success, 1 on a domain or verification failure (argparse itself exits
    with 2 on usage errors)."""
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


def run():
    sys.exit(main())
