"""Command-line front end.

Subcommands::

    symgen series <flavor> ...   compute a generating series and print it
    symgen verify <suite> ...    run a verification suite (or "all")

Series flavors split into diamond-driven (euler-sym, euler-orb, chiy-sym,
chiy-orb, chihat-sym, chihat-orb; input --hodge FILE or --chi N for the Euler
flavors) and model-driven Riemann-Roch flavors (rr-sym, rr-orb, rr-graded;
input --model p^d|p1^d and --bundle k).  For rr-graded the bundle is the
graded sum O + O(k) with k in exterior degree one, so on p^1 the defaults
k = -2 / k = 2 give the exterior algebras of the cotangent and tangent lines.

Exit codes: 0 all good; 1 a verified identity failed (first counterexample is
printed); 2 malformed input file or flags; 3 an enumeration guard refused the
requested size.
"""

from __future__ import annotations

import argparse
import sys

from .errors import ConventionError, GuardError, HodgeParseError, VerificationError
from .formats import load_hodge_file, render_series
from .genera import (
    POSITIVE_Y,
    WEIGHT_CONVENTIONS,
    GenusSeriesRequest,
    genus_series,
    euler_orb_series,
    euler_sym_series,
)
from .hodge import THEORY_HODGE
from .lefschetz import ModelManifold, graded_sym_series, orb_rr_series, sym_rr_series
from .verify import SUITES, run_all, run_suite

DIAMOND_FLAVORS = ("euler-sym", "euler-orb", "chiy-sym", "chiy-orb", "chihat-sym", "chihat-orb")
MODEL_FLAVORS = ("rr-sym", "rr-orb", "rr-graded")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="symgen",
        description="Exact genera of symmetric products and their orbifolds, with cross-checks.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    series = sub.add_parser("series", help="compute a generating series")
    series.add_argument("flavor", choices=DIAMOND_FLAVORS + MODEL_FLAVORS)
    series.add_argument("--hodge", metavar="FILE", help="Hodge diamond input file")
    series.add_argument("--chi", type=int, help="Euler number (euler-* flavors only)")
    series.add_argument("--model", help="model manifold p^<d> or p1^<d> (rr-* flavors)")
    series.add_argument("--bundle", type=int, help="line bundle twist k (rr-* flavors)")
    series.add_argument("--max-n", type=int, required=True, help="highest q-power printed")
    series.add_argument("--trunc", type=int, help="internal truncation (default: max-n)")
    series.add_argument("--format", choices=("text", "json", "csv"), default="text")
    series.add_argument(
        "--weight-convention",
        choices=WEIGHT_CONVENTIONS,
        default=POSITIVE_Y,
        help="fermionic weight convention (delocalized comparisons)",
    )

    verify = sub.add_parser("verify", help="run a verification suite")
    verify.add_argument("suite", choices=sorted(SUITES) + ["all"])
    verify.add_argument("--seed", type=int, default=0, help="seed for randomized suites")
    verify.add_argument("--rank", type=int, help="maximum line-sum rank (adams suites)")
    verify.add_argument("--max-n", type=int, help="maximum power/orbifold order")
    verify.add_argument("--max-d", type=int, help="maximum dimension (local-term)")
    verify.add_argument("--max-trunc", type=int, help="maximum truncation (local-term)")
    verify.add_argument("--samples", type=int, help="number of random diamonds (oracle-sym)")
    verify.add_argument(
        "--weight-convention",
        choices=WEIGHT_CONVENTIONS,
        default=POSITIVE_Y,
        help="fermionic weight convention (delocalized suite)",
    )
    return parser


def _series_trunc(args, parser) -> int:
    if args.max_n < 0:
        parser.error("--max-n must be >= 0")
    trunc = args.max_n if args.trunc is None else args.trunc
    if trunc < args.max_n:
        parser.error(f"--trunc {trunc} is below --max-n {args.max_n}")
    return trunc


def _diamond_series(args, parser, trunc):
    flavor = args.flavor
    if flavor.startswith("euler") and args.chi is not None:
        if args.hodge is not None:
            parser.error("give either --chi or --hodge, not both")
        if flavor == "euler-sym":
            return euler_sym_series(args.chi, trunc)
        return euler_orb_series(args.chi, trunc)
    if args.hodge is None:
        parser.error(f"flavor {flavor} needs --hodge FILE" + (" or --chi N" if flavor.startswith("euler") else ""))
    diamond = load_hodge_file(args.hodge)
    if diamond.theory == THEORY_HODGE and not diamond.serre_symmetric():
        print(f"note: {args.hodge} lacks Serre symmetry h^(p,q) = h^(d-p,d-q)", file=sys.stderr)
    return genus_series(GenusSeriesRequest(diamond, trunc, flavor))


def _model_series(args, parser, trunc):
    if args.model is None:
        parser.error(f"flavor {args.flavor} needs --model p^<d> or p1^<d>")
    try:
        model = ModelManifold.from_name(args.model)
    except ValueError as err:
        parser.error(str(err))
    twist = args.bundle
    if args.flavor == "rr-graded":
        twist = -2 if twist is None else twist
        bundle = model.trivial_bundle() + model.line_bundle(twist, degree=1)
        return graded_sym_series(model, bundle, trunc)
    if twist is None:
        parser.error(f"flavor {args.flavor} needs --bundle k")
    bundle = model.line_bundle(twist)
    if args.flavor == "rr-sym":
        return sym_rr_series(model, bundle, trunc)
    return orb_rr_series(model, bundle, trunc)


def _run_series(args, parser) -> int:
    trunc = _series_trunc(args, parser)
    if args.flavor in DIAMOND_FLAVORS:
        series = _diamond_series(args, parser, trunc)
    else:
        series = _model_series(args, parser, trunc)
    print(render_series(series.truncate(args.max_n), args.format))
    return 0


def _run_verify(args) -> int:
    options = {"seed": args.seed, "convention": args.weight_convention}
    if args.rank is not None:
        options["max_rank"] = args.rank
    if args.max_n is not None:
        options["max_n"] = args.max_n
    if args.max_d is not None:
        options["max_d"] = args.max_d
    if args.max_trunc is not None:
        options["max_trunc"] = args.max_trunc
    if args.samples is not None:
        options["samples"] = args.samples
    results = run_all(**options) if args.suite == "all" else [run_suite(args.suite, **options)]
    for result in results:
        print(result.report())
    return 0 if all(r.passed for r in results) else 1


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if args.command == "series":
            return _run_series(args, parser)
        return _run_verify(args)
    except (HodgeParseError, ValueError, OSError) as err:
        print(f"error: {err}", file=sys.stderr)
        return 2
    except (GuardError, ConventionError) as err:
        print(f"error: {err}", file=sys.stderr)
        return 3
    except VerificationError as err:
        print(f"verification failed: {err}", file=sys.stderr)
        return 1


def console_main():
    sys.exit(main())


if __name__ == "__main__":
    console_main()
