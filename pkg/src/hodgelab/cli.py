"""Command line entry point.

  hodgelab run --family x-kd --k 2 --d 6 --format markdown
  hodgelab hilbert --ideal gens.txt --max-degree 12
  hodgelab gram --f f.txt --plane1 x0,x3 --plane2 x1,x3

Exit status: 0 when every check passes, 2 when a check fails, 3 when a
precondition fails (bad input, singular hypersurface, non-Gorenstein ideal).
"""
from __future__ import annotations

import argparse
import logging
import sys
from fractions import Fraction

from .algebra import ParseError, parse_polynomial
from .hodge import HodgeIdealError
from .ideals import Ideal
from .report import emit_report
from .scenarios import DEFAULT_NU, FAMILIES, ScenarioConfig, ScenarioError, run_scenario

EXIT_OK, EXIT_CHECK, EXIT_PRECONDITION = 0, 2, 3


def _nu_list(text):
    try:
        return tuple(Fraction(x.strip()) for x in text.split(",") if x.strip())
    except (ValueError, ZeroDivisionError) as exc:
        raise argparse.ArgumentTypeError(f"bad nu list {text!r}: {exc}") from None


def _read_polys(path):
    with open(path, encoding="utf-8") as fh:
        text = fh.read()
    items = []
    for line in text.splitlines():
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        items.extend(x.strip() for x in line.split(";") if x.strip())
    return items


def _add_output(p):
    p.add_argument("--format", choices=("json", "csv", "markdown"), default="json")
    p.add_argument("--out", help="write the report here instead of stdout")
    p.add_argument("--timing", action="store_true", help="include stage timings (breaks byte identity)")


def build_parser():
    ap = argparse.ArgumentParser(prog="hodgelab", description=__doc__.split("\n\n")[0])
    ap.add_argument("-v", "--verbose", action="store_true")
    sub = ap.add_subparsers(dest="command", required=True)

    run = sub.add_parser("run", help="run a built-in scenario")
    run.add_argument("--family", required=True, choices=FAMILIES)
    run.add_argument("--k", type=int)
    run.add_argument("--d", type=int)
    run.add_argument("--nu", type=_nu_list, default=DEFAULT_NU,
                     help="comma separated rationals, default -2,-1,0,1/3,1,2,5")
    run.add_argument("--seed", type=int, default=1)
    run.add_argument("--oracle", action="store_true", help="recompute dual-path quantities and compare")
    run.add_argument("--order", choices=("grevlex", "grlex"), default="grevlex")
    run.add_argument("--f", dest="f_file", help="polynomial file (custom family)")
    run.add_argument("--plane1")
    run.add_argument("--plane2")
    _add_output(run)

    hil = sub.add_parser("hilbert", help="Hilbert function of an ideal")
    hil.add_argument("--ideal", required=True, help="file with one generator per line")
    hil.add_argument("--max-degree", type=int, required=True)
    hil.add_argument("--method", choices=("degreewise", "groebner"), default="degreewise")
    hil.add_argument("--nvars", type=int)

    gram = sub.add_parser("gram", help="Gram analysis for a hypersurface and two planes")
    gram.add_argument("--f", dest="f_file", required=True)
    gram.add_argument("--plane1", required=True, help="comma separated linear forms")
    gram.add_argument("--plane2", required=True)
    gram.add_argument("--nu", type=_nu_list, default=DEFAULT_NU)
    gram.add_argument("--oracle", action="store_true")
    _add_output(gram)
    return ap


def _emit(doc, args):
    text = emit_report(doc, args.format, args.out)
    if args.out is None:
        sys.stdout.write(text)
    return EXIT_OK if doc["all_passed"] else EXIT_CHECK


def _custom_config(args):
    polys = _read_polys(args.f_file)
    if len(polys) != 1:
        raise ScenarioError("config", f"{args.f_file} must hold exactly one polynomial")
    if not args.plane1 or not args.plane2:
        raise ScenarioError("config", "custom scenarios need --plane1 and --plane2")
    return ScenarioConfig("custom", nu=args.nu, oracle=args.oracle, f=polys[0],
                          plane1=tuple(args.plane1.split(",")), plane2=tuple(args.plane2.split(",")))


def main(argv=None):
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")
    try:
        if args.command == "run":
            if args.family == "custom":
                cfg = _custom_config(args)
                cfg.order = args.order
            else:
                cfg = ScenarioConfig(args.family, args.k, args.d, args.nu, args.seed, args.oracle, args.order)
            for note in _notes(cfg):
                print(f"note: {note}", file=sys.stderr)
            return _emit(run_scenario(cfg, timing=args.timing), args)
        if args.command == "gram":
            cfg = _custom_config(args)
            return _emit(run_scenario(cfg, timing=args.timing), args)
        if args.command == "hilbert":
            gens = [parse_polynomial(s, args.nvars) for s in _read_polys(args.ideal)]
            nvars = args.nvars or max((g.nvars for g in gens), default=1)
            gens = [parse_polynomial(s, nvars) for s in _read_polys(args.ideal)]
            ideal = Ideal(gens, nvars, method=args.method)
            for t in range(args.max_degree + 1):
                print(t, ideal.hilbert_function(t))
            return EXIT_OK
    except (ScenarioError, HodgeIdealError, ParseError, OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PRECONDITION
    return EXIT_OK


def _notes(cfg):
    if cfg.family == "x-kd":
        from .scenarios import CORRECTED_PLANE_NOTE
        return [CORRECTED_PLANE_NOTE]
    return []


if __name__ == "__main__":
    sys.exit(main())
