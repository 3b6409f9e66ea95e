"""Command line entry point: ``verify all | drilling | cusp | exceptional | homology | geometry``."""

from __future__ import annotations

import argparse
import sys

from . import interval as I
from .verify import EXIT_CONFIG, SECTIONS, Config, ConfigError, run_all


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="verify", description=__doc__.split(":")[0])
    p.add_argument("section", choices=("all",) + SECTIONS, nargs="?", default="all")
    p.add_argument("--thebound", default="1.22", help="volume bound for the main inequalities (default 1.22)")
    p.add_argument("--theotherbound", default="1.17",
                   help="smaller volume bound for the Z/7 statement (default 1.17, a configuration choice)")
    p.add_argument("--precision", type=int, default=None,
                   help=f"working precision in bits; 53 is hardware floats (env {I.PRECISION_ENV})")
    p.add_argument("--seed", type=int, default=1729, help="seed for the sampled geometry checks")
    p.add_argument("--json", metavar="PATH", help="write the JSON report here ('-' for stdout)")
    p.add_argument("--max-depth", type=int, default=40, help="bisection depth for monotonicity proofs")
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        bits = args.precision if args.precision is not None else I.precision_from_env()
        cfg = Config(thebound=args.thebound, theotherbound=args.theotherbound, precision=bits,
                     seed=args.seed, max_depth=args.max_depth)
        sections = None if args.section == "all" else [args.section]
        report = run_all(cfg, sections)
    except (ConfigError, ValueError) as exc:
        print(f"verify: configuration error: {exc}", file=sys.stderr)
        return EXIT_CONFIG

    if args.json == "-":
        sys.stdout.write(report.dumps())
    else:
        sys.stdout.write(report.render_text())
        if args.json:
            with open(args.json, "w", encoding="utf-8") as fh:
                fh.write(report.dumps())
    return report.exit_code


if __name__ == "__main__":
    sys.exit(main())
