"""Command-line interface: ``sareg <command> ...``.

Exit status: 0 success, 1 verification failure, 2 usage or parse error,
3 computational error (degree cap, genericity exhaustion, ...).
"""

from __future__ import annotations

import argparse
import logging
import sys

from .arrangements import ArrangementError, arrangement_ideal, sharp_example
from .field import field_from_spec
from .harness import COMPUTATIONAL_ERRORS, SUITES, SuiteConfig, parse_range, run_suite
from .io import ParseError, format_arrangement, read_arrangement
from .resolution import minimal_resolution, regularity

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_COMPUTE = 0, 1, 2, 3


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="sareg", description="Regularity of subspace arrangement ideals.")
    p.add_argument("-v", "--verbose", action="store_true", help="log genericity retries and redraws")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    r = sub.add_parser("regularity", help="regularity of the ideal of an arrangement file")
    r.add_argument("file")
    r.add_argument("--strategy", choices=("betti", "hyperplane", "both"), default="both")
    r.add_argument("--seed", type=int, default=0)

    b = sub.add_parser("betti", help="Betti table of the ideal of an arrangement file")
    b.add_argument("file")

    i = sub.add_parser("intersect", help="reduced Groebner basis of the ideal of an arrangement file")
    i.add_argument("file")

    s = sub.add_parser("sharp", help="print a sharp example as an arrangement file")
    s.add_argument("--d", type=int, required=True)
    s.add_argument("--seed", type=int, default=0)
    s.add_argument("--field", default="32003")

    v = sub.add_parser("verify", help="run a verification suite")
    v.add_argument("suite", choices=SUITES + ("all",))
    v.add_argument("--trials", type=int, default=10)
    v.add_argument("--seed", type=int, default=0)
    v.add_argument("--n", default="2-4", help="projective dimensions, e.g. 3, 2-4 or 2,4")
    v.add_argument("--d", default=None, help="arrangement sizes (default 2-4; sharp suite 2-5)")
    v.add_argument("--codims", default=None, help="fixed codimension list, e.g. 2,2,1")
    v.add_argument("--field", default="32003", help="a prime p or Q")
    v.add_argument("--check-saturation", action="store_true")
    v.add_argument("--json", action="store_true", help="one JSON record per line")
    v.add_argument("--timings", action="store_true", help="include wall times (output no longer reproducible)")
    return p


def _verify(args) -> int:
    field_from_spec(args.field)
    cfg = SuiteConfig(
        suite=args.suite, trials=args.trials, seed=args.seed,
        n_values=parse_range(args.n, [2, 3, 4]),
        d_values=parse_range(args.d, [2, 3, 4]),
        codims=parse_range(args.codims, []) if args.codims else None,
        field=args.field, check_saturation=args.check_saturation,
        sharp_d_values=parse_range(args.d, [2, 3, 4, 5]),
    )
    if args.trials < 0:
        raise ValueError("--trials must be nonnegative")
    result = run_suite(cfg)
    sys.stdout.write(result.render(timings=args.timings, json_lines=args.json))
    return result.exit_status


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")
    try:
        if args.command == "verify":
            return _verify(args)
        if args.command == "sharp":
            X = sharp_example(args.d, args.seed, field_from_spec(args.field))
            sys.stdout.write(f"# sharp example: {args.d} lines meeting x2 = x3 = 0\n")
            sys.stdout.write(format_arrangement(X))
            return EXIT_OK
        X = read_arrangement(args.file)
        I = arrangement_ideal(X)
        if args.command == "regularity":
            res = regularity(I, args.strategy, seed=args.seed)
            line = f"reg = {res.value}"
            if args.strategy == "both":
                line += f" (betti {res.betti}, hyperplane {res.hyperplane})"
            print(line)
            print(f"bound d = {X.d}: {'holds' if res.value <= X.d else 'VIOLATED'}")
            return EXIT_OK if res.value <= X.d else EXIT_FAIL
        if args.command == "betti":
            sys.stdout.write(minimal_resolution(I).render())
            return EXIT_OK
        if args.command == "intersect":
            for g in I.groebner.generators:
                print(g)
            return EXIT_OK
    except (ParseError, ArrangementError, ValueError, OSError) as exc:
        if isinstance(exc, COMPUTATIONAL_ERRORS):
            print(f"sareg: computational error: {exc}", file=sys.stderr)
            return EXIT_COMPUTE
        print(f"sareg: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except COMPUTATIONAL_ERRORS as exc:
        print(f"sareg: computational error: {exc}", file=sys.stderr)
        return EXIT_COMPUTE
    return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
