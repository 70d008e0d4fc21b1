# src/cli.py

"""Command line entry point ``mbar``.

Results go to stdout in the selected format; logs and diagnostics go to
stderr. Exit status: 0 success, 2 usage error, 3 mathematical error, 4 cache
error.

Examples::

    mbar eval --space r=2,d=3,n=0 --monomial "H^3 K{dA=1}^5"
    mbar nd 4
    mbar charnum --r 3 --d 3 --alpha 2:5 --beta 7
    mbar table cubics-p2 --format csv --cache ~/.mbar-cache
"""

import argparse
import sys
from typing import Callable, Dict, List, Optional, TextIO

from loguru import logger

from src.kontsevich.charnum import (
    CharNumQuery,
    boundary_point_oracle,
    characteristic_number,
    conic_tangency_count,
    cuspidal_count,
)
from src.kontsevich.config import mbar_settings
from src.kontsevich.evaluate import ROUTE_LITERAL, ROUTE_SIMPLIFIED, IntersectionEvaluator
from src.kontsevich.exceptions import MbarBaseException, MbarUsageError
from src.kontsevich.gw import GromovWittenSolver, GWKey, gw_invariant, nd
from src.kontsevich.logging_setup import configure_logging
from src.kontsevich.memo import MemoStore, cache_load, cache_save
from src.kontsevich.moduli import enumerate_boundary, picard_rank
from src.kontsevich.syntax import format_boundary, parse_space
from src.kontsevich.tables import TableId, reproduce_table
from src.utils import OUTPUT_FORMATS, render_records, render_value


def build_evaluator(route: str = ROUTE_SIMPLIFIED) -> IntersectionEvaluator:
    """Evaluator wired to the configured solver options, with an empty store."""
    store = MemoStore()
    solver = GromovWittenSolver(
        store,
        plane_fast_path=mbar_settings.MBAR_GW_PLANE_FAST_PATH,
        tested_max_rank=mbar_settings.MBAR_GW_TESTED_MAX_RANK,
    )
    return IntersectionEvaluator(store, solver, relabel_limit=mbar_settings.MBAR_RELABEL_SEARCH_LIMIT, route=route)


def _parse_int_list(text: str) -> List[int]:
    try:
        return [int(a) for a in text.split(",") if a.strip()]
    except ValueError:
        raise MbarUsageError(f"expected comma separated integers, got {text!r}")


def _parse_alpha(items: Optional[List[str]]) -> Dict[int, int]:
    """``["2:8", "3:1"]`` -> ``{2: 8, 3: 1}``; repeated codimensions add up."""
    alpha: Dict[int, int] = {}
    for item in items or []:
        codim, colon, count = item.partition(":")
        try:
            codim_value, count_value = int(codim), int(count)
        except ValueError:
            raise MbarUsageError(f"--alpha expects CODIM:COUNT, got {item!r}")
        if not colon:
            raise MbarUsageError(f"--alpha expects CODIM:COUNT, got {item!r}")
        alpha[codim_value] = alpha.get(codim_value, 0) + count_value
    return alpha


# --- command handlers --- #

def _cmd_eval(args, evaluator: IntersectionEvaluator) -> str:
    s = parse_space(args.space)
    value = evaluator.evaluate_expression(s, args.monomial)
    return render_value(value, args.format, space=str(s), monomial=args.monomial)


def _cmd_gw(args, evaluator: IntersectionEvaluator) -> str:
    key = GWKey.of(args.r, args.d, _parse_int_list(args.insertions))
    value = gw_invariant(key, evaluator.solver)
    return render_value(value, args.format, r=key.r, d=key.d, insertions=",".join(map(str, key.insertions)))


def _cmd_nd(args, evaluator: IntersectionEvaluator) -> str:
    return render_value(nd(args.d), args.format, d=args.d)


def _cmd_charnum(args, evaluator: IntersectionEvaluator) -> str:
    query = CharNumQuery.of(args.r, args.d, _parse_alpha(args.alpha), args.beta)
    value = characteristic_number(query, evaluator, all_markings=args.all_markings,
                                  check_integer=args.check_integer)
    return render_value(value, args.format, query=query.describe())


def _cmd_cuspidal(args, evaluator: IntersectionEvaluator) -> str:
    value = cuspidal_count(args.d, None if args.no_verify else evaluator)
    return render_value(value, args.format, d=args.d)


def _cmd_oracle(args, evaluator: IntersectionEvaluator) -> str:
    return render_value(boundary_point_oracle(args.d, args.i), args.format, d=args.d, i=args.i)


def _cmd_conics(args, evaluator: IntersectionEvaluator) -> str:
    value = conic_tangency_count(args.points, args.lines, args.conics, evaluator,
                                 check_integer=args.check_integer)
    return render_value(value, args.format, points=args.points, lines=args.lines, conics=args.conics)


def _cmd_table(args, evaluator: IntersectionEvaluator) -> str:
    rows = reproduce_table(args.table_id, evaluator, jobs=args.jobs, check_integer=args.check_integer)
    records = [
        {"section": row.section, "space": str(row.space), "expression": row.expression, "value": row.value}
        for row in rows
    ]
    return render_records(records, args.format)


def _cmd_picard(args, evaluator: IntersectionEvaluator) -> str:
    s = parse_space(args.space)
    return render_value(picard_rank(s), args.format, space=str(s))


def _cmd_boundary(args, evaluator: IntersectionEvaluator) -> str:
    s = parse_space(args.space)
    records = [
        {"boundary": format_boundary(b), "markings": ",".join(map(str, b.side)), "degree": b.degree}
        for b in enumerate_boundary(s)
    ]
    return render_records(records, args.format)


# --- parser --- #

def _common_options() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=OUTPUT_FORMATS, default="text", help="output format")
    common.add_argument("--cache", default=None, help="cache file (default: $MBAR_CACHE)")
    common.add_argument("--check-integer", action="store_true",
                        help="fail when an enumerative count is not an integer")
    common.add_argument("--jobs", type=int, default=None, help="worker threads for table rows")
    common.add_argument("--log-level", default=None, help="loguru level for stderr")
    common.add_argument("--route", choices=(ROUTE_SIMPLIFIED, ROUTE_LITERAL), default=ROUTE_SIMPLIFIED,
                        help="expansion of the pullback of the glued boundary divisor")
    return common


def build_parser() -> argparse.ArgumentParser:
    common = _common_options()
    parser = argparse.ArgumentParser(prog="mbar", description="Exact intersection numbers on M̄_{0,n}(P^r, d)")
    commands = parser.add_subparsers(dest="command", required=True)

    def command(name: str, handler: Callable, help_text: str) -> argparse.ArgumentParser:
        sub = commands.add_parser(name, parents=[common], help=help_text)
        sub.set_defaults(handler=handler)
        return sub

    sub = command("eval", _cmd_eval, "top intersection product of a monomial or class expression")
    sub.add_argument("--space", required=True, help="r=<int>,d=<int>,n=<int>")
    sub.add_argument("--monomial", required=True, help='e.g. "H^3 K{dA=1}^5" or "1/2 H^3 T^2 L1"')

    sub = command("gw", _cmd_gw, "genus-0 Gromov-Witten invariant of P^r")
    sub.add_argument("r", type=int)
    sub.add_argument("d", type=int)
    sub.add_argument("insertions", nargs="?", default="", help="codimensions, e.g. 2,2,2,2")

    sub = command("nd", _cmd_nd, "rational plane curves of degree d through 3d - 1 points")
    sub.add_argument("d", type=int)

    sub = command("charnum", _cmd_charnum, "characteristic number of rational curves")
    sub.add_argument("--r", type=int, required=True)
    sub.add_argument("--d", type=int, required=True)
    sub.add_argument("--alpha", action="append", metavar="CODIM:COUNT",
                     help="incidence conditions, repeatable (e.g. --alpha 2:8)")
    sub.add_argument("--beta", type=int, default=0, help="number of tangent hyperplanes")
    sub.add_argument("--all-markings", action="store_true", help="one marking per condition")

    sub = command("cuspidal", _cmd_cuspidal, "one-cusp rational plane curves through 3d - 2 points")
    sub.add_argument("d", type=int)
    sub.add_argument("--no-verify", action="store_true", help="skip the divisor route check")

    sub = command("oracle", _cmd_oracle, "boundary-point product K^i H^{3d-2} from N_d")
    sub.add_argument("d", type=int)
    sub.add_argument("i", type=int)

    sub = command("conics", _cmd_conics, "plane conics through points, tangent to lines and conics")
    sub.add_argument("--points", type=int, default=0)
    sub.add_argument("--lines", type=int, default=0)
    sub.add_argument("--conics", type=int, default=0)

    sub = command("table", _cmd_table, "reproduce a table of intersection numbers")
    sub.add_argument("table_id", choices=[t.value for t in TableId])

    sub = command("picard", _cmd_picard, "Picard rank of M̄_{0,n}(r,d), d >= 1")
    sub.add_argument("--space", required=True)

    sub = command("boundary", _cmd_boundary, "boundary divisors of M̄_{0,n}(r,d)")
    sub.add_argument("--space", required=True)

    return parser


def parse_and_run(argv: Optional[List[str]] = None, stdout: Optional[TextIO] = None) -> int:
    """Run one command and return its exit status.

    Args:
        argv: Arguments without the program name (defaults to ``sys.argv[1:]``).
        stdout: Result stream (defaults to ``sys.stdout``).
    """
    stdout = stdout if stdout is not None else sys.stdout
    try:
        args = build_parser().parse_args(argv)
    except SystemExit as e:
        return e.code if isinstance(e.code, int) else 2

    configure_logging(args.log_level or mbar_settings.MBAR_LOG_LEVEL, mbar_settings.MBAR_LOG_FILE)
    if args.jobs is None:
        args.jobs = mbar_settings.MBAR_JOBS
    cache = args.cache or mbar_settings.MBAR_CACHE

    try:
        if args.jobs < 1:
            raise MbarUsageError(f"--jobs must be at least 1, got {args.jobs}")
        evaluator = build_evaluator(args.route)
        if cache:
            cache_load(evaluator.store, cache)
        output = args.handler(args, evaluator)
        if cache:
            cache_save(evaluator.store, cache)
    except MbarBaseException as e:
        logger.debug(f"{args.command} failed with {type(e).__name__}")
        print(f"mbar: error: {e.message}", file=sys.stderr)
        return e.EXIT_CODE
    except Exception:
        logger.exception(f"Unexpected failure in {args.command}")
        return 1

    stdout.write(output + "\n")
    return 0


def main() -> None:
    sys.exit(parse_and_run())


if __name__ == "__main__":
    main()
