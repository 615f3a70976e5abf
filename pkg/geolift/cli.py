"""Command-line interface for geolift.

Exposes the ``geolift`` console entrypoint. Every subcommand prints JSON (or
DOT) on standard output, or to ``--output``; logging goes to standard error.

Subcommands:
    geolift words        Longest word, reduced words and braid paths.
    geolift star         The diagram involution i -> i*.
    geolift zeta-check   Check the closed form of zeta by exact matrix arithmetic.
    geolift transition   Lusztig or string data from one reduced word to another.
    geolift phi          Lusztig data of Phi_lambda(b) from string data of b.
    geolift schutz       The affine Schuetzenberger formula.
    geolift anchor       The anchor constants l.
    geolift crystal-dot  B(lambda) in type A as a Graphviz digraph.
    geolift verify       Run acceptance suites.

Exit status: 0 on success, 1 when a verification fails, 2 on usage errors.
"""

import argparse
import logging
import random
import sys
from fractions import Fraction
from typing import Any, Callable, Dict, List, Optional

from pydantic import ValidationError

from .cartan import (
    braid_path,
    build_cartan,
    is_reduced,
    longest_word,
    reduced_words,
    star,
    star_word,
    weyl_length,
)
from .exceptions import GeoLiftError
from .file_handlers import FileHandler
from .lifting import verify_zeta_formula
from .models import CartanDatum, ParamRequest, ParamResult, RunConfig
from .oracle import generate_crystal
from .parametrize import anchor_constants, phi_map, schutz_apply, transition_lusztig, transition_string
from .suites import SUITES, run_suites

logger = logging.getLogger(__name__)


def _int_list(text: str) -> List[int]:
    try:
        return [int(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")


def _rational_list(text: str) -> List[Fraction]:
    try:
        return [Fraction(x.strip()) for x in text.split(",") if x.strip()]
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"expected comma-separated rationals, got {text!r}")


def _build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--type", dest="series", default="A", help="Cartan series A..G (default A).")
    common.add_argument("--rank", type=int, default=2, help="Rank n (default 2).")
    common.add_argument("--cartan", default=None,
                        help='JSON Cartan datum {"series", "rank", "matrix"}; replaces --type/--rank.')
    common.add_argument("--output", "-o", default=None, help="Write the result here instead of stdout.")
    common.add_argument("-v", "--verbose", action="count", default=0, help="-v for INFO, -vv for DEBUG.")
    common.add_argument("--bound", type=int, default=None,
                        help="Crystal size bound (default $GEOLIFT_CRYSTAL_BOUND or 100000).")

    params = argparse.ArgumentParser(add_help=False)
    params.add_argument("--word", type=_int_list, default=None, help="Reduced word of w0, e.g. 1,2,1.")
    params.add_argument("--t", type=_int_list, default=None, help="Integer parameter vector, e.g. 0,1,1.")
    params.add_argument("--lambda", dest="weight", type=_int_list, default=None,
                        help="Dominant weight in fundamental-weight coordinates, e.g. 1,0.")
    source = params.add_mutually_exclusive_group()
    source.add_argument("--input", default=None,
                        help='JSON request {"word": [...], "t": [...], "lambda": [...]}; "-" reads stdin.')
    source.add_argument("--batch", default=None,
                        help='JSON array (or {"requests": [...]}) of requests; prints an array of results.')

    parser = argparse.ArgumentParser(
        prog="geolift",
        description="Geometric lifting of canonical-basis parametrizations.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_words = sub.add_parser("words", parents=[common], help="Longest word, reduced words, braid paths.")
    p_words.add_argument("--word", type=_int_list, default=None, help="Word to inspect (default: longest word).")
    p_words.add_argument("--to", type=_int_list, default=None, help="Target word for a braid path.")
    p_words.add_argument("--all", action="store_true", help="List every reduced word of the same element.")

    p_star = sub.add_parser("star", parents=[common], help="The involution i -> i*.")
    p_star.add_argument("--i", type=int, default=None, help="Node index; omit for the whole table.")
    p_star.add_argument("--word", type=_int_list, default=None, help="Map a word letterwise.")

    p_zeta = sub.add_parser("zeta-check", parents=[common], help="Verify the closed form of zeta (type A).")
    p_zeta.add_argument("--word", type=_int_list, default=None, help="Reduced word of w0 (default: longest word).")
    p_zeta.add_argument("--t", type=_rational_list, default=None, help="Positive rationals, e.g. 1,2,3 or 1/2,3.")
    p_zeta.add_argument("--seed", type=int, default=None, help="Seed for a random point when --t is omitted.")

    p_trans = sub.add_parser("transition", parents=[common, params], help="Transition maps R.")
    p_trans.add_argument("--to", type=_int_list, default=None, help="Target reduced word.")
    p_trans.add_argument("--side", choices=["lusztig", "string"], default="lusztig")

    p_phi = sub.add_parser("phi", parents=[common, params], help="Tropical Phi_lambda.")
    p_phi.add_argument("--from", dest="source", type=_int_list, default=None,
                       help="Word of the string data (default: --word).")
    p_phi.add_argument("--route", choices=["lusztig", "string"], default="lusztig")
    p_phi.add_argument("--certify", action="store_true", help="Check t against the string cone first.")

    sub.add_parser("schutz", parents=[common, params], help="Affine Schuetzenberger formula.")
    sub.add_parser("anchor", parents=[common, params], help="Anchor constants l.")

    p_dot = sub.add_parser("crystal-dot", parents=[common], help="B(lambda) as DOT (type A).")
    p_dot.add_argument("--lambda", dest="weight", type=_int_list, required=True)

    p_verify = sub.add_parser("verify", parents=[common], help="Run acceptance suites.")
    p_verify.add_argument("--suite", nargs="+", default=["all"], choices=["all", *SUITES])
    p_verify.add_argument("--seed", type=int, default=None)
    p_verify.add_argument("--samples", type=int, default=None)
    p_verify.add_argument("--box", type=int, default=None)
    p_verify.add_argument("--max-dim", dest="max_dim", type=int, default=None)

    return parser


def _config(args: argparse.Namespace) -> RunConfig:
    return RunConfig.from_env(
        series=args.series.upper(),
        rank=args.rank,
        weight=getattr(args, "weight", None),
        seed=getattr(args, "seed", None),
        samples=getattr(args, "samples", None),
        box=getattr(args, "box", None),
        crystal_bound=args.bound,
        max_dim=getattr(args, "max_dim", None),
        output=args.output,
    )


def _check_file(path: str, kind: str) -> None:
    if path != "-" and not FileHandler.validate_json_structure(path, kind):
        raise ValueError(f"{path} is not a valid {kind} file")


def _merge(args: argparse.Namespace, datum: CartanDatum, base: ParamRequest) -> ParamRequest:
    """Flags win over file values; the word defaults to the longest word"""
    word = tuple(args.word) if args.word else base.word or longest_word(datum).letters
    return ParamRequest(
        word=word,
        t=tuple(args.t) if args.t is not None else base.t,
        weight=tuple(args.weight) if args.weight is not None else base.weight,
        target=tuple(args.to) if getattr(args, "to", None) else base.target,
    )


def _requests(args: argparse.Namespace, datum: CartanDatum) -> List[ParamRequest]:
    if args.batch:
        _check_file(args.batch, "batch")
        bases = FileHandler.load_requests(args.batch)
        logger.info(f"loaded {len(bases)} requests from {args.batch}")
    elif args.input:
        _check_file(args.input, "request")
        bases = [FileHandler.load_request(args.input)]
    else:
        bases = [ParamRequest(word=())]
    return [_merge(args, datum, base) for base in bases]


def _run_each(args: argparse.Namespace, datum: CartanDatum, config: RunConfig,
              compute: Callable[[ParamRequest], Any]) -> int:
    results = [compute(req) for req in _requests(args, datum)]
    FileHandler.save_json(results if args.batch else results[0], config.output)
    return 0


def _datum(args: argparse.Namespace, config: RunConfig) -> CartanDatum:
    if args.cartan:
        _check_file(args.cartan, "cartan")
        return FileHandler.load_cartan(args.cartan)
    return build_cartan(config.series, config.rank)


def _require(value, flag: str):
    if value is None:
        raise ValueError(f"{flag} is required")
    return value


def _cmd_words(datum: CartanDatum, args: argparse.Namespace, config: RunConfig) -> int:
    word = tuple(args.word) if args.word else longest_word(datum).letters
    payload = {"type": datum.name, "word": list(word), "length": weyl_length(datum, word),
               "reduced": is_reduced(datum, word)}
    if args.all:
        payload["words"] = [list(w) for w in reduced_words(datum, word)]
    if args.to:
        payload["path"] = [m.model_dump(mode="json") for m in braid_path(datum, word, args.to)]
    FileHandler.save_json(payload, config.output)
    return 0


def _cmd_star(datum: CartanDatum, args: argparse.Namespace, config: RunConfig) -> int:
    if args.word:
        payload = {"star_word": list(star_word(datum, args.word))}
    elif args.i is not None:
        payload = {"star": star(datum, args.i)}
    else:
        payload = {"star": [star(datum, i) for i in range(1, datum.rank + 1)]}
    FileHandler.save_json(payload, config.output)
    return 0


def _cmd_zeta_check(datum: CartanDatum, args: argparse.Namespace, config: RunConfig) -> int:
    word = tuple(args.word) if args.word else longest_word(datum).letters
    if args.t is None:
        rng = random.Random(config.seed)
        t = [Fraction(rng.randint(1, 9), rng.randint(1, 9)) for _ in word]
    else:
        t = args.t
    report = verify_zeta_formula(datum, word, t)
    FileHandler.save_json(report, config.output)
    return 0 if report.passed else 1


def _cmd_transition(datum: CartanDatum, args: argparse.Namespace, config: RunConfig) -> int:
    move = transition_lusztig if args.side == "lusztig" else transition_string

    def compute(req: ParamRequest) -> ParamResult:
        target = _require(req.target, "--to")
        return ParamResult(word_out=target, t_out=move(datum, req.word, target, _require(req.t, "--t")))

    return _run_each(args, datum, config, compute)


def _cmd_phi(datum: CartanDatum, args: argparse.Namespace, config: RunConfig) -> int:
    def compute(req: ParamRequest) -> ParamResult:
        source = tuple(args.source) if args.source else req.word
        out = phi_map(datum, req.word, source, _require(req.weight, "--lambda"), _require(req.t, "--t"),
                      route=args.route, certify=args.certify, bound=config.crystal_bound)
        return ParamResult(word_out=req.word, t_out=out)

    return _run_each(args, datum, config, compute)


def _cmd_schutz(datum: CartanDatum, args: argparse.Namespace, config: RunConfig) -> int:
    def compute(req: ParamRequest) -> ParamResult:
        param = schutz_apply(datum, req.word, _require(req.weight, "--lambda"), _require(req.t, "--t"),
                             bound=config.crystal_bound)
        return ParamResult(word_out=param.word, t_out=param.t)

    return _run_each(args, datum, config, compute)


def _cmd_anchor(datum: CartanDatum, args: argparse.Namespace, config: RunConfig) -> int:
    def compute(req: ParamRequest) -> Dict[str, List[int]]:
        lam = _require(req.weight, "--lambda")
        anchor = anchor_constants(datum, lam, req.word, bound=config.crystal_bound)
        return {"word": list(req.word), "lambda": list(lam), "anchor": list(anchor)}

    return _run_each(args, datum, config, compute)


def _cmd_crystal_dot(datum: CartanDatum, args: argparse.Namespace, config: RunConfig) -> int:
    if datum.series != "A":
        raise ValueError("crystal-dot is only available in type A")
    FileHandler.save_dot(generate_crystal(datum.rank, args.weight, bound=config.crystal_bound), config.output)
    return 0


def _cmd_verify(args: argparse.Namespace, config: RunConfig) -> int:
    reports = run_suites(args.suite, config)
    FileHandler.save_reports(reports, config.output)
    failed = [r.name for r in reports if not r.passed]
    if failed:
        print(f"failed: {', '.join(failed)}", file=sys.stderr)
        return 1
    return 0


_COMMANDS = {
    "words": _cmd_words,
    "star": _cmd_star,
    "zeta-check": _cmd_zeta_check,
    "transition": _cmd_transition,
    "phi": _cmd_phi,
    "schutz": _cmd_schutz,
    "anchor": _cmd_anchor,
    "crystal-dot": _cmd_crystal_dot,
}


def main(argv: Optional[List[str]] = None) -> int:
    args = _build_parser().parse_args(argv)
    level = {0: logging.WARNING, 1: logging.INFO}.get(args.verbose, logging.DEBUG)
    logging.basicConfig(level=level, format="%(message)s")
    logging.getLogger("geolift").setLevel(level)

    try:
        config = _config(args)
        logger.debug(f"{args.command}: {config.model_dump(exclude_none=True)}")
        if args.command == "verify":
            return _cmd_verify(args, config)
        datum = _datum(args, config)
        return _COMMANDS[args.command](datum, args, config)
    except (GeoLiftError, ValidationError, ValueError) as e:
        print(f"error: {e}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
