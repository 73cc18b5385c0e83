"""
MTV guess command - extend the dimension sequence and print its table
"""

from typing import Tuple

from cli.schemas import CommandConfig, MtvGuessOutput
from cli.shared import parse_int_list
from services.mtv_guess_service import MIN_CHECK_LENGTH, MtvGuessService

DEFAULT_TERMS = 34
DEFAULT_SEED = "1,0,1,1"


def register(subparsers, common) -> None:
    parser = subparsers.add_parser("mtv-guess", parents=[common], help="Guessed dimensions of multiple T-values")
    parser.add_argument("--terms", type=int, default=DEFAULT_TERMS)
    parser.add_argument("--seed", default=DEFAULT_SEED, help="Comma separated prefix A_0, A_1, ...")
    parser.set_defaults(handler=run_mtv_guess)


def run_mtv_guess(args, config: CommandConfig) -> Tuple[MtvGuessOutput, str]:
    seed = parse_int_list(args.seed)
    terms = MtvGuessService.extend_sequence(seed, config.terms or DEFAULT_TERMS)
    table = MtvGuessService.build_table(terms)
    failure = None
    if len(terms) >= MIN_CHECK_LENGTH:
        failure = MtvGuessService.check_consistency(terms).first_failure

    output = MtvGuessOutput(
        seed=seed,
        terms=terms,
        table=table.rows(),
        consistent=failure is None,
        first_failure=failure,
    )
    lines = [" ".join(str(a) for a in terms)]
    for name, row in table.rows().items():
        lines.append(f"{name:>4}: " + " ".join("-" if v is None else str(v) for v in row))
    return output, "\n".join(lines)
