"""
Genfun command - check the generating series identity coefficient by coefficient
"""

from typing import Tuple

from mpmath import mp

from cli.schemas import CoefficientOutput, CommandConfig, GenfunOutput
from cli.shared import get_evaluator
from models.eval_config import digits_to_bits
from services.genfun_service import DEFAULT_ORDER, GenfunService

DEFAULT_DIGITS = 60


def register(subparsers, common) -> None:
    parser = subparsers.add_parser("genfun", parents=[common], help="Compare both sides of the generating series identity")
    parser.add_argument("--c", required=True, help="Exact rational parameter, e.g. --c=-1/2")
    parser.add_argument("--order", type=int, default=DEFAULT_ORDER, help="Total degree in X and Y")
    parser.add_argument("--digits", type=int, default=DEFAULT_DIGITS)
    parser.set_defaults(handler=run_genfun)


def run_genfun(args, config: CommandConfig) -> Tuple[GenfunOutput, str]:
    order = config.order or DEFAULT_ORDER
    digits = config.digits or DEFAULT_DIGITS
    precision = digits_to_bits(digits)
    service = GenfunService(evaluator=get_evaluator(), jobs=config.jobs)
    report = service.verify_theorem(config.c, order=order, precision=precision)

    with mp.workdps(digits):
        coefficients = [
            CoefficientOutput(i=chk.i, j=chk.j, lhs=mp.nstr(chk.lhs, 20), rhs=mp.nstr(chk.rhs, 20),
                              discrepancy=mp.nstr(chk.discrepancy, 5))
            for chk in report.checks
        ]
        tolerance = mp.nstr(report.tolerance, 5)
        worst = mp.nstr(report.max_discrepancy, 5)

    failure = report.first_failure()
    output = GenfunOutput(
        c=str(config.c),
        order=order,
        precision=precision,
        path=report.path,
        tolerance=tolerance,
        max_discrepancy=worst,
        passed=report.passed,
        first_failure=list(failure) if failure else None,
        coefficients=coefficients,
    )
    lines = [f"X^{row.i} Y^{row.j}: {row.lhs}  {row.rhs}  |diff| {row.discrepancy}" for row in coefficients]
    verdict = "PASS" if report.passed else f"FAIL at X^{failure[0]} Y^{failure[1]}"
    lines.append(f"{verdict} (c = {config.c}, {report.path}, max |diff| {worst}, tolerance {tolerance})")
    return output, "\n".join(lines)
