"""
Tables command - printed dimension rows against recomputed ones
"""

import logging
from typing import List, Optional, Tuple

from cli.schemas import CommandConfig, TableRow, TablesOutput
from cli.shared import get_evaluator
from services.bquotient_service import DEFAULT_MAX_WEIGHT, BQuotientService
from services.data_loader_service import DataLoaderService
from services.mtv_guess_service import MtvGuessService
from services.relations_service import RelationsService

logger = logging.getLogger(__name__)


def register(subparsers, common) -> None:
    parser = subparsers.add_parser("tables", parents=[common], help="Compare printed dimension tables with recomputed rows")
    parser.add_argument("--max-weight", type=int, default=DEFAULT_MAX_WEIGHT)
    parser.add_argument("--relations-upto", type=int, default=None,
                        help="Also estimate dim of the Z_c span from relation search up to this weight")
    parser.add_argument("--long", action="store_true", help="Allow weights above 10 (slow)")
    parser.set_defaults(handler=run_tables)


def _row(name: str, golden: List[Optional[int]], computed: List[Optional[int]], width: int) -> TableRow:
    golden = (list(golden) + [None] * width)[:width]
    computed = (list(computed) + [None] * width)[:width]
    matches = all(g == c for g, c in zip(golden, computed) if g is not None and c is not None)
    return TableRow(name=name, golden=golden, computed=computed, matches=matches)


def _cell(value: Optional[int]) -> str:
    return "-" if value is None else str(value)


def run_tables(args, config: CommandConfig) -> Tuple[TablesOutput, str]:
    max_weight = config.max_weight if config.max_weight is not None else DEFAULT_MAX_WEIGHT
    if max_weight > DEFAULT_MAX_WEIGHT and not args.long:
        raise ValueError(f"--max-weight above {DEFAULT_MAX_WEIGHT} needs --long")
    width = max_weight + 1
    rows = [
        _row("MZV", DataLoaderService.dimension_row("MZV"), MtvGuessService.padovan_dimensions(width), width),
        _row("MTV", DataLoaderService.dimension_row("MTV"), MtvGuessService.extend_sequence([1, 0, 1, 1], width),
             width),
        _row("B", DataLoaderService.dimension_row("B"), BQuotientService.bdim_table(max_weight), width),
    ]

    estimates: List[Optional[int]] = []
    if args.relations_upto is not None:
        service = RelationsService(evaluator=get_evaluator(), jobs=config.jobs)
        for n in range(width):
            if n > args.relations_upto:
                estimates.append(None)
                continue
            logger.info("Estimating dimension at weight %d", n)
            estimates.append(service.dimension_estimate(n) if n >= 4 else BQuotientService.bdim(n))
    rows.append(_row("A_MTV_c", DataLoaderService.dimension_row("A_MTV_c"), estimates, width))

    output = TablesOutput(weights=list(range(width)), rows=rows)
    lines = ["weight   " + " ".join(f"{n:>4}" for n in range(width))]
    for row in rows:
        mark = "ok" if row.matches else "MISMATCH"
        lines.append(f"{row.name:<8} " + " ".join(f"{_cell(v):>4}" for v in row.golden) + "  (printed)")
        lines.append(f"{'':<8} " + " ".join(f"{_cell(v):>4}" for v in row.computed) + f"  {mark}")
    return output, "\n".join(lines)
