"""
Relations command - search for relations beyond duality at a given weight
"""

import logging
from typing import Tuple

from mpmath import mp

from cli.schemas import CommandConfig, RelationOutput, RelationsOutput
from cli.shared import get_evaluator
from services.data_loader_service import DataLoaderService
from services.relations_service import (
    DEFAULT_DISCOVERY_SAMPLES,
    DEFAULT_HEIGHT_BOUND,
    DEFAULT_VERIFICATION_SAMPLES,
    RelationsService,
    working_digits,
)

logger = logging.getLogger(__name__)


def register(subparsers, common) -> None:
    parser = subparsers.add_parser("relations", parents=[common], help="Integer relations among Z_c holding for all sampled c")
    parser.add_argument("--weight", type=int, required=True)
    parser.add_argument("--c-samples", default=",".join(str(c) for c in DEFAULT_DISCOVERY_SAMPLES),
                        help="Comma separated rationals, must include 0 and -1")
    parser.add_argument("--digits", type=int, default=None, help="Working digits (default 25 + 15*weight)")
    parser.add_argument("--height", type=int, default=DEFAULT_HEIGHT_BOUND, help="Largest |coefficient|")
    parser.add_argument("--verify", action="store_true", help="Check each relation at fresh parameters")
    parser.add_argument("--verify-samples", default=",".join(str(c) for c in DEFAULT_VERIFICATION_SAMPLES))
    parser.set_defaults(handler=run_relations)


def run_relations(args, config: CommandConfig) -> Tuple[RelationsOutput, str]:
    """
    Find relations, optionally verify them, and compare with the printed ones.

    Returns:
        (RelationsOutput, text block with one relation per line)
    """
    weight = config.weight
    samples = config.c_samples or list(DEFAULT_DISCOVERY_SAMPLES)
    fresh = config.verify_samples or list(DEFAULT_VERIFICATION_SAMPLES)
    digits = config.digits or working_digits(weight)
    service = RelationsService(evaluator=get_evaluator(), jobs=config.jobs)

    relations = service.find_relations(weight, samples, digits=digits, height_bound=args.height)
    entries = []
    for rel in relations:
        with mp.workdps(20):
            residuals = {str(c): mp.nstr(r, 5) for c, r in rel.residuals.items()}
        entry = RelationOutput(coeffs=list(rel.coeffs), text=str(rel), residuals=residuals)
        if args.verify:
            check = service.verify_relation(rel, fresh, digits=digits)
            entry.verified = check.passed
            with mp.workdps(20):
                entry.verification = {str(c): mp.nstr(r, 5) for c, r in check.residuals.items()}
            if not check.passed:
                logger.warning("Relation failed verification: %s", rel)
        entries.append(entry)

    printed = service.printed_relations(weight)
    contains_printed = service.span_contains(relations, printed) if printed else None
    estimate = service.dimension_estimate(weight, relations)
    printed_count = DataLoaderService.relation_count(weight)
    basis = relations[0].basis if relations else tuple(service.basis_indices(weight))

    output = RelationsOutput(
        weight=weight,
        digits=digits,
        samples=[str(c) for c in samples],
        basis=[list(idx.parts) for idx in basis],
        relations=entries,
        dimension_estimate=estimate,
        contains_printed=contains_printed,
        printed_count=printed_count,
    )
    lines = [entry.text for entry in entries]
    lines.append(f"# {len(entries)} relations, dimension estimate {estimate}")
    if printed_count is not None:
        lines.append(f"# printed relation count: {printed_count}")
    if contains_printed is not None:
        lines.append(f"# printed relations recovered: {'yes' if contains_printed else 'no'}")
    return output, "\n".join(lines)
