"""
Shared utilities, caches and argument parsers for all CLI commands
"""

import logging
import re
import sys
from fractions import Fraction
from typing import List, Optional

from models.errors import CacheFormatError
from services.eval_cache_service import EvalCacheService
from services.evaluator_service import EvaluatorService

logger = logging.getLogger(__name__)

# Cache variables
_evaluator_cache: Optional[EvaluatorService] = None
_eval_cache_service: Optional[EvalCacheService] = None

_RATIONAL = re.compile(r"^[+-]?\d+(/\d+)?$")


def parse_rational(text: str) -> Fraction:
    """
    Exact rational from "p/q" or an integer, with optional sign.

    Decimal text such as "0.5" is rejected rather than rationalized.
    """
    stripped = str(text).strip()
    if not _RATIONAL.match(stripped):
        raise ValueError(f"Expected an exact rational like -1/2, got {text!r}")
    return Fraction(stripped)


def parse_rational_list(text: str) -> List[Fraction]:
    return [parse_rational(piece) for piece in str(text).split(",") if piece.strip()]


def parse_int_list(text: str) -> List[int]:
    try:
        return [int(piece) for piece in str(text).split(",") if piece.strip()]
    except ValueError:
        raise ValueError(f"Expected comma separated integers, got {text!r}") from None


def configure_logging(verbose: int = 0) -> None:
    """Logs go to stderr so that stdout only carries results"""
    level = logging.WARNING
    if verbose == 1:
        level = logging.INFO
    elif verbose >= 2:
        level = logging.DEBUG
    logging.basicConfig(
        level=level,
        stream=sys.stderr,
        format="%(asctime)s %(levelname)s %(name)s: %(message)s",
        force=True,
    )


def get_evaluator() -> EvaluatorService:
    """Shared evaluator (keeps prefix series between commands of one run)"""
    global _evaluator_cache
    if _evaluator_cache is None:
        _evaluator_cache = EvaluatorService()
    return _evaluator_cache


def get_eval_cache(path: Optional[str], disabled: bool = False) -> EvalCacheService:
    """
    Evaluation cache for the run: the file at `path` (or $ZC_EVAL_CACHE),
    memory only with --no-cache. An unreadable file falls back to memory
    with a warning.
    """
    global _eval_cache_service
    if disabled:
        return EvalCacheService(path=None, use_env=False)
    if _eval_cache_service is not None and path is not None and str(_eval_cache_service.path) == str(path):
        return _eval_cache_service
    try:
        _eval_cache_service = EvalCacheService(path)
    except CacheFormatError as exc:
        logger.warning("%s; continuing without persistent cache", exc)
        _eval_cache_service = EvalCacheService(path=None, use_env=False)
    return _eval_cache_service


def reset_caches() -> None:
    """Drop module-level caches (used between test runs)"""
    global _evaluator_cache, _eval_cache_service
    if _evaluator_cache is not None:
        _evaluator_cache.clear_cache()
    _evaluator_cache = None
    _eval_cache_service = None
