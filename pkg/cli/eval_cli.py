"""
Eval command - numerical value of Z_c(index) or I(word)
"""

import logging
from typing import Tuple

from mpmath import mp

from cli.schemas import CommandConfig, EvalOutput
from cli.shared import get_eval_cache, get_evaluator
from models.eval_config import EvalConfig
from models.index import Index
from models.letter_word import LetterWord
from services.words_service import WordsService

logger = logging.getLogger(__name__)

DEFAULT_DIGITS = 50


def register(subparsers, common) -> None:
    parser = subparsers.add_parser("eval", parents=[common], help="Evaluate Z_c(index) or I(word)")
    target = parser.add_mutually_exclusive_group(required=True)
    target.add_argument("--index", help="Index such as 1,3")
    target.add_argument("--word", help="Word such as 11000")
    parser.add_argument("--c", required=True, help="Exact rational parameter, e.g. --c=-1/2")
    parser.add_argument("--digits", type=int, default=DEFAULT_DIGITS, help="Decimal digits")
    parser.add_argument("--cut", default="fixed", help="'fixed' or a rational in (0, 1)")
    parser.set_defaults(handler=run_eval)


def resolve_target(index_text, word_text) -> Tuple[LetterWord, object]:
    """Admissible word plus the parsed input, for rendering"""
    parsed = Index.parse(index_text) if index_text is not None else LetterWord.parse(word_text)
    return WordsService.as_word(parsed), parsed


def run_eval(args, config: CommandConfig) -> Tuple[EvalOutput, str]:
    """
    Evaluate one value, going through the persistent cache.

    Returns:
        (EvalOutput, text line)
    """
    word, parsed = resolve_target(args.index, args.word)
    digits = config.digits or DEFAULT_DIGITS
    cache = get_eval_cache(config.cache_path, disabled=config.no_cache)
    cut_label = "fixed" if config.cut == "fixed" else config.cut

    # values are cached for the default cut only; any cut gives the same number
    value = cache.get(word, config.c, digits)
    order = None
    cached = value is not None
    if value is None:
        cfg = EvalConfig.from_digits(config.c, digits, cut=config.cut_value)
        result = get_evaluator().evaluate_word_detailed(word, cfg)
        value, order = result.value, result.order
        cache.put(word, config.c, digits, value)
        cache.save()
    else:
        logger.info("I(%s) at c = %s taken from cache", word, config.c)

    with mp.workdps(digits + 10):
        text = mp.nstr(value, digits)
    output = EvalOutput(
        index=list(WordsService.word_to_index(word).parts),
        word=str(word),
        c=str(config.c),
        digits=digits,
        value=text,
        cut=cut_label,
        order=order,
        cached=cached,
    )
    return output, text
