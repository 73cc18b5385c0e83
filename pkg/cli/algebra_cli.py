"""
Algebra commands - dual, shuffle and bdim
"""

import logging
from typing import Tuple

from cli.schemas import BdimOutput, CommandConfig, DualOutput, PolyTerm, ShuffleOutput
from models.index import Index
from models.letter_word import LetterWord
from services.bquotient_service import DEFAULT_MAX_WEIGHT, BQuotientService
from services.shuffle_service import ShuffleService
from services.words_service import WordsService

logger = logging.getLogger(__name__)


def register(subparsers, common) -> None:
    dual = subparsers.add_parser("dual", parents=[common], help="Dual index or word")
    target = dual.add_mutually_exclusive_group(required=True)
    target.add_argument("--index", help="Index such as 3")
    target.add_argument("--word", help="Word such as 100")
    dual.set_defaults(handler=run_dual)

    shuffle = subparsers.add_parser("shuffle", parents=[common], help="Shuffle product of two indices or words")
    shuffle.add_argument("left", help="Index (2 or Z(2)) or word (10). Text of only 0s and 1s is a word, "
                                      "so write Z(10) for the index (10)")
    shuffle.add_argument("right", help="Index or word, same forms as left")
    shuffle.set_defaults(handler=run_shuffle)

    bdim = subparsers.add_parser("bdim", parents=[common], help="Graded dimensions of the quotient by the duality ideal")
    bdim.add_argument("--max-weight", type=int, default=DEFAULT_MAX_WEIGHT)
    bdim.add_argument("--long", action="store_true", help="Allow weights above 10 (slow)")
    bdim.set_defaults(handler=run_bdim)


def run_dual(args, config: CommandConfig) -> Tuple[DualOutput, str]:
    parsed = Index.parse(args.index) if args.index is not None else LetterWord.parse(args.word)
    word = WordsService.as_word(parsed)
    dual = WordsService.dual(word)
    rendered = WordsService.format_like(dual, parsed)
    output = DualOutput(
        input=WordsService.format_like(word, parsed),
        dual=rendered,
        self_dual=WordsService.is_self_dual(word),
    )
    return output, rendered


def run_shuffle(args, config: CommandConfig) -> Tuple[ShuffleOutput, str]:
    left = WordsService.as_word(WordsService.parse_argument(args.left))
    right = WordsService.as_word(WordsService.parse_argument(args.right))
    product = ShuffleService.shuffle_words(left, right)
    text = ShuffleService.format_poly(product)
    output = ShuffleOutput(
        left=args.left,
        right=args.right,
        text=text,
        terms=[PolyTerm(**term) for term in ShuffleService.poly_to_json(product)],
    )
    return output, text


def run_bdim(args, config: CommandConfig) -> Tuple[BdimOutput, str]:
    max_weight = config.max_weight if config.max_weight is not None else DEFAULT_MAX_WEIGHT
    if max_weight > DEFAULT_MAX_WEIGHT and not args.long:
        raise ValueError(f"--max-weight above {DEFAULT_MAX_WEIGHT} needs --long")
    dims = BQuotientService.bdim_table(max_weight)
    ranks = BQuotientService.rank_table(max_weight)
    return BdimOutput(dims=dims, ranks=ranks), " ".join(str(d) for d in dims)
