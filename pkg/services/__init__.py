"""
Services module - Business logic
"""

from .words_service import WordsService
from .shuffle_service import ShuffleService
from .bquotient_service import BQuotientService
from .evaluator_service import EvaluatorService
from .quadrature_oracle_service import QuadratureOracleService
from .eval_cache_service import EvalCacheService
from .genfun_service import GenfunService
from .lattice_service import LatticeService
from .relations_service import RelationsService
from .mtv_guess_service import MtvGuessService
from .data_loader_service import DataLoaderService

__all__ = [
    'WordsService',
    'ShuffleService',
    'BQuotientService',
    'EvaluatorService',
    'QuadratureOracleService',
    'EvalCacheService',
    'GenfunService',
    'LatticeService',
    'RelationsService',
    'MtvGuessService',
    'DataLoaderService'
]
