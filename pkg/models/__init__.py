"""
Models module - data types of the toolkit
"""

from .letter_word import LetterWord
from .index import Index
from .word_poly import WordPoly
from .power_series import PowerSeries
from .bivariate_series import BivariateSeries
from .eval_config import EvalConfig
from .eval_result import EvalResult
from .rational_matrix import RationalMatrix
from .relation_candidate import RelationCandidate, RelationCheck
from .sequence_table import SequenceTable, ConsistencyReport
from .theorem_report import TheoremReport, CoefficientCheck
from .errors import (
    ZcError,
    InadmissibleError,
    EvaluationError,
    ConvergenceError,
    SequenceError,
    CacheFormatError,
)

__all__ = [
    'LetterWord',
    'Index',
    'WordPoly',
    'PowerSeries',
    'BivariateSeries',
    'EvalConfig',
    'EvalResult',
    'RationalMatrix',
    'RelationCandidate',
    'RelationCheck',
    'SequenceTable',
    'ConsistencyReport',
    'TheoremReport',
    'CoefficientCheck',
    'ZcError',
    'InadmissibleError',
    'EvaluationError',
    'ConvergenceError',
    'SequenceError',
    'CacheFormatError'
]
