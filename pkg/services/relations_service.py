"""
Relations Service - integer relations among Z_c holding for several c at once
"""

import logging
import math
from fractions import Fraction
from functools import reduce
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from mpmath import mp, mpf

from models.eval_config import EvalConfig, digits_to_bits
from models.index import Index
from models.rational_matrix import RationalMatrix
from models.relation_candidate import RelationCandidate, RelationCheck
from models.word_poly import WordPoly
from services.bquotient_service import BQuotientService
from services.data_loader_service import DataLoaderService
from services.evaluator_service import EvaluatorService
from services.lattice_service import LatticeService
from services.shuffle_service import ShuffleService
from services.words_service import WordsService

logger = logging.getLogger(__name__)

DEFAULT_DISCOVERY_SAMPLES: Tuple[Fraction, ...] = (
    Fraction(0), Fraction(-1), Fraction(1, 2), Fraction(-1, 2), Fraction(1, 3),
)
DEFAULT_VERIFICATION_SAMPLES: Tuple[Fraction, ...] = (Fraction(2, 5), Fraction(-2, 3))
DEFAULT_HEIGHT_BOUND = 2 ** 16
EXTRA_EVAL_DIGITS = 10


def working_digits(weight: int) -> int:
    """Decimal digits D used for relation search in a given weight"""
    return 25 + 15 * weight


def acceptance_threshold(digits: int) -> mpf:
    """10^{-D/2}"""
    return mpf(10) ** (-(digits // 2))


class RelationsService:
    """
    Service for finding linear relations beyond duality.

    Values are taken over a basis of the quotient by the duality ideal, so
    every relation found is new modulo duality and its shuffle consequences.
    The lattice [I | round(10^D·Z_c(idx))] stacks all parameter samples side
    by side, which makes every short vector a simultaneous relation.
    """

    def __init__(self, evaluator: Optional[EvaluatorService] = None, jobs: Optional[int] = 1):
        """
        Args:
            evaluator: Evaluator for the value matrix
            jobs: Worker processes per sample
        """
        self.evaluator = evaluator or EvaluatorService()
        self.jobs = jobs

    @staticmethod
    def basis_indices(weight: int) -> List[Index]:
        """
        Indices whose classes form a basis of 𝓑_weight.

        Weight 8 uses the printed 31-element list (checked to be a basis);
        other weights use canonical representatives in lexicographic word order.
        """
        printed = DataLoaderService.printed_basis(weight)
        if printed is not None:
            words = [WordsService.index_to_word(idx) for idx in printed]
            BQuotientService.quotient_basis(weight, preferred=words)
            return printed
        return [WordsService.word_to_index(w) for w in BQuotientService.quotient_basis(weight)
                if not w.is_empty()]

    def value_matrix(self, weight: int, c_samples: Sequence[Fraction], digits: Optional[int] = None,
                     basis: Optional[Sequence[Index]] = None) -> Tuple[List[Index], List[List[mpf]]]:
        """
        Values Z_c(idx) for every basis index and sample.

        Args:
            weight: Weight
            c_samples: Parameter values (each < 1)
            digits: Decimal working digits (default: 25 + 15·weight)
            basis: Row indices (default: basis_indices(weight))

        Returns:
            (basis, rows) with rows[i][s] = Z_{c_s}(basis[i])
        """
        digits = digits or working_digits(weight)
        basis = list(basis) if basis is not None else self.basis_indices(weight)
        words = [WordsService.index_to_word(idx) for idx in basis]
        columns = []
        for c in c_samples:
            cfg = EvalConfig(c=Fraction(c), precision=digits_to_bits(digits + EXTRA_EVAL_DIGITS))
            logger.info("Weight %d: evaluating %d values at c = %s (%d digits)", weight, len(words), c, digits)
            columns.append(self.evaluator.evaluate_many(words, cfg, jobs=self.jobs))
        rows = [[columns[s][i] for s in range(len(columns))] for i in range(len(words))]
        return basis, rows

    def find_relations(self, weight: int, c_samples: Sequence[Fraction] = DEFAULT_DISCOVERY_SAMPLES,
                       digits: Optional[int] = None,
                       height_bound: int = DEFAULT_HEIGHT_BOUND) -> List[RelationCandidate]:
        """
        Integer relations over the 𝓑 basis holding at every sample.

        Args:
            weight: Weight
            c_samples: At least three samples, including 0 and -1
            digits: Decimal working digits D
            height_bound: Largest admissible |coefficient|

        Returns:
            Linearly independent primitive relations (possibly none)
        """
        samples = [Fraction(c) for c in c_samples]
        if len(samples) < 3 or 0 not in samples or -1 not in samples:
            raise ValueError("Relation search needs at least three samples including 0 and -1")
        if height_bound < 1:
            raise ValueError("height_bound must be >= 1")
        digits = digits or working_digits(weight)
        basis, values = self.value_matrix(weight, samples, digits)
        n = len(basis)

        with mp.workdps(digits + EXTRA_EVAL_DIGITS):
            scale = mpf(10) ** digits
            lattice = [
                [1 if j == i else 0 for j in range(n)] + [int(mp.nint(scale * v)) for v in values[i]]
                for i in range(n)
            ]
            reduced = LatticeService.reduce(lattice)
            threshold = acceptance_threshold(digits)

            found: List[RelationCandidate] = []
            span = RationalMatrix(range(n))
            for row in reduced:
                coeffs = row[:n]
                if not any(coeffs) or max(abs(v) for v in coeffs) > height_bound:
                    continue
                residuals = {
                    c: abs(mp.fsum(v * values[i][s] for i, v in enumerate(coeffs) if v))
                    for s, c in enumerate(samples)
                }
                if any(r >= threshold for r in residuals.values()):
                    continue
                if span.add_row({i: v for i, v in enumerate(coeffs) if v}):
                    found.append(RelationCandidate.primitive(weight, basis, coeffs, residuals))

        logger.info("Weight %d: %d relations beyond duality over %d basis elements", weight, len(found), n)
        return found

    def verify_relation(self, cand: RelationCandidate,
                        fresh_samples: Sequence[Fraction] = DEFAULT_VERIFICATION_SAMPLES,
                        digits: Optional[int] = None) -> RelationCheck:
        """
        Residuals |Σ vᵢ Z_c(idxᵢ)| at parameters not used for discovery.

        Returns:
            RelationCheck, passing when every residual is below 10^{-D/2}
        """
        samples = [Fraction(c) for c in fresh_samples]
        reused = set(samples) & set(cand.residuals)
        if reused:
            raise ValueError(f"Verification samples overlap discovery samples: {sorted(reused)}")
        digits = digits or working_digits(cand.weight)
        support = [(v, idx) for v, idx in cand.terms()]
        words = [WordsService.index_to_word(idx) for _, idx in support]
        residuals: Dict[Fraction, mpf] = {}
        for c in samples:
            cfg = EvalConfig(c=c, precision=digits_to_bits(digits + EXTRA_EVAL_DIGITS))
            values = self.evaluator.evaluate_many(words, cfg, jobs=self.jobs)
            with mp.workprec(cfg.working_precision):
                residuals[c] = abs(mp.fsum(v * value for (v, _), value in zip(support, values)))
            logger.debug("Relation residual at c = %s: %s", c, mp.nstr(residuals[c], 5))
        with mp.workdps(digits):
            threshold = acceptance_threshold(digits)
        return RelationCheck(relation=cand, residuals=residuals, threshold=threshold)

    @staticmethod
    def relation_rank(relations: Iterable[RelationCandidate]) -> int:
        matrix: Optional[RationalMatrix] = None
        for rel in relations:
            if matrix is None:
                matrix = RationalMatrix(rel.basis)
            matrix.add_row(rel.as_mapping())
        return 0 if matrix is None else matrix.rank

    def dimension_estimate(self, weight: int, relations: Optional[Sequence[RelationCandidate]] = None,
                           **search) -> int:
        """
        dim 𝓑_weight minus the rank of the relations found beyond duality.

        Args:
            weight: Weight
            relations: Already discovered relations (searched when omitted)
            **search: Forwarded to find_relations

        Returns:
            Estimated dimension of the span of all Z_c of this weight
        """
        if weight < 2:
            return 1 if weight == 0 else 0
        if relations is None:
            relations = self.find_relations(weight, **search)
        return BQuotientService.bdim(weight) - self.relation_rank(relations)

    @staticmethod
    def printed_relations(weight: int) -> List[RelationCandidate]:
        """Printed relations of the given weight, each over its own support"""
        out = []
        for terms in DataLoaderService.relation_terms(weight):
            basis = list(terms)
            out.append(RelationCandidate.primitive(weight, basis, [terms[idx] for idx in basis]))
        return out

    @staticmethod
    def to_poly(cand: RelationCandidate) -> WordPoly:
        """Σ vᵢ Z(idxᵢ) as an element of the shuffle algebra"""
        total = WordPoly.zero()
        for v, idx in cand.terms():
            total = total + ShuffleService.z(idx).scale(v)
        return total

    @classmethod
    def express_in_basis(cls, cand: RelationCandidate,
                         basis: Optional[Sequence[Index]] = None) -> Optional[RelationCandidate]:
        """
        Rewrite a relation over the 𝓑 basis by reducing modulo the duality ideal.

        Returns:
            Primitive relation over `basis`, or None when the relation already
            follows from duality
        """
        basis = list(basis) if basis is not None else cls.basis_indices(cand.weight)
        words = [WordsService.index_to_word(idx) for idx in basis]
        reduced = BQuotientService.normal_form(cls.to_poly(cand), words)
        vector = [Fraction(reduced.get(w, 0)) for w in words]
        if not any(vector):
            return None
        lcm = reduce(lambda a, b: a * b // math.gcd(a, b), (v.denominator for v in vector), 1)
        return RelationCandidate.primitive(cand.weight, basis, [int(v * lcm) for v in vector])

    @classmethod
    def span_contains(cls, relations: Sequence[RelationCandidate],
                      vectors: Sequence[RelationCandidate]) -> bool:
        """
        Is every vector in the rational span of the relations, after both are
        reduced onto the same 𝓑 basis?
        """
        if not vectors:
            return True
        weight = vectors[0].weight
        basis = cls.basis_indices(weight)
        matrix = RationalMatrix(basis)
        for rel in relations:
            expressed = cls.express_in_basis(rel, basis)
            if expressed is not None:
                matrix.add_row(expressed.as_mapping())
        for vec in vectors:
            expressed = cls.express_in_basis(vec, basis)
            if expressed is not None and not matrix.contains(expressed.as_mapping()):
                return False
        return True
