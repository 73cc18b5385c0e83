"""
Data Loader Service
"""

import json
import logging
from functools import lru_cache
from pathlib import Path
from typing import Dict, List, Optional

from models.errors import ZcError
from models.index import Index

logger = logging.getLogger(__name__)

GOLDEN_FORMAT = "zc-golden/1"
GOLDEN_FILE = Path(__file__).resolve().parent.parent / "data" / "golden_tables.json"


@lru_cache(maxsize=4)
def _load(path: str) -> Dict:
    file_path = Path(path)
    if not file_path.exists():
        raise FileNotFoundError(f"File does not exist: {file_path}")
    with open(file_path, "r", encoding="utf-8") as f:
        data = json.load(f)
    if data.get("format") != GOLDEN_FORMAT:
        raise ZcError(f"Unexpected golden table format {data.get('format')!r} in {file_path}")
    logger.debug("Loaded golden tables from %s", file_path)
    return data


class DataLoaderService:
    """
    Service for the printed reference data: dimension rows, the MTV sequence
    table and the explicit relations in weights 7 and 8.
    """

    @staticmethod
    def load_golden_tables(path: Optional[str] = None) -> Dict:
        """
        Load (and cache) the golden tables.

        Args:
            path: JSON file (default: data/golden_tables.json)

        Returns:
            Parsed JSON document
        """
        return _load(str(path or GOLDEN_FILE))

    @staticmethod
    def dimension_row(name: str, path: Optional[str] = None) -> List[int]:
        """Row "MZV", "MTV", "A_MTV_c" or "B", indexed by weight from 0"""
        rows = DataLoaderService.load_golden_tables(path)["dimensions"]
        if name not in rows or name == "weights":
            raise KeyError(f"Unknown dimension row: {name}")
        return list(rows[name])

    @staticmethod
    def mtv_guess_rows(path: Optional[str] = None) -> Dict[str, List[Optional[int]]]:
        """Rows A, B, B-A, A#B and the printed 34-term extension"""
        return {k: list(v) for k, v in DataLoaderService.load_golden_tables(path)["mtv_guess"].items()}

    @staticmethod
    def relation_terms(weight: int, path: Optional[str] = None) -> List[Dict[Index, int]]:
        """
        Explicit relations of a weight as {index: coefficient} maps.

        Weight 8 relations are printed as coefficient lists over a fixed basis
        and are converted here.
        """
        relations = DataLoaderService.load_golden_tables(path)["relations"].get(str(weight))
        if relations is None:
            return []
        if "relations" in relations:
            return [
                {Index(tuple(t["index"])): int(t["coeff"]) for t in terms}
                for terms in relations["relations"]
            ]
        basis = DataLoaderService.printed_basis(weight, path)
        return [
            {idx: int(v) for idx, v in zip(basis, coeffs) if v}
            for coeffs in relations["coefficient_lists"]
        ]

    @staticmethod
    def printed_basis(weight: int, path: Optional[str] = None) -> Optional[List[Index]]:
        """Printed list of indices spanning the quotient in this weight, if any"""
        relations = DataLoaderService.load_golden_tables(path)["relations"].get(str(weight), {})
        if "basis" not in relations:
            return None
        return [Index(tuple(parts)) for parts in relations["basis"]]

    @staticmethod
    def coefficient_lists(weight: int, path: Optional[str] = None) -> List[List[int]]:
        relations = DataLoaderService.load_golden_tables(path)["relations"].get(str(weight), {})
        return [list(v) for v in relations.get("coefficient_lists", [])]

    @staticmethod
    def relation_count(weight: int, path: Optional[str] = None) -> Optional[int]:
        """Number of relations beyond duality reported for the weight"""
        counts = DataLoaderService.load_golden_tables(path)["relations"]["counts"]
        value = counts.get(str(weight))
        return None if value is None else int(value)
