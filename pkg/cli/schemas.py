"""
CLI Schemas - command configuration and result models
"""

from fractions import Fraction
from typing import Dict, List, Literal, Optional

from pydantic import BaseModel, ConfigDict, Field, field_serializer, field_validator, model_validator

from cli.shared import parse_rational, parse_rational_list
from models.eval_config import DEFAULT_C_MAX

COMMANDS = ("eval", "dual", "shuffle", "bdim", "relations", "genfun", "mtv-guess", "tables")


class CommandConfig(BaseModel):
    """Validated flags of one CLI invocation, checked before any computation"""
    model_config = ConfigDict(arbitrary_types_allowed=True)

    command: Literal["eval", "dual", "shuffle", "bdim", "relations", "genfun", "mtv-guess", "tables"]
    c: Optional[Fraction] = Field(default=None, description="Exact rational parameter, c < 1")
    digits: Optional[int] = Field(default=None, ge=20, description="Decimal precision")
    cut: str = Field(default="fixed", description="'fixed' or an exact rational in (0, 1)")
    weight: Optional[int] = Field(default=None, ge=0, le=13)
    max_weight: Optional[int] = Field(default=None, ge=0, le=13)
    order: Optional[int] = Field(default=None, ge=1, le=12)
    terms: Optional[int] = Field(default=None, ge=1, le=10_000)
    c_samples: Optional[List[Fraction]] = Field(default=None, description="Discovery parameters, must include 0 and -1")
    verify_samples: Optional[List[Fraction]] = Field(default=None, description="Fresh parameters for --verify")
    verify: bool = False
    output: Literal["text", "json"] = "text"
    cache_path: Optional[str] = None
    no_cache: bool = False
    jobs: int = Field(default=1, ge=1)

    @field_validator("c", mode="before")
    @classmethod
    def parse_c(cls, value):
        if value is None or isinstance(value, Fraction):
            return value
        return parse_rational(value)

    @field_validator("c_samples", "verify_samples", mode="before")
    @classmethod
    def parse_samples(cls, value):
        if value is None or isinstance(value, (list, tuple)):
            return value
        samples = parse_rational_list(value)
        if not samples:
            raise ValueError("expected at least one rational")
        return samples

    @field_validator("cut")
    @classmethod
    def check_cut(cls, value: str) -> str:
        if value == "fixed":
            return value
        cut = parse_rational(value)
        if not 0 < cut < 1:
            raise ValueError(f"cut must lie in (0, 1), got {value}")
        return str(cut)

    @model_validator(mode="after")
    def check_parameters(self):
        if self.c is not None and self.c >= 1:
            raise ValueError(f"c must be < 1, got {self.c}")
        for name in ("c_samples", "verify_samples"):
            for c in getattr(self, name) or ():
                if c > DEFAULT_C_MAX:
                    raise ValueError(f"{name}: c = {c} exceeds the supported maximum {DEFAULT_C_MAX}")
        if self.c_samples is not None:
            if len(self.c_samples) < 3 or 0 not in self.c_samples or -1 not in self.c_samples:
                raise ValueError("c_samples needs at least three values including 0 and -1")
            reused = set(self.c_samples) & set(self.verify_samples or ())
            if self.verify and reused:
                repeated = ", ".join(str(c) for c in sorted(reused))
                raise ValueError(f"verify_samples overlap c_samples: {repeated}")
        return self

    @field_serializer("c")
    def serialize_c(self, value: Optional[Fraction]) -> Optional[str]:
        return None if value is None else str(value)

    @field_serializer("c_samples", "verify_samples")
    def serialize_samples(self, value: Optional[List[Fraction]]) -> Optional[List[str]]:
        return None if value is None else [str(c) for c in value]

    @property
    def as_json(self) -> bool:
        return self.output == "json"

    @property
    def cut_value(self):
        return "fixed" if self.cut == "fixed" else parse_rational(self.cut)


class PolyTerm(BaseModel):
    """One term of a shuffle algebra element"""
    index: Optional[List[int]] = None
    word: Optional[str] = None
    coeff: str = Field(..., description="Exact rational p/q")


class EvalOutput(BaseModel):
    """Result of `eval`"""
    index: Optional[List[int]] = None
    word: str
    c: str
    digits: int
    value: str
    cut: str
    order: Optional[int] = Field(default=None, description="Series order used (absent for cached values)")
    cached: bool = False

    model_config = ConfigDict(json_schema_extra={
        "example": {
            "index": [1, 2], "word": "110", "c": "0", "digits": 40,
            "value": "1.202056903159594285399738161511449990765", "cut": "fixed",
            "order": 300, "cached": False,
        }
    })


class DualOutput(BaseModel):
    """Result of `dual`"""
    input: str
    dual: str
    self_dual: bool


class ShuffleOutput(BaseModel):
    """Result of `shuffle`"""
    left: str
    right: str
    text: str
    terms: List[PolyTerm]


class BdimOutput(BaseModel):
    """Result of `bdim`"""
    dims: List[int]
    ranks: List[int]


class RelationOutput(BaseModel):
    coeffs: List[int]
    text: str
    residuals: Dict[str, str] = Field(default_factory=dict)
    verified: Optional[bool] = None
    verification: Dict[str, str] = Field(default_factory=dict)


class RelationsOutput(BaseModel):
    """Result of `relations`"""
    weight: int
    digits: int
    samples: List[str]
    basis: List[List[int]]
    relations: List[RelationOutput]
    dimension_estimate: int
    contains_printed: Optional[bool] = None
    printed_count: Optional[int] = Field(default=None, description="Number of relations listed in the printed tables")


class CoefficientOutput(BaseModel):
    i: int
    j: int
    lhs: str
    rhs: str
    discrepancy: str


class GenfunOutput(BaseModel):
    """Result of `genfun`"""
    c: str
    order: int
    precision: int
    path: str
    tolerance: str
    max_discrepancy: str
    passed: bool
    first_failure: Optional[List[int]] = None
    coefficients: List[CoefficientOutput]


class MtvGuessOutput(BaseModel):
    """Result of `mtv-guess`"""
    seed: List[int]
    terms: List[int]
    table: Dict[str, List[Optional[int]]]
    consistent: bool
    first_failure: Optional[int] = None


class TableRow(BaseModel):
    name: str
    golden: List[Optional[int]]
    computed: List[Optional[int]]
    matches: bool


class TablesOutput(BaseModel):
    """Result of `tables`"""
    weights: List[int]
    rows: List[TableRow]
