# src/schemas.py

from pydantic import BaseModel, Field, model_validator
from typing import Optional, List, Dict
from enum import Enum

from src.kontsevich.exactnum import format_rational


# --- Enums --- #
class TableName(str, Enum):
    CONICS_P2 = "conics-p2"
    CONICS_P3 = "conics-p3"
    CUBICS_P2 = "cubics-p2"
    CUBICS_P3 = "cubics-p3"
    QUARTICS_P2 = "quartics-p2"
    CUSPIDAL = "cuspidal"


# --- Shared --- #
class RationalValue(BaseModel):
    """Exact result: ``value`` is the canonical ``p/q`` text, ``integral`` tells whether q = 1"""
    value: str
    integral: bool

    @classmethod
    def of(cls, value) -> "RationalValue":
        return cls(value=format_rational(value), integral=value.denominator == 1)


class HealthResponse(BaseModel):
    status: str = "ok"
    service: str
    version: str
    cached_entries: int


# --- Spaces --- #
class BoundaryComponent(BaseModel):
    symbol: str = Field(..., description="K{A=...;dA=...} text of the component")
    markings: List[int]
    degree: int


class SpaceResponse(BaseModel):
    space: str
    dimension: int
    picard_rank: Optional[int] = Field(None, description="null for degree 0")
    boundary: List[BoundaryComponent]


# --- Evaluation --- #
class EvalRequest(BaseModel):
    space: str = Field(..., examples=["r=2,d=3,n=0"])
    monomial: str = Field(..., examples=["H^3 K{dA=1}^5"])


class EvalResponse(RationalValue):
    space: str
    monomial: str


# --- Gromov-Witten --- #
class GWRequest(BaseModel):
    r: int = Field(..., ge=2)
    d: int = Field(..., ge=0)
    insertions: List[int] = Field(default_factory=list)


class GWResponse(RationalValue):
    r: int
    d: int
    insertions: List[int]


# --- Characteristic numbers --- #
class CharNumRequest(BaseModel):
    r: int = Field(..., ge=2)
    d: int = Field(..., ge=1)
    alpha: Dict[int, int] = Field(default_factory=dict, description="codimension -> number of conditions")
    beta: int = Field(0, ge=0, description="number of tangent hyperplanes")
    all_markings: bool = False
    check_integer: bool = False


class CharNumResponse(RationalValue):
    query: str


class ConicRequest(BaseModel):
    points: int = Field(0, ge=0)
    lines: int = Field(0, ge=0)
    conics: int = Field(0, ge=0)
    check_integer: bool = False

    @model_validator(mode="after")
    def validate_total(self) -> "ConicRequest":
        total = self.points + self.lines + self.conics
        if total != 5:
            raise ValueError(f"conics need 5 conditions, got {total}")
        return self


# --- Tables --- #
class TableRowResponse(BaseModel):
    section: str
    space: str
    expression: str
    value: str


class TableResponse(BaseModel):
    table_id: TableName
    rows: List[TableRowResponse]
