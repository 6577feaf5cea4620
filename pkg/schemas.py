from pydantic import BaseModel, ConfigDict, Field
from typing import List, Optional
from enum import Enum

from config import settings


class OutputFormat(str, Enum):
    JSON = "json"
    CSV = "csv"
    MD = "md"


class ModTestVerdict(str, Enum):
    PROVEN_NO_ROOT = "ProvenNoRoot"
    INCONCLUSIVE = "Inconclusive"


class DiscrepancyKind(str, Enum):
    MISSING_FROM_ENUMERATION = "missing_from_enumeration"
    MISSING_FROM_PAPER = "missing_from_paper"
    REFUTED = "refuted"
    ERRATUM = "erratum"


class Versioned(BaseModel):
    """Top-level documents carry the wire format version under "schema"."""

    model_config = ConfigDict(populate_by_name=True)

    schema_version: int = Field(settings.SCHEMA_VERSION, alias="schema", description="Wire format version")


# Shared building blocks
class PrimePowerOut(BaseModel):
    p: int
    n: int


class LocalDataOut(BaseModel):
    d: int = Field(..., description="Local degree at every place above p")
    r: int = Field(..., description="Number of places above p")
    invariant: str = Field(..., description="Invariant at places above p, in Q/Z")
    has_real_place: bool = False


class ClassOut(BaseModel):
    h: List[int] = Field(..., description="Minimal polynomial, ascending coefficients")
    e: int
    g: int
    P: List[int] = Field(..., description="Characteristic polynomial h^e, ascending coefficients")
    order_L: int = Field(..., description="Order of the root of unity in pi = sqrt(q) * zeta_L^k")
    k: int
    m: int = Field(..., description="Cyclotomic conductor containing pi")
    local: LocalDataOut


# Enumeration
class EnumerationOut(Versioned):
    q: PrimePowerOut
    g: int
    classes: List[ClassOut]
    scanned_orders: List[int]


class FactorOut(BaseModel):
    multiplicity: int
    realizable: bool = Field(..., description="Multiplicity is divisible by e")
    isogeny_class: ClassOut


class ClassificationOut(Versioned):
    q: PrimePowerOut
    P: List[int]
    g: int
    supersingular: bool
    simple: bool
    realizable: bool
    root_orders: Optional[List[int]] = Field(None, description="m with H(t) = prod Phi_m")
    factors: List[FactorOut] = Field(default_factory=list)


class MinPolyOut(Versioned):
    q: PrimePowerOut
    isogeny_class: ClassOut


# Table verification
class DiscrepancyOut(BaseModel):
    kind: DiscrepancyKind
    P: List[int]
    template_key: Optional[str] = None
    detail: Optional[str] = None
    related: Optional[List[int]] = Field(None, description="Printed polynomial or square root, when relevant")


class DiscrepancyReportOut(BaseModel):
    q: PrimePowerOut
    g: int
    ok: bool
    matched: int
    missing_from_enumeration: List[DiscrepancyOut] = Field(default_factory=list)
    missing_from_paper: List[DiscrepancyOut] = Field(default_factory=list)
    refuted: List[DiscrepancyOut] = Field(default_factory=list)
    errata: List[DiscrepancyOut] = Field(default_factory=list)


class VerificationOut(Versioned):
    ok: bool
    reports: List[DiscrepancyReportOut]


# Families
class FamilyMemberOut(BaseModel):
    n: int
    sign: int
    P: List[int]


class FamilyOut(BaseModel):
    p: int
    multipliers: List[int]
    formula: str
    template_key: Optional[str] = None
    members: List[FamilyMemberOut]


class ResidualOut(BaseModel):
    p: int
    n: int
    P: List[int]


class FamilyScanOut(Versioned):
    g: int
    families: List[FamilyOut]
    residuals: List[ResidualOut] = Field(default_factory=list)


# Curves
class PointCountsOut(Versioned):
    q: int
    f: str = Field(..., description="Right-hand side of y^2 + y = f(x)")
    modulus: str = Field(..., description="Field modulus, most significant bit first")
    generator_exponent: int = Field(..., description="a = t^j")
    genus: int
    counts: List[int] = Field(..., description="N_1, N_2, ... over F_(q^i)")
    P: Optional[List[int]] = Field(None, description="Recovered Frobenius polynomial, ascending")


class ModTestOut(Versioned):
    poly: str
    verdict: ModTestVerdict


# Error Response
class ErrorOut(Versioned):
    error: str
    message: str
    exit_code: int
    offset: Optional[int] = None
    expected: Optional[List[str]] = None
