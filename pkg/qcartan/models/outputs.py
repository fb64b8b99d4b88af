from pydantic import BaseModel, Field
from typing import Any, Dict, List, Optional

from qcartan.domain.qpoly import ProductForm, QPoly

PartitionJson = List[int]
PolyJson = List[List[int]]


class ProductFormOut(BaseModel):
    p: int = Field(..., ge=2)
    label: str
    factors: Dict[str, int] = Field(default_factory=dict)

    @classmethod
    def of(cls, form: ProductForm) -> "ProductFormOut":
        return cls(p=form.p, label=form.label(), factors={str(l): e for l, e in form.factors})


class PolyOut(BaseModel):
    label: str
    terms: PolyJson

    @classmethod
    def of(cls, poly: QPoly) -> "PolyOut":
        return cls(label=str(poly), terms=poly.to_json())


class PartitionListing(BaseModel):
    kind: str
    n: int = Field(..., ge=0)
    p: Optional[int] = None
    r: Optional[int] = None
    count: int
    items: List[Any]


class WeightEntry(BaseModel):
    partition: PartitionJson
    weight: ProductFormOut


class WeightListing(BaseModel):
    which: str
    p: int
    n: int
    weights: List[WeightEntry]


class GlaisherOut(BaseModel):
    partition: PartitionJson
    p: int
    image: PartitionJson
    steps: Dict[str, int]
    weight: ProductFormOut


class BlockDeterminantOut(BaseModel):
    d: int
    cores: int = Field(..., description="c_p(n - pd), the number of blocks of weight d")
    value: ProductFormOut


class DeltaOut(BaseModel):
    p: int
    n: int
    value: ProductFormOut
    expanded: Optional[PolyJson] = None
    blocks: Optional[List[BlockDeterminantOut]] = None


class DecompositionEntry(BaseModel):
    row: PartitionJson
    col: PartitionJson
    value: PolyOut


class DecompositionOut(BaseModel):
    p: int
    n: int
    rows: List[PartitionJson]
    cols: List[PartitionJson]
    entries: List[DecompositionEntry]


class CartanOut(BaseModel):
    p: int
    n: int
    block: Optional[str] = None
    labels: List[PartitionJson]
    entries: Optional[List[List[PolyOut]]] = None
    determinant: Optional[PolyOut] = None
    degrees: Optional[List[List[int]]] = Field(None, description="Degree of every entry, -1 for zero entries")


class SnfOut(BaseModel):
    p: int
    n: int
    block: Optional[str] = None
    divisors: List[str]
    rank_deficient: bool = False


class ComparisonOut(BaseModel):
    lhs: str
    rhs: str
    equal: bool
    first_difference: Optional[int] = None
    lhs_divisors: List[str]
    rhs_divisors: List[str]


class ConjectureOut(BaseModel):
    p: int
    n: int
    blockwise: bool
    all_equal: bool
    comparisons: List[ComparisonOut]


class HAbacusOut(BaseModel):
    partition: PartitionJson
    core: PartitionJson
    quotient: PartitionJson
    unfolded: Optional[PartitionJson] = None


class SeriesIdentityOut(BaseModel):
    name: str
    parameters: Dict[str, Any] = Field(default_factory=dict)
    passed: bool
    first_failure: Optional[int] = None
    expected: Optional[int] = None
    actual: Optional[int] = None


class SeriesCheckOut(BaseModel):
    p: int
    order: int
    all_passed: bool
    identities: List[SeriesIdentityOut]
