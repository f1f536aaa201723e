"""Request and response schemas for every operation."""

from __future__ import annotations

from typing import Literal, Optional

from pydantic import BaseModel, Field


class ValidateRequest(BaseModel):
    text: str


class ValidateResponse(BaseModel):
    valid: bool
    violations: list[str]
    palfs: list[str]


class InvariantRecord(BaseModel):
    palf: str
    name: str
    value: str


class InvariantsRequest(BaseModel):
    text: str
    palf: Optional[str] = None


class InvariantsResponse(BaseModel):
    records: list[InvariantRecord]


class MonodromyRequest(BaseModel):
    text: str
    palf: Optional[str] = None
    show: Literal["arcs", "abelianized"] = "arcs"


class MonodromyResponse(BaseModel):
    palf: str
    arcs: Optional[list[str]] = None
    matrix: Optional[list[list[int]]] = None


class CompareRequest(BaseModel):
    text_a: str
    text_b: str
    palf_a: Optional[str] = None
    palf_b: Optional[str] = None


class CompareRowModel(BaseModel):
    name: str
    left: str
    right: str
    equal: bool


class CompareResponse(BaseModel):
    rows: list[CompareRowModel]
    invariants_equal: bool
    same_fiber: bool
    relation: str


class HurwitzSearchRequest(BaseModel):
    text_a: str
    text_b: str
    depth: int = Field(ge=0)
    palf_a: Optional[str] = None
    palf_b: Optional[str] = None
    conjugation: bool = False


class MoveModel(BaseModel):
    index: int
    direction: Literal["left", "right"]


class HurwitzSearchResponse(BaseModel):
    found: bool
    moves: Optional[list[MoveModel]] = None
    depth: int


class GenerateRequest(BaseModel):
    which: Literal["w1", "c1", "c2"]
    m: Optional[int] = None


class GenerateResponse(BaseModel):
    text: str


class RelationsRequest(BaseModel):
    kind: Literal["lantern", "commuting", "conjugation"]
    boundaries: int = Field(default=4, ge=2)


class RelationsResponse(BaseModel):
    kind: str
    boundaries: int
    holds: bool


class RenderRequest(BaseModel):
    text: str
    palf: Optional[str] = None


class RenderResponse(BaseModel):
    svg: str
