"""Pydantic schemas for oracle sweeps and diffs."""
from typing import List, Optional

from pydantic import BaseModel, Field


class FeasibleRecord(BaseModel):
    figure: List[int]
    symbol: str
    V: int
    E: int
    F: int


class SpuriousRecord(BaseModel):
    figure: List[int]
    symbol: str
    filter: Optional[str] = Field(None, description="Configuration filter ruling the figure out")
    proof_case: Optional[str] = None
    description: Optional[str] = None


class OracleDocument(BaseModel):
    p_max: int
    feasible: List[FeasibleRecord]
    realized: Optional[List[str]] = None
    spurious: Optional[List[SpuriousRecord]] = None
    unexplained: Optional[List[str]] = None
