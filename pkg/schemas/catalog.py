"""Pydantic schemas for catalog and classification records."""
from typing import Dict, List, Optional, Tuple

from pydantic import BaseModel, Field


class FamilyFormulas(BaseModel):
    """Counts of the m-th member as [coefficient of m, constant]."""
    kind: str
    param_bound: int = Field(..., description="Smallest m admitted for the family")
    V: Tuple[int, int]
    E: Tuple[int, int]
    F: Tuple[int, int]
    face_counts: Dict[str, Tuple[int, int]] = Field(
        default_factory=dict, description="Face degree (or 'm') to linear count formula"
    )


class CatalogRecord(BaseModel):
    """One polyhedron or family, as emitted by `catalog` and `enumerate`."""
    name: str
    cls: str = Field(..., alias="class")
    symbol: str
    figure: Optional[List[int]] = Field(None, description="Canonical vertex figure; null for families")
    V: Optional[int] = None
    E: Optional[int] = None
    F: Optional[int] = None
    face_counts: Dict[int, int] = Field(default_factory=dict)
    proof_case: str
    proof_cases: List[str]
    notes: Optional[str] = None
    family: Optional[FamilyFormulas] = None

    class Config:
        populate_by_name = True
        json_schema_extra = {
            "example": {
                "name": "truncated cube",
                "class": "archimedean",
                "symbol": "3.8^2",
                "figure": [3, 8, 8],
                "V": 24,
                "E": 36,
                "F": 14,
                "face_counts": {"3": 8, "8": 6},
                "proof_case": "r3-triangle",
                "proof_cases": ["r3-triangle"],
                "notes": None,
                "family": None,
            }
        }


class CatalogDocument(BaseModel):
    entries: List[CatalogRecord]
