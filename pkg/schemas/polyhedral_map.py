"""Pydantic schema for an exported polyhedral map."""
from typing import Dict, List, Optional

from pydantic import BaseModel, Field


class MapDocument(BaseModel):
    name: str
    V: int
    E: int
    F: int
    face_counts: Dict[int, int]
    valence_counts: Dict[int, int]
    figure: Optional[List[int]] = Field(None, description="Common vertex figure, null if not uniform")
    symbol: Optional[str] = None
    uniform: bool
    bipartite: bool
    euler_ok: bool
    balance_ok: bool
    problems: List[str] = Field(default_factory=list)
    faces: List[List[int]] = Field(
        ..., description="Cyclic vertex lists, vertices numbered by rotation-orbit discovery order"
    )
