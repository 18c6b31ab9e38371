"""
Case analysis classifying every uniform vertex figure on the sphere.

Valence r is at most 5, and every figure contains a triangle, square or
pentagon. Each (r, smallest face) subcase is closed by a bound from the
vertex-count denominator plus, where needed, a configuration argument.
"""
from __future__ import annotations

from dataclasses import replace
from fractions import Fraction
from itertools import count
from typing import Dict, List, Tuple

import structlog

from domain.classification import (
    Classification,
    FamilyKind,
    PolyhedronClass,
    PolyhedronFamily,
    ProofCase,
)
from domain.counting import Infeasible, valence_denominator, vertex_count, vertex_denominator
from domain.vertex_figure import VertexFigure

logger = structlog.get_logger()

EXPECTED_PLATONIC = 5
EXPECTED_ARCHIMEDEAN = 13
EXPECTED_FAMILIES = 2

PRISM_FAMILY = PolyhedronFamily(FamilyKind.PRISM, min_param=4)
ANTIPRISM_FAMILY = PolyhedronFamily(FamilyKind.ANTIPRISM, min_param=4)

SOLID_NAMES: Dict[Tuple[int, ...], Tuple[str, PolyhedronClass]] = {
    (3, 3, 3): ("tetrahedron", PolyhedronClass.PLATONIC),
    (4, 4, 4): ("cube", PolyhedronClass.PLATONIC),
    (3, 3, 3, 3): ("octahedron", PolyhedronClass.PLATONIC),
    (5, 5, 5): ("dodecahedron", PolyhedronClass.PLATONIC),
    (3, 3, 3, 3, 3): ("icosahedron", PolyhedronClass.PLATONIC),
    (3, 4, 3, 4): ("cuboctahedron", PolyhedronClass.ARCHIMEDEAN),
    (4, 6, 10): ("great rhombicosidodecahedron", PolyhedronClass.ARCHIMEDEAN),
    (4, 6, 8): ("great rhombicuboctahedron", PolyhedronClass.ARCHIMEDEAN),
    (3, 5, 3, 5): ("icosidodecahedron", PolyhedronClass.ARCHIMEDEAN),
    (3, 4, 5, 4): ("small rhombicosidodecahedron", PolyhedronClass.ARCHIMEDEAN),
    (3, 4, 4, 4): ("small rhombicuboctahedron", PolyhedronClass.ARCHIMEDEAN),
    (3, 3, 3, 3, 4): ("snub cube", PolyhedronClass.ARCHIMEDEAN),
    (3, 3, 3, 3, 5): ("snub dodecahedron", PolyhedronClass.ARCHIMEDEAN),
    (3, 8, 8): ("truncated cube", PolyhedronClass.ARCHIMEDEAN),
    (3, 10, 10): ("truncated dodecahedron", PolyhedronClass.ARCHIMEDEAN),
    (5, 6, 6): ("truncated icosahedron", PolyhedronClass.ARCHIMEDEAN),
    (4, 6, 6): ("truncated octahedron", PolyhedronClass.ARCHIMEDEAN),
    (3, 6, 6): ("truncated tetrahedron", PolyhedronClass.ARCHIMEDEAN),
    (3, 4, 4): ("triangular prism", PolyhedronClass.PRISM_FAMILY),
}

FAMILY_CLASSES: Dict[PolyhedronClass, FamilyKind] = {
    PolyhedronClass.PRISM_FAMILY: FamilyKind.PRISM,
    PolyhedronClass.ANTIPRISM_FAMILY: FamilyKind.ANTIPRISM,
}

FAMILY_NAMES: Dict[FamilyKind, str] = {
    FamilyKind.PRISM: "prism",
    FamilyKind.ANTIPRISM: "antiprism",
}


class CatalogConsistencyError(RuntimeError):
    """Raised when the union of the cases is not the expected classification."""


def _required_sum(r: int) -> Fraction:
    """sum(1/p_i) must exceed this for the denominator to be positive."""
    return Fraction(r, 2) - 1


def _largest_degree_above(slack: Fraction) -> int:
    """Largest p >= 3 with 1/p > slack, for 0 < slack < 1/3."""
    p = 3
    while Fraction(1, p + 1) > slack:
        p += 1
    return p


def _classified(degrees, proof_case: ProofCase) -> Classification:
    figure = VertexFigure(tuple(degrees))
    assert not isinstance(vertex_count(figure), Infeasible), f"{figure} is not feasible"
    name, cls = SOLID_NAMES[figure.degrees]
    return Classification(cls=cls, name=name, proof_cases=(proof_case,), figure=figure)


def _family(kind: FamilyKind, proof_case: ProofCase) -> Classification:
    family = PRISM_FAMILY if kind == FamilyKind.PRISM else ANTIPRISM_FAMILY
    cls = PolyhedronClass.PRISM_FAMILY if kind == FamilyKind.PRISM else PolyhedronClass.ANTIPRISM_FAMILY
    return Classification(cls=cls, name=FAMILY_NAMES[kind], proof_cases=(proof_case,), family=family)


def max_valence() -> int:
    """
    Largest r admitting a positive denominator.

    r triangles give the largest denominator for valence r, and it falls
    as r grows, so the first r where it is non-positive bounds them all.
    """
    r = 3
    while valence_denominator(r + 1) > 0:
        r += 1
    boundary = valence_denominator(r + 1)
    assert boundary <= 0 and valence_denominator(r + 2) < boundary
    logger.debug("Valence bound derived", r=r, boundary=str(boundary))
    return r


def enumerate_case_r5() -> List[Classification]:
    """Five faces at a vertex; the smallest must be a triangle."""
    r = 5
    assert vertex_denominator((4,) * r) <= 0
    # p1..p4 contribute at most 1/3 each.
    p5_max = _largest_degree_above(_required_sum(r) - Fraction(r - 1, 3))
    # Two faces of size >= 4 already use up the budget.
    mixed_cut = vertex_denominator((3, 3, 3, 4, 4))
    assert mixed_cut <= 0, mixed_cut

    found = [_classified((3, 3, 3, 3, p5), ProofCase.R5_TRIANGLE) for p5 in range(3, p5_max + 1)]
    logger.debug("Case closed", case=ProofCase.R5_TRIANGLE.value, found=[c.name for c in found])
    return found


def triangle_pattern_pairs() -> List[Tuple[int, int]]:
    """
    (p, q) with (p - 3)(2q - 3) < 9, the inequality 2/p + 1/q > 2/3 for
    the pattern 3.p.q.p, excluding the p == 3, q >= 6 tail.

    Both factors grow, so each scan stops at the first failure.
    """
    pairs = []
    for q in count(3):
        if 2 * q - 3 >= 9:
            break
        for p in count(3):
            if (p - 3) * (2 * q - 3) >= 9:
                break
            assert vertex_denominator((3, p, q, p)) > 0
            pairs.append((p, q))
    return pairs


def enumerate_case_r4() -> List[Classification]:
    """
    Four faces at a vertex, smallest a triangle.

    The faces either side of some triangle are equal, giving 3.p.q.p.
    With p == 3 every q works: that is the antiprism family, whose q = 3
    member is the octahedron.
    """
    r = 4
    assert vertex_denominator((4,) * r) <= 0

    found: List[Classification] = [_family(FamilyKind.ANTIPRISM, ProofCase.R4_TRIANGLE)]
    for p, q in triangle_pattern_pairs():
        if p == 3 and q >= ANTIPRISM_FAMILY.min_param:
            continue
        found.append(_classified((3, p, q, p), ProofCase.R4_TRIANGLE))
    logger.debug("Case closed", case=ProofCase.R4_TRIANGLE.value, found=[c.name for c in found])
    return found


def enumerate_case_r3() -> List[Classification]:
    """Three faces at a vertex, split on the smallest face."""
    found: List[Classification] = []

    # Triangle: the other two faces are equal and even (or triangles).
    # 2/p > 1/6 bounds them.
    p_max = _largest_degree_above((_required_sum(3) - Fraction(1, 3)) / 2)
    for p in range(3, p_max + 1):
        if p == 3 or p % 2 == 0:
            found.append(_classified((3, p, p), ProofCase.R3_TRIANGLE))

    # Square: 4.4.m is the prism family, otherwise p2 = 2a, p3 = 2b with
    # (a - 2)(b - 2) < 4.
    found.append(_classified((4, 4, 4), ProofCase.R3_SQUARE))
    found.append(_family(FamilyKind.PRISM, ProofCase.R3_SQUARE))
    for a in count(3):
        if (a - 2) * (a - 2) >= 4:
            break
        for b in count(a):
            if (a - 2) * (b - 2) >= 4:
                break
            found.append(_classified((4, 2 * a, 2 * b), ProofCase.R3_SQUARE))

    # Pentagon: p2 = p3 with (3p - 10)^2 < 100.
    for p in count(5):
        if (3 * p - 10) ** 2 >= 100:
            break
        found.append(_classified((5, p, p), ProofCase.R3_PENTAGON))

    # Hexagon or larger throughout is flat or hyperbolic.
    assert vertex_denominator((6, 6, 6)) <= 0
    logger.debug("Case closed", case="r3", found=[c.name for c in found])
    return found


def _merge(entries: List[Classification]) -> List[Classification]:
    """
    Folds family members found as single figures into their family.

    Raises:
        CatalogConsistencyError: a sporadic figure is produced by more than
            one case
    """
    families: Dict[FamilyKind, Classification] = {
        c.family.kind: c for c in entries if c.family is not None
    }
    sporadic: Dict[VertexFigure, Classification] = {}
    for entry in entries:
        if entry.family is not None:
            continue
        kind = FAMILY_CLASSES.get(entry.cls)
        if kind is not None:
            family = families[kind]
            m = family.family.member_parameter(entry.figure)
            families[kind] = replace(
                family,
                proof_cases=family.proof_cases + entry.proof_cases,
                family=replace(family.family, min_param=min(m, family.family.min_param)),
            )
        elif entry.figure in sporadic:
            known = sporadic[entry.figure]
            cases = [c.value for c in known.proof_cases + entry.proof_cases]
            logger.error("Figure found twice", figure=str(entry.figure), cases=cases)
            raise CatalogConsistencyError(f"{entry.figure} ({entry.name}) is produced by cases {cases}")
        else:
            sporadic[entry.figure] = entry
    merged = list(sporadic.values()) + list(families.values())
    return sorted(merged, key=lambda c: c.sort_key)


def full_catalog() -> List[Classification]:
    """
    Union of the per-case results.

    Raises:
        CatalogConsistencyError: unless it is exactly five Platonic and
            thirteen Archimedean solids plus the two families, or a figure
            is found by more than one case
    """
    r_max = max_valence()
    entries = enumerate_case_r5() + enumerate_case_r4() + enumerate_case_r3()
    assert all(c.representative.r <= r_max for c in entries)
    catalog = _merge(entries)

    tally = {cls: sum(1 for c in catalog if c.cls == cls) for cls in PolyhedronClass}
    families = sum(1 for c in catalog if c.is_family)
    expected = (EXPECTED_PLATONIC, EXPECTED_ARCHIMEDEAN, EXPECTED_FAMILIES)
    actual = (tally[PolyhedronClass.PLATONIC], tally[PolyhedronClass.ARCHIMEDEAN], families)
    if actual != expected or len(catalog) != sum(expected):
        logger.error("Catalog inconsistent", expected=expected, actual=actual)
        raise CatalogConsistencyError(
            f"Expected platonic/archimedean/families {expected}, found {actual}"
        )
    logger.info("Classification complete", entries=len(catalog))
    return catalog
