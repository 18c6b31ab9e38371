import time

import pytest

from domain.case_analysis import (
    CatalogConsistencyError,
    enumerate_case_r3,
    enumerate_case_r4,
    enumerate_case_r5,
    full_catalog,
    max_valence,
    triangle_pattern_pairs,
)
from domain.classification import FamilyKind, PolyhedronClass, ProofCase
from domain.counting import CountData, valence_denominator
from domain.oracle import arithmetic_feasible
from domain.vertex_figure import canonical_figure


def _sporadic(entries):
    return {c.figure.degrees: c for c in entries if c.figure is not None}


def test_max_valence():
    assert max_valence() == 5
    assert valence_denominator(5) > 0
    assert valence_denominator(6) == 0
    assert valence_denominator(7) < 0


def test_case_r5():
    found = _sporadic(enumerate_case_r5())
    assert set(found) == {(3, 3, 3, 3, 3), (3, 3, 3, 3, 4), (3, 3, 3, 3, 5)}
    assert found[(3, 3, 3, 3, 5)].name == "snub dodecahedron"
    assert found[(3, 3, 3, 3, 5)].cls == PolyhedronClass.ARCHIMEDEAN
    assert found[(3, 3, 3, 3, 3)].cls == PolyhedronClass.PLATONIC
    assert all(c.proof_case == ProofCase.R5_TRIANGLE for c in found.values())


def test_triangle_pattern_pairs():
    assert sorted(triangle_pattern_pairs()) == sorted(
        [(3, 3), (3, 4), (3, 5), (4, 3), (4, 4), (4, 5), (5, 3)]
    )


def test_case_r4():
    entries = enumerate_case_r4()
    found = _sporadic(entries)
    assert set(found) == {(3, 4, 5, 4), (3, 5, 3, 5), (3, 4, 4, 4), (3, 4, 3, 4), (3, 3, 3, 3)}
    assert found[(3, 4, 5, 4)].name == "small rhombicosidodecahedron"
    families = [c for c in entries if c.is_family]
    assert len(families) == 1
    assert families[0].family.kind == FamilyKind.ANTIPRISM
    assert families[0].family.min_param == 4
    assert families[0].matches(canonical_figure((3, 3, 3, 9)))


def test_case_r4_excludes_cyclic_rejects():
    entries = enumerate_case_r4()
    for degrees in [(3, 4, 4, 5), (3, 3, 4, 4)]:
        figure = canonical_figure(degrees)
        assert isinstance(arithmetic_feasible(figure), CountData)
        assert not any(c.matches(figure) for c in entries)


def test_case_r3():
    entries = enumerate_case_r3()
    found = _sporadic(entries)
    assert set(found) == {
        (3, 3, 3), (3, 4, 4), (3, 6, 6), (3, 8, 8), (3, 10, 10),
        (4, 4, 4), (4, 6, 6), (4, 6, 8), (4, 6, 10),
        (5, 5, 5), (5, 6, 6),
    }
    assert found[(3, 10, 10)].name == "truncated dodecahedron"
    assert found[(3, 4, 4)].cls == PolyhedronClass.PRISM_FAMILY
    assert found[(4, 6, 10)].proof_case == ProofCase.R3_SQUARE
    assert found[(5, 6, 6)].proof_case == ProofCase.R3_PENTAGON
    prisms = [c for c in entries if c.is_family]
    assert [c.family.kind for c in prisms] == [FamilyKind.PRISM]


@pytest.mark.parametrize("degrees", [(3, 9, 9), (5, 5, 6)])
def test_case_r3_excludes_spurious(degrees):
    figure = canonical_figure(degrees)
    assert isinstance(arithmetic_feasible(figure), CountData)
    assert not any(c.matches(figure) for c in enumerate_case_r3())


def test_full_catalog_counts(classifications):
    platonic = [c for c in classifications if c.cls == PolyhedronClass.PLATONIC]
    archimedean = [c for c in classifications if c.cls == PolyhedronClass.ARCHIMEDEAN]
    families = [c for c in classifications if c.is_family]
    assert len(platonic) == 5
    assert len(archimedean) == 13
    assert len(families) == 2
    assert len(classifications) == 20


def test_full_catalog_provenance(classifications):
    by_name = {c.name: c for c in classifications}
    assert by_name["snub cube"].proof_cases == (ProofCase.R5_TRIANGLE,)
    assert by_name["prism"].proof_cases == (ProofCase.R3_TRIANGLE, ProofCase.R3_SQUARE)
    assert by_name["antiprism"].proof_cases == (ProofCase.R4_TRIANGLE,)
    assert by_name["truncated icosahedron"].proof_cases == (ProofCase.R3_PENTAGON,)


def test_triangular_prism_folds_into_prism_family(classifications):
    prism = next(c for c in classifications if c.name == "prism")
    assert prism.family.min_param == 3
    assert prism.matches(canonical_figure((3, 4, 4)))
    assert prism.matches(canonical_figure((4, 4, 7)))
    assert "triangular prism" not in {c.name for c in classifications}


def test_full_catalog_is_feasible(classifications):
    for c in classifications:
        assert isinstance(arithmetic_feasible(c.representative), CountData), c.name


def test_full_catalog_is_sorted_and_deterministic(classifications):
    assert [c.sort_key for c in classifications] == sorted(c.sort_key for c in classifications)
    assert full_catalog() == classifications


def test_inconsistent_union_is_reported(monkeypatch):
    import domain.case_analysis as case_analysis

    monkeypatch.setattr(case_analysis, "enumerate_case_r5", lambda: [])
    with pytest.raises(CatalogConsistencyError):
        case_analysis.full_catalog()


def test_figure_found_by_two_cases_is_reported(monkeypatch):
    import domain.case_analysis as case_analysis

    r5 = case_analysis.enumerate_case_r5
    extra = case_analysis._classified((3, 4, 3, 4), ProofCase.R5_TRIANGLE)
    monkeypatch.setattr(case_analysis, "enumerate_case_r5", lambda: r5() + [extra])
    with pytest.raises(CatalogConsistencyError, match="cuboctahedron"):
        case_analysis.full_catalog()


def test_full_catalog_runtime():
    start = time.perf_counter()
    full_catalog()
    assert time.perf_counter() - start < 1.0
