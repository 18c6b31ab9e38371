import pytest

from domain.classification import ProofCase
from domain.configuration_filter import FilterKind
from domain.rule_based_filters import (
    PentagonEqualFacesFilter,
    RuleBasedConfigurationScreen,
    SquareEvennessFilter,
    TriangleEqualFacesFilter,
    TriangleNeighborFilter,
    TriangleParityFilter,
)
from domain.vertex_figure import canonical_figure


@pytest.fixture
def screen():
    return RuleBasedConfigurationScreen()


@pytest.mark.parametrize("degrees", [(3, 4, 4, 5), (3, 3, 4, 4), (3, 4, 3, 6)])
def test_triangle_neighbors_kill(degrees):
    verdict = TriangleNeighborFilter().check(canonical_figure(degrees))
    assert verdict is not None
    assert verdict.kind == FilterKind.TRIANGLE_NEIGHBORS
    assert verdict.proof_case == ProofCase.R4_TRIANGLE


@pytest.mark.parametrize("degrees", [(3, 4, 5, 4), (3, 4, 3, 4), (3, 4, 4, 4), (3, 3, 3, 7)])
def test_triangle_neighbors_pass(degrees):
    assert TriangleNeighborFilter().check(canonical_figure(degrees)) is None


def test_triangle_neighbors_ignore_other_valences():
    assert not TriangleNeighborFilter().applies_to(canonical_figure((3, 3, 3, 3, 4)))


def test_triangle_equal_faces():
    rule = TriangleEqualFacesFilter()
    assert rule.check(canonical_figure((3, 6, 9))).kind == FilterKind.TRIANGLE_EQUAL_FACES
    assert rule.check(canonical_figure((3, 8, 8))) is None


def test_triangle_parity():
    rule = TriangleParityFilter()
    assert rule.check(canonical_figure((3, 9, 9))).kind == FilterKind.TRIANGLE_PARITY
    assert rule.check(canonical_figure((3, 11, 11))) is not None
    assert rule.check(canonical_figure((3, 3, 3))) is None
    assert rule.check(canonical_figure((3, 10, 10))) is None
    assert not rule.applies_to(canonical_figure((3, 6, 9)))


def test_square_evenness():
    rule = SquareEvennessFilter()
    assert rule.check(canonical_figure((4, 7, 7))).kind == FilterKind.SQUARE_EVENNESS
    assert rule.check(canonical_figure((4, 5, 10))) is not None
    assert rule.check(canonical_figure((4, 6, 10))) is None


def test_square_evenness_exempts_prisms():
    rule = SquareEvennessFilter()
    for m in range(3, 13):
        assert rule.check(canonical_figure((4, 4, m))) is None


def test_pentagon_equal_faces():
    rule = PentagonEqualFacesFilter()
    assert rule.check(canonical_figure((5, 5, 6))).kind == FilterKind.PENTAGON_EQUAL_FACES
    assert rule.check(canonical_figure((5, 6, 6))) is None


def test_screen_returns_first_verdict(screen):
    verdict = screen.screen(canonical_figure((3, 9, 9)))
    assert verdict.kind == FilterKind.TRIANGLE_PARITY


def test_screen_leaves_snub_cube_alone(screen):
    assert screen.screen(canonical_figure((3, 3, 3, 3, 4))) is None
    assert screen.verdicts(canonical_figure((3, 3, 3, 3, 4))) == []


def test_every_classified_figure_passes(screen, classifications):
    for c in classifications:
        figure = c.representative
        assert screen.screen(figure) is None, c.name
