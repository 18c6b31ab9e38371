import networkx as nx
import pytest

from domain.vertex_figure import canonical_figure
from realization.analysis import analyze
from realization.operators import (
    SEEDS,
    AlternationError,
    FamilyParameterError,
    UnknownSeedError,
    alternate,
    ambo,
    antiprism,
    bevel,
    dual,
    expand,
    kis_face,
    platonic_seed,
    prism,
    prism_faces,
    snub,
    truncate,
)
from realization.polyhedral_map import PolyhedralMap

SEED_COUNTS = {
    "tetrahedron": (4, 6, 4, (3, 3, 3)),
    "cube": (8, 12, 6, (4, 4, 4)),
    "octahedron": (6, 12, 8, (3, 3, 3, 3)),
    "dodecahedron": (20, 30, 12, (5, 5, 5)),
    "icosahedron": (12, 30, 20, (3, 3, 3, 3, 3)),
}


def _maps(seeds):
    maps = list(seeds.values())
    maps += [prism(n) for n in range(3, 13)]
    maps += [antiprism(n) for n in range(3, 13)]
    return maps


@pytest.mark.parametrize("name", sorted(SEED_COUNTS))
def test_seeds(seeds, name):
    V, E, F, figure = SEED_COUNTS[name]
    m = seeds[name]
    report = analyze(m)
    assert (m.V, m.E, m.F) == (V, E, F)
    assert report.uniform
    assert report.figure == canonical_figure(figure)
    assert m.name == name


def test_unknown_seed():
    with pytest.raises(UnknownSeedError):
        platonic_seed("rhombic dodecahedron")
    assert platonic_seed(" Cube ").V == 8


def test_dual_counts_and_involution(seeds):
    for m in _maps(seeds):
        d = dual(m)
        assert (d.V, d.E, d.F) == (m.F, m.E, m.V)
        dd = dual(d)
        assert (dd.V, dd.E, dd.F) == (m.V, m.E, m.F)
        assert nx.is_isomorphic(dd.vertex_graph(), m.vertex_graph())


def test_ambo_counts(seeds):
    for m in _maps(seeds):
        a = ambo(m)
        assert (a.V, a.E, a.F) == (m.E, 2 * m.E, m.V + m.F)
        assert set(a.degrees.tolist()) == {4}


def test_truncate_counts(seeds):
    for m in _maps(seeds):
        t = truncate(m)
        assert (t.V, t.E, t.F) == (2 * m.E, 3 * m.E, m.V + m.F)
        assert sorted(t.face_sizes.tolist()) == sorted(
            [2 * int(p) for p in m.face_sizes] + [int(d) for d in m.degrees]
        )


def test_expand_counts(seeds):
    for m in _maps(seeds):
        e = expand(m)
        assert (e.V, e.E, e.F) == (2 * m.E, 4 * m.E, m.V + m.E + m.F)


def test_bevel_is_bipartite_and_trivalent(seeds):
    for m in _maps(seeds):
        b = bevel(m)
        assert (b.V, b.E, b.F) == (4 * m.E, 6 * m.E, m.V + m.E + m.F)
        assert set(b.degrees.tolist()) == {3}
        assert nx.is_bipartite(b.vertex_graph())


@pytest.mark.parametrize(
    "seed,V,E,F,figure",
    [
        ("cube", 24, 60, 38, (3, 3, 3, 3, 4)),
        ("dodecahedron", 60, 150, 92, (3, 3, 3, 3, 5)),
        ("tetrahedron", 12, 30, 20, (3, 3, 3, 3, 3)),
    ],
)
def test_snub(seeds, seed, V, E, F, figure):
    s = snub(seeds[seed])
    report = analyze(s)
    assert (s.V, s.E, s.F) == (V, E, F)
    assert report.uniform
    assert report.figure == canonical_figure(figure)


def test_alternate_cube_is_tetrahedron(seeds):
    t = alternate(seeds["cube"])
    assert (t.V, t.E, t.F) == (4, 6, 4)


def test_alternate_needs_bipartite(seeds):
    with pytest.raises(AlternationError):
        alternate(seeds["tetrahedron"])


@pytest.mark.parametrize("n", range(3, 13))
def test_families(n):
    p = analyze(prism(n))
    assert (p.counts.V, p.counts.E, p.counts.F) == (2 * n, 3 * n, n + 2)
    assert p.figure == canonical_figure((4, 4, n))
    a = analyze(antiprism(n))
    assert (a.counts.V, a.counts.E, a.counts.F) == (2 * n, 4 * n, 2 * n + 2)
    assert a.figure == canonical_figure((3, 3, 3, n))


@pytest.mark.parametrize("n", [0, 1, 2])
def test_family_bounds(n):
    with pytest.raises(FamilyParameterError):
        prism(n)
    with pytest.raises(FamilyParameterError):
        antiprism(n)


def test_kis_face_makes_pyramid():
    m = PolyhedralMap.from_faces(kis_face(prism_faces(4), 1, apex=8))
    assert (m.V, m.E, m.F) == (9, 16, 9)
    report = analyze(m)
    assert not report.uniform
    assert report.euler_ok


def test_operator_names(seeds):
    assert truncate(seeds["cube"]).name == "truncate(cube)"
    assert bevel(seeds["cube"]).name == "bevel(cube)"
    assert snub(seeds["cube"]).name == "snub(cube)"
    assert set(SEEDS) == set(SEED_COUNTS)
