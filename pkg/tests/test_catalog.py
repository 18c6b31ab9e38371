import pytest

from domain.catalog import (
    SymbolParseError,
    UnknownEntryError,
    catalog_slugs,
    entry_for_figure,
    format_symbol,
    lookup,
    parse_symbol,
)
from domain.classification import PolyhedronClass, ProofCase
from domain.vertex_figure import canonical_figure


def test_reference_has_twenty_rows(reference):
    assert len(reference) == 20
    classes = [e.cls for e in reference]
    assert classes.count(PolyhedronClass.PLATONIC) == 5
    assert classes.count(PolyhedronClass.ARCHIMEDEAN) == 13
    assert sum(1 for e in reference if e.is_family) == 2


def test_lookup_by_name_and_slug():
    entry = lookup("Snub Dodecahedron")
    assert entry is lookup("snub-dodecahedron")
    assert entry is lookup("snub_dodecahedron")
    assert (entry.counts.V, entry.counts.E, entry.counts.F) == (60, 150, 92)
    assert entry.counts.face_counts == {3: 80, 5: 12}
    assert entry.proof_case == ProofCase.R5_TRIANGLE


@pytest.mark.parametrize(
    "name,V,E,F",
    [
        ("tetrahedron", 4, 6, 4),
        ("great rhombicosidodecahedron", 120, 180, 62),
        ("truncated icosahedron", 60, 90, 32),
        ("small rhombicuboctahedron", 24, 48, 26),
        ("snub cube", 24, 60, 38),
    ],
)
def test_lookup_values(name, V, E, F):
    data = lookup(name).counts
    assert (data.V, data.E, data.F) == (V, E, F)


def test_truncated_icosahedron_row_is_self_consistent():
    entry = lookup("truncated icosahedron")
    assert entry.symbol == "5.6^2"
    assert entry.figure == canonical_figure((5, 6, 6))
    assert entry.notes


def test_unknown_name():
    with pytest.raises(UnknownEntryError):
        lookup("great dodecahedron")


def test_catalog_slugs(reference):
    slugs = catalog_slugs()
    assert slugs["truncated-cube"] == "truncated cube"
    assert len(slugs) == len(reference)


def test_every_row_is_consistent(reference):
    for entry in reference:
        if entry.is_family:
            for m in range(3, 13):
                assert entry.consistency_problems(m) == [], (entry.name, m)
        else:
            assert entry.consistency_problems() == [], entry.name


def test_rows_agree_with_case_analysis(reference, classifications):
    for entry in reference:
        source = next(c for c in classifications if c.name == entry.name)
        assert source.proof_cases == entry.proof_cases, entry.name
        if not entry.is_family:
            assert source.figure == entry.figure


def test_family_counts():
    prism = lookup("prism")
    data = prism.counts_at(7)
    assert (data.V, data.E, data.F) == (14, 21, 9)
    assert data.face_counts == {4: 7, 7: 2}
    assert prism.counts_at(4).face_counts == {4: 6}
    assert prism.family_param_bound == 3

    antiprism = lookup("antiprism")
    data = antiprism.counts_at(5)
    assert (data.V, data.E, data.F) == (10, 20, 12)
    assert data.face_counts == {3: 10, 5: 2}
    assert antiprism.counts_at(3).face_counts == {3: 8}
    assert antiprism.figure_at(6) == canonical_figure((3, 3, 3, 6))


def test_family_needs_parameter():
    with pytest.raises(ValueError):
        lookup("prism").counts_at()


def test_entry_for_figure():
    assert entry_for_figure(canonical_figure((4, 6, 8))).name == "great rhombicuboctahedron"
    assert entry_for_figure(canonical_figure((4, 4, 9))).name == "prism"
    assert entry_for_figure(canonical_figure((3, 3, 3, 7))).name == "antiprism"
    assert entry_for_figure(canonical_figure((3, 3, 3, 3))).name == "octahedron"
    assert entry_for_figure(canonical_figure((3, 9, 9))) is None


@pytest.mark.parametrize(
    "symbol,degrees",
    [
        ("3.4^3", (3, 4, 4, 4)),
        ("(3.4)^2", (3, 4, 3, 4)),
        ("3^4.5", (3, 3, 3, 3, 5)),
        ("3⁴.5", (3, 3, 3, 3, 5)),
        ("(3.5)²", (3, 5, 3, 5)),
        ("4.6.10", (4, 6, 10)),
        (" 5 . 6^2 ", (5, 6, 6)),
        ("4.5.4.3", (3, 4, 5, 4)),
    ],
)
def test_parse_symbol(symbol, degrees):
    assert parse_symbol(symbol) == canonical_figure(degrees)


def test_parse_family_symbol():
    assert parse_symbol("4^2.m", m=9) == canonical_figure((4, 4, 9))
    assert parse_symbol("3^3.m", m=3) == canonical_figure((3, 3, 3, 3))
    with pytest.raises(SymbolParseError):
        parse_symbol("4^2.m")


@pytest.mark.parametrize("symbol", ["", "3.", "(3.4", "3^", "3^0.4.4", "3.x.4", "2.4.4", "3.4)"])
def test_parse_symbol_errors(symbol):
    with pytest.raises(SymbolParseError):
        parse_symbol(symbol)


@pytest.mark.parametrize(
    "degrees,symbol",
    [
        ((3, 3, 3), "3^3"),
        ((3, 3, 3, 3), "3^4"),
        ((3, 4, 3, 4), "(3.4)^2"),
        ((3, 4, 4, 4), "3.4^3"),
        ((3, 3, 3, 3, 5), "3^4.5"),
        ((3, 4, 5, 4), "3.4.5.4"),
        ((4, 6, 10), "4.6.10"),
        ((3, 8, 8), "3.8^2"),
    ],
)
def test_format_symbol(degrees, symbol):
    assert format_symbol(canonical_figure(degrees)) == symbol


def test_reference_symbols_are_formatted(reference):
    for entry in reference:
        if not entry.is_family:
            assert format_symbol(entry.figure) == entry.symbol, entry.name
