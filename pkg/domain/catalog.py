"""
Reference catalog of the regular and semiregular polyhedra, and the
C&R symbol grammar (3.4^3, (3.5)^2, 3^4.5, 4^2.m).
"""
from __future__ import annotations

import re
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Dict, List, Optional, Tuple

import structlog

from config.loader import reference_tables
from domain.classification import (
    FamilyKind,
    PolyhedronClass,
    PolyhedronFamily,
    ProofCase,
    slugify,
)
from domain.counting import CountData, counts, euler_check
from domain.vertex_figure import MalformedFigureError, VertexFigure

logger = structlog.get_logger()

FAMILY_VARIABLE = "m"
SUPERSCRIPTS = str.maketrans("⁰¹²³⁴⁵⁶⁷⁸⁹", "0123456789")
_SUPERSCRIPT_RUN = re.compile(r"[⁰¹²³⁴⁵⁶⁷⁸⁹]+")
_TOKEN = re.compile(r"\s*(\d+|m|[().^])")


class SymbolParseError(ValueError):
    """Raised for a malformed C&R symbol."""


class UnknownEntryError(ValueError):
    """Raised when a name matches no catalog entry."""


# -- symbols -----------------------------------------------------------------

def _tokenize(s: str) -> List[str]:
    text = _SUPERSCRIPT_RUN.sub(lambda m: "^" + m.group(0).translate(SUPERSCRIPTS), s.strip())
    tokens, pos = [], 0
    while pos < len(text):
        match = _TOKEN.match(text, pos)
        if match is None:
            raise SymbolParseError(f"Unexpected character {text[pos]!r} in symbol {s!r}")
        tokens.append(match.group(1))
        pos = match.end()
        while pos < len(text) and text[pos].isspace():
            pos += 1
    return tokens


class _SymbolParser:
    """
    symbol := term ('.' term)*
    term   := atom ('^' INT)?
    atom   := INT | 'm' | '(' symbol ')'
    """

    def __init__(self, source: str, m: Optional[int]):
        self.source = source
        self.tokens = _tokenize(source)
        self.pos = 0
        self.m = m

    def _peek(self) -> Optional[str]:
        return self.tokens[self.pos] if self.pos < len(self.tokens) else None

    def _take(self) -> str:
        token = self._peek()
        if token is None:
            raise SymbolParseError(f"Symbol {self.source!r} ends unexpectedly")
        self.pos += 1
        return token

    def _expect(self, expected: str) -> None:
        token = self._take()
        if token != expected:
            raise SymbolParseError(f"Expected {expected!r}, found {token!r} in {self.source!r}")

    def parse(self) -> List[int]:
        degrees = self._symbol()
        if self._peek() is not None:
            raise SymbolParseError(f"Trailing {self._peek()!r} in symbol {self.source!r}")
        return degrees

    def _symbol(self) -> List[int]:
        degrees = self._term()
        while self._peek() == ".":
            self._take()
            degrees += self._term()
        return degrees

    def _term(self) -> List[int]:
        block = self._atom()
        if self._peek() == "^":
            self._take()
            exponent = self._take()
            if not exponent.isdigit() or int(exponent) < 1:
                raise SymbolParseError(f"Bad exponent {exponent!r} in {self.source!r}")
            block = block * int(exponent)
        return block

    def _atom(self) -> List[int]:
        token = self._take()
        if token.isdigit():
            return [int(token)]
        if token == FAMILY_VARIABLE:
            if self.m is None:
                raise SymbolParseError(f"Symbol {self.source!r} needs a value for {FAMILY_VARIABLE}")
            return [self.m]
        if token == "(":
            inner = self._symbol()
            self._expect(")")
            return inner
        raise SymbolParseError(f"Unexpected {token!r} in symbol {self.source!r}")


def parse_symbol(s: str, m: Optional[int] = None) -> VertexFigure:
    """
    Expands a C&R symbol into its canonical vertex figure.

    Args:
        s: symbol such as "(3.4)^2", "3^4.5" or "3⁴.5"
        m: value substituted for the family variable, if the symbol has one

    Raises:
        SymbolParseError: malformed symbol, or a figure with an invalid degree
    """
    degrees = _SymbolParser(s, m).parse()
    try:
        return VertexFigure(tuple(degrees))
    except MalformedFigureError as e:
        raise SymbolParseError(f"Symbol {s!r} is not a vertex figure: {e}") from e


def _run_length(degrees: Tuple[int, ...]) -> str:
    parts = []
    i = 0
    while i < len(degrees):
        j = i
        while j < len(degrees) and degrees[j] == degrees[i]:
            j += 1
        run = j - i
        parts.append(str(degrees[i]) if run == 1 else f"{degrees[i]}^{run}")
        i = j
    return ".".join(parts)


def format_symbol(figure: VertexFigure) -> str:
    """ASCII symbol: a repeated block as (block)^k, otherwise run-length."""
    seq = figure.degrees
    r = len(seq)
    if len(set(seq)) == 1:
        return _run_length(seq)
    for size in range(2, r // 2 + 1):
        if r % size == 0 and seq == seq[:size] * (r // size):
            return f"({_run_length(seq[:size])})^{r // size}"
    return _run_length(seq)


# -- catalog -----------------------------------------------------------------

@dataclass(frozen=True)
class CatalogEntry:
    """
    One row of the reference tables.

    Sporadic entries carry figure and counts. Family entries carry family
    and linear count formulas (coefficient of m, constant), instantiated
    by figure_at / counts_at.
    """
    name: str
    cls: PolyhedronClass
    symbol: str
    proof_cases: Tuple[ProofCase, ...]
    figure: Optional[VertexFigure] = None
    counts: Optional[CountData] = None
    family: Optional[PolyhedronFamily] = None
    count_formulas: Dict[str, Tuple[int, int]] = field(default_factory=dict)
    face_formulas: Dict[str, Tuple[int, int]] = field(default_factory=dict)
    notes: Optional[str] = None

    @property
    def slug(self) -> str:
        return slugify(self.name)

    @property
    def proof_case(self) -> ProofCase:
        return self.proof_cases[0]

    @property
    def is_family(self) -> bool:
        return self.family is not None

    @property
    def family_param_bound(self) -> Optional[int]:
        return self.family.min_param if self.family is not None else None

    def figure_at(self, m: Optional[int] = None) -> VertexFigure:
        if self.family is None:
            return self.figure
        if m is None:
            raise ValueError(f"{self.name} needs a family parameter")
        return self.family.instance(m)

    def counts_at(self, m: Optional[int] = None) -> CountData:
        if self.family is None:
            return self.counts
        if m is None:
            raise ValueError(f"{self.name} needs a family parameter")

        def value(formula: Tuple[int, int]) -> int:
            a, b = formula
            return a * m + b

        face_counts: Dict[int, int] = {}
        for key, formula in self.face_formulas.items():
            degree = m if key == FAMILY_VARIABLE else int(key)
            face_counts[degree] = face_counts.get(degree, 0) + value(formula)
        return CountData(
            V=value(self.count_formulas["V"]),
            E=value(self.count_formulas["E"]),
            F=value(self.count_formulas["F"]),
            face_counts={p: n for p, n in sorted(face_counts.items()) if n},
        )

    def consistency_problems(self, m: Optional[int] = None) -> List[str]:
        """Mismatches between the row, its symbol and the counting formulas."""
        problems = []
        figure = self.figure_at(m)
        stored = self.counts_at(m)
        if not euler_check(stored):
            problems.append("stored counts fail Euler's formula")
        derived = counts(figure)
        if not isinstance(derived, CountData) or not derived.same_totals(stored):
            problems.append(f"counts derived from {figure} differ from the table: {derived}")
        if parse_symbol(self.symbol, m=m) != figure:
            problems.append(f"symbol {self.symbol} does not parse to {figure}")
        return problems


def _pair(raw) -> Tuple[int, int]:
    a, b = raw
    return int(a), int(b)


def _sporadic_entry(row: dict, cls: PolyhedronClass) -> CatalogEntry:
    face_counts = {int(p): int(n) for p, n in row["face_counts"].items()}
    return CatalogEntry(
        name=row["name"],
        cls=cls,
        symbol=row["symbol"],
        proof_cases=tuple(ProofCase(c) for c in row["proof_cases"]),
        figure=parse_symbol(row["symbol"]),
        counts=CountData(V=row["V"], E=row["E"], F=row["F"], face_counts=face_counts),
        notes=row.get("notes"),
    )


def _family_entry(row: dict) -> CatalogEntry:
    kind = FamilyKind(row["kind"])
    cls = PolyhedronClass.PRISM_FAMILY if kind == FamilyKind.PRISM else PolyhedronClass.ANTIPRISM_FAMILY
    return CatalogEntry(
        name=row["name"],
        cls=cls,
        symbol=row["symbol"],
        proof_cases=tuple(ProofCase(c) for c in row["proof_cases"]),
        family=PolyhedronFamily(kind, min_param=int(row["param_bound"])),
        count_formulas={key: _pair(row[key]) for key in ("V", "E", "F")},
        face_formulas={str(p): _pair(f) for p, f in row["face_counts"].items()},
        notes=row.get("notes"),
    )


@lru_cache(maxsize=1)
def reference_catalog() -> Tuple[CatalogEntry, ...]:
    """The 5 Platonic, 13 Archimedean and 2 family rows, in table order."""
    rows = reference_tables.catalog_rows
    entries = [_sporadic_entry(row, PolyhedronClass.PLATONIC) for row in rows.get("platonic", [])]
    entries += [_sporadic_entry(row, PolyhedronClass.ARCHIMEDEAN) for row in rows.get("archimedean", [])]
    entries += [_family_entry(row) for row in rows.get("families", [])]
    logger.debug("Reference catalog loaded", entries=len(entries))
    return tuple(entries)


def catalog_slugs() -> Dict[str, str]:
    """Kebab-case command-line name to display name."""
    return {entry.slug: entry.name for entry in reference_catalog()}


def lookup(name: str) -> CatalogEntry:
    """
    Finds an entry by display name or slug, case-insensitively.

    Raises:
        UnknownEntryError: no entry matches
    """
    key = slugify(name.replace("_", " ").replace("-", " "))
    for entry in reference_catalog():
        if entry.slug == key:
            return entry
    raise UnknownEntryError(f"Unknown polyhedron {name!r}")


def entry_for_figure(figure: VertexFigure) -> Optional[CatalogEntry]:
    """The sporadic entry with this figure, else the family containing it."""
    entries = reference_catalog()
    for entry in entries:
        if entry.figure == figure:
            return entry
    for entry in entries:
        if entry.family is not None and entry.family.contains(figure):
            return entry
    return None
