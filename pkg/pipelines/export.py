"""
Renderers for everything the CLI prints: catalog and classification
tables/CSV/JSON, map documents and face lists, oracle and verification
reports. All output is deterministic for a given input.
"""
from __future__ import annotations

import csv
import io
from typing import Iterable, List, Optional, Sequence

from domain.catalog import CatalogEntry, format_symbol, lookup
from domain.classification import Classification
from domain.counting import CountData, counts
from domain.oracle import OracleReport
from pipelines.verification import CheckResult
from realization.analysis import MapReport
from realization.polyhedral_map import PolyhedralMap
from schemas.catalog import CatalogDocument, CatalogRecord, FamilyFormulas
from schemas.oracle import FeasibleRecord, OracleDocument, SpuriousRecord
from schemas.polyhedral_map import MapDocument
from schemas.verification import CheckRecord, VerificationDocument

CSV_FACE_DEGREES = (3, 4, 5, 6, 8, 10)
CSV_COLUMNS = ("name", "class", "symbol", "V", "E", "F") + tuple(f"F{p}" for p in CSV_FACE_DEGREES) + (
    "proof_cases",
)


def _dump(model) -> str:
    return model.model_dump_json(indent=2, by_alias=True) + "\n"


def _table(header: Sequence[str], rows: Iterable[Sequence[str]]) -> str:
    rows = [[str(c) for c in row] for row in rows]
    widths = [max([len(h)] + [len(row[i]) for row in rows]) for i, h in enumerate(header)]

    def line(cells: Sequence[str]) -> str:
        return "  ".join(c.ljust(w) for c, w in zip(cells, widths)).rstrip()

    out = [line(header), line(["-" * w for w in widths])]
    out += [line(row) for row in rows]
    return "\n".join(out) + "\n"


def _face_summary(face_counts) -> str:
    return " ".join(f"F{p}={n}" for p, n in sorted(face_counts.items()))


# -- catalog -----------------------------------------------------------------

def catalog_record(entry: CatalogEntry) -> CatalogRecord:
    family = None
    if entry.family is not None:
        family = FamilyFormulas(
            kind=entry.family.kind.value,
            param_bound=entry.family.min_param,
            V=entry.count_formulas["V"],
            E=entry.count_formulas["E"],
            F=entry.count_formulas["F"],
            face_counts=dict(entry.face_formulas),
        )
    data: Optional[CountData] = entry.counts
    return CatalogRecord(
        name=entry.name,
        cls=entry.cls.value,
        symbol=entry.symbol,
        figure=list(entry.figure.degrees) if entry.figure is not None else None,
        V=data.V if data else None,
        E=data.E if data else None,
        F=data.F if data else None,
        face_counts=dict(sorted(data.face_counts.items())) if data else {},
        proof_case=entry.proof_case.value,
        proof_cases=[c.value for c in entry.proof_cases],
        notes=entry.notes,
        family=family,
    )


def render_catalog(entries: Sequence[CatalogEntry], fmt: str) -> str:
    if fmt == "json":
        return _dump(CatalogDocument(entries=[catalog_record(e) for e in entries]))
    if fmt == "csv":
        buffer = io.StringIO()
        writer = csv.writer(buffer, lineterminator="\n")
        writer.writerow(CSV_COLUMNS)
        for entry in entries:
            data = entry.counts
            if data is None:
                totals = ["", "", ""]
                faces = [""] * len(CSV_FACE_DEGREES)
            else:
                totals = [data.V, data.E, data.F]
                faces = [data.face_count(p) or "" for p in CSV_FACE_DEGREES]
            writer.writerow(
                [entry.name, entry.cls.value, entry.symbol, *totals, *faces,
                 " ".join(c.value for c in entry.proof_cases)]
            )
        return buffer.getvalue()

    rows = []
    for entry in entries:
        data = entry.counts
        if data is None:
            totals = ["-", "-", "-"]
            faces = f"m >= {entry.family_param_bound}"
        else:
            totals = [data.V, data.E, data.F]
            faces = _face_summary(data.face_counts)
        rows.append([entry.name, entry.cls.value, entry.symbol, *totals, faces,
                     ",".join(c.value for c in entry.proof_cases)])
    return _table(("name", "class", "symbol", "V", "E", "F", "faces", "found in"), rows)


# -- classification ----------------------------------------------------------

def classification_record(c: Classification) -> CatalogRecord:
    """Enumeration result in the catalog record layout."""
    if c.family is not None:
        family = catalog_record(lookup(c.name)).family
        if family is not None:
            family = family.model_copy(update={"param_bound": c.family.min_param})
        return CatalogRecord(
            name=c.name,
            cls=c.cls.value,
            symbol=c.family.symbol,
            proof_case=c.proof_case.value,
            proof_cases=[p.value for p in c.proof_cases],
            family=family,
        )
    data = counts(c.figure)
    return CatalogRecord(
        name=c.name,
        cls=c.cls.value,
        symbol=format_symbol(c.figure),
        figure=list(c.figure.degrees),
        V=data.V,
        E=data.E,
        F=data.F,
        face_counts=dict(sorted(data.face_counts.items())),
        proof_case=c.proof_case.value,
        proof_cases=[p.value for p in c.proof_cases],
    )


def render_classifications(classifications: Sequence[Classification], fmt: str) -> str:
    records = [classification_record(c) for c in classifications]
    if fmt == "json":
        return _dump(CatalogDocument(entries=records))
    rows = []
    for record in records:
        if record.figure is None:
            figure = f"{record.symbol} (m >= {record.family.param_bound if record.family else '?'})"
            totals = ["-", "-", "-"]
        else:
            figure = record.symbol
            totals = [record.V, record.E, record.F]
        rows.append([figure, record.name, record.cls, *totals, ",".join(record.proof_cases)])
    return _table(("figure", "name", "class", "V", "E", "F", "found in"), rows)


# -- maps --------------------------------------------------------------------

def to_document(m: PolyhedralMap, report: MapReport) -> MapDocument:
    figure = report.figure
    return MapDocument(
        name=m.name or "map",
        V=report.counts.V,
        E=report.counts.E,
        F=report.counts.F,
        face_counts=report.counts.face_counts,
        valence_counts=report.counts.valence_counts or {},
        figure=list(figure.degrees) if figure else None,
        symbol=format_symbol(figure) if figure else None,
        uniform=report.uniform,
        bipartite=report.bipartite,
        euler_ok=report.euler_ok,
        balance_ok=report.balance_ok,
        problems=list(report.problems),
        faces=m.faces(),
    )


def render_faces(m: PolyhedralMap) -> str:
    """Header line `V E F`, then one line of vertex indices per face."""
    lines = [f"{m.V} {m.E} {m.F}"]
    lines += [" ".join(str(v) for v in face) for face in m.faces()]
    return "\n".join(lines) + "\n"


def render_map_json(m: PolyhedralMap, report: MapReport) -> str:
    return _dump(to_document(m, report))


def render_map_summary(m: PolyhedralMap, report: MapReport) -> str:
    figure = format_symbol(report.figure) if report.figure else "non-uniform"
    status = "ok" if report.ok else "FAILED: " + "; ".join(report.problems)
    return (
        f"{m.name}: V={report.counts.V} E={report.counts.E} F={report.counts.F} "
        f"{_face_summary(report.counts.face_counts)} figure={figure} "
        f"bipartite={'yes' if report.bipartite else 'no'} {status}\n"
    )


# -- oracle ------------------------------------------------------------------

def _feasible_records(report_figures) -> List[FeasibleRecord]:
    records = []
    for figure in report_figures:
        data = counts(figure)
        records.append(
            FeasibleRecord(figure=list(figure.degrees), symbol=str(figure), V=data.V, E=data.E, F=data.F)
        )
    return records


def oracle_document(p_max: int, feasible, report: Optional[OracleReport] = None) -> OracleDocument:
    if report is None:
        return OracleDocument(p_max=p_max, feasible=_feasible_records(feasible))
    spurious = [
        SpuriousRecord(
            figure=list(s.figure.degrees),
            symbol=str(s.figure),
            filter=s.verdict.kind.value if s.verdict else None,
            proof_case=s.verdict.proof_case.value if s.verdict else None,
            description=s.verdict.description if s.verdict else None,
        )
        for s in report.spurious
    ]
    return OracleDocument(
        p_max=p_max,
        feasible=_feasible_records(report.feasible),
        realized=[str(f) for f in report.realized],
        spurious=spurious,
        unexplained=[str(f) for f in report.unexplained],
    )


def render_oracle(document: OracleDocument, fmt: str) -> str:
    if fmt == "json":
        return _dump(document)
    out = [f"feasible figures (p <= {document.p_max}): {len(document.feasible)}"]
    out += [f"  {r.symbol}  V={r.V} E={r.E} F={r.F}" for r in document.feasible]
    if document.spurious is not None:
        out.append(f"realized: {len(document.realized)}")
        out += [f"  {symbol}" for symbol in document.realized]
        out.append(f"spurious: {len(document.spurious)}")
        out += [f"  {r.symbol}  [{r.filter or 'UNEXPLAINED'}] {r.description or ''}".rstrip()
                for r in document.spurious]
        out.append(f"unexplained: {len(document.unexplained)}")
        out += [f"  {symbol}" for symbol in document.unexplained]
    return "\n".join(out) + "\n"


# -- verification ------------------------------------------------------------

def verification_document(results: Sequence[CheckResult]) -> VerificationDocument:
    return VerificationDocument(
        passed=all(r.passed for r in results),
        checks=[CheckRecord(subject=r.subject, check=r.check, passed=r.passed, detail=r.detail) for r in results],
    )


def render_verification(results: Sequence[CheckResult], fmt: str) -> str:
    document = verification_document(results)
    if fmt == "json":
        return _dump(document)
    rows = [[c.subject, c.check, "PASS" if c.passed else "FAIL", c.detail] for c in document.checks]
    failed = sum(1 for c in document.checks if not c.passed)
    summary = f"{len(document.checks) - failed}/{len(document.checks)} checks passed\n"
    return _table(("subject", "check", "result", "detail"), rows) + summary
