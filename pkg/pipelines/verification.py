"""
Verification pipeline: checks each reference-table row against the case
analysis, the counting formulas and its realized map.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import List, Optional, Sequence

import structlog

from domain.case_analysis import full_catalog
from domain.catalog import CatalogEntry, reference_catalog
from domain.classification import Classification
from realization.analysis import analyze
from realization.dispatcher import realize

logger = structlog.get_logger()


@dataclass(frozen=True)
class CheckResult:
    subject: str
    check: str
    passed: bool
    detail: str = ""


class VerificationPipeline:
    """
    Runs, for a catalog row or family member:

    - enumeration: the case analysis produces the figure, with the same proof cases
    - table: counts derived from the figure and the symbol agree with the row
    - realization: the realized map is uniform with the row's figure and counts
    - euler, balance, small-face: identities on the realized counts
    - bipartite: the realized graph is bipartite exactly when every face is even
    """

    def __init__(
        self,
        catalog: Optional[Sequence[CatalogEntry]] = None,
        classifications: Optional[Sequence[Classification]] = None,
    ):
        self.catalog = tuple(catalog) if catalog is not None else reference_catalog()
        self.classifications = tuple(classifications) if classifications is not None else tuple(full_catalog())

    def _classification_for(self, entry: CatalogEntry) -> Optional[Classification]:
        for c in self.classifications:
            if c.name == entry.name:
                return c
        return None

    def _check_enumeration(self, entry: CatalogEntry, subject: str, m: Optional[int]) -> CheckResult:
        figure = entry.figure_at(m)
        if not any(c.matches(figure) for c in self.classifications):
            return CheckResult(subject, "enumeration", False, f"{figure} is not produced by the case analysis")
        source = self._classification_for(entry)
        if source is None:
            return CheckResult(subject, "enumeration", False, f"no classification named {entry.name!r}")
        if source.proof_cases != entry.proof_cases:
            found = ",".join(c.value for c in source.proof_cases)
            expected = ",".join(c.value for c in entry.proof_cases)
            return CheckResult(subject, "enumeration", False, f"found in {found}, table says {expected}")
        return CheckResult(subject, "enumeration", True, ",".join(c.value for c in source.proof_cases))

    def _check_table(self, entry: CatalogEntry, subject: str, m: Optional[int]) -> CheckResult:
        problems = entry.consistency_problems(m)
        return CheckResult(subject, "table", not problems, "; ".join(problems))

    def verify_entry(self, entry: CatalogEntry, m: Optional[int] = None) -> List[CheckResult]:
        subject = entry.name if m is None else f"{entry.name}({m})"
        results = [self._check_enumeration(entry, subject, m), self._check_table(entry, subject, m)]

        try:
            report = analyze(realize(entry, m))
        except Exception as e:
            logger.error("Realization failed", subject=subject, error=str(e))
            results.append(CheckResult(subject, "realization", False, str(e)))
            return results

        figure = entry.figure_at(m)
        expected = entry.counts_at(m)
        data = report.counts
        totals = f"V={data.V} E={data.E} F={data.F}"
        results.append(CheckResult(
            subject, "realization",
            report.uniform and report.figure == figure and data.same_totals(expected),
            f"{totals} figure={report.figure}" if report.uniform else "; ".join(report.problems),
        ))
        results.append(CheckResult(subject, "euler", report.euler_ok, f"chi={data.euler_characteristic}"))
        results.append(CheckResult(subject, "balance", report.balance_ok))
        results.append(CheckResult(subject, "small-face", report.small_face_ok))

        all_even = all(p % 2 == 0 for p in figure.degrees)
        results.append(CheckResult(
            subject, "bipartite", report.bipartite == all_even,
            f"bipartite={report.bipartite}, all faces even={all_even}",
        ))

        failed = [r.check for r in results if not r.passed]
        if failed:
            logger.warning("Verification failed", subject=subject, checks=failed)
        else:
            logger.debug("Verified", subject=subject)
        return results

    def verify_family(self, entry: CatalogEntry, n_min: int, n_max: int) -> List[CheckResult]:
        results: List[CheckResult] = []
        for m in range(n_min, n_max + 1):
            results += self.verify_entry(entry, m)
        return results

    def verify_all(self, family_min_n: int, family_max_n: int) -> List[CheckResult]:
        results: List[CheckResult] = []
        for entry in self.catalog:
            if entry.is_family:
                results += self.verify_family(entry, family_min_n, family_max_n)
            else:
                results += self.verify_entry(entry)
        logger.info(
            "Verification finished",
            checks=len(results),
            failed=sum(1 for r in results if not r.passed),
        )
        return results
