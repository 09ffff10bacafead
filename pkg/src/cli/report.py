from __future__ import annotations

import logging
from dataclasses import dataclass, field

from src.census import reference
from src.census.models import PorcPolynomial, degree_label, q
from src.census.services import assemble_symbolic, malle_check, provenance
from src.chevalley.services import table_for
from src.coresolver.catalog import MALLE_FAMILY_ROW, by_label
from src.coresolver.services import family_counts_numeric
from src.gfq.services import field_for_q, reconcile_cubic_forms
from src.patterns.services import representable_sets
from src.reduction.services import inventory

logger = logging.getLogger(__name__)


@dataclass
class Section:
    name: str
    expected: str
    computed: str
    match: bool

    def as_dict(self) -> dict:
        return {"name": self.name, "expected": self.expected, "computed": self.computed, "match": self.match}


@dataclass
class Report:
    sections: list[Section] = field(default_factory=list)
    provenance: dict = field(default_factory=dict)

    def check(self, name: str, expected, computed) -> None:
        self.sections.append(Section(name, str(expected), str(computed), expected == computed))

    def note(self, name: str, computed, match: bool = True) -> None:
        self.sections.append(Section(name, "-", str(computed), match))

    @property
    def ok(self) -> bool:
        return all(s.match for s in self.sections)

    def as_dict(self) -> dict:
        return {"ok": self.ok, "sections": [s.as_dict() for s in self.sections], "provenance": self.provenance}

    def render(self) -> str:
        width = max((len(s.name) for s in self.sections), default=10)
        lines = [f"{'ok' if s.match else 'FAIL':4} {s.name:<{width}}  {s.computed}"
                 + ("" if s.match else f"  (expected {s.expected})") for s in self.sections]
        lines.append(f"{len([s for s in self.sections if s.match])}/{len(self.sections)} sections match")
        return "\n".join(lines)


def _forms(inv) -> dict[tuple[int, int, int], int]:
    return {(f.z, f.m, f.c): n for f, n in inv.forms.items()}


def representable_counts(report: Report) -> None:
    for (type_tag, rank, p), expected in reference.REPRESENTABLE_COUNTS.items():
        report.check(f"representable sets {type_tag}{rank} p={p}", expected,
                     len(representable_sets(table_for(type_tag, rank, p))))


def inventories(report: Report, threads: int = 1, numeric_q: tuple[int, ...] = (2, 4)) -> None:
    tab = table_for("F", 4, 2)
    inv = inventory(tab, classify=True, threads=threads)
    report.check("F4 core forms", reference.F4_FORMS, _forms(inv))
    report.check("F4 nonabelian cores", reference.F4_CORES, inv.total_nonabelian)
    report.check("F4 branching classes", reference.F4_CLASSES, len(inv.classes))
    for label, ids in inv.classes.items():
        family = by_label(label)
        report.check(f"{label} frequency", family.frequency, len(ids))
        core = inv.nonabelian[ids[0] - 1]
        for qv in numeric_q:
            report.check(f"{label} at q={qv}", family.family_data().evaluate(qv),
                         family_counts_numeric(tab, core, field_for_q(qv)).evaluate())
    b4 = inventory(table_for("B", 4, 2), classify=False, threads=threads)
    report.check("B4 core forms", reference.B4_FORMS, _forms(b4))


def degree_census(report: Report, threads: int = 1) -> None:
    census = assemble_symbolic(table_for("F", 4, 2), threads)
    report.provenance = provenance(table_for("F", 4, 2))
    table = reference.f4_degree_table()
    computed = {d: c for d, c in census.sorted_entries()}
    for degree in sorted(set(table) | set(computed), key=lambda d: (d[0], -d[1])):
        expected = table.get(degree, PorcPolynomial.zero())
        got = computed.get(degree, PorcPolynomial.zero())
        report.check(f"k(U, {degree_label(degree)})", expected.in_v(), got.in_v())
        report.check(f"k(U, {degree_label(degree)}) parity collapse", True, got.collapsed)
    report.check("total", reference.f4_total(), census.total)
    report.check("total at q=2", reference.F4_TOTAL_AT_2, int(census.total.evaluate(2)))
    report.check("table rows at q=2", reference.F4_TOTAL_AT_2,
                 int(sum((c.evaluate(2) for c in table.values()), 0)))
    report.check("sum of squares", PorcPolynomial(q ** 24), census.sum_of_squares())
    malle = malle_check(census)
    report.check("degree q^4/8 present", True, malle.present)
    report.check("degree q^4/8 family", MALLE_FAMILY_ROW, malle.family)


def cubic_reconciliation(report: Report, max_f: int = 6) -> None:
    for fit in reconcile_cubic_forms(max_f):
        convention = ("sign flipped" if fit.flip_sign else "sign as printed") + (", times q-1" if fit.per_b else "")
        report.note(f"cubic {fit.family}{fit.roots} (printed fits: {fit.printed_fits})", convention, fit.fits)


def build_report(threads: int = 1, numeric_q: tuple[int, ...] = (2, 4), max_f: int = 6) -> Report:
    """
    The build_report function recomputes every published count the census relies
    on and pairs it with the reference value.

    :param threads: int: Worker threads
    :param numeric_q: tuple[int, ...]: Field sizes for the per-family numeric check
    :param max_f: int: Largest f for the cubic reconciliation
    :return: The report; ``ok`` is true iff every section matches
    """
    report = Report()
    representable_counts(report)
    inventories(report, threads, numeric_q)
    degree_census(report, threads)
    cubic_reconciliation(report, max_f)
    logger.info("report: %d sections, ok=%s", len(report.sections), report.ok)
    return report
