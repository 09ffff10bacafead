"""Per-family character counts of nonabelian cores of UF4(2^f), UB4(2^f) and UC4(2^f)."""
from __future__ import annotations

from dataclasses import dataclass

import sympy

from src.census.models import Degree, PorcPolynomial, q
from src.coresolver.models import FamilyData, FamilyRow

v = q - 1
third = sympy.Rational(1, 3)


@dataclass(frozen=True)
class CatalogFamily:
    label: str
    form: tuple[int, int, int]
    frequency: int
    even: tuple[tuple[str, object, Degree], ...]
    odd: tuple[tuple[str, object, Degree], ...] | None = None
    alt_forms: tuple[tuple[int, int, int], ...] = ()

    @property
    def parity_split(self) -> bool:
        return self.odd is not None

    def family_data(self) -> FamilyData:
        if self.odd is None:
            rows = [FamilyRow(label, PorcPolynomial(expr), degree) for label, expr, degree in self.even]
        else:
            rows = [FamilyRow(label, PorcPolynomial(expr, 0), degree) for label, expr, degree in self.even]
            rows += [FamilyRow(label, PorcPolynomial(0, expr), degree) for label, expr, degree in self.odd]
        return FamilyData(family=self.label, rows=rows)


def _numbered(label, rows):
    if len(rows) == 1:
        return ((label, rows[0][0], rows[0][1]),)
    return tuple((f"{label}^{k}", expr, degree) for k, (expr, degree) in enumerate(rows, start=1))


def _split(label, parity, rows):
    return tuple((f"{label}^{{{parity},{k}}}", expr, degree) for k, (expr, degree) in enumerate(rows, start=1))


F4_FAMILIES = (
    CatalogFamily("F1", (2, 4, 1), 186, _numbered("F1", [(4 * v ** 2, (1, 1))])),
    CatalogFamily("F2", (3, 10, 9), 1, _numbered("F2", [(v ** 3, (3, 0)), (4 * v ** 4, (3, 1))])),
    CatalogFamily("F3", (4, 8, 2), 2, _numbered("F3", [(16 * v ** 4, (2, 2))])),
    CatalogFamily("F4,1", (4, 8, 4), 5, _numbered("F4,1", [(4 * v ** 4, (2, 1))])),
    CatalogFamily(
        "F4,2", (4, 8, 4), 2,
        _split("F4,2", "even", [(2 * v ** 4 * third, (2, 0)), (16 * v ** 4 * third, (2, 2))]),
        _split("F4,2", "odd", [(4 * v ** 4, (2, 1))]),
    ),
    CatalogFamily("F5", (4, 10, 5), 2, _numbered("F5", [(16 * v ** 4, (3, 2))])),
    # the [4,11,7] core reached from the normal set {21} has the same counts
    CatalogFamily("F6", (4, 11, 6), 2, _numbered("F6", [(4 * q * v ** 4, (3, 1))]), alt_forms=((4, 11, 7),)),
    CatalogFamily("F7,1", (4, 12, 9), 1, _numbered("F7,1", [(q ** 2 * v ** 4, (3, 0))])),
    CatalogFamily("F7,2", (4, 12, 9), 1, _numbered("F7,2", [(8 * v ** 4, (4, 3))] + [(2 * v ** 4, (4, 2))] * 7)),
    CatalogFamily("F8", (5, 9, 3), 2, _numbered("F8", [(8 * (q - 2) * v ** 4, (2, 2)), (2 * q * v ** 4, (2, 1))])),
    CatalogFamily(
        "F9,1", (5, 9, 4), 3,
        _split("F9,1", "even", [
            (8 * v ** 4 * (q - 4) * third, (2, 2)),
            (2 * q * v ** 4, (2, 1)),
            (v ** 5 * third, (2, 0)),
        ]),
        _split("F9,1", "odd", [
            (8 * v ** 4 * (q - 2) * third, (2, 2)),
            (2 * v ** 4 * (q - 2), (2, 1)),
            (v ** 4 * (q + 1) * third, (2, 0)),
        ]),
    ),
    CatalogFamily("F9,2", (5, 9, 4), 1, _numbered("F9,2", [(v ** 4, (2, 0)), (4 * v ** 4 * (q - 2), (2, 1))])),
    CatalogFamily("F10", (5, 11, 6), 2, _numbered("F10", [(8 * (q - 2) * v ** 4, (3, 2)), (2 * q * v ** 4, (3, 1))])),
    CatalogFamily(
        "F11", (6, 10, 4), 1,
        _split("F11", "even", [
            (v ** 4, (2, 0)),
            (4 * v ** 4 * (q - 2), (2, 1)),
            (2 * v ** 5 * third, (2, 0)),
            (16 * v ** 4 * (q - 4) * third, (2, 2)),
            (v ** 5 * (q - 2) * third, (2, 0)),
            (2 * q * v ** 4 * (q - 3), (2, 1)),
            (8 * v ** 4 * (q - 4) * (q - 5) * third, (2, 2)),
        ]),
        _split("F11", "odd", [
            (v ** 4, (2, 0)),
            (4 * v ** 4 * (q - 2), (2, 1)),
            (4 * v ** 4 * (q - 2), (2, 1)),
            (v ** 4 * (q - 2) * (q + 1) * third, (2, 0)),
            (2 * v ** 4 * (q - 2) * (q - 3), (2, 1)),
            (8 * v ** 4 * (q - 2) * (q - 5) * third, (2, 2)),
        ]),
    ),
)

# UB4(2^f) and UC4(2^f) only produce the F1, F3 and F6 classes
B4_FREQUENCIES = {"F1": 51, "F3": 1, "F6": 1}

HEART_CLOSED_FORM = "F2"
MALLE_FAMILY_ROW = "F7,2^1"


def by_label(label: str) -> CatalogFamily:
    for family in F4_FAMILIES:
        if family.label == label:
            return family
    raise KeyError(label)


def candidates(form: tuple[int, int, int]) -> list[CatalogFamily]:
    return [f for f in F4_FAMILIES if f.form == form or form in f.alt_forms]
