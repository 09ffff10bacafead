from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

import sympy

q = sympy.Symbol("q")
v = sympy.Symbol("v")


def _poly(expr) -> sympy.Poly:
    return sympy.Poly(sympy.expand(sympy.sympify(expr)), q, domain=sympy.QQ)


class PorcPolynomial:
    """
    Counting function that is a polynomial in q on each residue class of f mod 2,
    q = 2^f. ``even`` applies when f is even, ``odd`` when f is odd.
    """

    __slots__ = ("even", "odd")

    def __init__(self, even, odd=None):
        self.even = even if isinstance(even, sympy.Poly) else _poly(even)
        if odd is None:
            self.odd = self.even
        else:
            self.odd = odd if isinstance(odd, sympy.Poly) else _poly(odd)

    @classmethod
    def zero(cls) -> "PorcPolynomial":
        return cls(0)

    @classmethod
    def coerce(cls, other) -> "PorcPolynomial":
        return other if isinstance(other, PorcPolynomial) else cls(other)

    def __add__(self, other):
        other = PorcPolynomial.coerce(other)
        return PorcPolynomial(self.even + other.even, self.odd + other.odd)

    __radd__ = __add__

    def __sub__(self, other):
        other = PorcPolynomial.coerce(other)
        return PorcPolynomial(self.even - other.even, self.odd - other.odd)

    def __mul__(self, other):
        other = PorcPolynomial.coerce(other)
        return PorcPolynomial(self.even * other.even, self.odd * other.odd)

    __rmul__ = __mul__

    def __eq__(self, other):
        if not isinstance(other, PorcPolynomial):
            try:
                other = PorcPolynomial(other)
            except (sympy.SympifyError, TypeError):
                return NotImplemented
        return self.even == other.even and self.odd == other.odd

    def __hash__(self):
        return hash((tuple(self.even.all_coeffs()), tuple(self.odd.all_coeffs())))

    def __repr__(self):
        if self.collapsed:
            return f"PorcPolynomial({self.even.as_expr()})"
        return f"PorcPolynomial(even={self.even.as_expr()}, odd={self.odd.as_expr()})"

    @property
    def collapsed(self) -> bool:
        return self.even == self.odd

    def is_zero(self) -> bool:
        return self.even.is_zero and self.odd.is_zero

    def part(self, f: int) -> sympy.Poly:
        return self.odd if f % 2 else self.even

    def evaluate(self, qv: int) -> Fraction:
        f = qv.bit_length() - 1
        value = self.part(f).eval(qv)
        return Fraction(int(value.p), int(value.q))

    def coefficients(self, f_parity: int = 0) -> list[Fraction]:
        poly = self.part(f_parity)
        return [Fraction(int(c.p), int(c.q)) for c in poly.all_coeffs()]

    def in_v(self, f_parity: int = 0):
        return sympy.expand(self.part(f_parity).as_expr().subs(q, v + 1))

    def as_dict(self) -> dict:
        if self.collapsed:
            return {"q": str(self.even.as_expr()), "v": str(self.in_v())}
        return {
            "even": {"q": str(self.even.as_expr()), "v": str(self.in_v(0))},
            "odd": {"q": str(self.odd.as_expr()), "v": str(self.in_v(1))},
        }


Degree = tuple[int, int]


def degree_value(degree: Degree, qv: int) -> Fraction:
    i, j = degree
    return Fraction(qv ** i, 2 ** j)


def degree_label(degree: Degree) -> str:
    i, j = degree
    head = "1" if i == 0 else ("q" if i == 1 else f"q^{i}")
    return head if j == 0 else f"{head}/{2 ** j}"


@dataclass
class DegreeCensus:
    type_tag: str
    rank: int
    p: int
    entries: dict[Degree, PorcPolynomial] = field(default_factory=dict)
    provenance: dict = field(default_factory=dict)
    sources: dict[Degree, set[str]] = field(default_factory=dict)

    def add(self, degree: Degree, count: PorcPolynomial, source: str | None = None) -> None:
        self.entries[degree] = self.entries.get(degree, PorcPolynomial.zero()) + count
        if source:
            self.sources.setdefault(degree, set()).add(source)

    @property
    def total(self) -> PorcPolynomial:
        result = PorcPolynomial.zero()
        for count in self.entries.values():
            result = result + count
        return result

    def sum_of_squares(self) -> PorcPolynomial:
        result = PorcPolynomial.zero()
        for (i, j), count in self.entries.items():
            result = result + count * PorcPolynomial(q ** (2 * i) / sympy.Integer(4) ** j)
        return result

    def sorted_entries(self) -> list[tuple[Degree, PorcPolynomial]]:
        return sorted(((d, c) for d, c in self.entries.items() if not c.is_zero()),
                      key=lambda kv: (kv[0][0], -kv[0][1]))

    def evaluate(self, qv: int) -> dict[int, int]:
        values: dict[int, int] = {}
        for degree, count in self.entries.items():
            n = count.evaluate(qv)
            if n:
                d = degree_value(degree, qv)
                values[int(d)] = values.get(int(d), 0) + int(n)
        return dict(sorted(values.items()))


@dataclass
class NumericCensus:
    type_tag: str
    rank: int
    p: int
    q: int
    counts: dict[int, int] = field(default_factory=dict)
    provenance: dict = field(default_factory=dict)

    @property
    def total(self) -> int:
        return sum(self.counts.values())

    def add(self, degree: int, count: int) -> None:
        if count:
            self.counts[degree] = self.counts.get(degree, 0) + count


@dataclass
class MalleReport:
    present: bool
    count: PorcPolynomial | None
    family: str | None
    at_q2: int | None

    def as_dict(self) -> dict:
        return {
            "present": self.present,
            "count": self.count.as_dict() if self.count is not None else None,
            "family": self.family,
            "at_q2": self.at_q2,
        }
