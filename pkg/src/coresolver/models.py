from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from src.census.models import Degree, PorcPolynomial, degree_label, degree_value


@dataclass(frozen=True)
class EqTerm:
    """Summand a_gamma * s_j^s_exp * t_i^t_exp of the stabilizer equation."""
    j: int
    i: int
    gamma: int
    s_exp: int
    t_exp: int

    def __str__(self) -> str:
        s = f"s_{self.j}" + ("^2" if self.s_exp == 2 else "")
        t = f"t_{self.i}" + ("^2" if self.t_exp == 2 else "")
        return f"a_{self.gamma} {s} {t}"


@dataclass(frozen=True)
class StabilizerEquation:
    I: tuple[int, ...]
    J: tuple[int, ...]
    Z: tuple[int, ...]
    terms: tuple[EqTerm, ...]
    signature: str = ""

    def render(self) -> str:
        groups = []
        for j in self.J:
            inner = [t for t in self.terms if t.j == j]
            if not inner:
                continue
            parts = " + ".join(
                f"a_{t.gamma} t_{t.i}" + ("^2" if t.t_exp == 2 else "") + (f" s_{j}" if t.s_exp == 2 else "")
                for t in inner
            )
            groups.append(f"s_{j}({parts})")
        return " + ".join(groups)


@dataclass
class Stabilizers:
    xprime: list[tuple[int, ...]]
    yprime: list[tuple[int, ...]]
    x_is_subgroup: bool
    x_basis: list[int] = field(default_factory=list, repr=False)


@dataclass(frozen=True)
class FamilyRow:
    label: str
    count: PorcPolynomial
    degree: Degree

    def as_dict(self) -> dict:
        return {"label": self.label, "count": self.count.as_dict(), "degree": degree_label(self.degree)}


@dataclass
class FamilyData:
    family: str
    rows: list[FamilyRow] = field(default_factory=list)

    def evaluate(self, qv: int) -> dict[int, int]:
        values: dict[int, int] = {}
        for row in self.rows:
            n = row.count.evaluate(qv)
            if n:
                d = int(degree_value(row.degree, qv))
                values[d] = values.get(d, 0) + int(n)
        return dict(sorted(values.items()))


@dataclass
class Histogram:
    """Numeric (degree -> count) data of one core at one q; degrees kept as q^i / 2^j."""
    q: int
    counts: dict[Degree, int] = field(default_factory=dict)

    def add(self, degree: Degree, n: int) -> None:
        if n:
            self.counts[degree] = self.counts.get(degree, 0) + n

    def evaluate(self) -> dict[int, int]:
        values: dict[int, int] = {}
        for degree, n in self.counts.items():
            d = degree_value(degree, self.q)
            if d.denominator != 1:
                raise ArithmeticError(f"degree {degree_label(degree)} is not integral at q={self.q}")
            values[int(d)] = values.get(int(d), 0) + n
        return dict(sorted(values.items()))

    def sum_of_squares(self) -> Fraction:
        return sum((n * degree_value(d, self.q) ** 2 for d, n in self.counts.items()), Fraction(0))
