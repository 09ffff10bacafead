from __future__ import annotations

import functools
import logging
from fractions import Fraction
from math import factorial

from src import messages
from src.chevalley.models import CommutatorTable, Term, UElement
from src.errors import PreconditionError
from src.gfq.models import FieldCtx
from src.rootsys.models import RootSystem
from src.rootsys.services import build_root_system

logger = logging.getLogger(__name__)


def _add(x, y, k=1):
    return tuple(a + k * b for a, b in zip(x, y))


def _n_magnitude(rs: RootSystem, x: tuple, y: tuple) -> int:
    """|N_{x,y}| = r + 1 with r maximal such that y - r*x is a root, 0 when x + y is not a root."""
    if not rs.is_root(_add(x, y)):
        return 0
    r = 0
    while rs.is_root(_add(y, x, -(r + 1))):
        r += 1
    return r + 1


def _m(rs: RootSystem, x: tuple, y: tuple, i: int) -> Fraction:
    value = Fraction(1, factorial(i))
    for k in range(i):
        value *= _n_magnitude(rs, x, _add(y, x, k))
    return value


def _constant(rs: RootSystem, x: tuple, y: tuple, a: int, b: int) -> int:
    """Magnitude of the coefficient of x_{a x + b y} in [x_x(t), x_y(s)]."""
    if b == 1:
        value = _m(rs, x, y, a)
    elif a == 1:
        value = _m(rs, y, x, b)
    elif (a, b) == (2, 3):
        value = _m(rs, _add(x, y), y, 2) / 3
    elif (a, b) == (3, 2):
        value = 2 * _m(rs, _add(x, y), x, 2) / 3
    else:
        value = Fraction(0)
    if value.denominator != 1:
        raise ArithmeticError(f"non-integral structure constant for {x}, {y}, ({a}, {b})")
    return abs(int(value))


@functools.cache
def build_commutator_table(rs: RootSystem, p: int) -> CommutatorTable:
    """
    The build_commutator_table function computes, for every ordered pair of distinct
    positive roots, the factors of the commutator [x_i(t), x_j(s)] with their integral
    structure constants, and the characteristic-p reduction dropping vanishing terms.

    :param rs: RootSystem: The positive system
    :param p: int: The characteristic
    :return: The commutator table
    """
    integral = {}
    reduced = {}
    masks = [[0] * (rs.n + 1) for _ in range(rs.n + 1)]
    for ri in rs.roots:
        for rj in rs.roots:
            if ri.index == rj.index:
                continue
            terms = []
            for a in range(1, 4):
                for b in range(1, 4):
                    target = rs.index_of(_add(_add((0,) * rs.rank, ri.coeffs, a), rj.coeffs, b))
                    if target is None:
                        continue
                    c = _constant(rs, ri.coeffs, rj.coeffs, a, b)
                    if c:
                        terms.append(Term(target=target, coeff=c, a=a, b=b))
            terms.sort(key=lambda t: (rs.root(t.target).height, t.target))
            if terms:
                integral[(ri.index, rj.index)] = tuple(terms)
            kept = tuple(Term(t.target, t.coeff % p, t.a, t.b) for t in terms if t.coeff % p)
            if kept:
                reduced[(ri.index, rj.index)] = kept
                for t in kept:
                    masks[ri.index][rj.index] |= 1 << t.target
    # [x_i, x_j] and [x_j, x_i] are mutually inverse, so supports are read symmetrically
    for i in range(1, rs.n + 1):
        for j in range(i + 1, rs.n + 1):
            masks[i][j] = masks[j][i] = masks[i][j] | masks[j][i]
    logger.info("commutator table %s p=%d: %d nontrivial ordered pairs", rs.name, p, len(reduced))
    return CommutatorTable(
        rs=rs,
        p=p,
        integral=integral,
        reduced=reduced,
        support_masks=tuple(tuple(row) for row in masks),
    )


@functools.cache
def table_for(type_tag: str, rank: int, p: int) -> CommutatorTable:
    return build_commutator_table(build_root_system(type_tag, rank), p)


def dump_table(tab: CommutatorTable, reduced: bool = False) -> str:
    source = tab.reduced if reduced else tab.integral
    lines = []
    for (i, j), terms in sorted(source.items()):
        if i < j:
            body = ", ".join(f"({t.target}, {t.coeff}, {t.a}, {t.b})" for t in terms)
            lines.append(f"{i} {j} -> [{body}]")
    return "\n".join(lines) + "\n"


class Collector:
    """
    Normal-form arithmetic in the quattern group X_S over GF(2^f).

    Coordinates outside ``support`` are dropped as soon as they appear, which is
    the quotient map when the complement of the support inside its closure is normal.
    """

    def __init__(self, tab: CommutatorTable, ctx: FieldCtx, support=None):
        if tab.p != 2:
            raise PreconditionError(messages.CHAR_TWO_ONLY.format(p=tab.p))
        self.tab = tab
        self.ctx = ctx
        self.n = tab.n
        self.support = frozenset(support) if support is not None else frozenset(range(1, self.n + 1))
        self.order = sorted(self.support)
        self._later = {k: [m for m in self.order if m > k] for k in self.order}
        self._terms = {}
        for m in self.order:
            for k in self.order:
                kept = tuple(t for t in tab.terms(m, k) if t.target in self.support)
                if kept:
                    self._terms[(m, k)] = kept

    def _pow(self, x: int, e: int) -> int:
        if e == 1:
            return x
        if e == 2:
            return self.ctx.mul(x, x)
        return self.ctx.pow(x, e)

    def _insert(self, c: list[int], k: int, t: int) -> None:
        if t == 0:
            return
        tail = []
        for m in self._later[k]:
            if c[m]:
                tail.append((m, c[m]))
                c[m] = 0
        c[k] ^= t
        mul = self.ctx.mul
        for m, w in tail:
            self._insert(c, m, w)
            for term in self._terms.get((m, k), ()):
                self._insert(c, term.target, mul(self._pow(w, term.a), self._pow(t, term.b)))

    def _coords(self, u: UElement) -> list[int]:
        return [0] + list(u.coords)

    def _element(self, c: list[int]) -> UElement:
        return UElement(coords=tuple(c[1:]))

    def multiply(self, u: UElement, v: UElement) -> UElement:
        c = self._coords(u)
        for k in self.order:
            self._insert(c, k, v.coords[k - 1])
        return self._element(c)

    def multiply_factors(self, u: UElement, factors) -> UElement:
        """Right-multiply u by x_k(t) for each (k, t) in order."""
        c = self._coords(u)
        for k, t in factors:
            if k in self.support:
                self._insert(c, k, t)
        return self._element(c)

    def inverse(self, u: UElement) -> UElement:
        # x_k(t) is an involution in characteristic 2
        c = [0] * (self.n + 1)
        for k in reversed(self.order):
            self._insert(c, k, u.coords[k - 1])
        return self._element(c)

    def conjugate(self, u: UElement, k: int, t: int) -> UElement:
        """x_k(t)^{-1} u x_k(t)."""
        c = [0] * (self.n + 1)
        self._insert(c, k, t)
        for m in self.order:
            self._insert(c, m, u.coords[m - 1])
        self._insert(c, k, t)
        return self._element(c)

    def group_commutator(self, u: UElement, v: UElement) -> UElement:
        return self.multiply(self.multiply(self.inverse(u), self.inverse(v)), self.multiply(u, v))

    def identity(self) -> UElement:
        return UElement.identity(self.n)

    def root_element(self, k: int, t: int) -> UElement:
        return UElement.root_element(self.n, k, t)


def collect_product(tab: CommutatorTable, ctx: FieldCtx, u: UElement, v: UElement, support=None) -> UElement:
    return Collector(tab, ctx, support).multiply(u, v)


def commutator(tab: CommutatorTable, ctx: FieldCtx, i: int, t: int, j: int, s: int, support=None) -> UElement:
    """
    The commutator function evaluates [x_i(t), x_j(s)] = x_i(t)^-1 x_j(s)^-1 x_i(t) x_j(s)
    as a normal form over GF(2^f).

    :param tab: CommutatorTable: Table in characteristic 2
    :param ctx: FieldCtx: The field
    :param i: int: First root
    :param t: int: Its argument
    :param j: int: Second root
    :param s: int: Its argument
    :param support: Optional quattern support
    :return: The normal form of the commutator
    """
    if i == j:
        raise PreconditionError("commutator needs two distinct roots")
    coll = Collector(tab, ctx, support)
    return coll.multiply_factors(coll.identity(), [(i, t), (j, s), (i, t), (j, s)])
