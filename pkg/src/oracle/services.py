from __future__ import annotations

import logging

from src import messages
from src.chevalley.models import CommutatorTable
from src.chevalley.services import table_for
from src.config import config
from src.errors import BudgetExceededError
from src.gfq.models import FieldCtx
from src.oracle.models import ExplicitGroup
from src.patterns.models import Quattern
from src.patterns.services import center_roots
from src.reduction.models import Core

logger = logging.getLogger(__name__)


class UnionFind:
    """Disjoint sets over 0 .. size-1 with union by rank and path halving."""

    def __init__(self, size: int):
        self.parents = list(range(size))
        self.ranks = [0] * size
        self.num_sets = size

    def find(self, x: int) -> int:
        parents = self.parents
        while parents[x] != x:
            parents[x] = parents[parents[x]]
            x = parents[x]
        return x

    def union(self, x: int, y: int) -> bool:
        x, y = self.find(x), self.find(y)
        if x == y:
            return False
        if self.ranks[x] < self.ranks[y]:
            x, y = y, x
        elif self.ranks[x] == self.ranks[y]:
            self.ranks[x] += 1
        self.parents[y] = x
        self.num_sets -= 1
        return True

    def __len__(self) -> int:
        return self.num_sets


def check_budget(grp: ExplicitGroup, expensive: bool = False) -> None:
    budget = config.ORACLE_EXPENSIVE_LOG2 if expensive else config.ORACLE_BUDGET_LOG2
    if grp.log2_order > budget:
        raise BudgetExceededError(messages.BUDGET_EXCEEDED.format(log2=grp.log2_order, budget=budget))


def _central(grp: ExplicitGroup) -> frozenset[int]:
    return center_roots(grp.tab, Quattern(P=grp.support))


def conjugacy_class_count(grp: ExplicitGroup, expensive: bool = False) -> int:
    """
    The conjugacy_class_count function counts the orbits of X_S acting on itself by
    conjugation. Only the root elements x_r(b), r non-central and b a field basis
    element, are applied; they generate the group, so their orbits are the classes.

    :param grp: ExplicitGroup: The group
    :param expensive: bool: Use the larger budget
    :return: The number of conjugacy classes
    """
    check_budget(grp, expensive)
    gens = grp.generators(_central(grp))
    uf = UnionFind(grp.order)
    conjugate = grp.collector.conjugate
    for index in range(grp.order):
        u = grp.unpack(index)
        for k, t in gens:
            uf.union(index, grp.pack(conjugate(u, k, t)))
    logger.info("oracle: %d classes in a group of order 2^%d", len(uf), grp.log2_order)
    return len(uf)


def abelianization_order(grp: ExplicitGroup, expensive: bool = False) -> int:
    """
    The abelianization_order function returns |G| / |[G, G]|, where [G, G] is built as
    the closure of the generator commutators under multiplication and conjugation.

    :param grp: ExplicitGroup: The group
    :param expensive: bool: Use the larger budget
    :return: The order of G/[G, G]
    """
    check_budget(grp, expensive)
    coll = grp.collector
    gens = grp.generators(_central(grp))
    commutators = set()
    for k, t in gens:
        for m, s in gens:
            c = coll.group_commutator(coll.root_element(k, t), coll.root_element(m, s))
            if not c.is_identity():
                commutators.add(grp.pack(c))
    seen = {0}
    frontier = [0]
    while frontier:
        index = frontier.pop()
        u = grp.unpack(index)
        images = [grp.pack(coll.multiply(u, grp.unpack(c))) for c in commutators]
        images += [grp.pack(coll.conjugate(u, k, t)) for k, t in gens]
        for image in images:
            if image not in seen:
                seen.add(image)
                frontier.append(image)
    return grp.order // len(seen)


def group_for(type_tag: str, rank: int, ctx: FieldCtx) -> ExplicitGroup:
    tab = table_for(type_tag, rank, 2)
    return ExplicitGroup(support=frozenset(range(1, tab.n + 1)), ctx=ctx, tab=tab)


def class_count_of_core(tab: CommutatorTable, core: Core, ctx: FieldCtx, expensive: bool = False) -> int:
    """Brute-force class number of the quattern group X_S of a core."""
    return conjugacy_class_count(ExplicitGroup(support=core.S, ctx=ctx, tab=tab), expensive)
