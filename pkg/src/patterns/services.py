from __future__ import annotations

import logging

from src import messages
from src.chevalley.models import CommutatorTable
from src.errors import PreconditionError
from src.patterns.models import Quattern, RepresentableSet, RootSet, from_mask, to_mask

logger = logging.getLogger(__name__)


def full_quattern(tab: CommutatorTable) -> Quattern:
    return Quattern(P=frozenset(range(1, tab.n + 1)))


def support_in(tab: CommutatorTable, i: int, j: int, s_mask: int) -> int:
    """Char-p support of [x_i, x_j] read inside X_S, as a bitmask."""
    return tab.mask(i, j) & s_mask


def is_pattern_group(tab: CommutatorTable, P) -> bool:
    p_mask = to_mask(P)
    return all(tab.mask(i, j) & ~p_mask == 0 for i in P for j in P if i != j)


def is_normal_pattern(tab: CommutatorTable, P, n_set) -> bool:
    """
    The is_normal_pattern function decides whether X_N is normal in X_P, i.e. whether
    every commutator of a root of P with a root of N has its support inside N.

    :param tab: CommutatorTable: Table in the working characteristic
    :param P: Root set of a pattern group
    :param n_set: Candidate normal subset of P
    :return: True when X_N is a normal subgroup of X_P
    """
    if not set(n_set) <= set(P):
        raise PreconditionError(messages.NOT_A_SUBSET.format(roots=sorted(n_set)))
    if not is_pattern_group(tab, P):
        raise PreconditionError(messages.NOT_A_PATTERN.format(roots=sorted(P)))
    n_mask = to_mask(n_set)
    return all(tab.mask(a, d) & ~n_mask == 0 for a in P for d in n_set if a != d)


def quattern(tab: CommutatorTable, P, K=()) -> Quattern:
    P, K = frozenset(P), frozenset(K)
    if not is_normal_pattern(tab, P, K):
        raise PreconditionError(messages.NOT_A_PATTERN.format(roots=sorted(P - K)))
    return Quattern(P=P, K=K)


def principal_closure(tab: CommutatorTable, quat: Quattern, delta: int) -> int:
    s = sorted(quat.S)
    s_mask = quat.s_mask
    closed = 1 << delta
    frontier = [delta]
    while frontier:
        gamma = frontier.pop()
        for alpha in s:
            if alpha == gamma:
                continue
            new = support_in(tab, alpha, gamma, s_mask) & ~closed
            if new:
                closed |= new
                frontier.extend(from_mask(new))
    return closed


def enumerate_normal_patterns(tab: CommutatorTable, base: Quattern | None = None) -> list[RootSet]:
    """
    The enumerate_normal_patterns function lists every normal pattern subset N of the
    base quattern (by default all of U). Normal sets are exactly the unions of
    principal closures, so they are generated breadth first from the empty set.

    :param tab: CommutatorTable: The table
    :param base: Quattern | None: Quattern whose normal sets are wanted
    :return: Sorted list of normal root sets
    """
    base = base or full_quattern(tab)
    closures = {d: principal_closure(tab, base, d) for d in sorted(base.S)}
    seen = {0}
    frontier = [0]
    while frontier:
        nxt = []
        for mask in frontier:
            for d, cl in closures.items():
                if not mask >> d & 1:
                    joined = mask | cl
                    if joined not in seen:
                        seen.add(joined)
                        nxt.append(joined)
        frontier = nxt
    result = sorted((from_mask(m) for m in seen), key=lambda r: (len(r), sorted(r)))
    logger.debug("%d normal pattern sets in %s", len(result), sorted(base.S))
    return result


def center_roots(tab: CommutatorTable, quat: Quattern) -> RootSet:
    s_mask = quat.s_mask
    s = sorted(quat.S)
    return frozenset(
        g for g in s
        if all(support_in(tab, g, d, s_mask) == 0 for d in s if d != g)
    )


def _closed_without(tab: CommutatorTable, quat: Quattern, gamma: int) -> bool:
    rest = sorted(quat.S - {gamma})
    rest_mask = to_mask(rest)
    s_mask = quat.s_mask
    return all(support_in(tab, a, b, s_mask) & ~rest_mask == 0 for a in rest for b in rest if a != b)


def direct_factor_roots(tab: CommutatorTable, quat: Quattern) -> RootSet:
    """
    Central roots gamma with X_S = X_gamma x X_{S - gamma}. In characteristic 2 every
    commutator coordinate is a monomial, so it is enough that no commutator of two
    other roots of S has a gamma component; for odd p each central gamma is kept when
    X_{S - gamma} is itself a subgroup of the quattern group.
    """
    center = center_roots(tab, quat)
    if tab.p != 2:
        return frozenset(g for g in center if _closed_without(tab, quat, g))
    s_mask = quat.s_mask
    s = sorted(quat.S)
    hit = 0
    for idx, a in enumerate(s):
        for b in s[idx + 1:]:
            hit |= support_in(tab, a, b, s_mask) | support_in(tab, b, a, s_mask)
    return frozenset(g for g in center if not hit >> g & 1)


def representable_sets(tab: CommutatorTable, base: Quattern | None = None) -> list[RepresentableSet]:
    """
    The representable_sets function pairs every normal set N of the base quattern
    with the center of the quotient by X_N.

    :param tab: CommutatorTable: The table
    :param base: Quattern | None: Base quattern, all of U by default
    :return: One representable set per normal set, in enumeration order
    """
    base = base or full_quattern(tab)
    reps = []
    for n_set in enumerate_normal_patterns(tab, base):
        sigma = center_roots(tab, Quattern(P=base.P, K=base.K | n_set))
        reps.append(RepresentableSet(sigma=sigma, n_sigma=n_set, base=base))
    logger.info("%s p=%d: %d representable sets", tab.rs.name, tab.p, len(reps))
    return reps


def nontrivial_pairs(tab: CommutatorTable, quat: Quattern) -> list[tuple[int, int]]:
    s_mask = quat.s_mask
    s = sorted(quat.S)
    return [
        (a, b) for idx, a in enumerate(s) for b in s[idx + 1:]
        if support_in(tab, a, b, s_mask)
    ]
