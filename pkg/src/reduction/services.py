from __future__ import annotations

import logging
from collections import Counter
from concurrent.futures import ThreadPoolExecutor

from src import messages
from src.chevalley.models import CommutatorTable
from src.errors import ReductionConsistencyError
from src.patterns.models import Quattern, RepresentableSet, RootSet, from_mask
from src.patterns.services import (
    center_roots,
    direct_factor_roots,
    nontrivial_pairs,
    representable_sets,
    support_in,
)
from src.reduction.models import Core, CoreForm, Inventory, Move

logger = logging.getLogger(__name__)


def _quattern(S: RootSet) -> Quattern:
    # supports are always read inside S, the removed roots only matter for bookkeeping
    return Quattern(P=S)


def _find_small_pair(tab: CommutatorTable, S: RootSet, Z: RootSet) -> tuple[int, int, int] | None:
    """Pair (beta, delta) with minimal beta among those with maximal delta, and its gamma."""
    s = sorted(S)
    s_mask = sum(1 << k for k in s)
    hit = 0
    for idx, a in enumerate(s):
        for b in s[idx + 1:]:
            hit |= support_in(tab, a, b, s_mask)
    for delta in reversed(s):
        partners = [a for a in s if a != delta and support_in(tab, a, delta, s_mask)]
        if len(partners) != 1:
            continue
        beta = partners[0]
        if hit >> beta & 1:
            continue
        support = from_mask(support_in(tab, beta, delta, s_mask))
        if len(support) == 1:
            (gamma,) = support
            if gamma in Z:
                return beta, delta, gamma
    return None


def small_pair_holds(tab: CommutatorTable, S: RootSet, Z: RootSet, beta: int, delta: int, gamma: int) -> bool:
    """
    The small_pair_holds function rechecks the three conditions that license
    removing (beta, delta): [x_beta, x_delta] lands in X_gamma only, no commutator
    inside X_S has a beta component, and delta commutes with everything but beta.

    :param tab: CommutatorTable: The table
    :param S: RootSet: Current S
    :param Z: RootSet: Current Z
    :param beta: int: Root induced over
    :param delta: int: Root inflated over
    :param gamma: int: Central root hit by the pair
    :return: True when every condition holds
    """
    if gamma not in Z or gamma not in center_roots(tab, _quattern(S)):
        return False
    if not {beta, delta} <= S or gamma in (beta, delta):
        return False
    inside = set(S)

    def supp(a, b):
        return tab.support(a, b) & inside | tab.support(b, a) & inside

    if supp(beta, delta) != {gamma}:
        return False
    for a in S:
        for b in S:
            if a != b and beta in supp(a, b):
                return False
    return all(not supp(a, delta) for a in S if a not in (beta, delta))


def reduce(tab: CommutatorTable, rep: RepresentableSet) -> list[Core]:
    """
    The reduce function runs the reduction on one representable set. Step 1 (abelian
    core) is tried first on every visit, Step 2 removes a (beta, delta) pair, Step 3
    splits on the largest central root outside Z, and Step 4 records a nonabelian
    core after splitting off its direct-factor roots, all of which then lie in Z.

    :param tab: CommutatorTable: Table in the working characteristic
    :param rep: RepresentableSet: Starting set
    :return: Cores in depth-first order
    """
    base = rep.base or Quattern(P=frozenset(range(1, tab.n + 1)))
    cores: list[Core] = []

    def visit(S, Z, A, L, K, path):
        while True:
            quat = _quattern(S)
            center = center_roots(tab, quat)
            if center == S:
                cores.append(Core(S=S, Z=Z, A=A, L=L, K=K, sigma=rep.sigma, n_sigma=rep.n_sigma,
                                  abelian=True, path=tuple(path)))
                return
            found = _find_small_pair(tab, S, Z)
            if found is not None:
                beta, delta, gamma = found
                if not small_pair_holds(tab, S, Z, beta, delta, gamma):
                    raise ReductionConsistencyError(messages.REDUCTION_INCONSISTENT.format(
                        detail=f"pair ({beta}, {delta}) through {gamma} in S={sorted(S)}"))
                path = path + [Move(kind="step2", gamma=gamma, beta=beta, delta=delta)]
                S, A, L, K = S - {beta, delta}, A | {beta}, L | {delta}, K | {delta}
                continue
            candidates = center - Z
            if candidates:
                gamma = max(candidates)
                visit(S - {gamma}, Z, A, L, K | {gamma}, path + [Move(kind="step3", gamma=gamma, branch="removed")])
                Z = Z | {gamma}
                path = path + [Move(kind="step3", gamma=gamma, branch="central")]
                continue
            if not Z <= center:
                raise ReductionConsistencyError(messages.REDUCTION_INCONSISTENT.format(
                    detail=f"Z={sorted(Z)} not central in S={sorted(S)}"))
            direct = direct_factor_roots(tab, quat)
            cores.append(Core(
                S=S - direct, Z=Z - direct, A=A, L=L, K=K,
                sigma=rep.sigma, n_sigma=rep.n_sigma, abelian=False, path=tuple(path),
                D=direct, d_free=len(direct - Z), d_central=len(direct & Z),
            ))
            return

    visit(base.S - rep.n_sigma, rep.sigma, frozenset(), frozenset(), base.K, [])
    return cores


def core_form(tab: CommutatorTable, core: Core) -> CoreForm:
    return CoreForm(z=len(core.Z), m=len(core.S), c=len(nontrivial_pairs(tab, _quattern(core.S))))


def all_cores(tab: CommutatorTable, base: Quattern | None = None, threads: int = 1) -> list[Core]:
    reps = representable_sets(tab, base)
    if threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            chunks = list(pool.map(lambda r: reduce(tab, r), reps))
    else:
        chunks = [reduce(tab, r) for r in reps]
    return [core for chunk in chunks for core in chunk]


def inventory(tab: CommutatorTable, classify: bool = True, threads: int = 1) -> Inventory:
    """
    The inventory function reduces every representable set and tallies the
    nonabelian core forms; with ``classify`` it also groups the nonabelian cores
    into branching classes.

    :param tab: CommutatorTable: The table
    :param classify: bool: Compute branching classes too
    :param threads: int: Worker threads over representable sets
    :return: The inventory
    """
    from src.coresolver.services import classify_cores

    cores = all_cores(tab, threads=threads)
    inv = Inventory(type_tag=tab.rs.type_tag, rank=tab.rs.rank, p=tab.p, cores=cores)
    inv.forms = dict(sorted(Counter(core_form(tab, c) for c in inv.nonabelian).items(),
                            key=lambda kv: (kv[0].z, kv[0].m, kv[0].c)))
    if classify and tab.p == 2 and inv.nonabelian:
        inv.classes = classify_cores(tab, inv.nonabelian)
    logger.info("%s p=%d: %d cores, %d nonabelian in %d forms",
                tab.rs.name, tab.p, len(cores), inv.total_nonabelian, len(inv.forms))
    return inv
