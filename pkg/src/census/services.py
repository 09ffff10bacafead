from __future__ import annotations

import logging
from concurrent.futures import ThreadPoolExecutor
from importlib import metadata

from src import messages
from src.cache import result_cache
from src.census.models import Degree, DegreeCensus, MalleReport, NumericCensus, PorcPolynomial, degree_value, q
from src.census.reference import F4_MALLE_DEGREE
from src.chevalley.models import CommutatorTable
from src.chevalley.services import table_for
from src.config import config
from src.coresolver.models import Histogram
from src.coresolver.services import family_counts_numeric, family_counts_symbolic, isomorphism_groups
from src.errors import OutOfScopeError
from src.gfq.models import FieldCtx
from src.gfq.services import field_for_q, moduli_checksum
from src.patterns.models import Quattern
from src.reduction.models import Core
from src.reduction.services import all_cores, inventory
from src.rootsys.services import table_checksum

logger = logging.getLogger(__name__)

CENSUS_SCOPE = {("F", 4), ("B", 4), ("C", 4), ("B", 2), ("B", 3), ("C", 3)}


def _version() -> str:
    try:
        return metadata.version("unipotent-census")
    except metadata.PackageNotFoundError:
        return "0.1.0"


def provenance(tab: CommutatorTable) -> dict:
    return {
        "group": f"U{tab.rs.name}",
        "p": tab.p,
        "root_table_sha256": table_checksum(tab.rs),
        "moduli_sha256": moduli_checksum(),
        "version": _version(),
    }


def abelian_core_count(core: Core) -> tuple[PorcPolynomial, Degree]:
    """
    The abelian_core_count function gives the linear characters of an abelian core:
    q^|S-Z| (q-1)^|Z| of them, each induced up to degree q^|A|.

    :param core: Core: An abelian core
    :return: Count and structural degree
    """
    return PorcPolynomial(q ** len(core.S - core.Z) * (q - 1) ** len(core.Z)), (len(core.A), 0)


def _multiplier(core: Core) -> PorcPolynomial:
    return PorcPolynomial(q ** core.d_free * (q - 1) ** core.d_central)


def _shift(core: Core, degree: Degree) -> Degree:
    return degree[0] + len(core.A), degree[1]


def check_q(qv: int, expensive: bool = False) -> FieldCtx:
    limit = 2 ** 4 if expensive else config.NUMERIC_MAX_Q
    if qv < 2 or qv & (qv - 1) or qv > limit:
        raise OutOfScopeError(messages.Q_OUT_OF_SCOPE.format(q=qv, limit=limit))
    return field_for_q(qv)


def core_histograms(tab: CommutatorTable, cores: list[Core], ctx: FieldCtx, threads: int = 1) -> list[Histogram]:
    """Numeric histogram of every nonabelian core, solving one representative per isomorphism class."""
    groups = isomorphism_groups(tab, list(enumerate(cores)))

    def solve(group):
        return family_counts_numeric(tab, group[0][1], ctx)

    if threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            solved = list(pool.map(solve, groups))
    else:
        solved = [solve(g) for g in groups]
    result: list[Histogram | None] = [None] * len(cores)
    for group, hist in zip(groups, solved):
        for idx, _ in group:
            result[idx] = hist
    logger.debug("%d nonabelian cores solved through %d representatives", len(cores), len(groups))
    return result


def numeric_counts(tab: CommutatorTable, cores: list[Core], ctx: FieldCtx, threads: int = 1) -> dict[int, int]:
    qv = ctx.q
    counts: dict[int, int] = {}

    def add(degree: Degree, n: int) -> None:
        d = degree_value(degree, qv)
        if n:
            counts[int(d)] = counts.get(int(d), 0) + n

    nonabelian = [c for c in cores if not c.abelian]
    for core in cores:
        if core.abelian:
            add((len(core.A), 0), qv ** len(core.S - core.Z) * (qv - 1) ** len(core.Z))
    for core, hist in zip(nonabelian, core_histograms(tab, nonabelian, ctx, threads)):
        factor = qv ** core.d_free * (qv - 1) ** core.d_central
        for degree, n in hist.counts.items():
            add(_shift(core, degree), n * factor)
    return dict(sorted(counts.items()))


def assemble_symbolic(tab: CommutatorTable, threads: int = 1) -> DegreeCensus:
    """
    The assemble_symbolic function builds the PORC degree census: abelian cores
    contribute directly, every nonabelian core contributes the catalog rows of its
    branching class, shifted by q^|A| and multiplied by its direct-factor count.

    :param tab: CommutatorTable: Table at p = 2
    :param threads: int: Worker threads for the reduction
    :return: The census keyed by structural degree
    """
    inv = inventory(tab, classify=True, threads=threads)
    census = DegreeCensus(type_tag=tab.rs.type_tag, rank=tab.rs.rank, p=tab.p, provenance=provenance(tab))
    for core in inv.cores:
        if core.abelian:
            count, degree = abelian_core_count(core)
            census.add(degree, count)
    label_of = {cid: label for label, ids in inv.classes.items() for cid in ids}
    for cid, core in enumerate(inv.nonabelian, start=1):
        family = family_counts_symbolic(label_of[cid])
        multiplier = _multiplier(core)
        for row in family.rows:
            census.add(_shift(core, row.degree), row.count * multiplier, source=row.label)
    logger.info("symbolic census U%s: %d degrees", tab.rs.name, len(census.sorted_entries()))
    return census


def assemble_numeric(tab: CommutatorTable, ctx: FieldCtx, threads: int = 1) -> NumericCensus:
    cores = all_cores(tab, threads=threads)
    census = NumericCensus(type_tag=tab.rs.type_tag, rank=tab.rs.rank, p=tab.p, q=ctx.q, provenance=provenance(tab))
    for degree, n in numeric_counts(tab, cores, ctx, threads).items():
        census.add(degree, n)
    logger.info("numeric census U%s(%d): %d characters", tab.rs.name, ctx.q, census.total)
    return census


def assemble(type_tag: str, rank: int, p: int = 2, qv: int | None = None, threads: int = 1,
             expensive: bool = False) -> DegreeCensus | NumericCensus:
    """
    The assemble function computes the degree census of U for a type in scope:
    symbolic when q is omitted, numeric at q otherwise.

    :param type_tag: str: Cartan type letter
    :param rank: int: Rank
    :param p: int: Characteristic, only 2 is in scope
    :param qv: int | None: Field size for the numeric census
    :param threads: int: Worker threads
    :param expensive: bool: Allow q = 16
    :return: DegreeCensus or NumericCensus
    """
    if p != 2 or (type_tag, rank) not in CENSUS_SCOPE:
        raise OutOfScopeError(messages.CENSUS_OUT_OF_SCOPE.format(type_tag=type_tag, rank=rank, p=p))
    tab = table_for(type_tag, rank, p)
    if qv is None:
        return assemble_symbolic(tab, threads)
    return assemble_numeric(tab, check_q(qv, expensive), threads)


def predicted_class_count(tab: CommutatorTable, base: Quattern, ctx: FieldCtx) -> int:
    """Number of irreducible characters of the quattern group X_S predicted by its own sub-census."""
    return sum(numeric_counts(tab, all_cores(tab, base), ctx).values())


def malle_check(census: DegreeCensus, degree: Degree = F4_MALLE_DEGREE) -> MalleReport:
    """
    The malle_check function reports whether the census has characters of the
    given degree, q^4/8 for UF4, and which family rows supply them.

    :param census: DegreeCensus: A symbolic census
    :param degree: Degree: Structural degree to look for
    :return: MalleReport
    """
    count = census.entries.get(degree)
    if count is None or count.is_zero():
        logger.warning(messages.MALLE_MISSING)
        return MalleReport(present=False, count=None, family=None, at_q2=None)
    family = ",".join(sorted(census.sources.get(degree, ())))
    return MalleReport(present=True, count=count, family=family or None, at_q2=int(count.evaluate(2)))


class CensusService:
    """Census and inventory lookups served through the redis result cache."""

    def __init__(self, cache=result_cache):
        self.cache = cache

    def census(self, type_tag: str, rank: int, p: int, qv: int | None = None):
        key = self.cache.key("census", type_tag, rank, p, qv)
        return self.cache.cached(key, lambda: assemble(type_tag, rank, p, qv))

    def inventory(self, type_tag: str, rank: int, p: int):
        key = self.cache.key("inventory", type_tag, rank, p)
        return self.cache.cached(key, lambda: inventory(table_for(type_tag, rank, p), classify=p == 2))


census_service = CensusService()
