from __future__ import annotations

import functools
import hashlib
import logging
from pathlib import Path

from src import messages
from src.config import config
from src.errors import IndexOutOfRangeError, InvalidRootSystemError
from src.rootsys.models import Root, RootSystem

logger = logging.getLogger(__name__)

CLASSICAL_COUNTS = {
    "A": lambda r: r * (r + 1) // 2,
    "B": lambda r: r * r,
    "C": lambda r: r * r,
    "D": lambda r: r * (r - 1),
    "E": lambda r: {6: 36, 7: 63, 8: 120}[r],
    "F": lambda r: 24,
    "G": lambda r: 6,
}


def _valid(type_tag: str, rank: int) -> bool:
    if rank < 1 or rank > 8:
        return False
    return {
        "A": rank >= 1,
        "B": rank >= 2,
        "C": rank >= 2,
        "D": rank >= 4,
        "E": rank in (6, 7, 8),
        "F": rank == 4,
        "G": rank == 2,
    }.get(type_tag, False)


def gram_matrix(type_tag: str, rank: int) -> list[list[int]]:
    """
    The gram_matrix function returns twice the Euclidean inner products of the
    simple roots, scaled so that every entry is an integer.

    :param type_tag: str: One of A..G
    :param rank: int: Rank of the system
    :return: Symmetric integer matrix
    """
    if not _valid(type_tag, rank):
        raise InvalidRootSystemError(messages.INVALID_ROOT_SYSTEM.format(type_tag=type_tag, rank=rank))
    g = [[0] * rank for _ in range(rank)]

    def link(i, j, value):
        g[i][j] = g[j][i] = value

    if type_tag in "ADE":
        for i in range(rank):
            g[i][i] = 2
        if type_tag == "A":
            for i in range(rank - 1):
                link(i, i + 1, -1)
        elif type_tag == "D":
            for i in range(rank - 2):
                link(i, i + 1, -1)
            link(rank - 3, rank - 1, -1)
        else:
            # Bourbaki labelling: chain 1-3-4-5-6-7-8 with 2 attached to 4
            chain = [0] + list(range(2, rank))
            for a, b in zip(chain, chain[1:]):
                link(a, b, -1)
            link(1, 3, -1)
    elif type_tag == "B":
        for i in range(rank - 1):
            g[i][i] = 4
        g[rank - 1][rank - 1] = 2
        for i in range(rank - 1):
            link(i, i + 1, -2)
    elif type_tag == "C":
        for i in range(rank - 1):
            g[i][i] = 2
        g[rank - 1][rank - 1] = 4
        for i in range(rank - 2):
            link(i, i + 1, -1)
        link(rank - 2, rank - 1, -2)
    elif type_tag == "F":
        g[0][0] = g[1][1] = 4
        g[2][2] = g[3][3] = 2
        link(0, 1, -2)
        link(1, 2, -2)
        link(2, 3, -1)
    elif type_tag == "G":
        g[0][0], g[1][1] = 6, 2
        link(0, 1, -3)
    return g


def _close(rank: int, gram: list[list[int]]) -> set[tuple[int, ...]]:
    def inner(x, y):
        return sum(x[a] * gram[a][b] * y[b] for a in range(rank) for b in range(rank))

    simples = [tuple(int(a == i) for a in range(rank)) for i in range(rank)]
    found = set(simples)
    level = list(simples)
    while level:
        nxt = set()
        for beta in level:
            for i, alpha in enumerate(simples):
                if beta == alpha:
                    continue
                # alpha-string through beta: beta - r*alpha, ..., beta + s*alpha with r - s = <beta, alpha^v>
                r = 0
                down = beta
                while True:
                    down = tuple(d - a for d, a in zip(down, alpha))
                    if down in found:
                        r += 1
                    else:
                        break
                pairing = 2 * inner(beta, alpha) // gram[i][i]
                if r - pairing > 0:
                    nxt.add(tuple(b + a for b, a in zip(beta, alpha)))
        nxt -= found
        found |= nxt
        level = sorted(nxt)
    return found


def _table_path(type_tag: str, rank: int) -> Path:
    return Path(config.DATA_DIR) / "roots" / f"{type_tag}{rank}.txt"


def _read_table(path: Path) -> list[tuple[int, ...]]:
    rows = []
    for line in path.read_text().splitlines():
        line = line.strip()
        if line and not line.startswith("#"):
            rows.append(tuple(int(c) for c in line.split()))
    return rows


@functools.cache
def build_root_system(type_tag: str, rank: int) -> RootSystem:
    """
    The build_root_system function closes the simple roots of the given type under
    root strings and fixes the enumeration: by height, then by the stored table for
    (type, rank) when one ships in the data directory, otherwise by descending
    lexicographic order of the coefficient vectors inside each height.

    :param type_tag: str: One of A, B, C, D, E, F, G
    :param rank: int: Rank, at most 8
    :return: The positive system with its addition table
    """
    gram = gram_matrix(type_tag, rank)
    closure = _close(rank, gram)
    path = _table_path(type_tag, rank)
    if path.exists():
        ordered = _read_table(path)
        if set(ordered) != closure or len(ordered) != len(closure):
            raise InvalidRootSystemError(messages.ROOT_TABLE_MISMATCH.format(path=path))
        ordered.sort(key=sum)
    else:
        ordered = sorted(closure, key=lambda c: (sum(c), tuple(-x for x in c)))
    expected = CLASSICAL_COUNTS[type_tag](rank)
    if len(ordered) != expected:
        raise InvalidRootSystemError(messages.INVALID_ROOT_SYSTEM.format(type_tag=type_tag, rank=rank))

    roots = tuple(Root(coeffs=c, index=k + 1) for k, c in enumerate(ordered))
    lookup = {r.coeffs: r.index for r in roots}
    n = len(roots)
    sums = [[0] * (n + 1) for _ in range(n + 1)]
    for a in roots:
        for b in roots:
            s = tuple(x + y for x, y in zip(a.coeffs, b.coeffs))
            sums[a.index][b.index] = lookup.get(s, 0)
    text = "\n".join(" ".join(str(c) for c in r.coeffs) for r in roots) + "\n"
    rs = RootSystem(
        type_tag=type_tag,
        rank=rank,
        roots=roots,
        gram=tuple(tuple(row) for row in gram),
        sum_table=tuple(tuple(row) for row in sums),
        table_text=text,
    )
    logger.info("built root system %s with %d positive roots", rs.name, n)
    return rs


def _check(rs: RootSystem, *indices: int) -> None:
    for i in indices:
        if not 1 <= i <= rs.n:
            raise IndexOutOfRangeError(messages.INDEX_OUT_OF_RANGE.format(index=i, n=rs.n))


def root_sum(rs: RootSystem, i: int, j: int) -> int | None:
    """
    The root_sum function looks up alpha_i + alpha_j.

    :param rs: RootSystem: The system
    :param i: int: First root index
    :param j: int: Second root index
    :return: Index of the sum, or None when it is not a positive root
    """
    _check(rs, i, j)
    return rs.sum_table[i][j] or None


def is_less(rs: RootSystem, i: int, j: int) -> bool:
    _check(rs, i, j)
    diff = [b - a for a, b in zip(rs.root(i).coeffs, rs.root(j).coeffs)]
    return all(d >= 0 for d in diff) and any(diff)


def table_checksum(rs: RootSystem) -> str:
    return hashlib.sha256(rs.table_text.encode()).hexdigest()


def coroot_pairing(rs: RootSystem, x: tuple[int, ...], y: tuple[int, ...]) -> int:
    """<x, y^v> = 2(x, y)/(y, y)."""
    return 2 * rs.inner(x, y) // rs.inner(y, y)
