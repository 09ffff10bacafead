from __future__ import annotations

from dataclasses import dataclass, field

from src.chevalley.models import CommutatorTable, UElement
from src.chevalley.services import Collector
from src.gfq.models import FieldCtx
from src.patterns.models import RootSet


@dataclass
class ExplicitGroup:
    """
    The quattern group X_S over GF(2^f) realised concretely: element number k is
    the normal form whose coordinate on the m-th root of ``support`` is bits
    m*f .. m*f + f - 1 of k.
    """
    support: RootSet
    ctx: FieldCtx
    tab: CommutatorTable
    collector: Collector = field(init=False, repr=False)

    def __post_init__(self):
        self.support = frozenset(self.support)
        self.collector = Collector(self.tab, self.ctx, self.support)
        self.roots = sorted(self.support)

    @property
    def log2_order(self) -> int:
        return len(self.roots) * self.ctx.f

    @property
    def order(self) -> int:
        return 1 << self.log2_order

    def pack(self, u: UElement) -> int:
        f = self.ctx.f
        return sum(u.coords[r - 1] << (m * f) for m, r in enumerate(self.roots))

    def unpack(self, index: int) -> UElement:
        f, mask = self.ctx.f, self.ctx.q - 1
        coords = [0] * self.tab.n
        for m, r in enumerate(self.roots):
            coords[r - 1] = (index >> (m * f)) & mask
        return UElement(coords=tuple(coords))

    def generators(self, central: frozenset[int] = frozenset()) -> list[tuple[int, int]]:
        return [(r, b) for r in self.roots if r not in central for b in self.ctx.basis()]
