from __future__ import annotations

from dataclasses import dataclass

RootSet = frozenset[int]


def to_mask(roots) -> int:
    mask = 0
    for k in roots:
        mask |= 1 << k
    return mask


def from_mask(mask: int) -> RootSet:
    roots = []
    k = 0
    while mask:
        if mask & 1:
            roots.append(k)
        mask >>= 1
        k += 1
    return frozenset(roots)


@dataclass(frozen=True)
class Quattern:
    """X_S = X_P / X_K with S = P minus K."""
    P: RootSet
    K: RootSet = frozenset()

    @property
    def S(self) -> RootSet:
        return self.P - self.K

    @property
    def s_mask(self) -> int:
        return to_mask(self.S)


@dataclass(frozen=True)
class RepresentableSet:
    sigma: RootSet
    n_sigma: RootSet
    base: Quattern | None = None

    def as_dict(self) -> dict:
        return {"sigma": sorted(self.sigma), "n_sigma": sorted(self.n_sigma)}
