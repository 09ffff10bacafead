from __future__ import annotations

from dataclasses import dataclass, field

from src.rootsys.models import RootSystem


@dataclass(frozen=True)
class Term:
    """Factor x_k(coeff * t^a * s^b) of [x_i(t), x_j(s)], with alpha_k = a*alpha_i + b*alpha_j."""
    target: int
    coeff: int
    a: int
    b: int


@dataclass(frozen=True)
class CommutatorTable:
    rs: RootSystem
    p: int
    integral: dict[tuple[int, int], tuple[Term, ...]] = field(repr=False)
    reduced: dict[tuple[int, int], tuple[Term, ...]] = field(repr=False)
    support_masks: tuple[tuple[int, ...], ...] = field(repr=False)

    @property
    def n(self) -> int:
        return self.rs.n

    def terms(self, i: int, j: int) -> tuple[Term, ...]:
        return self.reduced.get((i, j), ())

    def support(self, i: int, j: int) -> frozenset[int]:
        return frozenset(t.target for t in self.terms(i, j))

    def mask(self, i: int, j: int) -> int:
        """Bitmask (bit k for root k) of the char-p support of [x_i, x_j], symmetric in i and j."""
        return self.support_masks[i][j]


@dataclass(frozen=True)
class UElement:
    """Normal form x_1(c_1)...x_N(c_N); ``coords[k - 1]`` is the argument of x_k."""
    coords: tuple[int, ...]

    @classmethod
    def identity(cls, n: int) -> "UElement":
        return cls(coords=(0,) * n)

    @classmethod
    def root_element(cls, n: int, k: int, t: int) -> "UElement":
        coords = [0] * n
        coords[k - 1] = t
        return cls(coords=tuple(coords))

    def is_identity(self) -> bool:
        return not any(self.coords)

    def support(self) -> frozenset[int]:
        return frozenset(k + 1 for k, c in enumerate(self.coords) if c)
