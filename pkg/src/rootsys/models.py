from __future__ import annotations

from dataclasses import dataclass, field


@dataclass(frozen=True)
class Root:
    coeffs: tuple[int, ...]
    index: int

    @property
    def height(self) -> int:
        return sum(self.coeffs)

    def __str__(self) -> str:
        return "".join(str(c) for c in self.coeffs)


@dataclass(frozen=True)
class RootSystem:
    """
    Positive roots of a simple root system in a fixed total order.

    Indices are 1-based; ``sum_table[i][j]`` holds the index of
    alpha_i + alpha_j or 0 when the sum is not a positive root.
    """
    type_tag: str
    rank: int
    roots: tuple[Root, ...]
    gram: tuple[tuple[int, ...], ...]
    sum_table: tuple[tuple[int, ...], ...] = field(repr=False)
    table_text: str = field(repr=False, default="")

    @property
    def n(self) -> int:
        return len(self.roots)

    @property
    def name(self) -> str:
        return f"{self.type_tag}{self.rank}"

    def root(self, index: int) -> Root:
        return self.roots[index - 1]

    def index_of(self, coeffs: tuple[int, ...]) -> int | None:
        return self._lookup.get(tuple(coeffs))

    @property
    def _lookup(self) -> dict[tuple[int, ...], int]:
        cached = self.__dict__.get("_lookup_cache")
        if cached is None:
            cached = {r.coeffs: r.index for r in self.roots}
            object.__setattr__(self, "_lookup_cache", cached)
        return cached

    def inner(self, x: tuple[int, ...], y: tuple[int, ...]) -> int:
        return sum(x[a] * self.gram[a][b] * y[b] for a in range(self.rank) for b in range(self.rank))

    def is_root(self, coeffs: tuple[int, ...]) -> bool:
        """True when coeffs or its negative is a positive root."""
        coeffs = tuple(coeffs)
        return coeffs in self._lookup or tuple(-c for c in coeffs) in self._lookup
