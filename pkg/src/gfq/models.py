from __future__ import annotations

import functools
from dataclasses import dataclass, field


@dataclass(frozen=True)
class FieldCtx:
    """GF(2^f) with elements encoded as f-bit integers modulo ``modulus``."""
    f: int
    modulus: int

    @property
    def q(self) -> int:
        return 1 << self.f

    def mul(self, x: int, y: int) -> int:
        if self.f <= 8:
            return self._table[x][y]
        return _shift_mul(x, y, self.f, self.modulus)

    def add(self, x: int, y: int) -> int:
        return x ^ y

    def pow(self, x: int, e: int) -> int:
        result = 1
        while e:
            if e & 1:
                result = self.mul(result, x)
            x = self.mul(x, x)
            e >>= 1
        return result

    def inv(self, x: int) -> int:
        if x == 0:
            raise ZeroDivisionError("inverse of 0 in GF(2^f)")
        return self.pow(x, self.q - 2)

    def sqrt(self, x: int) -> int:
        return self.pow(x, self.q >> 1)

    def elements(self) -> range:
        return range(self.q)

    def units(self) -> range:
        return range(1, self.q)

    def basis(self) -> list[int]:
        return [1 << k for k in range(self.f)]

    @functools.cached_property
    def _table(self) -> tuple[tuple[int, ...], ...]:
        return tuple(
            tuple(_shift_mul(x, y, self.f, self.modulus) for y in range(self.q))
            for x in range(self.q)
        )


def _shift_mul(x: int, y: int, f: int, modulus: int) -> int:
    result = 0
    top = 1 << f
    while y:
        if y & 1:
            result ^= x
        y >>= 1
        x <<= 1
        if x & top:
            x ^= modulus
    return result


@dataclass
class CubicCensus:
    family: str
    q: int
    counts: dict[int, int] = field(default_factory=dict)

    @property
    def total(self) -> int:
        return sum(self.counts.values())
