from __future__ import annotations

from dataclasses import dataclass, field

from src.patterns.models import Quattern, RootSet, to_mask


@dataclass(frozen=True)
class Move:
    """One reduction move: ``step2`` removes (beta, delta) through gamma, ``step3`` splits on gamma."""
    kind: str
    gamma: int
    beta: int | None = None
    delta: int | None = None
    branch: str | None = None

    def __str__(self) -> str:
        if self.kind == "step2":
            return f"step2(beta={self.beta}, delta={self.delta}, gamma={self.gamma})"
        return f"step3(gamma={self.gamma}, {self.branch})"


@dataclass(frozen=True)
class CoreForm:
    z: int
    m: int
    c: int

    def __str__(self) -> str:
        return f"[{self.z},{self.m},{self.c}]"


@dataclass(frozen=True)
class Core:
    """
    End state (S, Z, A, L, K) of the reduction of one representable set.

    ``D`` holds the direct-factor roots split off a nonabelian core; they no longer
    belong to S and contribute q^d_free (q - 1)^d_central linear factors.
    """
    S: RootSet
    Z: RootSet
    A: RootSet
    L: RootSet
    K: RootSet
    sigma: RootSet
    n_sigma: RootSet
    abelian: bool
    path: tuple[Move, ...] = ()
    D: RootSet = frozenset()
    d_free: int = 0
    d_central: int = 0

    @property
    def degree_multiplier(self) -> int:
        return len(self.A)

    @property
    def s_mask(self) -> int:
        return to_mask(self.S)

    @property
    def quattern(self) -> Quattern:
        removed = self.K | self.n_sigma | self.D
        return Quattern(P=self.S | removed, K=removed)

    def as_dict(self) -> dict:
        return {
            "S": sorted(self.S),
            "Z": sorted(self.Z),
            "A": sorted(self.A),
            "L": sorted(self.L),
            "K": sorted(self.K),
            "D": sorted(self.D),
            "abelian": self.abelian,
            "path": [str(m) for m in self.path],
        }


@dataclass
class Inventory:
    type_tag: str
    rank: int
    p: int
    cores: list[Core] = field(default_factory=list)
    forms: dict[CoreForm, int] = field(default_factory=dict)
    classes: dict[str, list[int]] = field(default_factory=dict)

    @property
    def nonabelian(self) -> list[Core]:
        return [c for c in self.cores if not c.abelian]

    @property
    def total_nonabelian(self) -> int:
        return sum(self.forms.values())
