from __future__ import annotations

from dataclasses import dataclass, field

import networkx as nx

from src.patterns.models import RootSet


@dataclass
class CoreGraph:
    """
    Graph on S minus Z: alpha and beta are joined when their commutator is
    nontrivial and lands inside X_Z.
    """
    vertices: RootSet
    edges: frozenset[frozenset[int]]
    heart: RootSet
    circles: list[RootSet] = field(default_factory=list)
    trees: list[tuple[RootSet, int | None]] = field(default_factory=list)

    @property
    def graph(self) -> nx.Graph:
        g = nx.Graph()
        g.add_nodes_from(sorted(self.vertices))
        g.add_edges_from(tuple(sorted(e)) for e in self.edges)
        return g

    def edge_list(self) -> list[tuple[int, int]]:
        return sorted(tuple(sorted(e)) for e in self.edges)

    def as_dict(self) -> dict:
        return {
            "vertices": sorted(self.vertices),
            "edges": [list(e) for e in self.edge_list()],
            "heart": sorted(self.heart),
            "circles": [sorted(c) for c in self.circles],
            "trees": [{"vertices": sorted(v), "attached_at": a} for v, a in self.trees],
        }


@dataclass(frozen=True)
class ArmLeg:
    I: RootSet
    J: RootSet

    def swapped(self) -> "ArmLeg":
        return ArmLeg(I=self.J, J=self.I)


@dataclass(frozen=True)
class ArmLegReport:
    ok: bool
    violated: str | None = None

    def __bool__(self) -> bool:
        return self.ok
