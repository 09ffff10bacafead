from __future__ import annotations

import logging

import networkx as nx

from src import messages
from src.chevalley.models import CommutatorTable
from src.coregraph.models import ArmLeg, ArmLegReport, CoreGraph
from src.errors import OddCircleError, UnsupportedShapeError
from src.patterns.models import Quattern, to_mask
from src.patterns.services import center_roots, support_in
from src.reduction.models import Core

logger = logging.getLogger(__name__)


def _is_linear(g: nx.Graph) -> bool:
    return nx.is_tree(g) and max((d for _, d in g.degree), default=0) <= 2


def _spans_b2(tab: CommutatorTable, a: int, b: int) -> bool:
    rs = tab.rs
    x, y = rs.root(a).coeffs, rs.root(b).coeffs
    double = [tuple(u + 2 * v for u, v in zip(x, y)), tuple(2 * u + v for u, v in zip(x, y))]
    return rs.index_of(tuple(u + v for u, v in zip(x, y))) is not None and any(
        rs.index_of(c) is not None for c in double)


def build_graph(tab: CommutatorTable, core: Core) -> CoreGraph:
    """
    The build_graph function builds the core graph on S minus Z and classifies its
    edged components as linear trees or as unions of circles carrying linear trees.

    :param tab: CommutatorTable: Table in the working characteristic
    :param core: Core: A nonabelian core
    :return: The classified graph
    """
    s_mask = core.s_mask
    z_mask = to_mask(core.Z)
    vertices = sorted(core.S - core.Z)
    edges = set()
    for idx, a in enumerate(vertices):
        for b in vertices[idx + 1:]:
            m = support_in(tab, a, b, s_mask)
            if m and not m & ~z_mask:
                edges.add(frozenset((a, b)))
    g = nx.Graph()
    g.add_nodes_from(vertices)
    g.add_edges_from(tuple(e) for e in edges)
    heart = frozenset(v for v in vertices if g.degree(v) == 0)
    circles, trees = [], []
    for comp in sorted((sorted(c) for c in nx.connected_components(g) if len(c) > 1)):
        sub = g.subgraph(comp)
        if nx.is_tree(sub):
            if not _is_linear(sub):
                raise UnsupportedShapeError(messages.UNSUPPORTED_SHAPE.format(component=comp))
            trees.append((frozenset(comp), None))
            continue
        cyclic = set(nx.k_core(sub, 2).nodes)
        circles.append(frozenset(cyclic))
        rest = sub.subgraph(set(comp) - cyclic)
        for piece in nx.connected_components(rest):
            anchors = {(u, v) for u in piece for v in sub.neighbors(u) if v in cyclic}
            if len(anchors) != 1:
                raise UnsupportedShapeError(messages.UNSUPPORTED_SHAPE.format(component=comp))
            ((_, anchor),) = anchors
            if not _is_linear(sub.subgraph(set(piece) | {anchor})):
                raise UnsupportedShapeError(messages.UNSUPPORTED_SHAPE.format(component=comp))
            trees.append((frozenset(piece) | {anchor}, anchor))
    for v in vertices:
        if g.degree(v) == 1:
            (u,) = g.neighbors(v)
            if not _spans_b2(tab, v, u):
                logger.warning("valency-1 vertex %d does not span a B2 subsystem with %d", v, u)
    return CoreGraph(vertices=frozenset(vertices), edges=frozenset(edges), heart=heart,
                     circles=circles, trees=trees)


def arm_leg(graph: CoreGraph, core: Core | None = None) -> ArmLeg:
    """
    The arm_leg function 2-colours every edged component. A linear tree puts its
    largest root in J and alternates by distance; a component with circles puts the
    smallest root of its circle union in I, and attached trees continue the parity
    from their attachment vertex.

    :param graph: CoreGraph: Output of build_graph
    :param core: Core | None: Unused, kept for symmetry with verify_cor52
    :return: The I/J partition of the non-heart vertices
    """
    g = graph.graph
    I, J = set(), set()
    for comp in nx.connected_components(g):
        if len(comp) < 2:
            continue
        cyclic = next((c for c in graph.circles if c <= comp), None)
        if cyclic is None:
            start, start_in_j = max(comp), True
        else:
            start, start_in_j = min(cyclic), False
        side = {start: start_in_j}
        queue = [start]
        while queue:
            u = queue.pop(0)
            for w in sorted(g.neighbors(u)):
                if w not in side:
                    side[w] = not side[u]
                    queue.append(w)
                elif side[w] == side[u]:
                    raise OddCircleError(messages.ODD_CIRCLE.format(component=sorted(comp)))
        for v, in_j in side.items():
            (J if in_j else I).add(v)
    return ArmLeg(I=frozenset(I), J=frozenset(J))


def verify_cor52(tab: CommutatorTable, core: Core, armleg: ArmLeg) -> ArmLegReport:
    """
    Checks that X_{S-I} is a quattern group, Z is central, J is central in X_{S-I},
    J avoids Z, and every commutator between I and J lands in X_Z.
    """
    S, Z, I, J = core.S, core.Z, armleg.I, armleg.J
    s_mask = core.s_mask
    rest = S - I
    rest_mask = to_mask(rest)
    z_mask = to_mask(Z)
    if I & J or not (I | J) <= S - Z:
        return ArmLegReport(False, "I and J must split a subset of S minus Z")
    for a in rest:
        for b in rest:
            if a != b and support_in(tab, a, b, s_mask) & ~rest_mask:
                return ArmLegReport(False, "X_{S-I} is not a quattern group")
    if not Z <= center_roots(tab, Quattern(P=S)):
        return ArmLegReport(False, "Z is not central in X_S")
    for j in J:
        for h in rest:
            if h != j and support_in(tab, j, h, s_mask):
                return ArmLegReport(False, "J is not central in X_{S-I}")
    if J & Z:
        return ArmLegReport(False, "J meets Z")
    for i in I:
        for j in J:
            if support_in(tab, i, j, s_mask) & ~z_mask:
                return ArmLegReport(False, "an I-J commutator escapes X_Z")
    return ArmLegReport(True)


def graph_dump(graph: CoreGraph, armleg: ArmLeg) -> dict:
    dump = graph.as_dict()
    dump.update({"I": sorted(armleg.I), "J": sorted(armleg.J)})
    return dump


def induced_edges(graph: CoreGraph, roots) -> list[tuple[int, int]]:
    roots = set(roots)
    return [e for e in graph.edge_list() if set(e) <= roots]


