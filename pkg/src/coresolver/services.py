from __future__ import annotations

import itertools
import logging
from dataclasses import dataclass, field

import networkx as nx

from src import messages
from src.census.models import PorcPolynomial
from src.chevalley.models import CommutatorTable, UElement
from src.chevalley.services import Collector
from src.config import config
from src.coregraph.models import ArmLeg
from src.coregraph.services import arm_leg, build_graph, verify_cor52
from src.coresolver import catalog
from src.coresolver.models import EqTerm, FamilyData, FamilyRow, Histogram, StabilizerEquation, Stabilizers
from src.errors import (
    CoreStructureError,
    EquationError,
    OddCircleError,
    StabilizerMismatchError,
    UnknownBranchingClassError,
    UnsupportedShapeError,
)
from src.gfq.models import FieldCtx
from src.gfq.services import field_for_q, trace
from src.patterns.services import nontrivial_pairs
from src.reduction.models import Core

logger = logging.getLogger(__name__)

FULL_CLOSURE_LIMIT = 64


def _parity(x: int) -> int:
    return bin(x).count("1") & 1


def _kernel(images: list[int]) -> list[int]:
    """Basis of the kernel of the F2-linear map sending basis vector e to images[e]."""
    pivots: dict[int, tuple[int, int]] = {}
    kernel = []
    for e, img in enumerate(images):
        vec, comb = img, 1 << e
        while vec:
            top = vec.bit_length() - 1
            if top not in pivots:
                pivots[top] = (vec, comb)
                break
            pv, pc = pivots[top]
            vec ^= pv
            comb ^= pc
        if vec == 0:
            kernel.append(comb)
    return kernel


def _span(basis: list[int]) -> list[int]:
    elements = [0]
    for b in basis:
        elements += [x ^ b for x in elements]
    return sorted(elements)


def _rref(vectors) -> list[tuple[int, int]]:
    basis: list[tuple[int, int]] = []
    for w in vectors:
        for piv, b in basis:
            if w >> piv & 1:
                w ^= b
        if not w:
            continue
        piv = w.bit_length() - 1
        basis = [(p2, b2 ^ w) if b2 >> piv & 1 else (p2, b2) for p2, b2 in basis]
        basis.append((piv, w))
    return basis


def _rank(rows: list[int]) -> int:
    return len(_rref(rows))


def extract_equation(tab: CommutatorTable, core: Core, armleg: ArmLeg) -> StabilizerEquation:
    """
    The extract_equation function reads the stabilizer equation off the commutators
    [x_j(s), x_i(t)] for j in J and i in I; every term must land in Z.

    :param tab: CommutatorTable: Table in characteristic 2
    :param core: Core: A nonabelian core
    :param armleg: ArmLeg: Its I/J partition
    :return: The equation with its permutation-invariant signature
    """
    terms = []
    for j in sorted(armleg.J):
        for i in sorted(armleg.I):
            for term in tab.terms(j, i):
                if term.target not in core.S:
                    continue
                if term.target not in core.Z:
                    raise EquationError(messages.TERM_ESCAPES_CENTER.format(j=j, i=i, target=term.target))
                for exponent in (term.a, term.b):
                    if exponent not in (1, 2):
                        raise EquationError(messages.EXPONENT_UNSUPPORTED.format(exponent=exponent))
                terms.append(EqTerm(j=j, i=i, gamma=term.target, s_exp=term.a, t_exp=term.b))
    eq = StabilizerEquation(I=tuple(sorted(armleg.I)), J=tuple(sorted(armleg.J)), Z=tuple(sorted(core.Z)),
                            terms=tuple(terms))
    return StabilizerEquation(I=eq.I, J=eq.J, Z=eq.Z, terms=eq.terms, signature=equation_signature(eq))


def _equation_graph(eq: StabilizerEquation, transpose: bool = False) -> nx.Graph:
    g = nx.Graph()
    i_label, j_label = ("J", "I") if transpose else ("I", "J")
    for i in eq.I:
        g.add_node(("x", i), label=i_label)
    for j in eq.J:
        g.add_node(("x", j), label=j_label)
    for z in eq.Z:
        g.add_node(("z", z), label="Z")
    for k, t in enumerate(eq.terms):
        exps = (t.t_exp, t.s_exp) if transpose else (t.s_exp, t.t_exp)
        g.add_node(("t", k), label=f"T{exps[0]}{exps[1]}")
        g.add_edges_from([(("t", k), ("x", t.j)), (("t", k), ("x", t.i)), (("t", k), ("z", t.gamma))])
    return g


def equation_signature(eq: StabilizerEquation) -> str:
    hashes = [nx.weisfeiler_lehman_graph_hash(_equation_graph(eq), node_attr="label")]
    if len(eq.I) == len(eq.J):
        hashes.append(nx.weisfeiler_lehman_graph_hash(_equation_graph(eq, transpose=True), node_attr="label"))
    return min(hashes)


def relation_graph(tab: CommutatorTable, core: Core, armleg: ArmLeg | None = None) -> nx.Graph:
    """Typed graph of every nontrivial char-2 relation inside X_S, used to group isomorphic cores."""
    s_mask = core.s_mask
    I = armleg.I if armleg else frozenset()
    J = armleg.J if armleg else frozenset()
    g = nx.Graph()
    for x in sorted(core.S):
        kind = "Z" if x in core.Z else "I" if x in I else "J" if x in J else "H"
        g.add_node(x, label=kind)
    for k, (x, y) in enumerate(nontrivial_pairs(tab, core.quattern)):
        for n, term in enumerate(tab.terms(x, y)):
            if not s_mask >> term.target & 1:
                continue
            node = ("r", k, n)
            g.add_node(node, label="R")
            g.add_edge(node, x, role=f"a{term.a}")
            g.add_edge(node, y, role=f"b{term.b}")
            g.add_edge(node, term.target, role="out")
    return g


def _same_shape(g1: nx.Graph, g2: nx.Graph) -> bool:
    return nx.is_isomorphic(
        g1, g2,
        node_match=lambda a, b: a["label"] == b["label"],
        edge_match=lambda a, b: a.get("role") == b.get("role"),
    )


@dataclass
class PairingStructure:
    """Commutator pairing of an F2-basis of X' for one parameter tuple a."""
    d: int
    w: dict[tuple[int, int], int] = field(default_factory=dict)
    z: dict[tuple[int, int], int] = field(default_factory=dict)


class CoreSolver:
    """
    Counts the characters of X_S lying over each nontrivial character of X_Z for a
    heartless core. Parameters a (one nonzero a_gamma per gamma in Z) fix the linear
    character of X_Z; stabilizers are kernels of F2-linear maps on I and J coordinates.
    """

    def __init__(self, tab: CommutatorTable, core: Core, ctx: FieldCtx):
        self.tab = tab
        self.core = core
        self.ctx = ctx
        self.graph = build_graph(tab, core)
        self.armleg = arm_leg(self.graph, core)
        report = verify_cor52(tab, core, self.armleg)
        if not report:
            raise EquationError(report.violated)
        self.eq = extract_equation(tab, core, self.armleg)
        self.collector = Collector(tab, ctx, core.S)
        self.I, self.J, self.Z = self.eq.I, self.eq.J, self.eq.Z
        self.f = ctx.f
        self._z_pos = {g: k for k, g in enumerate(self.Z)}

    def _unpack(self, vec: int, size: int) -> tuple[int, ...]:
        mask = self.ctx.q - 1
        return tuple((vec >> (k * self.f)) & mask for k in range(size))

    def _pow(self, x: int, e: int) -> int:
        return self.ctx.mul(x, x) if e == 2 else x

    def _x_images(self, a: tuple[int, ...]) -> list[int]:
        mul = self.ctx.mul
        images = []
        for idx, i in enumerate(self.I):
            for bit in range(self.f):
                t = 1 << bit
                image = 0
                for h, j in enumerate(self.J):
                    c1 = c2 = 0
                    for term in self.eq.terms:
                        if term.i == i and term.j == j:
                            value = mul(a[self._z_pos[term.gamma]], self._pow(t, term.t_exp))
                            if term.s_exp == 1:
                                c1 ^= value
                            else:
                                c2 ^= value
                    image |= (mul(c1, c1) ^ c2) << (h * self.f)
                images.append(image)
        return images

    def _y_images(self, a: tuple[int, ...]) -> list[int]:
        mul = self.ctx.mul
        images = []
        for h, j in enumerate(self.J):
            for bit in range(self.f):
                s = 1 << bit
                image = 0
                for idx, i in enumerate(self.I):
                    d1 = d2 = 0
                    for term in self.eq.terms:
                        if term.i == i and term.j == j:
                            value = mul(a[self._z_pos[term.gamma]], self._pow(s, term.s_exp))
                            if term.t_exp == 1:
                                d1 ^= value
                            else:
                                d2 ^= value
                    image |= (mul(d1, d1) ^ d2) << (idx * self.f)
                images.append(image)
        return images

    def lift(self, vec: int) -> UElement:
        coords = [0] * self.tab.n
        for idx, value in enumerate(self._unpack(vec, len(self.I))):
            coords[self.I[idx] - 1] = value
        return UElement(coords=tuple(coords))

    def stabilizers(self, a: tuple[int, ...], closure: bool = True) -> Stabilizers:
        x_basis = _kernel(self._x_images(a))
        y_basis = _kernel(self._y_images(a))
        expected = self.f * (len(self.J) - len(self.I))
        if len(y_basis) - len(x_basis) != expected:
            raise StabilizerMismatchError(messages.STABILIZER_MISMATCH.format(
                x=2 ** len(x_basis), y=2 ** len(y_basis), expected=f"{len(self.J) - len(self.I)}"))
        xs = _span(x_basis)
        ys = _span(y_basis)
        return Stabilizers(
            xprime=[self._unpack(x, len(self.I)) for x in xs],
            yprime=[self._unpack(y, len(self.J)) for y in ys],
            x_is_subgroup=self._closed(x_basis, xs) if closure else False,
            x_basis=x_basis,
        )

    def _closed(self, basis: list[int], elements: list[int]) -> bool:
        multiply = self.collector.multiply
        pool = elements if len(elements) <= FULL_CLOSURE_LIMIT else basis
        lifts = {x: self.lift(x) for x in set(pool) | set(elements[:1])}
        for x in pool:
            for y in pool:
                if multiply(lifts[x], lifts[y]) != self.lift(x ^ y):
                    return False
        return True

    def pairing(self, a: tuple[int, ...], x_basis: list[int]) -> PairingStructure:
        structure = PairingStructure(d=len(x_basis))
        i_set, z_set = set(self.I), set(self.Z)
        lifts = [self.lift(b) for b in x_basis]
        for k, l in itertools.combinations(range(len(x_basis)), 2):
            comm = self.collector.group_commutator(lifts[k], lifts[l])
            w, zval = 0, 0
            for root in comm.support():
                value = comm.coords[root - 1]
                if root in i_set:
                    raise StabilizerMismatchError(messages.PAIRING_INCONSISTENT.format(
                        detail=f"commutator of basis {k},{l} has an I coordinate at {root}"))
                if root in z_set:
                    zval ^= self.ctx.mul(a[self._z_pos[root]], value)
                elif root in self.J:
                    w |= value << (self.J.index(root) * self.f)
                else:
                    raise StabilizerMismatchError(messages.PAIRING_INCONSISTENT.format(
                        detail=f"commutator of basis {k},{l} leaves I, J and Z at {root}"))
            structure.w[(k, l)] = w
            structure.z[(k, l)] = trace(self.ctx, zval)
        return structure

    def branch_counts(self, structure: PairingStructure) -> list[tuple[tuple[int, ...], int, int]]:
        """
        One entry (chi values on the basis of W, radical dimension r, characters) per
        functional chi on the span W of the J-parts of the pairing.
        """
        d = structure.d
        basis = _rref(structure.w.values())
        rk = len(basis)
        pivots = [p for p, _ in basis]
        out = []
        for bits in itertools.product((0, 1), repeat=rk):
            c = sum(1 << pivots[m] for m, bit in enumerate(bits) if bit)
            rows = [0] * d
            for (k, l), w in structure.w.items():
                if structure.z[(k, l)] ^ _parity(c & w):
                    rows[k] |= 1 << l
                    rows[l] |= 1 << k
            r = d - _rank(rows)
            exponent = self.f * len(self.J) - rk + r + d - self.f * len(self.I)
            if exponent < 0:
                raise StabilizerMismatchError(messages.PAIRING_INCONSISTENT.format(
                    detail=f"negative character count exponent {exponent}"))
            out.append((bits, r, 1 << exponent))
        return out

    def histogram_for(self, a: tuple[int, ...], hist: Histogram) -> None:
        x_basis = _kernel(self._x_images(a))
        y_dim = len(_kernel(self._y_images(a)))
        if y_dim - len(x_basis) != self.f * (len(self.J) - len(self.I)):
            raise StabilizerMismatchError(messages.STABILIZER_MISMATCH.format(
                x=2 ** len(x_basis), y=2 ** y_dim, expected=f"{len(self.J) - len(self.I)}"))
        structure = self.pairing(a, x_basis)
        d = structure.d
        for _, r, n in self.branch_counts(structure):
            hist.add((len(self.I), (d + r) // 2), n)

    def histogram(self) -> Histogram:
        hist = Histogram(q=self.ctx.q)
        for a in itertools.product(self.ctx.units(), repeat=len(self.Z)):
            self.histogram_for(a, hist)
        return hist


def solve_stabilizers(tab: CommutatorTable, core: Core, a: tuple[int, ...], ctx: FieldCtx) -> Stabilizers:
    """
    The solve_stabilizers function returns X' and Y' for one parameter tuple a,
    each as a list of coordinate tuples on I (resp. J), with the flag telling whether
    the lifts of X' form a subgroup of X_S.

    :param tab: CommutatorTable: Table in characteristic 2
    :param core: Core: A heartless nonabelian core
    :param a: tuple[int, ...]: One nonzero field element per root of Z, in increasing root order
    :param ctx: FieldCtx: The field
    :return: The stabilizer sets
    """
    return CoreSolver(tab, core, ctx).stabilizers(a)


def _heart_closed_form(tab: CommutatorTable, core: Core) -> FamilyData | None:
    from src.reduction.services import core_form

    form = core_form(tab, core)
    family = catalog.by_label(catalog.HEART_CLOSED_FORM)
    if (form.z, form.m, form.c) == family.form:
        return family.family_data()
    return None


def family_counts_numeric(tab: CommutatorTable, core: Core, ctx: FieldCtx) -> Histogram:
    """
    The family_counts_numeric function counts, at q = 2^f, the characters of X_S
    lying over every nontrivial character of X_Z, keyed by degree q^i / 2^j.

    :param tab: CommutatorTable: Table in characteristic 2
    :param core: Core: A nonabelian core
    :param ctx: FieldCtx: The field
    :return: Histogram summed over all parameter tuples
    """
    graph = build_graph(tab, core)
    if graph.heart:
        closed = _heart_closed_form(tab, core)
        if closed is None:
            from src.reduction.services import core_form
            raise CoreStructureError(messages.HEART_UNSUPPORTED.format(form=core_form(tab, core)))
        hist = Histogram(q=ctx.q)
        for row in closed.rows:
            hist.add(row.degree, int(row.count.evaluate(ctx.q)))
        return hist
    hist = CoreSolver(tab, core, ctx).histogram()
    logger.debug("core S=%s q=%d histogram %s", sorted(core.S), ctx.q, hist.counts)
    return hist


def nested_klein_branching(tab: CommutatorTable, core: Core, a: tuple[int, ...], ctx: FieldCtx) -> list[FamilyRow]:
    """
    The nested_klein_branching function handles the case where X' is a product of
    three order-2 factors whose pairwise commutators span a 3-dimensional part of Y'.
    The eight characters (c1, c2, c3) of that part give eight branches: the trivial
    one yields |X'| characters of degree q^|I| / 8, every other one 2 of degree q^|I| / 4.

    :param tab: CommutatorTable: Table in characteristic 2
    :param core: Core: The core
    :param a: tuple[int, ...]: Parameter tuple
    :param ctx: FieldCtx: The field
    :return: Eight rows, counts per parameter tuple, trivial branch first
    """
    solver = CoreSolver(tab, core, ctx)
    x_basis = _kernel(solver._x_images(a))
    structure = solver.pairing(a, x_basis)
    if structure.d != 3 or len(_rref(structure.w.values())) != 3 or any(structure.z.values()):
        raise StabilizerMismatchError(messages.PAIRING_INCONSISTENT.format(
            detail=f"X' of dimension {structure.d} is not of Klein type"))
    rows = []
    for bits, r, n in sorted(solver.branch_counts(structure)):
        rows.append(FamilyRow(label=f"branch{bits}", count=PorcPolynomial(n), degree=(len(solver.I), (3 + r) // 2)))
    return rows


def family_counts_symbolic(label: str) -> FamilyData:
    try:
        return catalog.by_label(label).family_data()
    except KeyError:
        raise UnknownBranchingClassError(messages.UNKNOWN_BRANCHING.format(form=label, histogram="-"))


def isomorphism_groups(tab: CommutatorTable, cores: list[tuple[int, Core]]) -> list[list[tuple[int, Core]]]:
    """Partition (id, core) pairs into classes with isomorphic relation graphs."""
    groups: list[tuple[str, nx.Graph, list[tuple[int, Core]]]] = []
    for cid, core in cores:
        try:
            armleg = arm_leg(build_graph(tab, core), core)
        except (OddCircleError, UnsupportedShapeError):
            armleg = None
        g = relation_graph(tab, core, armleg)
        sig = nx.weisfeiler_lehman_graph_hash(g, node_attr="label", edge_attr="role")
        for gsig, rep, members in groups:
            if gsig == sig and _same_shape(g, rep):
                members.append((cid, core))
                break
        else:
            groups.append((sig, g, [(cid, core)]))
    return [members for _, _, members in groups]


_EVALUATED: dict[tuple, dict] = {}


def _evaluated_counts(tab: CommutatorTable, core: Core, qv: int) -> dict:
    key = (tab.rs.name, tab.p, core.S, core.Z, qv)
    if key not in _EVALUATED:
        _EVALUATED[key] = family_counts_numeric(tab, core, field_for_q(qv)).evaluate()
    return _EVALUATED[key]


def match_family(tab: CommutatorTable, core: Core, options: list[catalog.CatalogFamily]) -> catalog.CatalogFamily:
    """
    Keeps the catalog families whose rows agree with the numeric histogram of the
    core at every q = 2, 4, ... up to NUMERIC_MAX_Q; exactly one has to survive,
    even when the core form names a single family.
    """
    remaining = list(options)
    qv = 2
    last = None
    while remaining and qv <= config.NUMERIC_MAX_Q:
        last = _evaluated_counts(tab, core, qv)
        remaining = [f for f in remaining if f.family_data().evaluate(qv) == last]
        logger.debug("core S=%s q=%d keeps %s", sorted(core.S), qv, [f.label for f in remaining])
        qv *= 2
    if len(remaining) != 1:
        from src.reduction.services import core_form
        raise UnknownBranchingClassError(messages.UNKNOWN_BRANCHING.format(form=core_form(tab, core), histogram=last))
    return remaining[0]


def classify_cores(tab: CommutatorTable, cores: list[Core]) -> dict[str, list[int]]:
    """
    The classify_cores function assigns every nonabelian core to a branching class.
    One representative per isomorphism class is matched numerically against the
    catalog families sharing its form. Forms absent from the catalog get a class
    named after the form.

    :param tab: CommutatorTable: Table in characteristic 2
    :param cores: list[Core]: Nonabelian cores, ids are 1-based positions
    :return: Class label to core ids
    """
    from src.reduction.services import core_form

    by_form: dict[tuple[int, int, int], list[tuple[int, Core]]] = {}
    for cid, core in enumerate(cores, start=1):
        form = core_form(tab, core)
        by_form.setdefault((form.z, form.m, form.c), []).append((cid, core))
    classes: dict[str, list[int]] = {}
    for form, members in by_form.items():
        options = catalog.candidates(form)
        for group in isomorphism_groups(tab, members):
            if options:
                label = match_family(tab, group[0][1], options).label
            else:
                label = "[{},{},{}]#{}".format(*form, group[0][0])
            classes.setdefault(label, []).extend(cid for cid, _ in group)
    order = {f.label: k for k, f in enumerate(catalog.F4_FAMILIES)}
    result = {label: sorted(ids) for label, ids in sorted(classes.items(), key=lambda kv: (order.get(kv[0], 99), kv[0]))}
    logger.info("%s: %d nonabelian cores in %d branching classes", tab.rs.name, len(cores), len(result))
    return result
