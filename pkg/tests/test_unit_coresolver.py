import unittest
from fractions import Fraction

from src.census.models import degree_value
from src.chevalley.services import table_for
from src.coregraph.models import ArmLeg
from src.coresolver.catalog import B4_FREQUENCIES, F4_FAMILIES, by_label, candidates
from src.coresolver.services import (
    CoreSolver, classify_cores, extract_equation, family_counts_numeric, family_counts_symbolic,
    match_family, nested_klein_branching, solve_stabilizers,
)
from src.errors import UnknownBranchingClassError
from src.gfq.services import field_for_q
from src.reduction.models import Core
from src.reduction.services import inventory


def core_of(S, Z):
    return Core(S=frozenset(S), Z=frozenset(Z), A=frozenset(), L=frozenset(), K=frozenset(),
                sigma=frozenset(Z), n_sigma=frozenset(), abelian=False)


B2_CORE = core_of({1, 2, 3, 4}, {3, 4})
FOUR_CYCLE = core_of({2, 3, 5, 7, 8, 9, 10, 18}, {8, 9, 10, 18})
KLEIN = core_of({1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 16}, {8, 10, 11, 16})
SIX_CENTRAL = core_of({2, 3, 5, 6, 7, 8, 9, 10, 12, 18}, {6, 8, 9, 10, 12, 18})
NINE_ONE = core_of({2, 3, 5, 7, 8, 9, 10, 12, 18}, {8, 9, 10, 12, 18})
NINE_TWO = core_of({2, 3, 5, 6, 7, 8, 10, 12, 18}, {6, 8, 10, 12, 18})

# one F4 core per branching class
REPRESENTATIVES = {
    "F1": core_of({8, 16, 21, 24}, {21, 24}),
    "F2": core_of({1, 2, 3, 5, 6, 7, 8, 10, 12, 13}, {8, 12, 13}),
    "F3": core_of({2, 3, 6, 8, 9, 16, 21, 24}, {6, 9, 21, 24}),
    "F4,1": core_of({2, 3, 5, 6, 7, 8, 10, 18}, {6, 8, 10, 18}),
    "F4,2": FOUR_CYCLE,
    "F5": core_of({1, 3, 4, 5, 6, 7, 8, 9, 14, 16}, {7, 8, 14, 16}),
    "F6": core_of({1, 3, 5, 6, 8, 9, 11, 18, 20, 21, 23}, {8, 11, 21, 23}),
    "F7,1": core_of({1, 4, 5, 7, 8, 10, 11, 12, 13, 15, 19, 23}, {12, 15, 19, 23}),
    "F7,2": KLEIN,
    "F8": core_of({2, 3, 5, 6, 7, 8, 9, 12, 18}, {6, 8, 9, 12, 18}),
    "F9,1": NINE_ONE,
    "F9,2": NINE_TWO,
    "F10": core_of({1, 3, 4, 5, 6, 7, 8, 9, 10, 14, 16}, {7, 8, 10, 14, 16}),
    "F11": SIX_CENTRAL,
}
HIGHEST_SHORT_QUOTIENT = core_of({2, 4, 6, 7, 9, 10, 12, 13, 15, 19, 24}, {10, 13, 19, 24})


class TestEquation(unittest.TestCase):

    def test_b2_render(self):
        eq = extract_equation(table_for("B", 2, 2), B2_CORE, ArmLeg(I=frozenset({1}), J=frozenset({2})))
        self.assertEqual(eq.render(), "s_2(a_3 t_1 + a_4 t_1 s_2)")
        self.assertTrue(eq.signature)

    def test_four_cycle_terms(self):
        solver = CoreSolver(table_for("F", 4, 2), FOUR_CYCLE, field_for_q(2))
        terms = {(t.j, t.i, t.gamma, t.s_exp, t.t_exp) for t in solver.eq.terms}
        self.assertEqual(terms, {(3, 2, 9, 2, 1), (3, 5, 8, 1, 1), (7, 5, 18, 2, 1), (7, 2, 10, 1, 1)})

    def test_six_central_terms(self):
        solver = CoreSolver(table_for("F", 4, 2), SIX_CENTRAL, field_for_q(2))
        terms = {(t.j, t.i, t.gamma) for t in solver.eq.terms}
        self.assertEqual(terms, {(3, 2, 9), (3, 2, 6), (3, 5, 8), (7, 5, 18), (7, 5, 12), (7, 2, 10)})

    def test_signature_independent_of_field(self):
        tab = table_for("F", 4, 2)
        first = CoreSolver(tab, FOUR_CYCLE, field_for_q(2)).eq
        again = CoreSolver(tab, FOUR_CYCLE, field_for_q(4)).eq
        self.assertEqual(first.signature, again.signature)


class TestStabilizers(unittest.TestCase):

    def test_b2_at_q2(self):
        stab = solve_stabilizers(table_for("B", 2, 2), B2_CORE, (1, 1), field_for_q(2))
        self.assertEqual(sorted(stab.xprime), [(0,), (1,)])
        self.assertEqual(sorted(stab.yprime), [(0,), (1,)])
        self.assertTrue(stab.x_is_subgroup)

    def test_sizes_agree_over_all_parameters(self):
        ctx = field_for_q(4)
        solver = CoreSolver(table_for("F", 4, 2), FOUR_CYCLE, ctx)
        for a in [(1, 1, 1, 1), (2, 3, 1, 2), (3, 3, 2, 1)]:
            stab = solver.stabilizers(a)
            self.assertEqual(len(stab.yprime), len(stab.xprime))


class TestFamilyCounts(unittest.TestCase):

    def test_b2_against_catalog(self):
        tab = table_for("B", 2, 2)
        for qv in (2, 4, 8):
            with self.subTest(q=qv):
                hist = family_counts_numeric(tab, B2_CORE, field_for_q(qv))
                self.assertEqual(hist.evaluate(), by_label("F1").family_data().evaluate(qv))
        self.assertEqual(family_counts_numeric(tab, B2_CORE, field_for_q(4)).evaluate(), {2: 36})

    def test_four_cycle_at_q4(self):
        hist = family_counts_numeric(table_for("F", 4, 2), FOUR_CYCLE, field_for_q(4))
        self.assertEqual(hist.evaluate(), {4: 432, 16: 54})

    def test_klein_at_q2(self):
        hist = family_counts_numeric(table_for("F", 4, 2), KLEIN, field_for_q(2))
        self.assertEqual(hist.evaluate(), {2: 8, 4: 14})
        self.assertEqual(hist.counts, {(4, 3): 8, (4, 2): 14})

    def test_nested_klein_rows(self):
        rows = nested_klein_branching(table_for("F", 4, 2), KLEIN, (1, 1, 1, 1), field_for_q(2))
        self.assertEqual(len(rows), 8)
        self.assertEqual((rows[0].count.evaluate(2), rows[0].degree), (8, (4, 3)))
        for row in rows[1:]:
            self.assertEqual((row.count.evaluate(2), row.degree), (2, (4, 2)))

    def test_every_f4_core_at_q2(self):
        tab = table_for("F", 4, 2)
        for cid, core in enumerate(inventory(tab, classify=False).nonabelian, start=1):
            hist = family_counts_numeric(tab, core, field_for_q(2))
            m, z = len(core.S), len(core.Z)
            with self.subTest(core=cid):
                self.assertEqual(hist.sum_of_squares(), 2 ** (m - z))

    def test_unknown_label(self):
        with self.assertRaises(UnknownBranchingClassError):
            family_counts_symbolic("F99")

    def test_every_class_at_q4(self):
        tab = table_for("F", 4, 2)
        ctx = field_for_q(4)
        for label, core in REPRESENTATIVES.items():
            with self.subTest(family=label):
                self.assertEqual(family_counts_numeric(tab, core, ctx).evaluate(),
                                 by_label(label).family_data().evaluate(4))

    def test_six_central_parity(self):
        tab = table_for("F", 4, 2)
        family = by_label("F11").family_data()
        for qv, expected in ((2, {4: 1}), (4, {8: 1296, 16: 405})):
            with self.subTest(q=qv):
                hist = family_counts_numeric(tab, SIX_CENTRAL, field_for_q(qv)).evaluate()
                self.assertEqual(hist, expected)
                self.assertEqual(hist, family.evaluate(qv))

    def test_nine_families_split_at_odd_f(self):
        tab = table_for("F", 4, 2)
        self.assertEqual(family_counts_numeric(tab, NINE_ONE, field_for_q(4)).evaluate(),
                         family_counts_numeric(tab, NINE_TWO, field_for_q(4)).evaluate())
        one = family_counts_numeric(tab, NINE_ONE, field_for_q(8)).evaluate()
        two = family_counts_numeric(tab, NINE_TWO, field_for_q(8)).evaluate()
        self.assertEqual(one, {16: 38416, 32: 28812, 64: 7203})
        self.assertEqual(two, {32: 57624, 64: 2401})
        self.assertEqual(one, by_label("F9,1").family_data().evaluate(8))
        self.assertEqual(two, by_label("F9,2").family_data().evaluate(8))

    def test_highest_short_quotient_counts_like_f6(self):
        tab = table_for("F", 4, 2)
        f6 = by_label("F6")
        for qv, expected in ((2, {4: 8}), (4, {32: 1296})):
            with self.subTest(q=qv):
                hist = family_counts_numeric(tab, HIGHEST_SHORT_QUOTIENT, field_for_q(qv)).evaluate()
                self.assertEqual(hist, expected)
                self.assertEqual(hist, f6.family_data().evaluate(qv))
        self.assertIs(match_family(tab, HIGHEST_SHORT_QUOTIENT, candidates((4, 11, 7))), f6)

    def test_single_candidate_is_checked(self):
        tab = table_for("F", 4, 2)
        with self.assertRaises(UnknownBranchingClassError):
            match_family(tab, FOUR_CYCLE, [by_label("F4,1")])
        self.assertEqual(match_family(tab, FOUR_CYCLE, candidates((4, 8, 4))).label, "F4,2")
        self.assertEqual(match_family(tab, NINE_TWO, candidates((5, 9, 4))).label, "F9,2")


class TestCatalog(unittest.TestCase):

    def test_sum_of_squares_per_parity(self):
        for family in F4_FAMILIES:
            z, m, _ = family.form
            data = family.family_data()
            for qv in (2, 4, 8, 16):
                total = sum((row.count.evaluate(qv) * degree_value(row.degree, qv) ** 2 for row in data.rows),
                            Fraction(0))
                with self.subTest(family=family.label, q=qv):
                    self.assertEqual(total, qv ** (m - z) * (qv - 1) ** z)

    def test_frequencies(self):
        self.assertEqual(sum(f.frequency for f in F4_FAMILIES), 211)
        self.assertEqual(len(F4_FAMILIES), 14)

    def test_b4_and_c4_classes(self):
        for type_tag in ("B", "C"):
            tab = table_for(type_tag, 4, 2)
            classes = classify_cores(tab, inventory(tab, classify=False).nonabelian)
            with self.subTest(system=f"{type_tag}4"):
                self.assertEqual({label: len(ids) for label, ids in classes.items()}, B4_FREQUENCIES)

    def test_f4_classification(self):
        inv = inventory(table_for("F", 4, 2), classify=True)
        self.assertEqual(list(inv.classes), [f.label for f in F4_FAMILIES])
        for family in F4_FAMILIES:
            with self.subTest(family=family.label):
                self.assertEqual(len(inv.classes[family.label]), family.frequency)


if __name__ == '__main__':
    unittest.main()
