import os
import unittest

from src.census.services import assemble, predicted_class_count
from src.chevalley.services import table_for
from src.errors import BudgetExceededError
from src.gfq.services import field_for_q
from src.oracle.services import (
    UnionFind, abelianization_order, class_count_of_core, conjugacy_class_count, group_for,
)
from src.reduction.services import inventory

EXPENSIVE = os.environ.get("UCENSUS_EXPENSIVE") == "1"


class TestUnionFind(unittest.TestCase):

    def test_union(self):
        uf = UnionFind(5)
        self.assertTrue(uf.union(0, 1))
        self.assertTrue(uf.union(3, 4))
        self.assertFalse(uf.union(1, 0))
        self.assertEqual(len(uf), 3)
        self.assertEqual(uf.find(0), uf.find(1))
        self.assertNotEqual(uf.find(2), uf.find(3))


class TestSmallGroups(unittest.TestCase):

    def test_ua2_q2(self):
        grp = group_for("A", 2, field_for_q(2))
        self.assertEqual(grp.order, 8)
        self.assertEqual(conjugacy_class_count(grp), 5)
        self.assertEqual(abelianization_order(grp), 4)

    def test_ub2_q2(self):
        grp = group_for("B", 2, field_for_q(2))
        self.assertEqual(conjugacy_class_count(grp), 10)
        self.assertEqual(abelianization_order(grp), 8)

    def test_ub2_q4(self):
        grp = group_for("B", 2, field_for_q(4))
        self.assertEqual(grp.log2_order, 8)
        self.assertEqual(conjugacy_class_count(grp), 58)
        self.assertEqual(abelianization_order(grp), 16)

    def test_budget(self):
        with self.assertRaises(BudgetExceededError):
            conjugacy_class_count(group_for("F", 4, field_for_q(2)))


class TestAgainstCensus(unittest.TestCase):

    def test_b2_core(self):
        tab = table_for("B", 2, 2)
        ctx = field_for_q(2)
        core = inventory(tab, classify=False).nonabelian[0]
        self.assertEqual(class_count_of_core(tab, core, ctx), 10)
        self.assertEqual(predicted_class_count(tab, core.quattern, ctx), 10)

    def test_b2_numeric_census(self):
        for qv in (2, 4):
            with self.subTest(q=qv):
                self.assertEqual(conjugacy_class_count(group_for("B", 2, field_for_q(qv))),
                                 assemble("B", 2, qv=qv).total)

    @unittest.skipUnless(EXPENSIVE, "set UCENSUS_EXPENSIVE=1 to run")
    def test_rank_three_and_four(self):
        for type_tag, rank in (("B", 3), ("C", 3), ("B", 4)):
            with self.subTest(system=f"{type_tag}{rank}"):
                self.assertEqual(conjugacy_class_count(group_for(type_tag, rank, field_for_q(2))),
                                 assemble(type_tag, rank, qv=2).total)


if __name__ == '__main__':
    unittest.main()
