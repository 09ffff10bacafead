import unittest
from collections import Counter

from src.census.reference import B4_FORMS, F4_CORES, F4_FORMS
from src.chevalley.services import table_for
from src.patterns.models import RepresentableSet
from src.patterns.services import representable_sets
from src.reduction.models import CoreForm
from src.reduction.services import all_cores, core_form, inventory, reduce, small_pair_holds


def _forms(inv):
    return {(f.z, f.m, f.c): n for f, n in inv.forms.items()}


class TestReductionB2(unittest.TestCase):

    def setUp(self) -> None:
        self.tab = table_for("B", 2, 2)

    def test_single_nonabelian_core(self):
        inv = inventory(self.tab, classify=False)
        self.assertEqual(inv.forms, {CoreForm(2, 4, 1): 1})
        (core,) = inv.nonabelian
        self.assertEqual(core.S, frozenset({1, 2, 3, 4}))
        self.assertEqual(core.Z, frozenset({3, 4}))
        self.assertEqual(core.path, ())
        self.assertEqual(str(core_form(self.tab, core)), "[2,4,1]")

    def test_small_pair_is_removed(self):
        rep = RepresentableSet(sigma=frozenset({4}), n_sigma=frozenset({3}))
        (core,) = reduce(self.tab, rep)
        self.assertTrue(core.abelian)
        self.assertEqual(core.S, frozenset({4}))
        self.assertEqual(core.A, frozenset({1}))
        self.assertEqual(core.L, frozenset({2}))
        self.assertEqual([m.kind for m in core.path], ["step2"])
        self.assertEqual(str(core.path[0]), "step2(beta=1, delta=2, gamma=4)")

    def test_small_pair_recheck(self):
        S = frozenset({1, 2, 4})
        self.assertTrue(small_pair_holds(self.tab, S, frozenset({4}), 1, 2, 4))
        self.assertFalse(small_pair_holds(self.tab, S, frozenset(), 1, 2, 4))
        self.assertFalse(small_pair_holds(self.tab, frozenset({1, 2, 3, 4}), frozenset({3, 4}), 1, 2, 4))

    def test_classes(self):
        inv = inventory(self.tab)
        self.assertEqual(inv.classes, {"F1": [1]})

    def test_threads_do_not_change_order(self):
        tab = table_for("C", 3, 2)
        self.assertEqual(all_cores(tab, threads=1), all_cores(tab, threads=3))


class TestInventories(unittest.TestCase):

    def test_f4_forms(self):
        inv = inventory(table_for("F", 4, 2), classify=False)
        self.assertEqual(_forms(inv), F4_FORMS)
        self.assertEqual(inv.total_nonabelian, F4_CORES)

    def test_b4_forms(self):
        inv = inventory(table_for("B", 4, 2), classify=False)
        self.assertEqual(_forms(inv), B4_FORMS)
        inv = inventory(table_for("C", 4, 2), classify=False)
        self.assertEqual(_forms(inv), {(2, 4, 1): 51, (4, 8, 2): 1, (4, 11, 7): 1})

    def test_cores_reach_every_representable_set(self):
        tab = table_for("F", 4, 2)
        cores = all_cores(tab)
        self.assertEqual(len({(c.sigma, c.n_sigma) for c in cores}), 191)

    def test_direct_factors_end_up_in_z(self):
        for core in inventory(table_for("F", 4, 2), classify=False).nonabelian:
            with self.subTest(S=sorted(core.S)):
                self.assertEqual(core.d_free, 0)
                self.assertTrue(core.D.isdisjoint(core.S))

    def test_highest_short_root_quotient(self):
        tab = table_for("F", 4, 2)
        (rep,) = [r for r in representable_sets(tab) if r.n_sigma == frozenset({21})]
        nonabelian = [c for c in reduce(tab, rep) if not c.abelian]
        forms = Counter(str(core_form(tab, c)) for c in nonabelian)
        self.assertEqual(forms, {"[2,4,1]": 10, "[4,11,7]": 1})
        (core,) = [c for c in nonabelian if len(c.S) == 11]
        self.assertEqual(core.S, frozenset({2, 4, 6, 7, 9, 10, 12, 13, 15, 19, 24}))
        self.assertEqual(core.Z, frozenset({10, 13, 19, 24}))


if __name__ == '__main__':
    unittest.main()
