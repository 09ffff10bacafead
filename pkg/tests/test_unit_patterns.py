import unittest

from src.chevalley.services import table_for
from src.errors import PreconditionError
from src.patterns.models import Quattern, from_mask, to_mask
from src.patterns.services import (
    center_roots,
    direct_factor_roots,
    enumerate_normal_patterns,
    is_normal_pattern,
    is_pattern_group,
    nontrivial_pairs,
    principal_closure,
    quattern,
    representable_sets,
)


class TestPatterns(unittest.TestCase):

    def setUp(self) -> None:
        self.b2 = table_for("B", 2, 2)
        self.full = Quattern(P=frozenset({1, 2, 3, 4}))

    def test_masks(self):
        self.assertEqual(to_mask({1, 3}), 0b1010)
        self.assertEqual(from_mask(0b1010), frozenset({1, 3}))

    def test_pattern_groups(self):
        self.assertTrue(is_pattern_group(self.b2, {1, 2, 3, 4}))
        self.assertTrue(is_pattern_group(self.b2, {2, 3}))
        self.assertFalse(is_pattern_group(self.b2, {1, 2}))

    def test_normal_patterns(self):
        self.assertTrue(is_normal_pattern(self.b2, {1, 2, 3, 4}, {3}))
        self.assertFalse(is_normal_pattern(self.b2, {1, 2, 3, 4}, {1}))
        with self.assertRaises(PreconditionError):
            is_normal_pattern(self.b2, {1, 3, 4}, {2})
        with self.assertRaises(PreconditionError):
            quattern(self.b2, {1, 2, 3, 4}, {1})
        self.assertEqual(quattern(self.b2, {1, 2, 3, 4}, {3}).S, frozenset({1, 2, 4}))

    def test_b2_normal_sets(self):
        sets = enumerate_normal_patterns(self.b2)
        self.assertEqual(len(sets), 7)
        self.assertIn(frozenset({1, 3, 4}), sets)
        self.assertNotIn(frozenset({1}), sets)
        self.assertEqual(len(enumerate_normal_patterns(table_for("B", 2, 3))), 6)

    def test_principal_closure(self):
        self.assertEqual(from_mask(principal_closure(self.b2, self.full, 1)), frozenset({1, 3, 4}))
        self.assertEqual(from_mask(principal_closure(self.b2, self.full, 3)), frozenset({3}))

    def test_center_and_direct_factors(self):
        self.assertEqual(center_roots(self.b2, self.full), frozenset({3, 4}))
        self.assertEqual(direct_factor_roots(self.b2, self.full), frozenset())
        self.assertEqual(direct_factor_roots(self.b2, Quattern(P=frozenset({2, 3}))), frozenset({2, 3}))
        self.assertEqual(nontrivial_pairs(self.b2, self.full), [(1, 2)])

    def test_direct_factors_at_odd_p(self):
        b3 = table_for("B", 2, 3)
        self.assertEqual(center_roots(b3, self.full), frozenset({4}))
        self.assertEqual(direct_factor_roots(b3, self.full), frozenset())
        self.assertEqual(direct_factor_roots(b3, Quattern(P=frozenset({2, 3, 4}))), frozenset())
        self.assertEqual(direct_factor_roots(self.b2, Quattern(P=frozenset({2, 3, 4}))), frozenset({2, 3, 4}))
        self.assertEqual(direct_factor_roots(b3, Quattern(P=frozenset({2, 3, 4}), K=frozenset({4}))),
                         frozenset({2, 3}))

    def test_highest_short_root_is_central_at_two(self):
        for type_tag, coeffs in (("B", (1, 1, 1, 1)), ("C", (1, 2, 2, 1)), ("F", (1, 2, 3, 2))):
            tab = table_for(type_tag, 4, 2)
            gamma = tab.rs.index_of(coeffs)
            full = Quattern(P=frozenset(range(1, tab.n + 1)))
            with self.subTest(system=f"{type_tag}4"):
                self.assertIn(gamma, center_roots(tab, full))
                self.assertIn(frozenset({gamma}), enumerate_normal_patterns(tab))
                self.assertNotIn(gamma, center_roots(table_for(type_tag, 4, 3), full))
        self.assertEqual(table_for("F", 4, 2).rs.index_of((1, 2, 3, 2)), 21)

    def test_representable_sets_of_quotient(self):
        base = Quattern(P=frozenset({1, 2, 3, 4}), K=frozenset({3}))
        reps = representable_sets(self.b2, base)
        self.assertEqual(reps[0].n_sigma, frozenset())
        self.assertEqual(reps[0].sigma, frozenset({4}))

    def test_representable_counts(self):
        expected = {("A", 4, 3): 42, ("B", 4, 2): 99, ("B", 4, 3): 70, ("C", 4, 2): 99,
                    ("C", 4, 3): 70, ("D", 4, 2): 50, ("F", 4, 2): 191, ("F", 4, 3): 105}
        for (type_tag, rank, p), n in expected.items():
            with self.subTest(system=f"{type_tag}{rank}", p=p):
                self.assertEqual(len(representable_sets(table_for(type_tag, rank, p))), n)


if __name__ == '__main__':
    unittest.main()
