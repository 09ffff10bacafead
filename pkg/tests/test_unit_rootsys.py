import unittest

from src.errors import IndexOutOfRangeError, InvalidRootSystemError
from src.rootsys.services import build_root_system, coroot_pairing, is_less, root_sum, table_checksum


class TestRootSystem(unittest.TestCase):

    def test_positive_root_counts(self):
        for (type_tag, rank), n in {("A", 4): 10, ("B", 4): 16, ("C", 4): 16, ("D", 4): 12,
                                    ("F", 4): 24, ("G", 2): 6, ("E", 6): 36}.items():
            with self.subTest(system=f"{type_tag}{rank}"):
                self.assertEqual(build_root_system(type_tag, rank).n, n)

    def test_f4_order_follows_height_then_table(self):
        rs = build_root_system("F", 4)
        self.assertEqual(rs.root(1).coeffs, (1, 0, 0, 0))
        self.assertEqual(rs.root(4).coeffs, (0, 0, 0, 1))
        self.assertEqual(rs.root(5).coeffs, (1, 1, 0, 0))
        self.assertEqual(rs.root(9).coeffs, (0, 1, 2, 0))
        self.assertEqual(rs.root(18).coeffs, (1, 1, 2, 2))
        self.assertEqual(rs.root(23).coeffs, (1, 3, 4, 2))
        self.assertEqual(rs.root(24).coeffs, (2, 3, 4, 2))
        heights = [r.height for r in rs.roots]
        self.assertEqual(heights, sorted(heights))

    def test_b2_order(self):
        rs = build_root_system("B", 2)
        self.assertEqual([r.coeffs for r in rs.roots], [(1, 0), (0, 1), (1, 1), (1, 2)])

    def test_root_sum(self):
        rs = build_root_system("F", 4)
        self.assertEqual(root_sum(rs, 1, 2), 5)
        self.assertEqual(root_sum(rs, 2, 1), 5)
        self.assertIsNone(root_sum(rs, 1, 3))
        self.assertIsNone(root_sum(rs, 24, 1))

    def test_root_sum_out_of_range(self):
        rs = build_root_system("B", 2)
        with self.assertRaises(IndexOutOfRangeError):
            root_sum(rs, 0, 1)
        with self.assertRaises(IndexOutOfRangeError):
            root_sum(rs, 1, 5)

    def test_invalid_system(self):
        for type_tag, rank in (("F", 3), ("G", 3), ("D", 3), ("E", 5), ("X", 2)):
            with self.subTest(system=f"{type_tag}{rank}"):
                with self.assertRaises(InvalidRootSystemError):
                    build_root_system(type_tag, rank)

    def test_is_less(self):
        rs = build_root_system("F", 4)
        self.assertTrue(is_less(rs, 1, 5))
        self.assertTrue(is_less(rs, 1, 24))
        self.assertFalse(is_less(rs, 5, 1))
        self.assertFalse(is_less(rs, 3, 3))
        self.assertFalse(is_less(rs, 1, 2))

    def test_coroot_pairing_b2(self):
        rs = build_root_system("B", 2)
        long_root, short_root = rs.root(1).coeffs, rs.root(2).coeffs
        self.assertEqual(coroot_pairing(rs, long_root, short_root), -2)
        self.assertEqual(coroot_pairing(rs, short_root, long_root), -1)

    def test_table_checksum_is_stable(self):
        rs = build_root_system("F", 4)
        self.assertEqual(len(table_checksum(rs)), 64)
        self.assertEqual(table_checksum(rs), table_checksum(build_root_system("F", 4)))
        self.assertNotEqual(table_checksum(rs), table_checksum(build_root_system("B", 4)))


if __name__ == '__main__':
    unittest.main()
