from collections import Counter

from absl.testing import absltest
from absl.testing.parameterized import TestCase, parameters

from gnk.core.g2.moves import (
    CommutationMode,
    commutes,
    exchange_applicable,
    is_exchange_triangle,
    neighbors,
    third_of_triangle,
)
from gnk.core.data.word import WordKind, word
from gnk.test.utils import g2, pp

ORDERED = CommutationMode.ORDERED
UNORDERED = CommutationMode.UNORDERED_SETS


class CommutesTest(TestCase):
    def test_ordered_labels_distinct(self):
        self.assertTrue(commutes(pp("12", "13"), pp("32", "31"), ORDERED))

    def test_unordered_sets_collide(self):
        self.assertFalse(commutes(pp("12", "13"), pp("32", "31"), UNORDERED))

    @parameters(ORDERED, UNORDERED)
    def test_shared_label(self, mode):
        self.assertFalse(commutes(pp("12", "13"), pp("12", "14"), mode))

    @parameters(ORDERED, UNORDERED)
    def test_disjoint_sets(self, mode):
        self.assertTrue(commutes(pp("12", "13"), pp("24", "34"), mode))

    def test_symmetric(self):
        x, y = pp("12", "34"), pp("21", "43")
        self.assertEqual(commutes(x, y, ORDERED), commutes(y, x, ORDERED))

    def test_mode_from_string(self):
        self.assertEqual(CommutationMode.from_string("ordered"), ORDERED)
        self.assertEqual(
            CommutationMode.from_string("unordered-sets"), UNORDERED
        )
        self.assertEqual(
            CommutationMode.from_string("UNORDERED_SETS"), UNORDERED
        )
        with self.assertRaisesRegex(ValueError, "Unknown commutation mode"):
            CommutationMode.from_string("sets")


class ExchangeTest(TestCase):
    def test_pattern(self):
        w = g2(4, "12,13", "12,14", "13,14")
        self.assertEqual(
            exchange_applicable(w, 0), g2(4, "13,14", "12,14", "12,13")
        )

    def test_any_order_of_the_triangle(self):
        # p=13, q=12, r=14.
        w = g2(4, "12,13", "13,14", "12,14")
        self.assertEqual(
            exchange_applicable(w, 0), g2(4, "12,14", "13,14", "12,13")
        )

    def test_common_label_mismatch(self):
        w = g2(4, "12,13", "12,14", "12,23")
        self.assertIsNone(exchange_applicable(w, 0))

    def test_involution(self):
        w = g2(4, "21,23", "12,13", "12,14", "13,14")
        once = exchange_applicable(w, 1)
        self.assertIsNotNone(once)
        self.assertEqual(exchange_applicable(once, 1), w)

    def test_mode(self):
        # 13 and 31 are the same set.
        w = g2(3, "12,13", "12,31", "13,31")
        self.assertIsNotNone(exchange_applicable(w, 0, ORDERED))
        self.assertIsNone(exchange_applicable(w, 0, UNORDERED))

    def test_out_of_range(self):
        w = g2(4, "12,13", "12,14", "13,14")
        with self.assertRaisesRegex(ValueError, "factor of length 3"):
            exchange_applicable(w, 1)
        with self.assertRaisesRegex(ValueError, "factor of length 3"):
            exchange_applicable(w, -1)

    def test_wrong_kind(self):
        w = word(WordKind.ORDERED_PAIR, 3, [])
        with self.assertRaisesRegex(ValueError, "Expecting a word of G_N"):
            exchange_applicable(w, 0)

    def test_triangle_helpers(self):
        x, y, z = pp("12", "13"), pp("12", "14"), pp("13", "14")
        self.assertEqual(third_of_triangle(x, y), z)
        self.assertEqual(third_of_triangle(z, y), x)
        self.assertIsNone(third_of_triangle(x, pp("23", "24")))
        self.assertIsNone(third_of_triangle(x, x))
        self.assertTrue(is_exchange_triangle(z, x, y, ORDERED))
        self.assertFalse(is_exchange_triangle(x, x, y, ORDERED))


class NeighborsTest(TestCase):
    def test_empty(self):
        self.assertEqual(neighbors(g2(3)), set())

    def test_commuting_pair(self):
        w = g2(4, "12,13", "24,34")
        self.assertEqual(neighbors(w), {g2(4, "24,34", "12,13")})

    def test_example_word(self):
        w = g2(3, "12,13", "32,31", "12,13", "23,21")
        self.assertIn(g2(3, "32,31", "12,13", "12,13", "23,21"), neighbors(w))

    def test_unordered_example_word_has_no_neighbor(self):
        w = g2(3, "12,13", "32,31", "12,13", "23,21")
        self.assertEqual(neighbors(w, UNORDERED), set())

    @parameters(ORDERED, UNORDERED)
    def test_preserves_multiset(self, mode):
        w = g2(4, "12,13", "12,14", "13,14", "24,34", "21,31", "12,14")
        for neighbor in neighbors(w, mode):
            self.assertEqual(len(neighbor), len(w))
            self.assertEqual(Counter(neighbor.letters), Counter(w.letters))


if __name__ == "__main__":
    absltest.main()
