from absl.testing import absltest
from absl.testing.parameterized import TestCase, parameters

from gnk.core.data.generators import (
    OrderedPairLabel,
    PairPairGenerator,
    PlainTripleGenerator,
    all_labels,
    check_strand_index,
    label,
    pair_pair,
    triple,
)


class OrderedPairLabelTest(TestCase):
    def test_orientation_matters(self):
        self.assertNotEqual(label(1, 2), label(2, 1))
        self.assertEqual(label(1, 2).as_set(), label(2, 1).as_set())

    def test_str(self):
        self.assertEqual(str(label(3, 1)), "31")
        self.assertEqual(str(label(3, 12)), "3.12")
        self.assertEqual(label(3, 12).to_string(), "3.12")
        self.assertEqual(repr(label(1, 2)), "label(1, 2)")

    def test_order(self):
        self.assertLess(label(1, 3), label(2, 1))
        self.assertLess(label(2, 1), label(2, 3))

    @parameters((1, 1), (0, 2), (1, -3))
    def test_invalid(self, first, second):
        with self.assertRaises(ValueError):
            OrderedPairLabel(first, second)

    def test_all_labels(self):
        labels = all_labels(4)
        self.assertLen(labels, 12)
        self.assertLen(set(labels), 12)
        self.assertEqual(labels, sorted(labels))


class TripleGeneratorTest(TestCase):
    def test_reversal(self):
        self.assertEqual(triple(3, 2, 1), triple(1, 2, 3))
        self.assertEqual(hash(triple(3, 2, 1)), hash(triple(1, 2, 3)))
        self.assertEqual(triple(3, 2, 1).indices(), (1, 2, 3))

    def test_middle_is_kept(self):
        self.assertNotEqual(triple(1, 2, 3), triple(1, 3, 2))
        self.assertEqual(triple(1, 3, 2).middle, 3)

    def test_str(self):
        self.assertEqual(str(triple(3, 1, 2)), "a'213")
        self.assertEqual(repr(triple(3, 1, 2)), "triple(2, 1, 3)")

    def test_to_plain(self):
        self.assertEqual(
            triple(1, 3, 2).to_plain(), PlainTripleGenerator.of(3, 2, 1)
        )

    @parameters((1, 1, 2), (1, 2, 1), (0, 1, 2))
    def test_invalid(self, i, j, k):
        with self.assertRaises(ValueError):
            triple(i, j, k)


class PairPairGeneratorTest(absltest.TestCase):
    def test_canonical_order(self):
        x = pair_pair((1, 3), (1, 2))
        self.assertEqual(x.labels, (label(1, 2), label(1, 3)))
        self.assertEqual(x, PairPairGenerator(label(1, 2), label(1, 3)))

    def test_distinct_orientations(self):
        self.assertNotEqual(
            pair_pair((1, 2), (1, 3)), pair_pair((2, 1), (1, 3))
        )
        self.assertLen(pair_pair((1, 2), (2, 1)).labels, 2)

    def test_parse_strings(self):
        self.assertEqual(pair_pair("12", "34"), pair_pair((1, 2), (3, 4)))
        self.assertEqual(pair_pair("1.12", "3.4"), pair_pair((1, 12), (3, 4)))

    def test_str(self):
        self.assertEqual(str(pair_pair((3, 2), (1, 2))), "a{12,32}")

    def test_equal_labels(self):
        with self.assertRaisesRegex(ValueError, "distinct"):
            pair_pair((1, 2), (1, 2))


class CheckStrandIndexTest(absltest.TestCase):
    def test_range(self):
        check_strand_index(4, 4)
        with self.assertRaisesRegex(ValueError, r"\[1, 4\]"):
            check_strand_index(5, 4)
        with self.assertRaisesRegex(ValueError, "integer"):
            check_strand_index(True, 4)
        with self.assertRaisesRegex(ValueError, ">= 3"):
            check_strand_index(1, 2)


if __name__ == "__main__":
    absltest.main()
