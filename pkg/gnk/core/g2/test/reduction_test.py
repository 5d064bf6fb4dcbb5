from collections import Counter

from absl.testing import absltest
from absl.testing.parameterized import TestCase, parameters

from gnk.core.data.word import has_adjacent_equal
from gnk.core.g2.moves import CommutationMode
from gnk.core.g2.reduction import (
    EqualityVerdict,
    Evidence,
    MinimalityStatus,
    MoveKind,
    ReductionStatus,
    is_minimal,
    reduce_to_minimal,
    words_equal,
)
from gnk.test.utils import assertEqualWord, g2, t3
from gnk.utils import config

ORDERED = CommutationMode.ORDERED
UNORDERED = CommutationMode.UNORDERED_SETS

# The image of a pure braid generator of PB_3 under Phi.
EXAMPLE = g2(3, "12,13", "32,31", "12,13", "23,21")
TRIANGLE = g2(4, "12,13", "12,14", "13,14")


class ReduceToMinimalTest(TestCase):
    def test_square(self):
        certificate = reduce_to_minimal(g2(3, "12,13", "12,13"))
        assertEqualWord(self, certificate.output, g2(3))
        self.assertEqual(certificate.status, ReductionStatus.MINIMAL_CERTIFIED)
        self.assertEqual(certificate.mode, ORDERED)
        self.assertTrue(certificate.reduced_to_identity)

    def test_empty(self):
        certificate = reduce_to_minimal(g2(3))
        self.assertEqual(certificate.output, g2(3))
        self.assertTrue(certificate.is_certified)
        self.assertEqual(certificate.states_explored, 1)

    def test_example_ordered(self):
        certificate = reduce_to_minimal(EXAMPLE, ORDERED)
        assertEqualWord(self, certificate.output, g2(3, "21,23", "31,32"))
        self.assertTrue(certificate.is_certified)

    def test_example_unordered(self):
        certificate = reduce_to_minimal(EXAMPLE, UNORDERED)
        assertEqualWord(self, certificate.output, EXAMPLE)
        self.assertTrue(certificate.is_certified)

    @parameters(ORDERED, UNORDERED)
    def test_exchange_relator(self, mode):
        w = TRIANGLE + TRIANGLE
        certificate = reduce_to_minimal(w, mode)
        self.assertEqual(certificate.output, g2(4))

    def test_budget(self):
        exhausted = reduce_to_minimal(TRIANGLE, budget=1)
        self.assertEqual(exhausted.status, ReductionStatus.BUDGET_EXHAUSTED)
        self.assertEqual(exhausted.states_explored, 1)
        self.assertEqual(len(exhausted.output), 3)

        certified = reduce_to_minimal(TRIANGLE, budget=2)
        self.assertTrue(certified.is_certified)
        self.assertEqual(certified.states_explored, 2)
        assertEqualWord(self, certified.output, TRIANGLE)

    def test_default_budget_from_config(self):
        saved = config.default_budget
        try:
            config.default_budget = 1
            self.assertFalse(reduce_to_minimal(TRIANGLE).is_certified)
        finally:
            config.default_budget = saved

    @parameters(0, -3, 1.5, True)
    def test_invalid_budget(self, budget):
        with self.assertRaisesRegex(ValueError, "state budget"):
            reduce_to_minimal(TRIANGLE, budget=budget)

    def test_parity_of_length(self):
        w = g2(4, "12,13", "24,34", "12,14", "12,13", "13,14")
        certificate = reduce_to_minimal(w)
        self.assertEqual(len(certificate.output) % 2, len(w) % 2)

    def test_move_trace(self):
        certificate = reduce_to_minimal(
            TRIANGLE + TRIANGLE, record_trace=True
        )
        x, y, z = TRIANGLE.letters
        self.assertEqual(
            [(m.kind, m.letters) for m in certificate.move_trace],
            [
                (MoveKind.EXCHANGE, (x, y, z)),
                (MoveKind.CANCEL, (x,)),
                (MoveKind.CANCEL, (y,)),
                (MoveKind.CANCEL, (z,)),
            ],
        )

    def test_no_trace_by_default(self):
        self.assertIsNone(reduce_to_minimal(TRIANGLE).move_trace)

    def test_deterministic(self):
        w = g2(4, "12,13", "24,34", "12,14", "21,31", "13,14", "24,34")
        self.assertEqual(reduce_to_minimal(w), reduce_to_minimal(w))

    def test_wrong_kind(self):
        with self.assertRaisesRegex(ValueError, "Expecting a word of G_N"):
            reduce_to_minimal(t3(3, "123"))


class IsMinimalTest(TestCase):
    def test_empty(self):
        self.assertTrue(is_minimal(g2(3)).is_minimal)

    def test_square(self):
        w = g2(3, "12,13", "12,13")
        certificate = is_minimal(w)
        self.assertEqual(certificate.status, MinimalityStatus.NOT_MINIMAL)
        self.assertEqual(certificate.witness, w)

    def test_example(self):
        ordered = is_minimal(EXAMPLE, ORDERED)
        self.assertEqual(ordered.status, MinimalityStatus.NOT_MINIMAL)
        self.assertTrue(has_adjacent_equal(ordered.witness.letters))
        self.assertEqual(
            Counter(ordered.witness.letters), Counter(EXAMPLE.letters)
        )

        unordered = is_minimal(EXAMPLE, UNORDERED)
        self.assertEqual(unordered.status, MinimalityStatus.MINIMAL)
        self.assertIsNone(unordered.witness)

    def test_unknown(self):
        certificate = is_minimal(TRIANGLE, budget=1)
        self.assertEqual(certificate.status, MinimalityStatus.UNKNOWN)


class WordsEqualTest(TestCase):
    def test_reflexive(self):
        result = words_equal(EXAMPLE, EXAMPLE)
        self.assertEqual(result.verdict, EqualityVerdict.EQUAL)
        self.assertEqual(result.evidence, Evidence.REDUCTION_TO_EMPTY)

    def test_parity(self):
        result = words_equal(g2(3, "12,13"), g2(3))
        self.assertEqual(result.verdict, EqualityVerdict.DISTINCT)
        self.assertEqual(result.evidence, Evidence.PARITY)
        self.assertIsNone(result.certificate)
        self.assertEqual(result.states_explored, 0)

    def test_commuting_letters(self):
        result = words_equal(g2(4, "12,13", "24,34"), g2(4, "24,34", "12,13"))
        self.assertEqual(result.verdict, EqualityVerdict.EQUAL)

    def test_example_ordered(self):
        result = words_equal(EXAMPLE, g2(3, "31,32", "21,23"))
        self.assertEqual(result.verdict, EqualityVerdict.EQUAL)

    def test_exhausted_minimal_search(self):
        result = words_equal(g2(4, "12,13", "12,14"), g2(4, "12,14", "12,13"))
        self.assertEqual(result.verdict, EqualityVerdict.DISTINCT)
        self.assertEqual(result.evidence, Evidence.EXHAUSTED_MINIMAL_SEARCH)
        self.assertEqual(len(result.certificate.output), 4)

    def test_unknown_on_budget(self):
        u = g2(4, "12,13", "12,14", "13,14", "21,31")
        v = u.with_letters(reversed(u.letters))
        unknown = words_equal(u, v, UNORDERED, budget=1)
        self.assertEqual(unknown.verdict, EqualityVerdict.UNKNOWN)
        self.assertEqual(unknown.evidence, Evidence.BUDGET_EXHAUSTED)

        distinct = words_equal(u, v, UNORDERED)
        self.assertEqual(distinct.verdict, EqualityVerdict.DISTINCT)
        self.assertEqual(distinct.certificate.states_explored, 4)

    def test_symmetric(self):
        u = g2(4, "12,13", "12,14", "13,14", "12,14")
        v = g2(4, "13,14", "12,14", "12,13", "12,14")
        self.assertEqual(
            words_equal(u, v).verdict, words_equal(v, u).verdict
        )

    def test_context_mismatch(self):
        with self.assertRaisesRegex(ValueError, "different groups"):
            words_equal(g2(3), g2(4))


if __name__ == "__main__":
    absltest.main()
