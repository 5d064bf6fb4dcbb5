import numpy as np
from absl.testing import absltest
from absl.testing.parameterized import TestCase, parameters

from gnk.core.braids.braid_word import (
    BraidWord,
    inverse,
    parse_braid,
    random_pure_braid,
)
from gnk.core.braids.events import Degeneracy, Tolerances
from gnk.core.braids.invariant import (
    DegenerateTrajectoryError,
    Phi,
    braid_relation_pairs,
    f_invariant,
    g_action,
    phi_from_events,
    stable_events,
    verify_braid_relations,
)
from gnk.core.data.word import (
    free_reduce_involutive,
    parity_vector,
    reverse_word,
)
from gnk.core.free_z2.automorphism import aut_equal
from gnk.core.g2.moves import CommutationMode
from gnk.core.g2.reduction import ReductionStatus
from gnk.core.g3.phi import phi_word
from gnk.core.reports import CheckStatus
from gnk.test.utils import assertEqualWord, g2, t3

ORDERED = CommutationMode.ORDERED
UNORDERED = CommutationMode.UNORDERED_SETS


class FInvariantTest(TestCase):
    def test_empty(self):
        assertEqualWord(self, f_invariant(BraidWord(3)), t3(3))

    @parameters(0, 1, 5)
    def test_square(self, seed):
        assertEqualWord(
            self,
            f_invariant(parse_braid("s2 s2", 3), seed=seed),
            t3(3, "132", "123"),
        )

    def test_other_squares(self):
        assertEqualWord(
            self, f_invariant(parse_braid("s1 s1", 3)), t3(3, "123", "213")
        )
        assertEqualWord(
            self,
            f_invariant(parse_braid("s2^-1 s2^-1", 3)),
            t3(3, "123", "132"),
        )

    def test_product(self):
        a, b = parse_braid("s1 s1", 3), parse_braid("s2 s2", 3)
        self.assertEqual(f_invariant(a + b), f_invariant(a) + f_invariant(b))

    @parameters(
        ("s1 s2 s2 s1^-1", 3),
        ("s1 s2 s1 s1 s2 s1", 3),
        ("s2 s3 s3 s2^-1 s1 s1", 4),
    )
    def test_inverse_is_reversal(self, text, n):
        b = parse_braid(text, n)
        self.assertEqual(
            f_invariant(inverse(b)), reverse_word(f_invariant(b))
        )

    def test_full_twists_are_trivial(self):
        # In `G_3^3 (a free product of Z_2's), both presentations of the
        # full twist give freely trivial words.
        for text in ("s1 s2 s1 s1 s2 s1", "s2 s1 s2 s2 s1 s2"):
            w = f_invariant(parse_braid(text, 3))
            self.assertLen(w, 6)
            self.assertEmpty(free_reduce_involutive(w))

    def test_not_pure(self):
        with self.assertRaisesRegex(ValueError, "pure braid"):
            f_invariant(parse_braid("s1 s2", 3))

    def test_degenerate(self):
        with self.assertRaises(DegenerateTrajectoryError) as context:
            f_invariant(
                parse_braid("s2 s2", 3),
                retries=2,
                tolerances=Tolerances(min_event_gap=0.9),
            )
        report = context.exception.report
        self.assertEqual(report.retries, 2)
        self.assertEqual(report.seed, 2)
        self.assertIn(Degeneracy.SIMULTANEOUS_EVENTS, report.degeneracies)
        self.assertIn("simultaneous-events", str(context.exception))

    def test_stable_events(self):
        events, report = stable_events(parse_braid("s2 s2", 3), seed=3)
        self.assertTrue(report.passed)
        self.assertEqual(report.seed, 3)
        self.assertEqual(report.retries, 0)
        self.assertLen(events, 2)

    def test_invalid_retries(self):
        with self.assertRaisesRegex(ValueError, "retries"):
            f_invariant(parse_braid("s2 s2", 3), retries=-1)


class PhiTest(TestCase):
    def test_empty(self):
        certificate = Phi(BraidWord(3))
        self.assertEmpty(certificate.output)
        self.assertEqual(certificate.status, ReductionStatus.MINIMAL_CERTIFIED)

    def test_square_raw_image(self):
        image = phi_word(f_invariant(parse_braid("s2 s2", 3)))
        self.assertLen(image, 4)
        self.assertLen(parity_vector(image), 2)

    def test_square_ordered(self):
        certificate = Phi(parse_braid("s2 s2", 3), ORDERED)
        assertEqualWord(self, certificate.output, g2(3, "21,23", "31,32"))
        self.assertEqual(certificate.status, ReductionStatus.MINIMAL_CERTIFIED)
        self.assertFalse(parity_vector(certificate.output).is_zero())

    def test_square_unordered(self):
        certificate = Phi(parse_braid("s2 s2", 3), UNORDERED)
        self.assertLen(certificate.output, 4)
        self.assertEqual(certificate.status, ReductionStatus.MINIMAL_CERTIFIED)

    def test_from_events(self):
        for text, n in (("s2 s2", 3), ("s1 s2 s2 s1^-1 s3 s3", 4)):
            b = parse_braid(text, n)
            events, _ = stable_events(b)
            self.assertEqual(
                phi_from_events(events, n), phi_word(f_invariant(b))
            )

    def test_random_braid_times_inverse(self):
        rng = np.random.default_rng(0)
        for index in range(20):
            n = 3 + index % 2
            b = random_pure_braid(n, 6, rng)
            certificate = Phi(b + inverse(b), ORDERED)
            self.assertTrue(certificate.reduced_to_identity, str(b))


class GActionTest(absltest.TestCase):
    def test_full_twist(self):
        self.assertTrue(
            aut_equal(
                g_action(parse_braid("s1 s2 s1 s1 s2 s1", 3)),
                g_action(parse_braid("s2 s1 s2 s2 s1 s2", 3)),
            )
        )

    def test_square_is_not_identity(self):
        self.assertFalse(g_action(parse_braid("s2 s2", 3)).is_identity())


class BraidRelationsTest(TestCase):
    def test_pairs(self):
        tags = [tag for tag, _, _ in braid_relation_pairs(4)]
        self.assertEqual(
            tags,
            ["cancel"] * 3 + ["far_commute"] + ["braid_relation"] * 2,
        )
        for _, lhs, rhs in braid_relation_pairs(5):
            self.assertEqual(lhs.n, rhs.n)

    def test_n3(self):
        report = verify_braid_relations(3, ORDERED)
        self.assertEqual(report.status, CheckStatus.PASS, report.failures())
        self.assertEqual(report.suite, "braid")

    def test_n4(self):
        report = verify_braid_relations(4, ORDERED)
        self.assertEqual(report.status, CheckStatus.PASS, report.failures())

    def test_n_range(self):
        with self.assertRaisesRegex(ValueError, "max_verify_n"):
            verify_braid_relations(2)


if __name__ == "__main__":
    absltest.main()
