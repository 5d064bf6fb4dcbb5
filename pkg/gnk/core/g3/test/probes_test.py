from absl.testing import absltest

from gnk.core.g2.moves import CommutationMode
from gnk.core.g3.probes import probe_phi_kernel
from gnk.test.utils import t3


class ProbePhiKernelTest(absltest.TestCase):
    def test_no_short_kernel_element(self):
        report = probe_phi_kernel(3, 2)
        self.assertEqual(report.num_words, 3 + 3 * 2)
        self.assertEmpty(report.candidates)
        self.assertEqual(report.num_unknown, 0)

    def test_length_three_witness_in_ordered_mode(self):
        # The three images commute pairwise and multiply to the identity.
        report = probe_phi_kernel(3, 3, CommutationMode.ORDERED)
        self.assertLen(report.candidates, 6)
        witnesses = [c.word for c in report.witnesses]
        self.assertIn(t3(3, "123", "213", "132"), witnesses)

    def test_unordered_mode(self):
        report = probe_phi_kernel(3, 3, CommutationMode.UNORDERED_SETS)
        self.assertEmpty(report.candidates)

    def test_invalid_length(self):
        with self.assertRaisesRegex(ValueError, "max_length"):
            probe_phi_kernel(3, -1)


if __name__ == "__main__":
    absltest.main()
