# Copyright 2026 The gnk Authors.
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     https://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

import inspect

from absl.testing import absltest

import gnk

PUBLIC_API_SYMBOLS = {
    "OrderedPairLabel",
    "TripleGenerator",
    "PlainTripleGenerator",
    "PairPairGenerator",
    "label",
    "triple",
    "pair_pair",
    "all_labels",
    "Word",
    "WordKind",
    "ParityVector",
    "word",
    "free_reduce_involutive",
    "reverse_word",
    "parity_vector",
    "CommutationMode",
    "commutes",
    "exchange_applicable",
    "neighbors",
    "ReductionCertificate",
    "ReductionStatus",
    "MinimalityCertificate",
    "MinimalityStatus",
    "EqualityResult",
    "EqualityVerdict",
    "Evidence",
    "reduce_to_minimal",
    "is_minimal",
    "words_equal",
    "enumerate_g2_relators",
    "GroupContextG3",
    "G3Variant",
    "RelatorTag",
    "enumerate_relators",
    "phi_generator",
    "phi_word",
    "project_to_plain",
    "certify_minimal_via_phi",
    "verify_phi_well_defined",
    "probe_phi_kernel",
    "Z2FreeWord",
    "FreeAutomorphism",
    "g_of_generator",
    "g_of_word",
    "apply",
    "compose",
    "aut_equal",
    "verify_g_well_defined",
    "BraidWord",
    "BraidSyntaxError",
    "parse_braid",
    "format_braid",
    "permutation",
    "is_pure",
    "inverse",
    "random_pure_braid",
    "Trajectory",
    "realize",
    "Tolerances",
    "CollinearityEvent",
    "StabilityReport",
    "detect_events",
    "DegenerateTrajectoryError",
    "f_invariant",
    "Phi",
    "g_action",
    "phi_from_events",
    "verify_braid_relations",
    "CheckStatus",
    "VerificationReport",
    "to_json",
    "dumps",
    "save",
}

PUBLIC_API_MODULES = {"config", "io"}


class PublicAPITest(absltest.TestCase):
    def test_public_symbols(self):
        """Asserts that the symbols exposed under gnk.<> are exactly the
        ones we expect."""
        symbols = {
            s
            for s in dir(gnk)
            if not s.startswith("__") and not inspect.ismodule(getattr(gnk, s))
        }
        self.assertEqual(PUBLIC_API_SYMBOLS, symbols)

    def test_public_modules(self):
        for name in PUBLIC_API_MODULES:
            self.assertTrue(inspect.ismodule(getattr(gnk, name)), name)
        self.assertFalse(hasattr(gnk, "core"))

    def test_io_symbols(self):
        self.assertTrue(callable(gnk.io.events_to_dataframe))
        self.assertTrue(callable(gnk.io.report_to_csv))

    def test_worked_example(self):
        b = gnk.parse_braid("s2 s2", 3)
        certificate = gnk.Phi(b, gnk.CommutationMode.ORDERED)
        self.assertEqual(
            str(certificate.output), "a{21,23} a{31,32}"
        )
        self.assertEqual(str(gnk.f_invariant(b)), "a'132 a'123")


if __name__ == "__main__":
    absltest.main()
