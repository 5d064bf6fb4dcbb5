import json
import os
from unittest import mock

from absl.testing import absltest, flagsaver
from absl.testing.parameterized import TestCase, parameters

from gnk.cli import main
from gnk.cli.main import CommandRequest, Subcommand, run
from gnk.core.data.word import WordKind
from gnk.core.g2.moves import CommutationMode
from gnk.io.csv import events_from_csv
from gnk.utils import config

X = "[[1, 2], [1, 3]]"


class InvariantCommandTest(TestCase):
    def test_square(self):
        result = run(
            CommandRequest(Subcommand.INVARIANT, n=3, braid="s2 s2")
        )
        self.assertEqual(result.exit_code, main.EXIT_OK)
        payload = result.payload
        self.assertEqual(payload["f"], [[1, 3, 2], [1, 2, 3]])
        self.assertEqual(payload["f_length"], 2)
        self.assertLen(payload["phi_image"], 4)
        self.assertTrue(payload["parity_nonzero"])
        self.assertLen(payload["parity"], 2)
        self.assertEqual(
            payload["Phi"]["output"], [[[2, 1], [2, 3]], [[3, 1], [3, 2]]]
        )
        self.assertEqual(payload["Phi"]["status"], "minimal_certified")
        self.assertNotIn("move_trace", payload["Phi"])
        self.assertTrue(payload["nontrivial"])
        self.assertEqual(payload["seed"], 0)
        self.assertTrue(payload["stability"]["passed"])

    def test_unordered(self):
        result = run(
            CommandRequest(
                Subcommand.INVARIANT,
                braid="s2 s2",
                mode=CommutationMode.UNORDERED_SETS,
            )
        )
        self.assertEqual(result.exit_code, main.EXIT_OK)
        self.assertEqual(result.payload["Phi"]["output_length"], 4)
        self.assertEqual(result.payload["Phi"]["mode"], "unordered-sets")

    def test_verbose_trace(self):
        result = run(
            CommandRequest(
                Subcommand.INVARIANT, braid="s2 s2", verbose_trace=True
            )
        )
        self.assertIn("move_trace", result.payload["Phi"])

    def test_deterministic(self):
        request = CommandRequest(Subcommand.INVARIANT, n=4, braid="s1 s1 s3 s3")
        self.assertEqual(run(request).payload, run(request).payload)

    def test_degenerate(self):
        with mock.patch.object(config, "min_event_gap", 0.9):
            result = run(
                CommandRequest(
                    Subcommand.INVARIANT, braid="s2 s2", epsilon=0.0, retries=1
                )
            )
        self.assertEqual(result.exit_code, main.EXIT_UNDECIDED)
        self.assertEqual(
            result.payload["stability"]["degeneracies"],
            ["simultaneous-events"],
        )

    @parameters(("s1 x2", 3), ("s1", None), ("s3 s3", None))
    def test_invalid_braid(self, braid, position):
        result = run(CommandRequest(Subcommand.INVARIANT, braid=braid))
        self.assertEqual(result.exit_code, main.EXIT_INPUT_ERROR)
        self.assertIn("error", result.payload)
        self.assertEqual(result.payload.get("position"), position)


class EventsCommandTest(absltest.TestCase):
    def test_square(self):
        result = run(CommandRequest(Subcommand.EVENTS, braid="s2 s2"))
        self.assertEqual(result.exit_code, main.EXIT_OK)
        events = result.payload["events"]
        self.assertEqual([e["middle"] for e in events], [3, 2])
        self.assertEqual([e["triple"] for e in events], [[1, 3, 2], [1, 2, 3]])

    def test_csv_output(self):
        path = os.path.join(self.create_tempdir().full_path, "events.csv")
        result = run(
            CommandRequest(
                Subcommand.EVENTS, n=4, braid="s1 s1 s3 s3", output=path
            )
        )
        self.assertLen(events_from_csv(path), len(result.value))

    def test_json_output(self):
        path = os.path.join(self.create_tempdir().full_path, "events.json")
        result = run(
            CommandRequest(Subcommand.EVENTS, braid="s1 s1", output=path)
        )
        with open(path, encoding="utf-8") as f:
            self.assertEqual(json.load(f), result.payload)


class WordCommandsTest(TestCase):
    def test_reduce(self):
        result = run(
            CommandRequest(
                Subcommand.REDUCE, word=f"[{X}, {X}]", verbose_trace=True
            )
        )
        self.assertEqual(result.exit_code, main.EXIT_OK)
        self.assertEqual(result.payload["output"], [])
        self.assertEqual(result.payload["move_trace"][0]["kind"], "cancel")

    def test_equal_empty(self):
        result = run(CommandRequest(Subcommand.EQUAL, lhs="[]", rhs="[]"))
        self.assertEqual(result.exit_code, main.EXIT_OK)
        self.assertEqual(result.payload["verdict"], "equal")

    def test_distinct(self):
        result = run(CommandRequest(Subcommand.EQUAL, lhs=f"[{X}]", rhs="[]"))
        self.assertEqual(result.exit_code, main.EXIT_NEGATIVE)
        self.assertEqual(result.payload["verdict"], "distinct")
        self.assertEqual(result.payload["evidence"], "parity-certificate")

    def test_certify_minimal(self):
        result = run(
            CommandRequest(Subcommand.CERTIFY_MINIMAL, word="[[1, 2, 3]]")
        )
        self.assertEqual(result.exit_code, main.EXIT_OK)
        self.assertEqual(result.payload["status"], "minimal")

    def test_not_minimal_g2(self):
        result = run(
            CommandRequest(
                Subcommand.CERTIFY_MINIMAL,
                word=f"[{X}, {X}]",
                kind=WordKind.PAIR_PAIR,
            )
        )
        self.assertEqual(result.exit_code, main.EXIT_NEGATIVE)
        self.assertEqual(result.payload["status"], "not_minimal")

    def test_act(self):
        result = run(
            CommandRequest(
                Subcommand.ACT, word="[[1, 2, 3]]", target="[[1, 2]]"
            )
        )
        self.assertEqual(result.exit_code, main.EXIT_OK)
        self.assertEqual(result.payload["image"], [[1, 3], [1, 2], [1, 3]])
        self.assertEqual(
            result.payload["automorphism"]["1.2"],
            [[1, 3], [1, 2], [1, 3]],
        )

    @parameters("[[1, 2]", '{"a": 1}', "[[1, 1, 2]]")
    def test_malformed_word(self, word):
        result = run(CommandRequest(Subcommand.CERTIFY_MINIMAL, word=word))
        self.assertEqual(result.exit_code, main.EXIT_INPUT_ERROR)

    def test_missing_word(self):
        with self.assertRaisesRegex(ValueError, "--word"):
            CommandRequest(Subcommand.REDUCE)


class SuiteCommandsTest(TestCase):
    @parameters("phi", "g", "braid")
    def test_n4(self, group):
        result = run(
            CommandRequest(Subcommand.VERIFY_RELATIONS, n=4, group=group)
        )
        self.assertEqual(result.exit_code, main.EXIT_OK, result.text)
        self.assertEqual(result.payload["status"], "pass")
        self.assertEqual(result.payload["suite"], group)

    def test_report_csv(self):
        path = os.path.join(self.create_tempdir().full_path, "report.csv")
        result = run(
            CommandRequest(
                Subcommand.VERIFY_RELATIONS, n=3, group="g", output=path
            )
        )
        with open(path, encoding="utf-8") as f:
            self.assertLen(f.read().splitlines(), 1 + len(result.value.checks))

    def test_probe_kernel(self):
        result = run(
            CommandRequest(Subcommand.PROBE_KERNEL, n=3, max_length=3)
        )
        self.assertEqual(result.exit_code, main.EXIT_OK)
        self.assertEqual(result.payload["num_unknown"], 0)
        self.assertIn("witness:", result.text)


class RequestTest(absltest.TestCase):
    def test_invalid_values(self):
        with self.assertRaisesRegex(ValueError, "strands"):
            CommandRequest(Subcommand.EVENTS, n=2)
        with self.assertRaisesRegex(ValueError, "--budget"):
            CommandRequest(Subcommand.EVENTS, budget=0)
        with self.assertRaisesRegex(ValueError, "group"):
            CommandRequest(Subcommand.VERIFY_RELATIONS, group="psi")

    @flagsaver.flagsaver(n=4, braid="s1 s1", mode="unordered-sets")
    def test_from_flags(self):
        request = CommandRequest.from_flags(["gnk", "invariant"])
        self.assertEqual(request.subcommand, Subcommand.INVARIANT)
        self.assertEqual(request.n, 4)
        self.assertEqual(request.mode, CommutationMode.UNORDERED_SETS)
        self.assertFalse(request.pretty)

    def test_unknown_subcommand(self):
        with self.assertRaisesRegex(ValueError, "Unknown subcommand"):
            CommandRequest.from_flags(["gnk", "simplify"])
        with self.assertRaisesRegex(ValueError, "exactly one"):
            CommandRequest.from_flags(["gnk"])

    @flagsaver.flagsaver(lhs="[]", rhs="[]")
    def test_main(self):
        self.assertEqual(main.main(["gnk", "equal"]), main.EXIT_OK)
        self.assertEqual(main.main(["gnk"]), main.EXIT_INPUT_ERROR)


if __name__ == "__main__":
    absltest.main()
