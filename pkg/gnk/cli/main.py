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

"""Command line interface of gnk.

Usage example:
    gnk invariant --n=3 --braid="s2 s2" --mode=ordered
    gnk verify-relations --group=phi --n=4
    gnk equal --lhs='[]' --rhs='[]'
    gnk events --n=4 --braid="s1 s1 s3 s3" --output=events.csv

Words are given as JSON arrays of generators, e.g. '[[1, 3, 2], [1, 2, 3]]'
for a `G_n^3 word or '[[[1, 2], [1, 3]]]' for a G^2 word.

The result is printed as JSON, or as text with --pretty. The exit status is 0
on success, 1 on a verified negative answer (e.g. DISTINCT words), 2 when the
answer is undecided (budget exhausted, inconclusive certificate, degenerate
realization) and 3 on invalid input.
"""

import logging
import sys
from dataclasses import dataclass, field
from enum import Enum
from typing import Any, Dict, List, Optional

from absl import app
from absl import flags

from gnk.core import serialization
from gnk.core.braids.braid_word import parse_braid
from gnk.core.braids.invariant import (
    DegenerateTrajectoryError,
    stable_events,
    verify_braid_relations,
)
from gnk.core.data.generators import check_num_strands
from gnk.core.data.word import Word, WordKind, parity_vector
from gnk.core.free_z2.automorphism import Z2FreeWord, apply, g_of_word
from gnk.core.free_z2.verification import verify_g_well_defined
from gnk.core.g2.moves import CommutationMode
from gnk.core.g2.reduction import (
    EqualityVerdict,
    MinimalityStatus,
    is_minimal,
    reduce_to_minimal,
    words_equal,
)
from gnk.core.g3.phi import (
    PhiMinimality,
    certify_minimal_via_phi,
    phi_word,
    verify_phi_well_defined,
)
from gnk.core.g3.probes import probe_phi_kernel
from gnk.core.reports import CheckStatus, VerificationReport
from gnk.io.csv import events_to_csv, report_to_csv
from gnk.io.pandas import events_to_dataframe, report_to_dataframe
from gnk.utils import config

FLAGS = flags.FLAGS

flags.DEFINE_integer("n", 3, "Number of strands.")
flags.DEFINE_string("braid", "", 'Braid word, e.g. "s1 s2^-1 s1".')
flags.DEFINE_enum(
    "mode",
    "ordered",
    [m.value for m in CommutationMode],
    "Commutation mode of G^2.",
)
flags.DEFINE_integer(
    "budget", None, "State budget of the G^2 search. Defaults to $GNK_BUDGET."
)
flags.DEFINE_float("epsilon", None, "Jitter magnitude of the base points.")
flags.DEFINE_integer("seed", 0, "Seed of the first realization.")
flags.DEFINE_integer("retries", None, "Retries on unstable realizations.")
flags.DEFINE_string("word", None, "Word, as a JSON array of generators.")
flags.DEFINE_string("lhs", None, "Left word of `equal`.")
flags.DEFINE_string("rhs", None, "Right word of `equal`.")
flags.DEFINE_string(
    "target", None, "Free product word acted on by `act`, e.g. '[[1, 2]]'."
)
flags.DEFINE_enum(
    "kind",
    None,
    [k.value for k in WordKind],
    "Kind of --word/--lhs/--rhs. Defaults to the natural kind of the"
    " subcommand.",
)
flags.DEFINE_enum(
    "group", "phi", ["phi", "g", "braid"], "Suite of `verify-relations`."
)
flags.DEFINE_integer("max_length", 3, "Longest word of `probe-kernel`.")
flags.DEFINE_integer("num_workers", None, "Worker processes of the suites.")
flags.DEFINE_bool("json", True, "Print the result as JSON.")
flags.DEFINE_bool("pretty", False, "Print the result as human readable text.")
flags.DEFINE_bool(
    "verbose_trace", False, "Include the move trace of reductions."
)
flags.DEFINE_string(
    "output",
    None,
    "Also save the result to this path. Events and reports are saved as CSV"
    " if the path ends with .csv, otherwise as JSON.",
)

EXIT_OK = 0
EXIT_NEGATIVE = 1
EXIT_UNDECIDED = 2
EXIT_INPUT_ERROR = 3


class Subcommand(Enum):
    INVARIANT = "invariant"
    REDUCE = "reduce"
    EQUAL = "equal"
    VERIFY_RELATIONS = "verify-relations"
    ACT = "act"
    CERTIFY_MINIMAL = "certify-minimal"
    EVENTS = "events"
    PROBE_KERNEL = "probe-kernel"

    def __str__(self) -> str:
        return self.value

    @classmethod
    def from_string(cls, value: str) -> "Subcommand":
        for subcommand in cls:
            if subcommand.value == value:
                return subcommand
        raise ValueError(
            f"Unknown subcommand {value!r}. Expecting one of"
            f" {[s.value for s in cls]}."
        )


_DEFAULT_KIND = {
    Subcommand.REDUCE: WordKind.PAIR_PAIR,
    Subcommand.EQUAL: WordKind.PAIR_PAIR,
    Subcommand.CERTIFY_MINIMAL: WordKind.TRIPLE,
    Subcommand.ACT: WordKind.TRIPLE,
}

_WORD_ARGUMENTS = {
    Subcommand.REDUCE: ["word"],
    Subcommand.EQUAL: ["lhs", "rhs"],
    Subcommand.CERTIFY_MINIMAL: ["word"],
    Subcommand.ACT: ["word"],
}


@dataclass(frozen=True)
class CommandRequest:
    """A validated command.

    Attributes:
        subcommand: What to compute.
        n: Number of strands.
        braid: Braid word, for `invariant` and `events`.
        mode: Commutation mode of G^2.
        budget: State budget. None for `config.default_budget`.
        epsilon: Jitter magnitude. None for `config.default_epsilon`.
        seed: Seed of the first realization.
        retries: Realization retries. None for `config.default_retries`.
        word: Word argument (JSON), for `reduce`, `certify-minimal` and
            `act`.
        lhs: Left word (JSON), for `equal`.
        rhs: Right word (JSON), for `equal`.
        target: Free product word (JSON) acted on by `act`.
        kind: Kind of the word arguments.
        group: Suite of `verify-relations`: "phi", "g" or "braid".
        max_length: Longest enumerated word of `probe-kernel`.
        num_workers: Worker processes of the suites.
        verbose_trace: Whether to record move traces.
        pretty: Whether to print text instead of JSON.
        output: Optional path the result is saved to.
    """

    subcommand: Subcommand
    n: int = 3
    braid: str = ""
    mode: CommutationMode = CommutationMode.ORDERED
    budget: Optional[int] = None
    epsilon: Optional[float] = None
    seed: int = 0
    retries: Optional[int] = None
    word: Optional[str] = None
    lhs: Optional[str] = None
    rhs: Optional[str] = None
    target: Optional[str] = None
    kind: Optional[WordKind] = None
    group: str = "phi"
    max_length: int = 3
    num_workers: Optional[int] = None
    verbose_trace: bool = False
    pretty: bool = False
    output: Optional[str] = None

    def __post_init__(self):
        check_num_strands(self.n)
        if self.budget is not None and self.budget < 1:
            raise ValueError(f"--budget should be >= 1. Got {self.budget!r}.")
        if self.epsilon is not None and self.epsilon < 0:
            raise ValueError(
                f"--epsilon should be >= 0. Got {self.epsilon!r}."
            )
        if self.seed < 0:
            raise ValueError(f"--seed should be >= 0. Got {self.seed!r}.")
        if self.retries is not None and self.retries < 0:
            raise ValueError(
                f"--retries should be >= 0. Got {self.retries!r}."
            )
        if self.group not in ("phi", "g", "braid"):
            raise ValueError(
                'The group should be "phi", "g" or "braid". Got'
                f" {self.group!r}."
            )
        for name in _WORD_ARGUMENTS.get(self.subcommand, []):
            if getattr(self, name) is None:
                raise ValueError(
                    f"The {self.subcommand} subcommand requires --{name}."
                )

    @property
    def word_kind(self) -> WordKind:
        if self.kind is not None:
            return self.kind
        return _DEFAULT_KIND.get(self.subcommand, WordKind.PAIR_PAIR)

    @classmethod
    def from_flags(cls, argv: List[str]) -> "CommandRequest":
        """Builds a request from the positional arguments and the flags."""

        if len(argv) != 2:
            raise ValueError(
                "Expecting exactly one subcommand among"
                f" {[s.value for s in Subcommand]}. Got {argv[1:]!r}."
            )
        return cls(
            subcommand=Subcommand.from_string(argv[1]),
            n=FLAGS.n,
            braid=FLAGS.braid,
            mode=CommutationMode.from_string(FLAGS.mode),
            budget=FLAGS.budget,
            epsilon=FLAGS.epsilon,
            seed=FLAGS.seed,
            retries=FLAGS.retries,
            word=FLAGS.word,
            lhs=FLAGS.lhs,
            rhs=FLAGS.rhs,
            target=FLAGS.target,
            kind=None if FLAGS.kind is None else WordKind(FLAGS.kind),
            group=FLAGS.group,
            max_length=FLAGS.max_length,
            num_workers=FLAGS.num_workers,
            verbose_trace=FLAGS.verbose_trace,
            pretty=FLAGS.pretty or not FLAGS.json,
            output=FLAGS.output,
        )


@dataclass(frozen=True)
class CommandResult:
    """Outcome of `run`.

    Attributes:
        exit_code: Process exit status.
        payload: JSON-compatible result.
        text: Human readable rendering of the result.
        value: The computed gnk value, e.g. a certificate or a report.
    """

    exit_code: int
    payload: Dict[str, Any]
    text: str = ""
    value: Any = field(default=None, compare=False)


def _parse_word(request: CommandRequest, data: str) -> Word:
    return serialization.word_from_json(data, request.word_kind, request.n)


def _reduction_exit(certified: bool) -> int:
    return EXIT_OK if certified else EXIT_UNDECIDED


def _run_invariant(request: CommandRequest) -> CommandResult:
    b = parse_braid(request.braid, request.n)
    events, stability = stable_events(
        b, request.epsilon, request.seed, request.retries
    )
    f = Word(WordKind.TRIPLE, b.n, tuple(e.generator() for e in events))
    image = phi_word(f)
    certificate = reduce_to_minimal(
        image, request.mode, request.budget, request.verbose_trace
    )
    parity = parity_vector(image)
    action = g_of_word(f)
    payload = {
        "braid": serialization.to_json(b),
        "seed": request.seed,
        "epsilon": (
            config.default_epsilon
            if request.epsilon is None
            else request.epsilon
        ),
        "stability": serialization.to_json(stability),
        "f": serialization.to_json(f),
        "f_length": len(f),
        "phi_image": serialization.to_json(image),
        "Phi": serialization.to_json(certificate),
        "parity": serialization.to_json(parity),
        "parity_nonzero": not parity.is_zero(),
        "g_action": serialization.to_json(action),
        "nontrivial": bool(certificate.output),
    }
    text = "\n".join(
        [
            f"braid: {b}",
            f"f: {f}",
            f"phi(f): {image}",
            f"Phi: {certificate}",
            f"parity: {parity!r}",
            f"g: {action}",
            f"stability: {stability}",
        ]
    )
    return CommandResult(
        _reduction_exit(certificate.is_certified), payload, text, certificate
    )


def _run_events(request: CommandRequest) -> CommandResult:
    b = parse_braid(request.braid, request.n)
    events, stability = stable_events(
        b, request.epsilon, request.seed, request.retries
    )
    payload = {
        "braid": serialization.to_json(b),
        "seed": request.seed,
        "events": serialization.to_json(events),
        "stability": serialization.to_json(stability),
    }
    text = (
        f"{events_to_dataframe(events).to_string(index=False)}\n{stability}"
    )
    return CommandResult(EXIT_OK, payload, text, events)


def _run_reduce(request: CommandRequest) -> CommandResult:
    w = _parse_word(request, request.word)
    certificate = reduce_to_minimal(
        w, request.mode, request.budget, request.verbose_trace
    )
    return CommandResult(
        _reduction_exit(certificate.is_certified),
        serialization.to_json(certificate),
        str(certificate),
        certificate,
    )


_VERDICT_EXIT = {
    EqualityVerdict.EQUAL: EXIT_OK,
    EqualityVerdict.DISTINCT: EXIT_NEGATIVE,
    EqualityVerdict.UNKNOWN: EXIT_UNDECIDED,
}


def _run_equal(request: CommandRequest) -> CommandResult:
    u = _parse_word(request, request.lhs)
    v = _parse_word(request, request.rhs)
    result = words_equal(u, v, request.mode, request.budget)
    return CommandResult(
        _VERDICT_EXIT[result.verdict],
        serialization.to_json(result),
        f"{result.verdict} ({result.evidence})",
        result,
    )


_MINIMALITY_EXIT = {
    MinimalityStatus.MINIMAL: EXIT_OK,
    MinimalityStatus.NOT_MINIMAL: EXIT_NEGATIVE,
    MinimalityStatus.UNKNOWN: EXIT_UNDECIDED,
}


def _run_certify_minimal(request: CommandRequest) -> CommandResult:
    w = _parse_word(request, request.word)
    if w.kind == WordKind.PAIR_PAIR:
        certificate = is_minimal(w, request.mode, request.budget)
        exit_code = _MINIMALITY_EXIT[certificate.status]
    else:
        certificate = certify_minimal_via_phi(w, request.mode, request.budget)
        exit_code = (
            EXIT_OK
            if certificate.status == PhiMinimality.MINIMAL
            else EXIT_UNDECIDED
        )
    return CommandResult(
        exit_code,
        serialization.to_json(certificate),
        f"{w}: {certificate.status}",
        certificate,
    )


def _run_act(request: CommandRequest) -> CommandResult:
    w = _parse_word(request, request.word)
    automorphism = g_of_word(w)
    payload = {
        "word": serialization.to_json(w),
        "automorphism": serialization.to_json(automorphism),
    }
    text = f"g({w}): {automorphism}"
    if request.target is not None:
        target = Z2FreeWord.from_word(
            serialization.word_from_json(
                request.target, WordKind.ORDERED_PAIR, request.n
            )
        )
        image = apply(automorphism, target)
        payload["target"] = serialization.to_json(target)
        payload["image"] = serialization.to_json(image)
        text += f"\n{target} -> {image}"
    return CommandResult(EXIT_OK, payload, text, automorphism)


_STATUS_EXIT = {
    CheckStatus.PASS: EXIT_OK,
    CheckStatus.FAIL: EXIT_NEGATIVE,
    CheckStatus.UNKNOWN: EXIT_UNDECIDED,
}


def _run_verify_relations(request: CommandRequest) -> CommandResult:
    report: VerificationReport
    if request.group == "phi":
        report = verify_phi_well_defined(
            request.n, request.mode, request.budget, request.num_workers
        )
    elif request.group == "g":
        report = verify_g_well_defined(request.n, request.num_workers)
    else:
        report = verify_braid_relations(
            request.n,
            request.mode,
            request.budget,
            request.epsilon,
            request.seed,
            request.retries,
            request.num_workers,
        )
    text = (
        f"{report_to_dataframe(report).to_string(index=False)}\n"
        f"{report.summary()}"
    )
    return CommandResult(
        _STATUS_EXIT[report.status],
        serialization.to_json(report),
        text,
        report,
    )


def _run_probe_kernel(request: CommandRequest) -> CommandResult:
    report = probe_phi_kernel(
        request.n, request.max_length, request.mode, request.budget
    )
    lines = [
        f"{report.num_words} words, {len(report.candidates)} with trivial"
        f" phi-image, {len(report.witnesses)} kernel witnesses,"
        f" {report.num_unknown} undecided"
    ]
    lines.extend(f"witness: {c.word}" for c in report.witnesses)
    return CommandResult(
        EXIT_UNDECIDED if report.num_unknown else EXIT_OK,
        serialization.to_json(report),
        "\n".join(lines),
        report,
    )


_HANDLERS = {
    Subcommand.INVARIANT: _run_invariant,
    Subcommand.EVENTS: _run_events,
    Subcommand.REDUCE: _run_reduce,
    Subcommand.EQUAL: _run_equal,
    Subcommand.CERTIFY_MINIMAL: _run_certify_minimal,
    Subcommand.ACT: _run_act,
    Subcommand.VERIFY_RELATIONS: _run_verify_relations,
    Subcommand.PROBE_KERNEL: _run_probe_kernel,
}


def _error(exit_code: int, e: Exception) -> CommandResult:
    payload: Dict[str, Any] = {"error": str(e)}
    if isinstance(e, DegenerateTrajectoryError):
        payload["stability"] = serialization.to_json(e.report)
    elif getattr(e, "position", None) is not None:
        payload["position"] = e.position
    return CommandResult(exit_code, payload, f"Error: {e}")


def run(request: CommandRequest) -> CommandResult:
    """Executes a command.

    Errors are not raised but reported through the exit code and the
    payload.
    """
    try:
        result = _HANDLERS[request.subcommand](request)
    except DegenerateTrajectoryError as e:
        return _error(EXIT_UNDECIDED, e)
    except ValueError as e:
        return _error(EXIT_INPUT_ERROR, e)

    if request.output is not None:
        _save(request, result)
    return result


def _save(request: CommandRequest, result: CommandResult) -> None:
    if request.output.endswith(".csv"):
        if isinstance(result.value, VerificationReport):
            report_to_csv(result.value, request.output)
            return
        if request.subcommand == Subcommand.EVENTS:
            events_to_csv(result.value, request.output)
            return
        logging.warning(
            "No CSV rendering for %s. Saving JSON instead.", request.subcommand
        )
    serialization.save(result.payload, request.output)
    logging.info("Result saved to %s", request.output)


def main(argv: List[str]) -> int:
    try:
        request = CommandRequest.from_flags(argv)
    except ValueError as e:
        print(f"Error: {e}", file=sys.stderr)
        return EXIT_INPUT_ERROR

    result = run(request)
    if request.pretty:
        print(result.text)
    else:
        print(serialization.dumps(result.payload))
    return result.exit_code


def run_main():
    """Entry point of the `gnk` script."""
    app.run(main)


if __name__ == "__main__":
    run_main()
