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

"""JSON serialization/unserialization of gnk values.

Encodings:

- OrderedPairLabel: [i, j].
- TripleGenerator: [i, j, k], with j the middle index.
- PlainTripleGenerator: [i, j, k], sorted.
- PairPairGenerator: [[i, j], [k, l]]. Canonical ordering is applied on
    read.
- Word: array of generators. The group context (kind, n) travels next to
    the word, e.g. in the enclosing certificate.
- FreeAutomorphism: {"i.j": [[k, l], ...], ...}, one entry per generator.
- CollinearityEvent: {"t": t, "triple": [i, j, k], "middle": j, ...}.
- Certificates: {"input", "output", "status", "mode", "states", ...}.
- Report checks: {"n", "mode", "relator_tag", "relator", "image",
    "verdict", "states", ...}.

Enums are encoded by value. Every encoded value has a `*_from_json`
inverse.
"""

import functools
import json
import math
from enum import Enum
from typing import Any, Dict, List, Optional, Type, TypeVar

from gnk.core.braids.braid_word import BraidWord, format_braid, parse_braid
from gnk.core.braids.events import (
    CollinearityEvent,
    Degeneracy,
    StabilityReport,
)
from gnk.core.data.generators import (
    Generator,
    OrderedPairLabel,
    PairPairGenerator,
    PlainTripleGenerator,
    TripleGenerator,
    all_labels,
)
from gnk.core.data.word import ParityVector, Word, WordKind
from gnk.core.free_z2.automorphism import FreeAutomorphism, Z2FreeWord
from gnk.core.g2.moves import CommutationMode
from gnk.core.g2.reduction import (
    EqualityResult,
    EqualityVerdict,
    Evidence,
    MinimalityCertificate,
    MinimalityStatus,
    Move,
    MoveKind,
    ReductionCertificate,
    ReductionStatus,
)
from gnk.core.g3.phi import PhiMinimality, PhiMinimalityCertificate
from gnk.core.g3.probes import KernelCandidate, KernelProbeReport
from gnk.core.reports import CheckStatus, RelatorCheck, VerificationReport

JSON = Any
EnumT = TypeVar("EnumT", bound=Enum)


def dumps(value: Any, pretty: bool = False) -> str:
    """Serializes a value to a deterministic JSON string."""
    return json.dumps(
        to_json(value), sort_keys=True, indent=2 if pretty else None
    )


def save(value: Any, path: str) -> None:
    """Saves a value to a JSON file."""
    with open(path, "w", encoding="utf-8") as f:
        f.write(dumps(value, pretty=True))
        f.write("\n")


@functools.singledispatch
def to_json(value: Any) -> JSON:
    """Converts a gnk value to plain JSON structures."""
    if value is None or isinstance(value, (bool, int, str)):
        return value
    if isinstance(value, float):
        # JSON has no infinity.
        return value if math.isfinite(value) else None
    if isinstance(value, Enum):
        return value.value
    if isinstance(value, (list, tuple)):
        return [to_json(x) for x in value]
    if isinstance(value, dict):
        return {str(k): to_json(v) for k, v in value.items()}
    raise ValueError(
        f"Cannot serialize {value!r} of type {type(value)} to JSON."
    )


@to_json.register
def _serialize_label(src: OrderedPairLabel) -> JSON:
    return [src.first, src.second]


@to_json.register
def _serialize_triple(src: TripleGenerator) -> JSON:
    return list(src.indices())


@to_json.register
def _serialize_plain_triple(src: PlainTripleGenerator) -> JSON:
    return list(src.indices)


@to_json.register
def _serialize_pair_pair(src: PairPairGenerator) -> JSON:
    return [to_json(src.p), to_json(src.q)]


@to_json.register
def _serialize_word(src: Word) -> JSON:
    return [to_json(x) for x in src.letters]


@to_json.register
def _serialize_parity(src: ParityVector) -> JSON:
    return [to_json(x) for x in sorted(src.support)]


@to_json.register
def _serialize_z2_word(src: Z2FreeWord) -> JSON:
    return [to_json(x) for x in src.letters]


@to_json.register
def _serialize_automorphism(src: FreeAutomorphism) -> JSON:
    return {
        label.to_string(): to_json(src.image(label))
        for label in all_labels(src.n)
    }


@to_json.register
def _serialize_move(src: Move) -> JSON:
    return {"kind": src.kind.value, "letters": to_json(src.letters)}


@to_json.register
def _serialize_reduction(src: ReductionCertificate) -> JSON:
    result = {
        "kind": src.input.kind.value,
        "n": src.input.n,
        "input": to_json(src.input),
        "output": to_json(src.output),
        "input_length": len(src.input),
        "output_length": len(src.output),
        "status": src.status.value,
        "mode": src.mode.value,
        "states": src.states_explored,
    }
    if src.move_trace is not None:
        result["move_trace"] = to_json(src.move_trace)
    return result


@to_json.register
def _serialize_minimality(src: MinimalityCertificate) -> JSON:
    return {
        "kind": src.word.kind.value,
        "n": src.word.n,
        "word": to_json(src.word),
        "status": src.status.value,
        "mode": src.mode.value,
        "states": src.states_explored,
        "witness": to_json(src.witness),
    }


@to_json.register
def _serialize_equality(src: EqualityResult) -> JSON:
    return {
        "kind": src.lhs.kind.value,
        "n": src.lhs.n,
        "lhs": to_json(src.lhs),
        "rhs": to_json(src.rhs),
        "verdict": src.verdict.value,
        "evidence": src.evidence.value,
        "mode": src.mode.value,
        "certificate": to_json(src.certificate),
    }


@to_json.register
def _serialize_phi_minimality(src: PhiMinimalityCertificate) -> JSON:
    return {
        "n": src.word.n,
        "word": to_json(src.word),
        "image": to_json(src.image),
        "status": src.status.value,
        "image_minimality": to_json(src.image_minimality),
    }


@to_json.register
def _serialize_braid(src: BraidWord) -> JSON:
    return {"n": src.n, "braid": format_braid(src)}


@to_json.register
def _serialize_event(src: CollinearityEvent) -> JSON:
    return {
        "t": src.t,
        "triple": list(src.triple),
        "middle": src.middle,
        "orientation_flip": src.orientation_flip,
        "slope": src.slope,
    }


@to_json.register
def _serialize_stability(src: StabilityReport) -> JSON:
    return {
        "passed": src.passed,
        "num_events": src.num_events,
        "min_time_gap": to_json(src.min_time_gap),
        "min_abs_slope": to_json(src.min_abs_slope),
        "degeneracies": [d.value for d in src.degeneracies],
        "retries": src.retries,
        "seed": src.seed,
    }


@to_json.register
def _serialize_check(src: RelatorCheck) -> JSON:
    return {
        "relator_tag": src.tag,
        "relator": to_json(src.relator),
        "image": to_json(src.image),
        "status": src.status.value,
        "verdict": src.verdict,
        "states": src.states,
        "detail": src.detail,
    }


@to_json.register
def _serialize_report(src: VerificationReport) -> JSON:
    summary = src.summary()
    return {
        "suite": src.suite,
        "n": src.n,
        "mode": to_json(src.mode),
        "status": summary.status.value,
        "num_checks": summary.num_checks,
        "num_pass": summary.num_pass,
        "num_fail": summary.num_fail,
        "num_unknown": summary.num_unknown,
        "checks": [
            {"n": src.n, "mode": to_json(src.mode), **to_json(c)}
            for c in src.checks
        ],
    }


@to_json.register
def _serialize_kernel_candidate(src: KernelCandidate) -> JSON:
    return {
        "word": to_json(src.word),
        "g_action": to_json(src.g_action),
        "is_witness": src.is_witness,
    }


@to_json.register
def _serialize_kernel_report(src: KernelProbeReport) -> JSON:
    return {
        "n": src.n,
        "max_length": src.max_length,
        "mode": src.mode.value,
        "num_words": src.num_words,
        "num_unknown": src.num_unknown,
        "candidates": to_json(src.candidates),
    }


def _check_int_list(data: JSON, length: int, what: str) -> List[int]:
    if (
        not isinstance(data, list)
        or len(data) != length
        or not all(isinstance(x, int) and not isinstance(x, bool) for x in data)
    ):
        raise ValueError(
            f"A {what} should be encoded as a list of {length} integers. Got"
            f" {data!r} of type {type(data)}."
        )
    return data


def label_from_json(data: JSON) -> OrderedPairLabel:
    return OrderedPairLabel(*_check_int_list(data, 2, "label"))


def generator_from_json(data: JSON, kind: WordKind) -> Generator:
    """Unserializes one letter of a word of the given kind."""
    if kind == WordKind.TRIPLE:
        return TripleGenerator(*_check_int_list(data, 3, "triple"))
    if kind == WordKind.PLAIN_TRIPLE:
        return PlainTripleGenerator(tuple(_check_int_list(data, 3, "triple")))
    if kind == WordKind.PAIR_PAIR:
        if (
            not isinstance(data, list)
            or len(data) != 2
            or not all(isinstance(x, list) and len(x) == 2 for x in data)
        ):
            raise ValueError(
                "A G^2 generator should be encoded as [[i, j], [k, l]]. Got"
                f" {data!r} of type {type(data)}."
            )
        return PairPairGenerator(
            label_from_json(data[0]), label_from_json(data[1])
        )
    if kind == WordKind.ORDERED_PAIR:
        return label_from_json(data)
    raise ValueError(f"Unknown word kind {kind!r}.")


def word_from_json(data: JSON, kind: WordKind, n: int) -> Word:
    """Unserializes a word, given as an array of generators."""
    if isinstance(data, str):
        try:
            data = json.loads(data)
        except json.JSONDecodeError as e:
            raise ValueError(f"Cannot parse word {data!r}: {e}") from e
    if not isinstance(data, list):
        raise ValueError(
            f"A word should be encoded as an array of generators. Got {data!r}"
            f" of type {type(data)}."
        )
    return Word(kind, n, tuple(generator_from_json(x, kind) for x in data))


def _parse_label_key(key: Any) -> OrderedPairLabel:
    parts = key.split(".") if isinstance(key, str) else []
    if len(parts) != 2 or not all(p.isdigit() for p in parts):
        raise ValueError(
            f'Expecting an "i.j" label key. Got {key!r} of type {type(key)}.'
        )
    return OrderedPairLabel(int(parts[0]), int(parts[1]))


def automorphism_from_json(
    data: JSON, n: Optional[int] = None
) -> FreeAutomorphism:
    """Unserializes an automorphism.

    Args:
        data: Mapping from "i.j" keys to images. Missing generators are
            mapped to themselves.
        n: Number of strands. Defaults to the largest index of the keys,
            which is exact for the output of `to_json`.
    """
    if not isinstance(data, dict) or not data:
        raise ValueError(
            'An automorphism should be encoded as a non-empty {"i.j": [...]}'
            f" mapping. Got {data!r} of type {type(data)}."
        )
    images: Dict[OrderedPairLabel, Z2FreeWord] = {}
    for key, image in data.items():
        if not isinstance(image, list):
            raise ValueError(
                f"The image of {key!r} should be an array of labels. Got"
                f" {image!r} of type {type(image)}."
            )
        images[_parse_label_key(key)] = Z2FreeWord(
            tuple(label_from_json(x) for x in image)
        )
    if n is None:
        n = max(max(x.first, x.second) for x in images)
    return FreeAutomorphism(n, images)


def braid_from_json(data: JSON) -> BraidWord:
    return parse_braid(data["braid"], data["n"])


def event_from_json(data: JSON) -> CollinearityEvent:
    triple = tuple(_check_int_list(data["triple"], 3, "triple"))
    if data.get("middle", triple[1]) != triple[1]:
        raise ValueError(
            f"Inconsistent middle strand {data['middle']!r} for triple"
            f" {triple}."
        )
    return CollinearityEvent(
        t=float(data["t"]),
        triple=triple,
        orientation_flip=int(data.get("orientation_flip", 1)),
        slope=float(data.get("slope", 0.0)),
    )


def stability_from_json(data: JSON) -> StabilityReport:
    def number(x: Optional[float]) -> float:
        return math.inf if x is None else float(x)

    return StabilityReport(
        num_events=data["num_events"],
        min_time_gap=number(data["min_time_gap"]),
        min_abs_slope=number(data["min_abs_slope"]),
        degeneracies=tuple(Degeneracy(x) for x in data["degeneracies"]),
        retries=data["retries"],
        seed=data["seed"],
    )


def _fields(data: JSON, what: str, *keys: str) -> List[JSON]:
    if not isinstance(data, dict):
        raise ValueError(
            f"A {what} should be encoded as an object. Got {data!r} of type"
            f" {type(data)}."
        )
    missing = [key for key in keys if key not in data]
    if missing:
        raise ValueError(f"Missing {what} fields {missing}. Got {data!r}.")
    return [data[key] for key in keys]


def _enum(cls: Type[EnumT], value: JSON) -> EnumT:
    try:
        return cls(value)
    except ValueError as e:
        raise ValueError(
            f"Unknown {cls.__name__} {value!r}. Expecting one of"
            f" {[x.value for x in cls]}."
        ) from e


def move_from_json(data: JSON) -> Move:
    kind, letters = _fields(data, "move", "kind", "letters")
    return Move(
        _enum(MoveKind, kind),
        tuple(generator_from_json(x, WordKind.PAIR_PAIR) for x in letters),
    )


def reduction_from_json(data: JSON) -> ReductionCertificate:
    """Unserializes a `ReductionCertificate`."""
    kind, n, source, target, status, mode, states = _fields(
        data,
        "reduction certificate",
        "kind",
        "n",
        "input",
        "output",
        "status",
        "mode",
        "states",
    )
    kind = _enum(WordKind, kind)
    move_trace = None
    if data.get("move_trace") is not None:
        move_trace = tuple(move_from_json(x) for x in data["move_trace"])
    return ReductionCertificate(
        input=word_from_json(source, kind, n),
        output=word_from_json(target, kind, n),
        status=_enum(ReductionStatus, status),
        mode=_enum(CommutationMode, mode),
        states_explored=states,
        move_trace=move_trace,
    )


def minimality_from_json(data: JSON) -> MinimalityCertificate:
    """Unserializes a `MinimalityCertificate`."""
    kind, n, w, status, mode, states = _fields(
        data,
        "minimality certificate",
        "kind",
        "n",
        "word",
        "status",
        "mode",
        "states",
    )
    kind = _enum(WordKind, kind)
    witness = data.get("witness")
    return MinimalityCertificate(
        word=word_from_json(w, kind, n),
        status=_enum(MinimalityStatus, status),
        mode=_enum(CommutationMode, mode),
        states_explored=states,
        witness=None if witness is None else word_from_json(witness, kind, n),
    )


def equality_from_json(data: JSON) -> EqualityResult:
    """Unserializes an `EqualityResult`."""
    kind, n, lhs, rhs, verdict, evidence, mode = _fields(
        data,
        "equality result",
        "kind",
        "n",
        "lhs",
        "rhs",
        "verdict",
        "evidence",
        "mode",
    )
    kind = _enum(WordKind, kind)
    certificate = data.get("certificate")
    return EqualityResult(
        lhs=word_from_json(lhs, kind, n),
        rhs=word_from_json(rhs, kind, n),
        verdict=_enum(EqualityVerdict, verdict),
        evidence=_enum(Evidence, evidence),
        mode=_enum(CommutationMode, mode),
        certificate=(
            None if certificate is None else reduction_from_json(certificate)
        ),
    )


def phi_minimality_from_json(data: JSON) -> PhiMinimalityCertificate:
    """Unserializes a `PhiMinimalityCertificate`."""
    n, w, image, status, image_minimality = _fields(
        data,
        "phi minimality certificate",
        "n",
        "word",
        "image",
        "status",
        "image_minimality",
    )
    return PhiMinimalityCertificate(
        word=word_from_json(w, WordKind.TRIPLE, n),
        image=word_from_json(image, WordKind.PAIR_PAIR, n),
        status=_enum(PhiMinimality, status),
        image_minimality=minimality_from_json(image_minimality),
    )


def check_from_json(data: JSON, suite: str) -> RelatorCheck:
    """Unserializes one check of a report of the given suite.

    Relators of the "braid" suite are pairs of braids. Relators of the other
    suites are `G_n^3 words.
    """
    n, tag, relator, image, status, verdict = _fields(
        data,
        "report check",
        "n",
        "relator_tag",
        "relator",
        "image",
        "status",
        "verdict",
    )
    if suite == "braid":
        relator = tuple(braid_from_json(x) for x in relator)
    else:
        relator = word_from_json(relator, WordKind.TRIPLE, n)
    return RelatorCheck(
        tag=tag,
        relator=relator,
        image=(
            None
            if image is None
            else word_from_json(image, WordKind.PAIR_PAIR, n)
        ),
        status=_enum(CheckStatus, status),
        verdict=verdict,
        states=data.get("states", 0),
        detail=data.get("detail", ""),
    )


def report_from_json(data: JSON) -> VerificationReport:
    """Unserializes a `VerificationReport`."""
    suite, n, mode, checks = _fields(
        data, "report", "suite", "n", "mode", "checks"
    )
    return VerificationReport(
        suite=suite,
        n=n,
        mode=None if mode is None else _enum(CommutationMode, mode),
        checks=tuple(check_from_json(x, suite) for x in checks),
    )
