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

"""Shorthands and assertions shared by the tests."""

import sys

from absl import flags
from absl.testing import absltest

from gnk.core.data.generators import (
    OrderedPairLabel,
    PairPairGenerator,
    TripleGenerator,
)
from gnk.core.data.word import Word, WordKind

# Define flags used when calling unittest in tools/coverage.sh, else fails when
# parsing them
flags.DEFINE_string("pattern", None, "")
flags.DEFINE_bool("verbose", None, "")
flags.DEFINE_bool("buffer", None, "")
flags.DEFINE_bool("failfast", None, "")

flags.FLAGS(sys.argv, known_only=True)


def pp(p: str, q: str) -> PairPairGenerator:
    """a_{p,q} from compact labels, e.g. `pp("12", "13")`."""
    return PairPairGenerator(
        OrderedPairLabel(int(p[0]), int(p[1])),
        OrderedPairLabel(int(q[0]), int(q[1])),
    )


def g2(n: int, *letters: str) -> Word:
    """G^2 word from compact letters, e.g. `g2(3, "12,13", "32,31")`."""
    return Word(
        WordKind.PAIR_PAIR,
        n,
        tuple(pp(*letter.split(",")) for letter in letters),
    )


def t3(n: int, *triples: str) -> Word:
    """`G^3 word from compact triples, e.g. `t3(4, "123", "132")`."""
    return Word(
        WordKind.TRIPLE,
        n,
        tuple(TripleGenerator(*(int(c) for c in t)) for t in triples),
    )


def z2(n: int, *labels: str) -> Word:
    """Free product word from compact labels, e.g. `z2(3, "12", "13")`."""
    return Word(
        WordKind.ORDERED_PAIR,
        n,
        tuple(OrderedPairLabel(int(x[0]), int(x[1])) for x in labels),
    )


def assertEqualWord(test: absltest.TestCase, result: Word, expected: Word):
    test.assertEqual(
        result,
        expected,
        (
            "\n==========\nRESULT:\n==========\n"
            f"{result!r}"
            "\n==========\nEXPECTED:\n==========\n"
            f"{expected!r}"
        ),
    )
