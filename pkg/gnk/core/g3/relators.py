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

"""Presentations of `G_n^3 and G_n^3.

`G_n^3 has one generator a'_{ijk} per triple of distinct indices, up to
reversal (a'_{ijk} = a'_{kji}), and the relations:

(1) (a'_{ijk})^2 = 1,
(2) a'_{ijk} a'_{pqr} = a'_{pqr} a'_{ijk} if |{i,j,k} & {p,q,r}| < 2,
(3) (a'_{ijk} a'_{ijl} a'_{ikl} a'_{jkl})^2 = 1 for distinct i, j, k, l.

G_n^3 is the quotient identifying the generators with the same index set.
"""

import itertools
from dataclasses import dataclass
from enum import Enum
from typing import Hashable, List, Sequence, Set, Tuple, Union

from gnk.core.data.generators import (
    PlainTripleGenerator,
    TripleGenerator,
    check_num_strands,
)
from gnk.core.data.word import Word, WordKind


class G3Variant(Enum):
    BACKTICK = "backtick"
    """`G_n^3: generators are `TripleGenerator`."""

    PLAIN = "plain"
    """G_n^3: generators are unordered triples."""

    def __str__(self) -> str:
        return self.value


@dataclass(frozen=True)
class GroupContextG3:
    n: int
    variant: G3Variant = G3Variant.BACKTICK

    def __post_init__(self):
        check_num_strands(self.n)
        if not isinstance(self.variant, G3Variant):
            raise ValueError(
                f"Expecting a G3Variant. Got {self.variant!r} of type"
                f" {type(self.variant)}."
            )

    @property
    def word_kind(self) -> WordKind:
        if self.variant == G3Variant.BACKTICK:
            return WordKind.TRIPLE
        return WordKind.PLAIN_TRIPLE

    def generators(
        self,
    ) -> List[Union[TripleGenerator, PlainTripleGenerator]]:
        """All generators, in canonical order."""
        result = []
        for i, j, k in itertools.combinations(range(1, self.n + 1), 3):
            if self.variant == G3Variant.PLAIN:
                result.append(PlainTripleGenerator.of(i, j, k))
            else:
                # Middle index j, i and k respectively.
                result.extend(
                    [
                        TripleGenerator(i, j, k),
                        TripleGenerator(j, i, k),
                        TripleGenerator(i, k, j),
                    ]
                )
        return sorted(result)

    def word(self, letters: Sequence) -> Word:
        return Word(self.word_kind, self.n, tuple(letters))


class RelatorTag(Enum):
    R1_SQUARE = "r1_square"
    R2_COMMUTE = "r2_commute"
    R3_QUAD = "r3_quad"

    def __str__(self) -> str:
        return self.value


@dataclass(frozen=True)
class Relator:
    tag: RelatorTag
    word: Word


RelatorList = List[Relator]


def _generator(ctx: GroupContextG3, i: int, j: int, k: int):
    if ctx.variant == G3Variant.PLAIN:
        return PlainTripleGenerator.of(i, j, k)
    return TripleGenerator(i, j, k)


def _cyclic_key(letters: Tuple) -> Tuple[Hashable, ...]:
    """Key identifying a cyclic word up to rotation and reversal."""
    candidates = []
    for sequence in (letters, tuple(reversed(letters))):
        for shift in range(len(sequence)):
            candidates.append(sequence[shift:] + sequence[:shift])
    return min(candidates)


def enumerate_relators(ctx: GroupContextG3) -> RelatorList:
    """Relators of the presentation of `ctx`.

    R3 relators are built for every ordered quadruple of distinct indices, and
    deduplicated up to cyclic rotation and reversal. The first quadruple (in
    lexicographic order) of each class gives the listed word.

    Returns:
        R1 relators, then R2, then R3.
    """
    generators = ctx.generators()
    relators = [
        Relator(RelatorTag.R1_SQUARE, ctx.word([g, g])) for g in generators
    ]

    for a, b in itertools.combinations(generators, 2):
        if len(a.index_set() & b.index_set()) < 2:
            relators.append(
                Relator(RelatorTag.R2_COMMUTE, ctx.word([a, b, a, b]))
            )

    seen: Set[Tuple[Hashable, ...]] = set()
    for i, j, k, l in itertools.permutations(range(1, ctx.n + 1), 4):
        factor = (
            _generator(ctx, i, j, k),
            _generator(ctx, i, j, l),
            _generator(ctx, i, k, l),
            _generator(ctx, j, k, l),
        )
        letters = factor * 2
        key = _cyclic_key(letters)
        if key in seen:
            continue
        seen.add(key)
        relators.append(Relator(RelatorTag.R3_QUAD, ctx.word(letters)))
    return relators
