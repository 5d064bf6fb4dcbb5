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

"""Alphabet and relators of G_{n(n-1)}^2."""

import itertools
from dataclasses import dataclass
from enum import Enum
from typing import List

from gnk.core.data.generators import PairPairGenerator, all_labels
from gnk.core.data.word import Word, WordKind
from gnk.core.g2.moves import (
    DEFAULT_MODE,
    CommutationMode,
    commutes,
    labels_distinct,
)


class G2RelatorTag(Enum):
    SQUARE = "square"
    COMMUTE = "commute"
    EXCHANGE = "exchange"

    def __str__(self) -> str:
        return self.value


@dataclass(frozen=True)
class G2Relator:
    tag: G2RelatorTag
    word: Word


def all_pair_pair_generators(n: int) -> List[PairPairGenerator]:
    """Generators a_{p,q} of G_{n(n-1)}^2, in canonical order."""
    labels = sorted(all_labels(n))
    return [
        PairPairGenerator(p, q) for p, q in itertools.combinations(labels, 2)
    ]


def enumerate_g2_relators(
    n: int, mode: CommutationMode = DEFAULT_MODE
) -> List[G2Relator]:
    """Relators of G_{n(n-1)}^2 under `mode`.

    - SQUARE: x x for every generator.
    - COMMUTE: x y x y for every commuting pair x < y.
    - EXCHANGE: (a_{p,q} a_{p,r} a_{q,r})^2 for every set {p, q, r} of labels
        pairwise distinct under `mode`, with p < q < r.
    """
    generators = all_pair_pair_generators(n)

    def _word(letters) -> Word:
        return Word(WordKind.PAIR_PAIR, n, tuple(letters))

    relators = [
        G2Relator(G2RelatorTag.SQUARE, _word([x, x])) for x in generators
    ]
    for x, y in itertools.combinations(generators, 2):
        if commutes(x, y, mode):
            relators.append(
                G2Relator(G2RelatorTag.COMMUTE, _word([x, y, x, y]))
            )
    for p, q, r in itertools.combinations(sorted(all_labels(n)), 3):
        if not labels_distinct((p, q, r), mode):
            continue
        factor = [
            PairPairGenerator(p, q),
            PairPairGenerator(p, r),
            PairPairGenerator(q, r),
        ]
        relators.append(G2Relator(G2RelatorTag.EXCHANGE, _word(factor * 2)))
    return relators
