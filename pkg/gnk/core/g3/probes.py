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

"""Experimental probe of the kernel of phi.

Whether phi is injective is open. The probe lists the short freely reduced
`G_n^3 words whose phi-image is the identity, together with their g action.
A listed word with a non-identity g action is a non-trivial element of the
kernel of phi, since g is well defined on `G_n^3.
"""

import logging
from dataclasses import dataclass
from typing import Iterator, List, Optional, Tuple

from gnk.core.data.generators import TripleGenerator
from gnk.core.data.word import Word, WordKind
from gnk.core.free_z2.automorphism import FreeAutomorphism, g_of_word
from gnk.core.g2.moves import DEFAULT_MODE, CommutationMode
from gnk.core.g2.reduction import EqualityVerdict, words_equal
from gnk.core.g3.phi import phi_word
from gnk.core.g3.relators import GroupContextG3
from gnk.utils import config


@dataclass(frozen=True)
class KernelCandidate:
    """A `G_n^3 word with a trivial phi-image."""

    word: Word
    g_action: FreeAutomorphism

    @property
    def is_witness(self) -> bool:
        """Whether the word is provably non-trivial in `G_n^3."""
        return not self.g_action.is_identity()


@dataclass(frozen=True)
class KernelProbeReport:
    """Result of `probe_phi_kernel`.

    Attributes:
        n: Number of strands.
        max_length: Longest enumerated word length.
        mode: Commutation mode of G^2.
        num_words: Number of enumerated words.
        candidates: Words with trivial phi-image.
        num_unknown: Words whose phi-image could not be decided within the
            budget.
    """

    n: int
    max_length: int
    mode: CommutationMode
    num_words: int
    candidates: Tuple[KernelCandidate, ...]
    num_unknown: int

    @property
    def witnesses(self) -> List[KernelCandidate]:
        return [c for c in self.candidates if c.is_witness]


def _freely_reduced_words(
    generators: List[TripleGenerator], max_length: int
) -> Iterator[Tuple[TripleGenerator, ...]]:
    """Non-empty words without adjacent equal letters, by increasing length
    then lexicographically."""
    layer: List[Tuple[TripleGenerator, ...]] = [(g,) for g in generators]
    length = 1
    while layer and length <= max_length:
        yield from layer
        layer = [
            w + (g,) for w in layer for g in generators if g != w[-1]
        ]
        length += 1


def probe_phi_kernel(
    n: int,
    max_length: int,
    mode: CommutationMode = DEFAULT_MODE,
    budget: Optional[int] = None,
) -> KernelProbeReport:
    """Searches the kernel of phi among short words.

    Args:
        n: Number of strands.
        max_length: Longest word length to enumerate.
        mode: Commutation mode of G^2.
        budget: State budget per phi-image. Defaults to
            `config.default_budget`.

    Returns:
        The report. The probe never asserts that phi is injective.
    """
    if max_length < 0:
        raise ValueError(
            f"max_length should be >= 0. Got {max_length!r} of type"
            f" {type(max_length)}."
        )
    if budget is None:
        budget = config.default_budget
    ctx = GroupContextG3(n)
    identity_image = Word.empty(WordKind.PAIR_PAIR, n)

    candidates = []
    num_words = 0
    num_unknown = 0
    for letters in _freely_reduced_words(ctx.generators(), max_length):
        num_words += 1
        w = ctx.word(letters)
        result = words_equal(phi_word(w), identity_image, mode, budget)
        if result.verdict == EqualityVerdict.UNKNOWN:
            num_unknown += 1
        elif result.verdict == EqualityVerdict.EQUAL:
            candidates.append(KernelCandidate(w, g_of_word(w)))

    report = KernelProbeReport(
        n=n,
        max_length=max_length,
        mode=mode,
        num_words=num_words,
        candidates=tuple(candidates),
        num_unknown=num_unknown,
    )
    logging.info(
        "phi kernel probe: %d words, %d with trivial image, %d witnesses,"
        " %d undecided",
        num_words,
        len(report.candidates),
        len(report.witnesses),
        num_unknown,
    )
    return report
