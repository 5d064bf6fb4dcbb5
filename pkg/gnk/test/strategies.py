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

"""Hypothesis strategies generating gnk values."""

from hypothesis import strategies as st

from gnk.core.braids.braid_word import BraidLetter, BraidWord, inverse, square
from gnk.core.data.generators import all_labels
from gnk.core.data.word import Word, WordKind
from gnk.core.g2.moves import CommutationMode
from gnk.core.g2.relators import (
    all_pair_pair_generators,
    enumerate_g2_relators,
)
from gnk.core.g3.relators import GroupContextG3


@st.composite
def triple_words(draw, n: int = 4, max_size: int = 6) -> Word:
    """Words of `G_n^3."""
    ctx = GroupContextG3(n)
    letters = draw(
        st.lists(st.sampled_from(ctx.generators()), max_size=max_size)
    )
    return ctx.word(letters)


@st.composite
def g2_words(draw, n: int = 3, max_size: int = 6) -> Word:
    """Words of G_{n(n-1)}^2."""
    letters = draw(
        st.lists(
            st.sampled_from(all_pair_pair_generators(n)), max_size=max_size
        )
    )
    return Word(WordKind.PAIR_PAIR, n, tuple(letters))


@st.composite
def z2_words(draw, n: int = 4, max_size: int = 8) -> Word:
    """Words of the free product of the n(n-1) Z_2's."""
    letters = draw(st.lists(st.sampled_from(all_labels(n)), max_size=max_size))
    return Word(WordKind.ORDERED_PAIR, n, tuple(letters))


@st.composite
def pure_braids(draw, n: int = 3, max_blocks: int = 2) -> BraidWord:
    """Products of squared generators, possibly conjugated by a generator."""
    result = BraidWord(n)
    indices = st.integers(1, n - 1)
    signs = st.sampled_from([1, -1])
    for _ in range(draw(st.integers(0, max_blocks))):
        block = square(draw(indices), n, draw(signs))
        if draw(st.booleans()):
            letter = BraidLetter(draw(indices), draw(signs))
            conjugator = BraidWord(n, (letter,))
            block = conjugator + block + inverse(conjugator)
        result = result + block
    return result


@st.composite
def relator_insertions(
    draw, w: Word, mode: CommutationMode, max_insertions: int = 1
) -> Word:
    """Words equal to the G^2 word `w`: relators inserted at random
    positions."""
    relators = enumerate_g2_relators(w.n, mode)
    letters = w.letters
    for _ in range(draw(st.integers(1, max_insertions))):
        relator = draw(st.sampled_from(relators)).word.letters
        shift = draw(st.integers(0, len(relator) - 1))
        position = draw(st.integers(0, len(letters)))
        letters = (
            letters[:position]
            + relator[shift:]
            + relator[:shift]
            + letters[position:]
        )
    return w.with_letters(letters)
