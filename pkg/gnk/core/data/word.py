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

"""Words over involutive alphabets.

Every generator of the groups handled by gnk is an involution, so a word is
inverted by reversing it and simplified by deleting adjacent equal letters.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from enum import Enum
from typing import (
    Dict,
    FrozenSet,
    Iterable,
    Iterator,
    List,
    Sequence,
    Tuple,
    Union,
)

from gnk.core.data.generators import (
    Generator,
    OrderedPairLabel,
    PairPairGenerator,
    PlainTripleGenerator,
    TripleGenerator,
)
from gnk.utils import config
from gnk.utils.string import elide


class WordKind(Enum):
    """The group (and hence the alphabet) a word belongs to."""

    TRIPLE = "triple"
    """`G_n^3: letters are `TripleGenerator`."""

    PLAIN_TRIPLE = "plain_triple"
    """G_n^3: letters are `PlainTripleGenerator`."""

    PAIR_PAIR = "pair_pair"
    """G_{n(n-1)}^2: letters are `PairPairGenerator`."""

    ORDERED_PAIR = "ordered_pair"
    """Free product of n(n-1) copies of Z_2: letters are
    `OrderedPairLabel`."""

    def __str__(self) -> str:
        return self.value

    @property
    def letter_type(self) -> type:
        return _KIND_TO_TYPE[self]


_KIND_TO_TYPE = {
    WordKind.TRIPLE: TripleGenerator,
    WordKind.PLAIN_TRIPLE: PlainTripleGenerator,
    WordKind.PAIR_PAIR: PairPairGenerator,
    WordKind.ORDERED_PAIR: OrderedPairLabel,
}


@dataclass(frozen=True)
class Word:
    """A finite sequence of generators of one group.

    The empty word is the identity. A word knows its group context: the kind
    of its letters and the number of strands `n`.

    Attributes:
        kind: Kind of the letters.
        n: Number of strands of the group context.
        letters: The letters, all of type `kind.letter_type` and with indices
            in [1, n].
    """

    kind: WordKind
    n: int
    letters: Tuple[Generator, ...] = ()

    def __post_init__(self):
        if not isinstance(self.kind, WordKind):
            raise ValueError(
                f"Expecting a WordKind. Got {self.kind!r} of type"
                f" {type(self.kind)}."
            )
        if not isinstance(self.n, int) or self.n < 3:
            raise ValueError(
                f"The number of strands should be an integer >= 3. Got"
                f" {self.n!r}."
            )
        letters = tuple(self.letters)
        expected_type = self.kind.letter_type
        for letter in letters:
            if not isinstance(letter, expected_type):
                raise ValueError(
                    f"A {self.kind} word only accepts {expected_type.__name__}"
                    f" letters. Got {letter!r} of type {type(letter)}."
                )
            if letter.max_index() > self.n:
                raise ValueError(
                    f"Letter {letter} uses an index larger than n={self.n}."
                )
        object.__setattr__(self, "letters", letters)

    @classmethod
    def empty(cls, kind: WordKind, n: int) -> Word:
        return cls(kind=kind, n=n)

    @property
    def context(self) -> Tuple[WordKind, int]:
        return (self.kind, self.n)

    def with_letters(self, letters: Iterable[Generator]) -> Word:
        """New word with the same context and the given letters."""
        return Word(kind=self.kind, n=self.n, letters=tuple(letters))

    def check_same_context(self, other: Word) -> None:
        if not isinstance(other, Word):
            raise ValueError(
                f"Expecting a Word. Got {other!r} of type {type(other)}."
            )
        if self.context != other.context:
            raise ValueError(
                "Words belong to different groups:"
                f" ({self.kind}, n={self.n}) != ({other.kind}, n={other.n})."
            )

    def __add__(self, other: Word) -> Word:
        self.check_same_context(other)
        return self.with_letters(self.letters + other.letters)

    def __len__(self) -> int:
        return len(self.letters)

    def __iter__(self) -> Iterator[Generator]:
        return iter(self.letters)

    def __getitem__(self, item: Union[int, slice]):
        if isinstance(item, slice):
            return self.with_letters(self.letters[item])
        return self.letters[item]

    def __bool__(self) -> bool:
        return bool(self.letters)

    def __str__(self) -> str:
        if not self.letters:
            return "1"
        return elide([str(x) for x in self.letters], config.print_max_letters)

    def __repr__(self) -> str:
        return f"Word({self.kind}, n={self.n}, [{self}])"


def word(kind: WordKind, n: int, letters: Sequence[Generator]) -> Word:
    """Creates a word."""
    return Word(kind=kind, n=n, letters=tuple(letters))


def cancel_adjacent_pairs(letters: Sequence) -> List:
    """Deletes adjacent equal pairs until none remain.

    Deleting pairs in any order reaches the same result; a single left to
    right pass with a stack computes it.
    """

    stack = []
    for letter in letters:
        if stack and stack[-1] == letter:
            stack.pop()
        else:
            stack.append(letter)
    return stack


def free_reduce_involutive(w: Word) -> Word:
    """Free reduction in a group generated by involutions.

    Example:
        [x, y, y, x] -> []

    Returns:
        The word with adjacent equal letters repeatedly deleted. The length
        parity is preserved.
    """
    return w.with_letters(cancel_adjacent_pairs(w.letters))


def reverse_word(w: Word) -> Word:
    """Letters in reversed order: the inverse of `w`, since every letter is an
    involution."""
    return w.with_letters(reversed(w.letters))


def has_adjacent_equal(letters: Sequence) -> bool:
    return any(a == b for a, b in zip(letters, letters[1:]))


class ParityVector:
    """Count of each generator modulo 2.

    Generators with an even count are omitted, so the vector is represented
    by its support: the set of generators appearing an odd number of times.
    Every relator of the three presentations uses each generator an even
    number of times, so parity vectors are group invariants.
    """

    def __init__(self, support: Iterable[Generator] = ()):
        self._support: FrozenSet[Generator] = frozenset(support)

    @property
    def support(self) -> FrozenSet[Generator]:
        return self._support

    def is_zero(self) -> bool:
        return not self._support

    def bits(self) -> Dict[Generator, int]:
        """The non-zero entries, as a generator -> 1 mapping."""
        return {g: 1 for g in sorted(self._support)}

    def __xor__(self, other: ParityVector) -> ParityVector:
        return ParityVector(self._support ^ other._support)

    def __len__(self) -> int:
        return len(self._support)

    def __eq__(self, other) -> bool:
        if not isinstance(other, ParityVector):
            return False
        return self._support == other._support

    def __hash__(self) -> int:
        return hash(self._support)

    def __repr__(self) -> str:
        return "ParityVector({" + ", ".join(
            f"{g}: 1" for g in sorted(self._support)
        ) + "})"


def parity_vector(w: Word) -> ParityVector:
    """Per-generator letter count mod 2.

    parity_vector(u + v) == parity_vector(u) ^ parity_vector(v).
    """
    counts = Counter(w.letters)
    return ParityVector(g for g, c in counts.items() if c % 2 == 1)
