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

"""Braid words in the Artin generators.

The letter σ_s^{±1} acts on position slots: it exchanges the points sitting
in slots s and s + 1. Strands are named after the slot they start in.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterator, List, Optional, Tuple

import numpy as np

from gnk.core.data.generators import check_num_strands

_TOKEN = re.compile(r"s(\d+)(\^-1)?")


class BraidSyntaxError(ValueError):
    """A braid string does not follow the `s<k>` / `s<k>^-1` grammar.

    Attributes:
        position: Character offset of the offending token.
    """

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.position = position


@dataclass(frozen=True, order=True)
class BraidLetter:
    """The Artin generator σ_index^sign."""

    index: int
    sign: int = 1

    def __post_init__(self):
        if not isinstance(self.index, int) or self.index < 1:
            raise ValueError(
                "A braid letter index should be a strictly positive integer."
                f" Got {self.index!r} of type {type(self.index)}."
            )
        if self.sign not in (1, -1):
            raise ValueError(
                f"A braid letter sign should be +1 or -1. Got {self.sign!r}."
            )

    def inverse(self) -> BraidLetter:
        return BraidLetter(self.index, -self.sign)

    def __str__(self) -> str:
        if self.sign == 1:
            return f"s{self.index}"
        return f"s{self.index}^-1"


@dataclass(frozen=True)
class BraidWord:
    """A word in the Artin generators of the braid group on n strands.

    Attributes:
        n: Number of strands.
        letters: The letters, with indices in [1, n - 1].
    """

    n: int
    letters: Tuple[BraidLetter, ...] = ()

    def __post_init__(self):
        check_num_strands(self.n)
        letters = tuple(self.letters)
        for letter in letters:
            if not isinstance(letter, BraidLetter):
                raise ValueError(
                    f"Expecting a BraidLetter. Got {letter!r} of type"
                    f" {type(letter)}."
                )
            if letter.index > self.n - 1:
                raise ValueError(
                    f"The braid letter {letter} needs index <= {self.n - 1}"
                    f" for n={self.n}."
                )
        object.__setattr__(self, "letters", letters)

    @classmethod
    def of(cls, n: int, *letters: Tuple[int, int]) -> BraidWord:
        """Creates a braid from (index, sign) pairs."""
        return cls(n, tuple(BraidLetter(i, s) for i, s in letters))

    def __add__(self, other: BraidWord) -> BraidWord:
        if not isinstance(other, BraidWord) or other.n != self.n:
            raise ValueError(
                "Cannot concatenate braids on different numbers of strands."
                f" Got {self!r} and {other!r}."
            )
        return BraidWord(self.n, self.letters + other.letters)

    def __len__(self) -> int:
        return len(self.letters)

    def __iter__(self) -> Iterator[BraidLetter]:
        return iter(self.letters)

    def __str__(self) -> str:
        return format_braid(self)

    def __repr__(self) -> str:
        return f"BraidWord(n={self.n}, {format_braid(self)!r})"


def parse_braid(text: str, n: int) -> BraidWord:
    """Parses a whitespace separated list of `s<k>` and `s<k>^-1` tokens.

    Usage example:

        ```python
        >>> gnk.parse_braid("s2 s1^-1", 3).letters
        (BraidLetter(index=2, sign=1), BraidLetter(index=1, sign=-1))

        ```

    Raises:
        BraidSyntaxError: If a token does not follow the grammar.
        ValueError: If an index is not in [1, n - 1].
    """
    if not isinstance(text, str):
        raise ValueError(
            f"Expecting a string. Got {text!r} of type {type(text)}."
        )
    check_num_strands(n)
    letters = []
    for token in re.finditer(r"\S+", text):
        match = _TOKEN.fullmatch(token.group())
        if match is None:
            raise BraidSyntaxError(
                f"Cannot parse braid token {token.group()!r}", token.start()
            )
        index = int(match.group(1))
        if not 1 <= index <= n - 1:
            raise ValueError(
                f"Braid index should be in [1, {n - 1}] for n={n}. Got"
                f" {index} at position {token.start()}."
            )
        letters.append(BraidLetter(index, -1 if match.group(2) else 1))
    return BraidWord(n, tuple(letters))


def format_braid(b: BraidWord) -> str:
    """Inverse of `parse_braid`. The empty braid formats as ""."""
    return " ".join(str(x) for x in b.letters)


def inverse(b: BraidWord) -> BraidWord:
    """Reversed letters with flipped signs."""
    return BraidWord(b.n, tuple(x.inverse() for x in reversed(b.letters)))


def slot_sequence(b: BraidWord) -> List[Tuple[int, ...]]:
    """Strand in each slot, before the first letter and after each letter.

    `slot_sequence(b)[m][s - 1]` is the strand sitting in slot s after m
    letters.
    """
    current = list(range(1, b.n + 1))
    result = [tuple(current)]
    for letter in b.letters:
        s = letter.index - 1
        current[s], current[s + 1] = current[s + 1], current[s]
        result.append(tuple(current))
    return result


def permutation(b: BraidWord) -> Tuple[int, ...]:
    """Strand in each slot at the end of the braid.

    `permutation(b)[s - 1]` is the strand ending in slot s.
    """
    return slot_sequence(b)[-1]


def is_pure(b: BraidWord) -> bool:
    return permutation(b) == tuple(range(1, b.n + 1))


def check_pure(b: BraidWord) -> None:
    if not isinstance(b, BraidWord):
        raise ValueError(
            f"Expecting a BraidWord. Got {b!r} of type {type(b)}."
        )
    if not is_pure(b):
        raise ValueError(
            f"Expecting a pure braid. Got {format_braid(b)!r} with"
            f" permutation {permutation(b)}."
        )


def square(index: int, n: int, sign: int = 1) -> BraidWord:
    """σ_index^{2 sign}."""
    letter = BraidLetter(index, sign)
    return BraidWord(n, (letter, letter))


def random_pure_braid(
    n: int,
    max_length: int,
    rng: Optional[np.random.Generator] = None,
) -> BraidWord:
    """Random pure braid of length at most `max_length`.

    The braid is a product of blocks σ_s^{±2} and σ_t^e σ_s^{±2} σ_t^{-e}.

    Args:
        n: Number of strands.
        max_length: Maximum number of letters, >= 0.
        rng: Random generator. Defaults to `np.random.default_rng()`.
    """
    check_num_strands(n)
    if not isinstance(max_length, int) or max_length < 0:
        raise ValueError(
            f"max_length should be an integer >= 0. Got {max_length!r} of"
            f" type {type(max_length)}."
        )
    if rng is None:
        rng = np.random.default_rng()

    def pick() -> BraidLetter:
        return BraidLetter(
            int(rng.integers(1, n)), int(rng.choice([-1, 1]))
        )

    letters: List[BraidLetter] = []
    target = int(rng.integers(0, max_length + 1))
    while target - len(letters) >= 2:
        center = pick()
        if target - len(letters) >= 4 and rng.random() < 0.5:
            conjugate = pick()
            letters.extend([conjugate, center, center, conjugate.inverse()])
        else:
            letters.extend([center, center])
    return BraidWord(n, tuple(letters))

