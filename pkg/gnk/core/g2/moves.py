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

"""Length-preserving relation moves of G_{n(n-1)}^2.

The group has generators a_{p,q} indexed by unordered pairs of distinct
labels, and relations:

- a_{p,q}^2 = 1,
- a_{p,q} a_{r,s} = a_{r,s} a_{p,q} if p, q, r, s are pairwise distinct,
- (a_{p,q} a_{p,r} a_{q,r})^2 = 1 if p, q, r are pairwise distinct.

"Distinct" has two readings, selected by `CommutationMode`.
"""

import functools
from enum import Enum
from typing import Iterable, List, Optional, Set

from gnk.core.data.generators import OrderedPairLabel, PairPairGenerator
from gnk.core.data.word import Word, WordKind


class CommutationMode(Enum):
    """Which notion of distinctness the relations of G^2 use."""

    ORDERED = "ordered"
    """Labels are distinct as ordered pairs: 13 != 31."""

    UNORDERED_SETS = "unordered-sets"
    """Labels are distinct as underlying 2-element sets: 13 ~ 31."""

    def __str__(self) -> str:
        return self.value

    @classmethod
    def from_string(cls, value: str) -> "CommutationMode":
        normalized = value.strip().lower().replace("_", "-")
        for mode in cls:
            if mode.value == normalized:
                return mode
        raise ValueError(
            f"Unknown commutation mode {value!r}. Expecting one of"
            f" {[m.value for m in cls]}."
        )


DEFAULT_MODE = CommutationMode.ORDERED


def labels_distinct(
    labels: Iterable[OrderedPairLabel], mode: CommutationMode
) -> bool:
    """Whether the labels are pairwise distinct under `mode`."""
    labels = list(labels)
    if mode == CommutationMode.ORDERED:
        keys = labels
    else:
        keys = [x.as_set() for x in labels]
    return len(set(keys)) == len(keys)


@functools.lru_cache(maxsize=None)
def commutes(
    x: PairPairGenerator, y: PairPairGenerator, mode: CommutationMode
) -> bool:
    """Whether the commutation relation lets `x` and `y` swap.

    ORDERED: the four labels of x and y are pairwise distinct ordered pairs.
    UNORDERED_SETS: their four underlying sets are pairwise distinct.
    """
    return labels_distinct((x.p, x.q, y.p, y.q), mode)


@functools.lru_cache(maxsize=None)
def is_exchange_triangle(
    x: PairPairGenerator,
    y: PairPairGenerator,
    z: PairPairGenerator,
    mode: CommutationMode,
) -> bool:
    """Whether x, y, z read as a_{p,q}, a_{p,r}, a_{q,r} for some p, q, r.

    This holds iff the three letters are the three distinct 2-subsets of a
    set of three labels, pairwise distinct under `mode`. Any order of the
    three letters matches: the relation holds for every assignment of p, q,
    r.
    """
    if x == y or y == z or x == z:
        return False
    labels = {x.p, x.q, y.p, y.q, z.p, z.q}
    if len(labels) != 3:
        return False
    return labels_distinct(labels, mode)


def third_of_triangle(
    x: PairPairGenerator, y: PairPairGenerator
) -> Optional[PairPairGenerator]:
    """The letter z completing x, y into a triangle, if x and y share exactly
    one label."""
    common = set(x.labels) & set(y.labels)
    if len(common) != 1 or x == y:
        return None
    others = (set(x.labels) | set(y.labels)) - common
    p, q = sorted(others)
    return PairPairGenerator(p, q)


def check_pair_pair_word(w: Word) -> None:
    if w.kind != WordKind.PAIR_PAIR:
        raise ValueError(
            f"Expecting a word of G_N^2 ({WordKind.PAIR_PAIR}). Got a"
            f" {w.kind} word."
        )


def exchange_applicable(
    w: Word, pos: int, mode: CommutationMode = DEFAULT_MODE
) -> Optional[Word]:
    """Applies the exchange move at position `pos`, if possible.

    The move rewrites a_{p,q} a_{p,r} a_{q,r} into a_{q,r} a_{p,r} a_{p,q}.

    Args:
        w: A word of G_N^2.
        pos: Position of the first of the three letters.
        mode: Distinctness notion for p, q, r.

    Returns:
        The rewritten word (same length and letter multiset), or None if the
        three letters do not match the pattern.

    Raises:
        ValueError: If `pos + 2` is not a valid position of `w`.
    """
    check_pair_pair_word(w)
    if pos < 0 or pos + 2 >= len(w):
        raise ValueError(
            f"Position {pos} does not start a factor of length 3 in a word of"
            f" length {len(w)}."
        )
    x, y, z = w.letters[pos : pos + 3]
    if not is_exchange_triangle(x, y, z, mode):
        return None
    letters = w.letters
    return w.with_letters(letters[:pos] + (z, y, x) + letters[pos + 3 :])


def neighbors(w: Word, mode: CommutationMode = DEFAULT_MODE) -> Set[Word]:
    """All words one commutation swap or one exchange move away from `w`.

    All neighbors have the length and the letter multiset of `w`.
    """
    check_pair_pair_word(w)
    letters = w.letters
    result: List[Word] = []
    for pos in range(len(letters) - 1):
        x, y = letters[pos], letters[pos + 1]
        if commutes(x, y, mode):
            result.append(
                w.with_letters(
                    letters[:pos] + (y, x) + letters[pos + 2 :]
                )
            )
    for pos in range(len(letters) - 2):
        exchanged = exchange_applicable(w, pos, mode)
        if exchanged is not None:
            result.append(exchanged)
    return set(result)
