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

"""Commutation classes of words, used as states of the G^2 class search.

Two words related by commutation swaps only are the same state. A state is
encoded by the lexicographically least word of its commutation class (its
lexicographic normal form), with letters renamed to small integers in
canonical letter order.

Terminology: two letters are "dependent" if they are equal or do not commute.
The relative order of dependent letters is the same in every word of a
commutation class.
"""

import heapq
from typing import Dict, Iterable, Iterator, List, Optional, Sequence, Tuple

from gnk.core.data.generators import PairPairGenerator
from gnk.core.g2.moves import (
    CommutationMode,
    commutes,
    is_exchange_triangle,
    third_of_triangle,
)

# A word with letters encoded as integers.
Encoded = Tuple[int, ...]


class TraceAlphabet:
    """The letters in play during a search, with their dependency table.

    Moves permute letters and cancellations delete them, so the alphabet of a
    search is fixed by its input word.

    Attributes:
        letters: The distinct letters, in canonical order. Letter `i` is
            encoded as the integer `i`.
        dependent: `dependent[a][b]` is True iff letters a and b are equal or
            do not commute.
        third: Maps an ordered pair of encoded letters (a, b) to the encoded
            letter completing them into an exchange triangle, when that letter
            is in the alphabet.
    """

    def __init__(
        self, letters: Iterable[PairPairGenerator], mode: CommutationMode
    ):
        self.mode = mode
        self.letters: List[PairPairGenerator] = sorted(set(letters))
        self.index: Dict[PairPairGenerator, int] = {
            g: i for i, g in enumerate(self.letters)
        }
        size = len(self.letters)
        self.dependent: List[List[bool]] = [
            [
                a == b or not commutes(self.letters[a], self.letters[b], mode)
                for b in range(size)
            ]
            for a in range(size)
        ]
        self.third: Dict[Tuple[int, int], int] = {}
        for a, x in enumerate(self.letters):
            for b, y in enumerate(self.letters):
                z = third_of_triangle(x, y)
                if z is None or z not in self.index:
                    continue
                if is_exchange_triangle(x, y, z, mode):
                    self.third[(a, b)] = self.index[z]

    def encode(self, letters: Sequence[PairPairGenerator]) -> Encoded:
        return tuple(self.index[g] for g in letters)

    def decode(self, encoded: Sequence[int]) -> Tuple[PairPairGenerator, ...]:
        return tuple(self.letters[i] for i in encoded)


def lex_normal_form(seq: Encoded, dependent: List[List[bool]]) -> Encoded:
    """Lexicographically least word of the commutation class of `seq`.

    Repeatedly emits the smallest letter that no remaining earlier letter
    depends on.
    """
    size = len(seq)
    successors: List[List[int]] = [[] for _ in range(size)]
    in_degree = [0] * size
    for p in range(size):
        row = dependent[seq[p]]
        for q in range(p):
            if row[seq[q]]:
                successors[q].append(p)
                in_degree[p] += 1

    heap = [(seq[p], p) for p in range(size) if in_degree[p] == 0]
    heapq.heapify(heap)
    result = []
    while heap:
        letter, p = heapq.heappop(heap)
        result.append(letter)
        for r in successors[p]:
            in_degree[r] -= 1
            if in_degree[r] == 0:
                heapq.heappush(heap, (seq[r], r))
    assert len(result) == size
    return tuple(result)


def find_cancellation(
    seq: Encoded, dependent: List[List[bool]]
) -> Optional[Tuple[int, int]]:
    """Finds two equal letters that commutation swaps can make adjacent.

    Two occurrences at positions a < c of a letter x can be brought together
    iff every letter strictly between them commutes with x.

    Returns:
        The positions (a, c) of the first such pair, or None.
    """
    for a, x in enumerate(seq):
        row = dependent[x]
        for c in range(a + 1, len(seq)):
            if seq[c] == x:
                return (a, c)
            if row[seq[c]]:
                break
    return None


def remove_pair(seq: Encoded, a: int, c: int) -> Encoded:
    """Deletes the letters at positions a < c."""
    return seq[:a] + seq[a + 1 : c] + seq[c + 1 :]


def make_adjacent(seq: Encoded, a: int, c: int) -> Encoded:
    """Word of the class of `seq` where the letters at a and c are adjacent.

    Requires every letter strictly between a and c to commute with seq[a].
    """
    return seq[:a] + seq[a + 1 : c] + (seq[a], seq[c]) + seq[c + 1 :]


def _contiguous_split(
    seq: Encoded,
    a: int,
    b: int,
    c: int,
    dependent: List[List[bool]],
) -> Optional[Tuple[Encoded, Encoded]]:
    """Checks whether the letters at a < b < c can become a factor.

    A letter between a and c (other than b) that depends on a chosen letter
    before it, or on such a letter, must end up after the factor. One that a
    chosen letter after it depends on must end up before. The factor exists
    iff no letter must be on both sides.

    Returns:
        The words to place before and after the factor, or None.
    """
    forced_after = set()
    active = [seq[a]]
    for p in range(a + 1, c):
        if p == b:
            active.append(seq[b])
            continue
        row = dependent[seq[p]]
        if any(row[q] for q in active):
            forced_after.add(p)
            active.append(seq[p])

    active = [seq[c]]
    for p in range(c - 1, a, -1):
        if p == b:
            active.append(seq[b])
            continue
        row = dependent[seq[p]]
        if any(row[q] for q in active):
            if p in forced_after:
                return None
            active.append(seq[p])

    before = tuple(
        seq[p] for p in range(a + 1, c) if p != b and p not in forced_after
    )
    after = tuple(seq[p] for p in range(a + 1, c) if p in forced_after)
    return seq[:a] + before, after + seq[c + 1 :]


def exchange_successors(
    seq: Encoded, alphabet: TraceAlphabet
) -> Iterator[Tuple[Encoded, Tuple[int, int, int]]]:
    """Words obtained from the class of `seq` by one exchange move.

    Yields:
        Pairs (word, (x, y, z)) where word is a (non-normalized) word of the
        class reached by rewriting a factor x y z into z y x.
    """
    dependent = alphabet.dependent
    third = alphabet.third
    size = len(seq)
    for a in range(size):
        x = seq[a]
        for b in range(a + 1, size):
            y = seq[b]
            if y == x:
                # Letters of a triangle are pairwise dependent, so a second
                # occurrence of x cannot move out of the way.
                break
            z = third.get((x, y))
            if z is None:
                continue
            for c in range(b + 1, size):
                if seq[c] != z:
                    continue
                split = _contiguous_split(seq, a, b, c, dependent)
                if split is None:
                    continue
                before, after = split
                yield before + (z, y, x) + after, (x, y, z)
