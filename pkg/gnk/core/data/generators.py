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

"""Generators of the groups handled by gnk.

All generators are immutable and stored in a canonical form, so that two
generators denoting the same group element compare (and hash) equal:

- `TripleGenerator` (a'_{ijk} of `G_n^3) stores the smaller endpoint first.
    The middle index is never normalized away: a'_{123} = a'_{321} but
    a'_{123} != a'_{132}.
- `PlainTripleGenerator` (a_{ijk} of G_n^3) is an unordered triple.
- `PairPairGenerator` (a_{p,q} of G_{n(n-1)}^2) is an unordered pair of
    ordered-pair labels, stored with the smaller label first.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import FrozenSet, List, Tuple, Union

# A strand index, in {1, ..., n}.
StrandIndex = int


def check_strand_index(value: StrandIndex, n: int) -> None:
    """Checks that `value` is a valid strand index for `n` strands."""

    check_num_strands(n)
    if not isinstance(value, int) or isinstance(value, bool):
        raise ValueError(
            "A strand index should be an integer. Got"
            f" {value!r} of type {type(value)}."
        )
    if not 1 <= value <= n:
        raise ValueError(
            f"A strand index should be in [1, {n}]. Got {value!r}."
        )


def check_num_strands(n: int) -> None:
    """Checks that `n` is a valid number of strands."""

    if not isinstance(n, int) or isinstance(n, bool) or n < 3:
        raise ValueError(
            "The number of strands should be an integer >= 3. Got"
            f" {n!r} of type {type(n)}."
        )


def _check_index(value) -> None:
    if not isinstance(value, int) or isinstance(value, bool) or value < 1:
        raise ValueError(
            "A strand index should be a strictly positive integer. Got"
            f" {value!r} of type {type(value)}."
        )


@dataclass(frozen=True, order=True)
class OrderedPairLabel:
    """An ordered pair (i, j) of distinct strand indices.

    (i, j) and (j, i) are distinct labels. Labels index both the letters of
    G_{n(n-1)}^2 generators and the generators a_{ij} of the free product of
    Z_2's.
    """

    first: StrandIndex
    second: StrandIndex

    def __post_init__(self):
        _check_index(self.first)
        _check_index(self.second)
        if self.first == self.second:
            raise ValueError(
                "The two indices of a label should be distinct. Got"
                f" ({self.first}, {self.second})."
            )

    def as_set(self) -> FrozenSet[StrandIndex]:
        """Underlying unordered 2-element set."""
        return frozenset((self.first, self.second))

    def max_index(self) -> StrandIndex:
        return max(self.first, self.second)

    def to_string(self) -> str:
        """Unambiguous "i.j" representation, used as JSON object key."""
        return f"{self.first}.{self.second}"

    def __str__(self) -> str:
        if self.first < 10 and self.second < 10:
            return f"{self.first}{self.second}"
        return self.to_string()

    def __repr__(self) -> str:
        return f"label({self.first}, {self.second})"


def label(first: StrandIndex, second: StrandIndex) -> OrderedPairLabel:
    """Shorthand constructor: `label(1, 2)` is the label 12."""
    return OrderedPairLabel(first, second)


def _normalize_label(value: Union[OrderedPairLabel, Tuple[int, int]]):
    if isinstance(value, OrderedPairLabel):
        return value
    if isinstance(value, str):
        parts = value.split(".") if "." in value else list(value)
        if len(parts) != 2:
            raise ValueError(f"Cannot parse label {value!r}.")
        return OrderedPairLabel(int(parts[0]), int(parts[1]))
    if len(value) != 2:
        raise ValueError(
            f"A label should be a pair of indices. Got {value!r}."
        )
    return OrderedPairLabel(value[0], value[1])


@dataclass(frozen=True, order=True)
class TripleGenerator:
    """The generator a'_{left,middle,right} of `G_n^3.

    The triple is identified with its reversal, so the constructor stores
    min(left, right) in the left slot.
    """

    left: StrandIndex
    middle: StrandIndex
    right: StrandIndex

    def __post_init__(self):
        for value in (self.left, self.middle, self.right):
            _check_index(value)
        if len({self.left, self.middle, self.right}) != 3:
            raise ValueError(
                "The indices of a triple should be pairwise distinct. Got"
                f" ({self.left}, {self.middle}, {self.right})."
            )
        if self.left > self.right:
            left, right = self.right, self.left
            object.__setattr__(self, "left", left)
            object.__setattr__(self, "right", right)

    def indices(self) -> Tuple[StrandIndex, StrandIndex, StrandIndex]:
        """Indices in stored orientation."""
        return (self.left, self.middle, self.right)

    def index_set(self) -> FrozenSet[StrandIndex]:
        return frozenset(self.indices())

    def max_index(self) -> StrandIndex:
        return max(self.indices())

    def to_plain(self) -> PlainTripleGenerator:
        return PlainTripleGenerator.of(*self.indices())

    def __str__(self) -> str:
        return "a'" + "".join(_compact(i) for i in self.indices())

    def __repr__(self) -> str:
        return f"triple({self.left}, {self.middle}, {self.right})"


def triple(i: StrandIndex, j: StrandIndex, k: StrandIndex) -> TripleGenerator:
    """Shorthand constructor: `triple(3, 2, 1) == triple(1, 2, 3)`."""
    return TripleGenerator(i, j, k)


@dataclass(frozen=True, order=True)
class PlainTripleGenerator:
    """The generator a_{ijk} of G_n^3: an unordered triple of indices."""

    indices: Tuple[StrandIndex, StrandIndex, StrandIndex]

    def __post_init__(self):
        values = tuple(self.indices)
        if len(values) != 3 or len(set(values)) != 3:
            raise ValueError(
                "A plain triple should have three pairwise distinct"
                f" indices. Got {values!r}."
            )
        for value in values:
            _check_index(value)
        object.__setattr__(self, "indices", tuple(sorted(values)))

    @classmethod
    def of(
        cls, i: StrandIndex, j: StrandIndex, k: StrandIndex
    ) -> PlainTripleGenerator:
        return cls((i, j, k))

    def index_set(self) -> FrozenSet[StrandIndex]:
        return frozenset(self.indices)

    def max_index(self) -> StrandIndex:
        return self.indices[-1]

    def __str__(self) -> str:
        return "a" + "".join(_compact(i) for i in self.indices)

    def __repr__(self) -> str:
        return f"plain{self.indices}"


@dataclass(frozen=True, order=True)
class PairPairGenerator:
    """The generator a_{p,q} of G_{n(n-1)}^2.

    `p` and `q` are distinct ordered-pair labels. The pair is unordered; the
    constructor stores the lexicographically smaller label in `p`.
    """

    p: OrderedPairLabel
    q: OrderedPairLabel

    def __post_init__(self):
        p = _normalize_label(self.p)
        q = _normalize_label(self.q)
        if p == q:
            raise ValueError(
                f"The two labels of a generator should be distinct. Got {p}."
            )
        if q < p:
            p, q = q, p
        object.__setattr__(self, "p", p)
        object.__setattr__(self, "q", q)

    @property
    def labels(self) -> Tuple[OrderedPairLabel, OrderedPairLabel]:
        return (self.p, self.q)

    def max_index(self) -> StrandIndex:
        return max(self.p.max_index(), self.q.max_index())

    def __str__(self) -> str:
        return f"a{{{self.p},{self.q}}}"

    def __repr__(self) -> str:
        return f"pair_pair({self.p!r}, {self.q!r})"


def pair_pair(p, q) -> PairPairGenerator:
    """Shorthand constructor accepting labels or (i, j) tuples.

    `pair_pair((1, 3), (1, 2))` is the generator a_{12,13}.
    """
    return PairPairGenerator(_normalize_label(p), _normalize_label(q))


def _compact(i: int) -> str:
    return str(i) if i < 10 else f"({i})"


Generator = Union[
    TripleGenerator, PlainTripleGenerator, PairPairGenerator, OrderedPairLabel
]


def all_labels(n: int) -> List[OrderedPairLabel]:
    """The n(n-1) ordered pairs of distinct indices in [1, n]."""
    check_num_strands(n)
    return [
        OrderedPairLabel(i, j)
        for i in range(1, n + 1)
        for j in range(1, n + 1)
        if i != j
    ]
