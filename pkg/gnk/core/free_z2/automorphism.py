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

"""The free product of n(n-1) copies of Z_2 and the action g of `G_n^3 on it.

The free product has one involutive generator a_{ij} per ordered pair of
distinct indices. Free reduction is a normal form, so two words are equal iff
their reductions are literally equal.

g(a'_{ijk}) is the automorphism:

    a_{ij} -> a_{ik} a_{ij} a_{ik}
    a_{kj} -> a_{ki} a_{kj} a_{ki}
    a_m    -> a_m  for every other generator a_m
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Dict, Iterable, Iterator, Mapping, Optional, Tuple

from gnk.core.data.generators import (
    OrderedPairLabel,
    TripleGenerator,
    all_labels,
    check_num_strands,
    check_strand_index,
)
from gnk.core.data.word import Word, WordKind, cancel_adjacent_pairs
from gnk.utils import config
from gnk.utils.string import elide


@dataclass(frozen=True)
class Z2FreeWord:
    """A freely reduced word of the free product of Z_2's.

    The constructor reduces its input.
    """

    letters: Tuple[OrderedPairLabel, ...] = ()

    def __post_init__(self):
        for letter in self.letters:
            if not isinstance(letter, OrderedPairLabel):
                raise ValueError(
                    "Expecting OrderedPairLabel letters. Got"
                    f" {letter!r} of type {type(letter)}."
                )
        object.__setattr__(
            self, "letters", tuple(cancel_adjacent_pairs(self.letters))
        )

    @classmethod
    def of(cls, *letters: OrderedPairLabel) -> Z2FreeWord:
        return cls(tuple(letters))

    @classmethod
    def from_word(cls, w: Word) -> Z2FreeWord:
        if w.kind != WordKind.ORDERED_PAIR:
            raise ValueError(
                f"Expecting a {WordKind.ORDERED_PAIR} word. Got a {w.kind}"
                " word."
            )
        return cls(w.letters)

    def to_word(self, n: int) -> Word:
        return Word(WordKind.ORDERED_PAIR, n, self.letters)

    def max_index(self) -> int:
        return max((x.max_index() for x in self.letters), default=0)

    def __add__(self, other: Z2FreeWord) -> Z2FreeWord:
        return Z2FreeWord(self.letters + other.letters)

    def __len__(self) -> int:
        return len(self.letters)

    def __iter__(self) -> Iterator[OrderedPairLabel]:
        return iter(self.letters)

    def __str__(self) -> str:
        if not self.letters:
            return "1"
        return elide(
            [f"a{x}" for x in self.letters], config.print_max_letters
        )


@dataclass(frozen=True)
class FreeAutomorphism:
    """An endomorphism of the free product of the n(n-1) Z_2's.

    Attributes:
        n: Number of strands.
        images: Image of each generator. Generators mapped to themselves are
            omitted, so that equal automorphisms have equal `images`.
    """

    n: int
    images: Mapping[OrderedPairLabel, Z2FreeWord] = field(
        default_factory=dict
    )

    def __post_init__(self):
        check_num_strands(self.n)
        normalized: Dict[OrderedPairLabel, Z2FreeWord] = {}
        for label, image in sorted(self.images.items()):
            check_strand_index(label.first, self.n)
            check_strand_index(label.second, self.n)
            if not isinstance(image, Z2FreeWord):
                image = Z2FreeWord(tuple(image))
            if image.max_index() > self.n:
                raise ValueError(
                    f"The image {image} of a{label} uses an index larger than"
                    f" n={self.n}."
                )
            if image.letters != (label,):
                normalized[label] = image
        object.__setattr__(self, "images", normalized)

    def __hash__(self) -> int:
        return hash((self.n, tuple(self.images.items())))

    def image(self, label: OrderedPairLabel) -> Z2FreeWord:
        return self.images.get(label, Z2FreeWord((label,)))

    def moved(self) -> Tuple[OrderedPairLabel, ...]:
        """Generators not mapped to themselves."""
        return tuple(self.images)

    def is_identity(self) -> bool:
        return not self.images

    def __str__(self) -> str:
        if not self.images:
            return "id"
        return ", ".join(f"a{x} -> {w}" for x, w in self.images.items())


def identity(n: int) -> FreeAutomorphism:
    return FreeAutomorphism(n)


def g_oriented(i: int, j: int, k: int, n: int) -> FreeAutomorphism:
    """g(a'_{ijk}) computed in the orientation (i, j, k)."""
    for value in (i, j, k):
        check_strand_index(value, n)
    ij, ik = OrderedPairLabel(i, j), OrderedPairLabel(i, k)
    kj, ki = OrderedPairLabel(k, j), OrderedPairLabel(k, i)
    return FreeAutomorphism(
        n,
        {
            ij: Z2FreeWord.of(ik, ij, ik),
            kj: Z2FreeWord.of(ki, kj, ki),
        },
    )


def g_of_generator(t: TripleGenerator, n: int) -> FreeAutomorphism:
    """The automorphism g(t), using the stored orientation of `t`.

    Usage example:

        ```python
        >>> print(gnk.g_of_generator(gnk.triple(1, 2, 3), 3))
        a12 -> a13 a12 a13, a32 -> a31 a32 a31

        ```
    """
    if not isinstance(t, TripleGenerator):
        raise ValueError(
            f"Expecting a TripleGenerator. Got {t!r} of type {type(t)}."
        )
    return g_oriented(*t.indices(), n)


def apply(aut: FreeAutomorphism, w: Z2FreeWord) -> Z2FreeWord:
    """Substitutes every letter of `w` by its image, then reduces."""
    letters = []
    for x in w.letters:
        letters.extend(aut.image(x).letters)
    return Z2FreeWord(tuple(letters))


def compose(a: FreeAutomorphism, b: FreeAutomorphism) -> FreeAutomorphism:
    """a o b, i.e. x -> apply(a, b(x))."""
    if a.n != b.n:
        raise ValueError(
            f"Cannot compose automorphisms on {a.n} and {b.n} strands."
        )
    images = {}
    for x in all_labels(a.n):
        if x not in a.images and x not in b.images:
            continue
        images[x] = apply(a, b.image(x))
    return FreeAutomorphism(a.n, images)


def compose_all(
    automorphisms: Iterable[FreeAutomorphism], n: int
) -> FreeAutomorphism:
    """a_1 o a_2 o ... o a_m, or the identity for an empty sequence."""
    result = identity(n)
    for aut in automorphisms:
        result = compose(result, aut)
    return result


def g_of_word(w: Word, n: Optional[int] = None) -> FreeAutomorphism:
    """g(t_1 ... t_m) = g(t_1) o ... o g(t_m)."""
    if not isinstance(w, Word) or w.kind != WordKind.TRIPLE:
        raise ValueError(
            f"Expecting a word of `G_n^3 ({WordKind.TRIPLE}). Got {w!r} of"
            f" type {type(w)}."
        )
    if n is None:
        n = w.n
    return compose_all((g_of_generator(t, n) for t in w.letters), n)


def aut_equal(a: FreeAutomorphism, b: FreeAutomorphism) -> bool:
    """Whether a and b agree on every generator."""
    if a.n != b.n:
        raise ValueError(
            f"Cannot compare automorphisms on {a.n} and {b.n} strands."
        )
    return a.images == b.images


def is_involution(a: FreeAutomorphism) -> bool:
    return compose(a, a).is_identity()
