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

"""The homomorphism phi: `G_n^3 -> G_{n(n-1)}^2 and the projection onto
G_n^3.

    phi(a'_{ijk}) = a_{ij,ik} a_{kj,ki}
"""

import functools
import logging
from dataclasses import dataclass
from enum import Enum
from typing import Optional, Tuple

from gnk.core.data.generators import (
    OrderedPairLabel,
    PairPairGenerator,
    TripleGenerator,
)
from gnk.core.data.word import Word, WordKind
from gnk.core.g2.moves import DEFAULT_MODE, CommutationMode
from gnk.core.g2.reduction import (
    EqualityVerdict,
    MinimalityCertificate,
    is_minimal,
    words_equal,
)
from gnk.core.g3.relators import (
    G3Variant,
    GroupContextG3,
    Relator,
    enumerate_relators,
)
from gnk.core.reports import (
    CheckStatus,
    RelatorCheck,
    VerificationReport,
    run_checks,
)
from gnk.utils import config


def _check_triple_word(w: Word) -> None:
    if not isinstance(w, Word) or w.kind != WordKind.TRIPLE:
        raise ValueError(
            f"Expecting a word of `G_n^3 ({WordKind.TRIPLE}). Got {w!r} of"
            f" type {type(w)}."
        )


def phi_oriented(
    i: int, j: int, k: int
) -> Tuple[PairPairGenerator, PairPairGenerator]:
    """Image of a'_{ijk} read in the orientation (i, j, k).

    Returns:
        The two letters (a_{ij,ik}, a_{kj,ki}).
    """
    return (
        PairPairGenerator(OrderedPairLabel(i, j), OrderedPairLabel(i, k)),
        PairPairGenerator(OrderedPairLabel(k, j), OrderedPairLabel(k, i)),
    )


def phi_generator(g: TripleGenerator, n: Optional[int] = None) -> Word:
    """Image of a generator, computed in its stored orientation.

    a'_{ijk} is stored with i < k, so a'_{312} is stored as a'_{213} and its
    image is `a_{21,23} a_{31,32}`, not `a_{31,32} a_{21,23}`.

    Args:
        g: A generator of `G_n^3`.
        n: Number of strands of the result. Defaults to the smallest valid
            value.
    """
    if not isinstance(g, TripleGenerator):
        raise ValueError(
            f"Expecting a TripleGenerator. Got {g!r} of type {type(g)}."
        )
    if n is None:
        n = max(3, g.max_index())
    return Word(WordKind.PAIR_PAIR, n, phi_oriented(*g.indices()))


def phi_word(w: Word) -> Word:
    """Image of a `G_n^3 word: the concatenation of the generator images.

    Usage example:

        ```python
        >>> w = gnk.word(gnk.WordKind.TRIPLE, 3, [gnk.triple(1, 2, 3)])
        >>> print(gnk.phi_word(w))
        a{12,13} a{31,32}

        ```
    """
    _check_triple_word(w)
    letters = []
    for g in w.letters:
        letters.extend(phi_oriented(*g.indices()))
    return Word(WordKind.PAIR_PAIR, w.n, tuple(letters))


def project_to_plain(w: Word) -> Word:
    """Forgets the middle index of every letter: `G_n^3 -> G_n^3."""
    _check_triple_word(w)
    return Word(
        WordKind.PLAIN_TRIPLE, w.n, tuple(g.to_plain() for g in w.letters)
    )


class PhiMinimality(Enum):
    MINIMAL = "minimal"
    INCONCLUSIVE = "inconclusive"

    def __str__(self) -> str:
        return self.value


@dataclass(frozen=True)
class PhiMinimalityCertificate:
    """Result of `certify_minimal_via_phi`.

    A `G_n^3 word is minimal whenever its phi-image is minimal in G^2. The
    converse does not hold, hence the absence of a NOT_MINIMAL status.

    Attributes:
        word: The tested `G_n^3 word.
        image: phi_word(word).
        status: MINIMAL or INCONCLUSIVE.
        image_minimality: Minimality certificate of the image.
    """

    word: Word
    image: Word
    status: PhiMinimality
    image_minimality: MinimalityCertificate

    @property
    def states_explored(self) -> int:
        return self.image_minimality.states_explored


def certify_minimal_via_phi(
    w: Word,
    mode: CommutationMode = DEFAULT_MODE,
    budget: Optional[int] = None,
) -> PhiMinimalityCertificate:
    """Certifies that a `G_n^3 word is minimal through its phi-image."""
    image = phi_word(w)
    minimality = is_minimal(image, mode, budget)
    return PhiMinimalityCertificate(
        word=w,
        image=image,
        status=(
            PhiMinimality.MINIMAL
            if minimality.is_minimal
            else PhiMinimality.INCONCLUSIVE
        ),
        image_minimality=minimality,
    )


_VERDICT_TO_STATUS = {
    EqualityVerdict.EQUAL: CheckStatus.PASS,
    EqualityVerdict.DISTINCT: CheckStatus.FAIL,
    EqualityVerdict.UNKNOWN: CheckStatus.UNKNOWN,
}


def check_phi_relator(
    relator: Relator, mode: CommutationMode, budget: int
) -> RelatorCheck:
    """Checks that the phi-image of one relator is the identity."""
    image = phi_word(relator.word)
    result = words_equal(image, image.with_letters(()), mode, budget)
    status = _VERDICT_TO_STATUS[result.verdict]
    detail = ""
    if status != CheckStatus.PASS:
        detail = f"evidence: {result.evidence}"
        if result.certificate is not None:
            detail += f", reduced to: {result.certificate.output}"
    return RelatorCheck(
        tag=str(relator.tag),
        relator=relator.word,
        image=image,
        status=status,
        verdict=str(result.verdict),
        states=result.states_explored,
        detail=detail,
    )


def verify_phi_well_defined(
    n: int,
    mode: CommutationMode = DEFAULT_MODE,
    budget: Optional[int] = None,
    num_workers: Optional[int] = None,
) -> VerificationReport:
    """Checks that phi maps every relator of `G_n^3 to the identity.

    Args:
        n: Number of strands, in [3, config.max_verify_n].
        mode: Commutation mode of G^2.
        budget: State budget per relator. Defaults to
            `config.default_budget`.
        num_workers: Worker processes. Defaults to `config.num_workers`.

    Returns:
        A report with one check per relator.
    """
    if not isinstance(n, int) or not 3 <= n <= config.max_verify_n:
        raise ValueError(
            f"n should be in [3, {config.max_verify_n}]"
            f" (config.max_verify_n). Got {n!r}."
        )
    if budget is None:
        budget = config.default_budget
    relators = enumerate_relators(GroupContextG3(n, G3Variant.BACKTICK))
    logging.info(
        "Verifying phi on %d relators of `G_%d^3 (mode=%s)",
        len(relators),
        n,
        mode,
    )
    checks = run_checks(
        functools.partial(check_phi_relator, mode=mode, budget=budget),
        relators,
        num_workers,
    )
    report = VerificationReport(suite="phi", n=n, mode=mode, checks=checks)
    logging.info("phi suite: %s", report.summary())
    return report
