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

"""The braid invariant f: PB_n -> `G_n^3 and the maps built on top of it.

f(b) lists, in increasing time, one generator a'_{ijk} per critical moment
of a good and stable realization of b, with j the middle strand.
"""

import dataclasses
import functools
import logging
from typing import List, Optional, Sequence, Tuple

from gnk.core.braids.braid_word import (
    BraidLetter,
    BraidWord,
    check_pure,
    format_braid,
    inverse,
    square,
)
from gnk.core.braids.events import (
    CollinearityEvent,
    StabilityReport,
    Tolerances,
    detect_events,
)
from gnk.core.braids.trajectory import realize
from gnk.core.data.word import Word, WordKind
from gnk.core.free_z2.automorphism import (
    FreeAutomorphism,
    aut_equal,
    g_of_word,
)
from gnk.core.g2.moves import DEFAULT_MODE, CommutationMode
from gnk.core.g2.reduction import (
    EqualityVerdict,
    ReductionCertificate,
    reduce_to_minimal,
    words_equal,
)
from gnk.core.g3.phi import phi_oriented, phi_word
from gnk.core.reports import (
    CheckStatus,
    RelatorCheck,
    VerificationReport,
    run_checks,
)
from gnk.utils import config


class DegenerateTrajectoryError(ValueError):
    """No realization of a braid was good and stable.

    Attributes:
        report: Stability report of the last realization tried.
    """

    def __init__(self, braid: BraidWord, report: StabilityReport):
        super().__init__(
            f"No stable realization of {format_braid(braid)!r} after"
            f" {report.retries + 1} attempts. Last attempt (seed"
            f" {report.seed}): "
            + ", ".join(str(d) for d in report.degeneracies)
        )
        self.report = report


def stable_events(
    b: BraidWord,
    epsilon: Optional[float] = None,
    seed: int = 0,
    retries: Optional[int] = None,
    tolerances: Optional[Tolerances] = None,
) -> Tuple[List[CollinearityEvent], StabilityReport]:
    """Events of the first good and stable realization of a pure braid.

    Realizations use the seeds seed, seed + 1, ..., seed + retries.

    Raises:
        ValueError: If `b` is not pure.
        DegenerateTrajectoryError: If every realization is degenerate.
    """
    check_pure(b)
    if retries is None:
        retries = config.default_retries
    if not isinstance(retries, int) or retries < 0:
        raise ValueError(
            f"retries should be an integer >= 0. Got {retries!r} of type"
            f" {type(retries)}."
        )

    for attempt in range(retries + 1):
        tr = realize(b, epsilon, seed + attempt)
        events, report = detect_events(tr, tolerances)
        report = dataclasses.replace(report, retries=attempt)
        if report.passed:
            return events, report
        logging.warning(
            "Realization of %r is not stable: %s", format_braid(b), report
        )
    raise DegenerateTrajectoryError(b, report)


def f_invariant(
    b: BraidWord,
    epsilon: Optional[float] = None,
    seed: int = 0,
    retries: Optional[int] = None,
    tolerances: Optional[Tolerances] = None,
) -> Word:
    """The word f(b) of `G_n^3.

    Usage example:

        ```python
        >>> print(gnk.f_invariant(gnk.parse_braid("s2 s2", 3)))
        a'132 a'123

        ```

    Args:
        b: A pure braid.
        epsilon: Jitter magnitude. Defaults to `config.default_epsilon`.
        seed: Seed of the first realization.
        retries: Extra realizations tried on a degenerate one. Defaults to
            `config.default_retries`.
        tolerances: Event detection tolerances.

    Raises:
        DegenerateTrajectoryError: If no realization is good and stable.
    """
    events, _ = stable_events(b, epsilon, seed, retries, tolerances)
    return Word(WordKind.TRIPLE, b.n, tuple(e.generator() for e in events))


def Phi(  # pylint: disable=invalid-name
    b: BraidWord,
    mode: CommutationMode = DEFAULT_MODE,
    budget: Optional[int] = None,
    epsilon: Optional[float] = None,
    seed: int = 0,
    retries: Optional[int] = None,
) -> ReductionCertificate:
    """Φ(b) = φ(f(b)), reduced to minimal length in G_{n(n-1)}^2.

    A non-empty output certifies that b is not trivial in PB_n.
    """
    return reduce_to_minimal(
        phi_word(f_invariant(b, epsilon, seed, retries)), mode, budget
    )


def g_action(
    b: BraidWord,
    epsilon: Optional[float] = None,
    seed: int = 0,
    retries: Optional[int] = None,
) -> FreeAutomorphism:
    """g(f(b)): the automorphism of the free product of Z_2's."""
    return g_of_word(f_invariant(b, epsilon, seed, retries))


def phi_from_events(events: Sequence[CollinearityEvent], n: int) -> Word:
    """Φ written directly from the events, without going through `G_n^3.

    Each event contributes a_{ij,ik} a_{kj,ki} for its triple (i, j, k).
    """
    letters = []
    for event in events:
        letters.extend(phi_oriented(*event.triple))
    return Word(WordKind.PAIR_PAIR, n, tuple(letters))


def _compare_braids(
    pair: Tuple[str, BraidWord, BraidWord],
    mode: CommutationMode,
    budget: Optional[int],
    epsilon: Optional[float],
    seed: int,
    retries: Optional[int],
) -> RelatorCheck:
    """Checks that two isotopic pure braids have the same invariants."""
    tag, lhs, rhs = pair
    try:
        f_lhs = f_invariant(lhs, epsilon, seed, retries)
        f_rhs = f_invariant(rhs, epsilon, seed, retries)
    except DegenerateTrajectoryError as e:
        return RelatorCheck(
            tag=tag,
            relator=(lhs, rhs),
            image=None,
            status=CheckStatus.UNKNOWN,
            verdict="degenerate",
            detail=str(e),
        )

    result = words_equal(phi_word(f_lhs), phi_word(f_rhs), mode, budget)
    same_action = aut_equal(g_of_word(f_lhs), g_of_word(f_rhs))
    if result.verdict == EqualityVerdict.EQUAL and same_action:
        status, detail = CheckStatus.PASS, ""
    elif result.verdict == EqualityVerdict.UNKNOWN and same_action:
        status, detail = CheckStatus.UNKNOWN, str(result.evidence)
    else:
        status = CheckStatus.FAIL
        detail = f"phi: {result.verdict}, same g action: {same_action}"
    return RelatorCheck(
        tag=tag,
        relator=(lhs, rhs),
        image=result.certificate.output if result.certificate else None,
        status=status,
        verdict=str(result.verdict),
        states=result.states_explored,
        detail=detail,
    )


def braid_relation_pairs(n: int) -> List[Tuple[str, BraidWord, BraidWord]]:
    """Pairs of isotopic pure braids exercising each local move of an
    isotopy.

    - "cancel": σ_i^2 σ_i^-2 against the empty braid (a triple point that
        appears and disappears).
    - "far_commute": σ_i^2 σ_j^2 against σ_j^2 σ_i^2, for |i - j| >= 2.
    - "braid_relation": (σ_i σ_{i+1} σ_i)^2 against (σ_{i+1} σ_i σ_{i+1})^2.
    """
    empty = BraidWord(n)
    pairs = []
    for i in range(1, n):
        twist = square(i, n)
        pairs.append(("cancel", twist + inverse(twist), empty))
    for i in range(1, n):
        for j in range(i + 2, n):
            pairs.append(
                (
                    "far_commute",
                    square(i, n) + square(j, n),
                    square(j, n) + square(i, n),
                )
            )
    for i in range(1, n - 1):
        a, b = BraidLetter(i), BraidLetter(i + 1)
        pairs.append(
            (
                "braid_relation",
                BraidWord(n, (a, b, a, a, b, a)),
                BraidWord(n, (b, a, b, b, a, b)),
            )
        )
    return pairs


def verify_braid_relations(
    n: int,
    mode: CommutationMode = DEFAULT_MODE,
    budget: Optional[int] = None,
    epsilon: Optional[float] = None,
    seed: int = 0,
    retries: Optional[int] = None,
    num_workers: Optional[int] = None,
) -> VerificationReport:
    """Compares Φ and g on both sides of each pair of
    `braid_relation_pairs(n)`.

    A check passes when the Φ images are EQUAL and the g actions agree.
    """
    if not isinstance(n, int) or not 3 <= n <= config.max_verify_n:
        raise ValueError(
            f"n should be in [3, {config.max_verify_n}]"
            f" (config.max_verify_n). Got {n!r}."
        )
    pairs = braid_relation_pairs(n)
    logging.info(
        "Comparing %d pairs of isotopic braids on %d strands", len(pairs), n
    )
    checks = run_checks(
        functools.partial(
            _compare_braids,
            mode=mode,
            budget=budget,
            epsilon=epsilon,
            seed=seed,
            retries=retries,
        ),
        pairs,
        num_workers,
    )
    report = VerificationReport(suite="braid", n=n, mode=mode, checks=checks)
    logging.info("braid suite: %s", report.summary())
    return report
