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

"""Reduction to minimal length, equality and minimality in G_{n(n-1)}^2.

A word of G^2 has minimal length iff no word reachable from it by commutation
swaps and exchange moves contains two adjacent identical letters. The search
below explores that length-preserving class breadth-first. Whenever a square
becomes reachable, it is cancelled and the search restarts from the shorter
word. Since the length strictly decreases, the outer loop terminates.
"""

import logging
from collections import Counter, deque
from dataclasses import dataclass, field
from enum import Enum
from typing import Dict, List, Optional, Tuple

from gnk.core.data.generators import PairPairGenerator
from gnk.core.data.word import Word, parity_vector, reverse_word
from gnk.core.g2.moves import (
    DEFAULT_MODE,
    CommutationMode,
    check_pair_pair_word,
)
from gnk.core.g2.trace import (
    Encoded,
    TraceAlphabet,
    exchange_successors,
    find_cancellation,
    lex_normal_form,
    make_adjacent,
    remove_pair,
)
from gnk.utils import config
from gnk.utils.string import pretty_num_states


class ReductionStatus(Enum):
    MINIMAL_CERTIFIED = "minimal_certified"
    BUDGET_EXHAUSTED = "budget_exhausted"

    def __str__(self) -> str:
        return self.value


class MoveKind(Enum):
    EXCHANGE = "exchange"
    CANCEL = "cancel"

    def __str__(self) -> str:
        return self.value


@dataclass(frozen=True)
class Move:
    """One step of a reduction.

    Commutation swaps are not recorded: the search works on commutation
    classes.

    Attributes:
        kind: EXCHANGE rewrites a factor x y z into z y x. CANCEL deletes a
            square x x.
        letters: (x, y, z) for an exchange, (x,) for a cancellation.
    """

    kind: MoveKind
    letters: Tuple[PairPairGenerator, ...]

    def __str__(self) -> str:
        return f"{self.kind}({' '.join(str(x) for x in self.letters)})"


@dataclass(frozen=True)
class ReductionCertificate:
    """Result of `reduce_to_minimal`.

    Attributes:
        input: The reduced word.
        output: A word equal to `input` in the group. If `status` is
            MINIMAL_CERTIFIED, `output` has minimal length and is the
            lexicographically least word of its length-preserving class.
        status: Whether the search completed.
        mode: Commutation mode of the search.
        states_explored: Number of commutation classes dequeued by the
            search, over all restarts.
        move_trace: Exchanges and cancellations leading from `input` to
            `output` (up to commutation swaps). Only recorded on request.
    """

    input: Word
    output: Word
    status: ReductionStatus
    mode: CommutationMode
    states_explored: int
    move_trace: Optional[Tuple[Move, ...]] = field(default=None, compare=False)

    @property
    def is_certified(self) -> bool:
        return self.status == ReductionStatus.MINIMAL_CERTIFIED

    @property
    def reduced_to_identity(self) -> bool:
        return len(self.output) == 0

    def __str__(self) -> str:
        return (
            f"{self.input} -> {self.output} [{self.status}, mode={self.mode},"
            f" {pretty_num_states(self.states_explored)}]"
        )


class MinimalityStatus(Enum):
    MINIMAL = "minimal"
    NOT_MINIMAL = "not_minimal"
    UNKNOWN = "unknown"

    def __str__(self) -> str:
        return self.value


@dataclass(frozen=True)
class MinimalityCertificate:
    """Result of `is_minimal`.

    Attributes:
        word: The tested word.
        status: MINIMAL if the length-preserving class of `word` was exhausted
            without finding a square. NOT_MINIMAL if a square was found, in
            which case `witness` is a word of the class containing it.
            UNKNOWN if the budget ran out first.
        mode: Commutation mode of the search.
        states_explored: Number of commutation classes dequeued.
        witness: Word of the class of `word` with two adjacent identical
            letters. Only set when NOT_MINIMAL.
    """

    word: Word
    status: MinimalityStatus
    mode: CommutationMode
    states_explored: int
    witness: Optional[Word] = None

    @property
    def is_minimal(self) -> bool:
        return self.status == MinimalityStatus.MINIMAL


class EqualityVerdict(Enum):
    EQUAL = "equal"
    DISTINCT = "distinct"
    UNKNOWN = "unknown"

    def __str__(self) -> str:
        return self.value


class Evidence(Enum):
    """What an `EqualityResult` verdict relies on."""

    REDUCTION_TO_EMPTY = "reduction-to-empty"
    """u v^-1 reduced to the empty word."""

    PARITY = "parity-certificate"
    """u and v have different parity vectors."""

    EXHAUSTED_MINIMAL_SEARCH = "exhausted-minimal-search"
    """u v^-1 reduced to a non-empty word certified minimal."""

    BUDGET_EXHAUSTED = "budget-exhausted"
    """The search of u v^-1 ran out of budget."""

    def __str__(self) -> str:
        return self.value


@dataclass(frozen=True)
class EqualityResult:
    """Result of `words_equal`.

    Attributes:
        lhs: Left word.
        rhs: Right word.
        verdict: EQUAL, DISTINCT or UNKNOWN.
        evidence: The certificate kind backing the verdict.
        mode: Commutation mode.
        certificate: Reduction certificate of lhs ++ reverse(rhs). None when
            the verdict comes from the parity certificate.
    """

    lhs: Word
    rhs: Word
    verdict: EqualityVerdict
    evidence: Evidence
    mode: CommutationMode
    certificate: Optional[ReductionCertificate] = None

    @property
    def states_explored(self) -> int:
        if self.certificate is None:
            return 0
        return self.certificate.states_explored


@dataclass
class _ClassOutcome:
    """Result of the search of one length-preserving class."""

    # State with a cancellable pair, and the positions of the pair.
    square: Optional[Tuple[Encoded, Tuple[int, int]]]
    # Lexicographically least state seen.
    least: Encoded
    complete: bool
    explored: int
    moves: List[Move]


class _ClassSearch:
    """Breadth-first search over the commutation classes of one
    length-preserving class."""

    def __init__(self, alphabet: TraceAlphabet, record_trace: bool):
        self._alphabet = alphabet
        self._record_trace = record_trace

    def run(self, start: Encoded, budget: int) -> _ClassOutcome:
        dependent = self._alphabet.dependent
        start = lex_normal_form(start, dependent)
        pair = find_cancellation(start, dependent)
        if pair is not None:
            return _ClassOutcome(
                square=(start, pair),
                least=start,
                complete=True,
                explored=0,
                moves=[],
            )

        parents: Dict[Encoded, Optional[Tuple[Encoded, Move]]] = {start: None}
        queue = deque([start])
        least = start
        explored = 0
        while queue:
            if explored >= budget:
                return _ClassOutcome(
                    square=None,
                    least=least,
                    complete=False,
                    explored=explored,
                    moves=[],
                )
            state = queue.popleft()
            explored += 1
            for successor, triangle in exchange_successors(
                state, self._alphabet
            ):
                successor = lex_normal_form(successor, dependent)
                if successor in parents:
                    continue
                if config.debug_mode:
                    assert Counter(successor) == Counter(state)
                move = Move(MoveKind.EXCHANGE, self._alphabet.decode(triangle))
                parents[successor] = (state, move)
                pair = find_cancellation(successor, dependent)
                if pair is not None:
                    return _ClassOutcome(
                        square=(successor, pair),
                        least=least,
                        complete=True,
                        explored=explored,
                        moves=self._path(parents, successor),
                    )
                if successor < least:
                    least = successor
                queue.append(successor)

        return _ClassOutcome(
            square=None,
            least=least,
            complete=True,
            explored=explored,
            moves=[],
        )

    def _path(
        self,
        parents: Dict[Encoded, Optional[Tuple[Encoded, Move]]],
        state: Encoded,
    ) -> List[Move]:
        if not self._record_trace:
            return []
        moves = []
        while parents[state] is not None:
            state, move = parents[state]
            moves.append(move)
        moves.reverse()
        return moves


def _resolve_budget(budget: Optional[int]) -> int:
    if budget is None:
        budget = config.default_budget
    if not isinstance(budget, int) or isinstance(budget, bool) or budget < 1:
        raise ValueError(
            f"The state budget should be an integer >= 1. Got {budget!r} of"
            f" type {type(budget)}."
        )
    return budget


def reduce_to_minimal(
    w: Word,
    mode: CommutationMode = DEFAULT_MODE,
    budget: Optional[int] = None,
    record_trace: bool = False,
) -> ReductionCertificate:
    """Reduces a word of G^2 to a word of minimal length.

    Usage example:

        ```python
        >>> x = gnk.pair_pair((1, 2), (1, 3))
        >>> w = gnk.word(gnk.WordKind.PAIR_PAIR, 3, [x, x])
        >>> certificate = gnk.reduce_to_minimal(w)
        >>> len(certificate.output), str(certificate.status)
        (0, 'minimal_certified')

        ```

    Args:
        w: Word of G_{n(n-1)}^2.
        mode: Commutation mode.
        budget: Maximum number of states explored, over all restarts.
            Defaults to `config.default_budget`.
        record_trace: If true, the certificate lists the applied moves.

    Returns:
        A certificate whose output has the length parity of `w`.

    Raises:
        ValueError: If `w` is not a G^2 word or `budget` < 1.
    """
    check_pair_pair_word(w)
    budget = _resolve_budget(budget)

    alphabet = TraceAlphabet(w.letters, mode)
    search = _ClassSearch(alphabet, record_trace)
    current = alphabet.encode(w.letters)
    explored = 0
    moves: List[Move] = []
    while True:
        outcome = search.run(current, budget - explored)
        explored += outcome.explored
        moves.extend(outcome.moves)
        if outcome.square is None:
            break
        state, (a, c) = outcome.square
        if record_trace:
            moves.append(
                Move(MoveKind.CANCEL, (alphabet.letters[state[a]],))
            )
        current = remove_pair(state, a, c)
        logging.debug(
            "Cancelled a square; restarting from a word of length %d after"
            " %d states",
            len(current),
            explored,
        )

    if outcome.complete:
        status = ReductionStatus.MINIMAL_CERTIFIED
    else:
        status = ReductionStatus.BUDGET_EXHAUSTED
        logging.warning(
            "Budget of %d states exhausted while reducing a word of length %d"
            " (reached length %d)",
            budget,
            len(w),
            len(outcome.least),
        )

    return ReductionCertificate(
        input=w,
        output=w.with_letters(alphabet.decode(outcome.least)),
        status=status,
        mode=mode,
        states_explored=explored,
        move_trace=tuple(moves) if record_trace else None,
    )


def is_minimal(
    w: Word,
    mode: CommutationMode = DEFAULT_MODE,
    budget: Optional[int] = None,
) -> MinimalityCertificate:
    """Checks whether a word of G^2 has minimal length.

    Args:
        w: Word of G_{n(n-1)}^2.
        mode: Commutation mode.
        budget: Maximum number of states explored. Defaults to
            `config.default_budget`.

    Returns:
        A certificate with status MINIMAL, NOT_MINIMAL (with a witness) or
        UNKNOWN.
    """
    check_pair_pair_word(w)
    budget = _resolve_budget(budget)

    alphabet = TraceAlphabet(w.letters, mode)
    outcome = _ClassSearch(alphabet, record_trace=False).run(
        alphabet.encode(w.letters), budget
    )
    if outcome.square is not None:
        state, (a, c) = outcome.square
        witness = w.with_letters(alphabet.decode(make_adjacent(state, a, c)))
        return MinimalityCertificate(
            word=w,
            status=MinimalityStatus.NOT_MINIMAL,
            mode=mode,
            states_explored=outcome.explored,
            witness=witness,
        )
    return MinimalityCertificate(
        word=w,
        status=(
            MinimalityStatus.MINIMAL
            if outcome.complete
            else MinimalityStatus.UNKNOWN
        ),
        mode=mode,
        states_explored=outcome.explored,
    )


def words_equal(
    u: Word,
    v: Word,
    mode: CommutationMode = DEFAULT_MODE,
    budget: Optional[int] = None,
) -> EqualityResult:
    """Decides whether two words of G^2 are equal, within a budget.

    u = v iff u ++ reverse(v) reduces to the empty word. Words with different
    parity vectors are DISTINCT without any search.

    Raises:
        ValueError: If the words belong to different groups.
    """
    u.check_same_context(v)
    check_pair_pair_word(u)
    budget = _resolve_budget(budget)

    if parity_vector(u) != parity_vector(v):
        return EqualityResult(
            lhs=u,
            rhs=v,
            verdict=EqualityVerdict.DISTINCT,
            evidence=Evidence.PARITY,
            mode=mode,
        )

    certificate = reduce_to_minimal(u + reverse_word(v), mode, budget)
    if certificate.reduced_to_identity:
        verdict, evidence = EqualityVerdict.EQUAL, Evidence.REDUCTION_TO_EMPTY
    elif certificate.is_certified:
        verdict = EqualityVerdict.DISTINCT
        evidence = Evidence.EXHAUSTED_MINIMAL_SEARCH
    else:
        verdict, evidence = EqualityVerdict.UNKNOWN, Evidence.BUDGET_EXHAUSTED
    return EqualityResult(
        lhs=u,
        rhs=v,
        verdict=verdict,
        evidence=evidence,
        mode=mode,
        certificate=certificate,
    )
