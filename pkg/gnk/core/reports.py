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

"""Reports of the relator suites and relation experiments."""

import logging
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from enum import Enum
from typing import Any, Callable, Iterable, List, Optional, Tuple, TypeVar

from gnk.core.data.word import Word
from gnk.core.g2.moves import CommutationMode
from gnk.utils import config


class CheckStatus(Enum):
    PASS = "pass"
    FAIL = "fail"
    UNKNOWN = "unknown"

    def __str__(self) -> str:
        return self.value


@dataclass(frozen=True)
class RelatorCheck:
    """Outcome of checking that one relator maps to the identity.

    Attributes:
        tag: Relator (or relation) family, e.g. "r3_quad".
        relator: The checked relator. A `Word`, or a `BraidWord` for braid
            relation experiments.
        image: Image of the relator, when it is a word.
        status: PASS, FAIL or UNKNOWN.
        verdict: Verdict of the underlying decision procedure, e.g. "equal".
        states: Number of search states spent on the check.
        detail: Free-form explanation, empty on PASS.
    """

    tag: str
    relator: Any
    image: Optional[Word]
    status: CheckStatus
    verdict: str
    states: int = 0
    detail: str = ""


@dataclass(frozen=True)
class Summary:
    num_checks: int
    num_pass: int
    num_fail: int
    num_unknown: int
    status: CheckStatus

    def __str__(self) -> str:
        return (
            f"{self.status}: {self.num_pass} pass, {self.num_fail} fail,"
            f" {self.num_unknown} unknown (out of {self.num_checks})"
        )


@dataclass(frozen=True)
class VerificationReport:
    """Aggregated result of a relator suite.

    The report FAILs if any check fails, is UNKNOWN if no check fails but some
    check is undecided, and PASSes otherwise.

    Attributes:
        suite: Name of the suite: "phi", "g" or "braid".
        n: Number of strands.
        mode: Commutation mode, for suites going through G^2.
        checks: One entry per relator, in enumeration order.
    """

    suite: str
    n: int
    mode: Optional[CommutationMode]
    checks: Tuple[RelatorCheck, ...]

    def summary(self) -> Summary:
        num_pass = sum(c.status == CheckStatus.PASS for c in self.checks)
        num_fail = sum(c.status == CheckStatus.FAIL for c in self.checks)
        num_unknown = len(self.checks) - num_pass - num_fail
        if num_fail:
            status = CheckStatus.FAIL
        elif num_unknown:
            status = CheckStatus.UNKNOWN
        else:
            status = CheckStatus.PASS
        return Summary(
            num_checks=len(self.checks),
            num_pass=num_pass,
            num_fail=num_fail,
            num_unknown=num_unknown,
            status=status,
        )

    @property
    def status(self) -> CheckStatus:
        return self.summary().status

    @property
    def passed(self) -> bool:
        return self.status == CheckStatus.PASS

    def failures(self) -> List[RelatorCheck]:
        return [c for c in self.checks if c.status != CheckStatus.PASS]


Item = TypeVar("Item")


def run_checks(
    check: Callable[[Item], RelatorCheck],
    items: Iterable[Item],
    num_workers: Optional[int] = None,
) -> Tuple[RelatorCheck, ...]:
    """Maps `check` over `items`, keeping the item order.

    Args:
        check: Picklable function checking one item.
        items: Items to check.
        num_workers: Number of worker processes. 1 runs in the calling
            process. Defaults to `config.num_workers`.
    """
    if num_workers is None:
        num_workers = config.num_workers
    if num_workers < 1:
        raise ValueError(
            f"num_workers should be >= 1. Got {num_workers!r} of type"
            f" {type(num_workers)}."
        )
    items = list(items)
    if num_workers == 1 or len(items) <= 1:
        results = []
        for index, item in enumerate(items):
            results.append(check(item))
            if (index + 1) % 500 == 0:
                logging.info("Checked %d / %d relators", index + 1, len(items))
        return tuple(results)

    logging.info(
        "Checking %d relators with %d workers", len(items), num_workers
    )
    with ProcessPoolExecutor(max_workers=num_workers) as executor:
        return tuple(executor.map(check, items, chunksize=16))
