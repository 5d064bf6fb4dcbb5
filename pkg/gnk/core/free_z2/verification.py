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

"""Relator suite of the action g."""

import functools
import logging
from typing import Optional

from gnk.core.data.generators import TripleGenerator
from gnk.core.free_z2.automorphism import (
    g_of_generator,
    g_of_word,
    is_involution,
)
from gnk.core.g3.relators import GroupContextG3, Relator, enumerate_relators
from gnk.core.reports import (
    CheckStatus,
    RelatorCheck,
    VerificationReport,
    run_checks,
)
from gnk.utils import config


def check_g_relator(relator: Relator, n: int) -> RelatorCheck:
    """Checks that g maps one relator to the identity."""
    aut = g_of_word(relator.word, n)
    if aut.is_identity():
        return RelatorCheck(
            tag=str(relator.tag),
            relator=relator.word,
            image=None,
            status=CheckStatus.PASS,
            verdict="identity",
        )
    return RelatorCheck(
        tag=str(relator.tag),
        relator=relator.word,
        image=None,
        status=CheckStatus.FAIL,
        verdict="not-identity",
        detail=str(aut),
    )


def check_g_involution(t: TripleGenerator, n: int) -> RelatorCheck:
    """Checks that g(t) o g(t) is the identity."""
    ok = is_involution(g_of_generator(t, n))
    return RelatorCheck(
        tag="involution",
        relator=GroupContextG3(n).word([t]),
        image=None,
        status=CheckStatus.PASS if ok else CheckStatus.FAIL,
        verdict="identity" if ok else "not-identity",
    )


def verify_g_well_defined(
    n: int, num_workers: Optional[int] = None
) -> VerificationReport:
    """Checks that g maps every relator of `G_n^3 to the identity, and that
    every g(t) is an involution.

    Args:
        n: Number of strands, in [3, config.max_verify_n].
        num_workers: Worker processes. Defaults to `config.num_workers`.
    """
    if not isinstance(n, int) or not 3 <= n <= config.max_verify_n:
        raise ValueError(
            f"n should be in [3, {config.max_verify_n}]"
            f" (config.max_verify_n). Got {n!r}."
        )
    ctx = GroupContextG3(n)
    relators = enumerate_relators(ctx)
    logging.info(
        "Verifying g on %d relators of `G_%d^3", len(relators), n
    )
    checks = run_checks(
        functools.partial(check_g_relator, n=n), relators, num_workers
    )
    checks += tuple(check_g_involution(t, n) for t in ctx.generators())
    report = VerificationReport(suite="g", n=n, mode=None, checks=checks)
    logging.info("g suite: %s", report.summary())
    return report
