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

"""Utilities for reading and saving events and reports from/to disk."""

from typing import List, Sequence

from gnk.core.braids.events import CollinearityEvent
from gnk.core.reports import VerificationReport
from gnk.io.pandas import (
    events_from_dataframe,
    events_to_dataframe,
    report_to_dataframe,
)


def events_to_csv(
    events: Sequence[CollinearityEvent], path: str, sep: str = ","
) -> None:
    """Saves critical moments to a CSV file, one row per event.

    Times are written with full precision.
    """
    events_to_dataframe(events).to_csv(
        path, index=False, sep=sep, float_format="%.17g"
    )


def events_from_csv(path: str, sep: str = ",") -> List[CollinearityEvent]:
    """Reads critical moments saved by `events_to_csv`."""

    import pandas as pd

    return events_from_dataframe(pd.read_csv(path, sep=sep))


def report_to_csv(
    report: VerificationReport, path: str, sep: str = ","
) -> None:
    """Saves a verification report to a CSV file, one row per check."""
    report_to_dataframe(report).to_csv(path, index=False, sep=sep)
