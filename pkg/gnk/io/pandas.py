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

"""Conversions between gnk values and pandas DataFrames."""

from typing import List, Sequence

from gnk.core.braids.events import CollinearityEvent
from gnk.core.reports import VerificationReport

EVENT_COLUMNS = ["t", "i", "middle", "k", "orientation_flip", "slope"]
CHECK_COLUMNS = [
    "relator_tag",
    "status",
    "verdict",
    "states",
    "relator",
    "image",
]


def events_to_dataframe(
    events: Sequence[CollinearityEvent],
) -> "pandas.DataFrame":
    """One row per critical moment.

    Example:
        ```python
        >>> tr = gnk.realize(gnk.parse_braid("s2 s2", 3))
        >>> events, _ = gnk.detect_events(tr)
        >>> gnk.io.events_to_dataframe(events)[["i", "middle", "k"]]
           i  middle  k
        0  1       3  2
        1  1       2  3

        ```
    """

    import pandas as pd

    return pd.DataFrame(
        {
            "t": [e.t for e in events],
            "i": [e.triple[0] for e in events],
            "middle": [e.middle for e in events],
            "k": [e.triple[2] for e in events],
            "orientation_flip": [e.orientation_flip for e in events],
            "slope": [e.slope for e in events],
        },
        columns=EVENT_COLUMNS,
    )


def events_from_dataframe(df: "pandas.DataFrame") -> List[CollinearityEvent]:
    """Inverse of `events_to_dataframe`. Rows are sorted by time."""

    missing = set(EVENT_COLUMNS[:4]) - set(df.columns)
    if missing:
        raise ValueError(
            f"Missing event columns {sorted(missing)}. Got columns"
            f" {list(df.columns)}."
        )
    events = []
    for row in df.sort_values("t").itertuples(index=False):
        events.append(
            CollinearityEvent(
                t=float(row.t),
                triple=(int(row.i), int(row.middle), int(row.k)),
                orientation_flip=int(getattr(row, "orientation_flip", 1)),
                slope=float(getattr(row, "slope", 0.0)),
            )
        )
    return events


def report_to_dataframe(report: VerificationReport) -> "pandas.DataFrame":
    """One row per check. Relators and images are rendered as text."""

    import pandas as pd

    return pd.DataFrame(
        {
            "relator_tag": [c.tag for c in report.checks],
            "status": [str(c.status) for c in report.checks],
            "verdict": [c.verdict for c in report.checks],
            "states": [c.states for c in report.checks],
            "relator": [_render(c.relator) for c in report.checks],
            "image": [
                "" if c.image is None else str(c.image) for c in report.checks
            ],
        },
        columns=CHECK_COLUMNS,
    )


def _render(relator) -> str:
    if isinstance(relator, tuple):
        return " = ".join(f"[{x}]" for x in relator)
    return str(relator)
