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

"""Detection of the critical moments of a trajectory.

A critical moment is a time at which three points are collinear. For each
triple of strands, the signed area

    s(t) = Im(conj(z_j - z_i) (z_k - z_i))

is sampled on a regular grid, and every sign change is refined by bisection.
"""

from __future__ import annotations

import itertools
import logging
import math
from dataclasses import dataclass, field
from enum import Enum
from typing import List, Optional, Set, Tuple

import numpy as np

from gnk.core.braids.trajectory import Trajectory
from gnk.core.data.generators import TripleGenerator
from gnk.utils import config


class Degeneracy(Enum):
    """Ways a trajectory can fail to be good and stable."""

    SIMULTANEOUS_EVENTS = "simultaneous-events"
    """Two critical moments are closer than the minimum gap."""

    FOUR_POINT_COLLINEAR = "four-point-collinear"
    """A fourth point lies on the line of a critical moment."""

    TANGENCY = "tangency"
    """A signed area vanishes without a clean sign change."""

    MIDDLE_TIE = "middle-tie"
    """The middle point of a critical moment is ambiguous."""

    COLLISION = "collision"
    """Two points (nearly) coincide."""

    def __str__(self) -> str:
        return self.value


@dataclass(frozen=True)
class Tolerances:
    """Numerical tolerances of `detect_events`.

    Defaults are read from `gnk.config` when the object is created.

    Attributes:
        samples_per_slice: Sampling intervals per braid letter.
        time_tolerance: Width of the bisection bracket of an event time.
        min_event_gap: Smallest time between two events.
        min_slope: Smallest |ds/dt| at an event, relative to the trajectory
            scale.
        collinearity_tolerance: Distance under which a point is on a line, or
            two points coincide.
    """

    samples_per_slice: int = field(
        default_factory=lambda: config.samples_per_slice
    )
    time_tolerance: float = field(default_factory=lambda: config.time_tolerance)
    min_event_gap: float = field(default_factory=lambda: config.min_event_gap)
    min_slope: float = field(default_factory=lambda: config.min_slope)
    collinearity_tolerance: float = field(
        default_factory=lambda: config.collinearity_tolerance
    )

    def __post_init__(self):
        if self.samples_per_slice < 2:
            raise ValueError(
                "samples_per_slice should be >= 2. Got"
                f" {self.samples_per_slice!r}."
            )
        for name in (
            "time_tolerance",
            "min_event_gap",
            "min_slope",
            "collinearity_tolerance",
        ):
            value = getattr(self, name)
            if not value > 0:
                raise ValueError(f"{name} should be > 0. Got {value!r}.")


@dataclass(frozen=True)
class CollinearityEvent:
    """A critical moment.

    Attributes:
        t: Time in (0, 1).
        triple: (i, j, k) with j the middle strand and i < k.
        orientation_flip: Sign of the time derivative, at t, of the signed
            area of the three strands taken in increasing order.
        slope: That derivative.
    """

    t: float
    triple: Tuple[int, int, int]
    orientation_flip: int
    slope: float = 0.0

    @property
    def middle(self) -> int:
        return self.triple[1]

    def generator(self) -> TripleGenerator:
        return TripleGenerator(*self.triple)


@dataclass(frozen=True)
class StabilityReport:
    """Checks of the good-and-stable conditions on one realization.

    Attributes:
        num_events: Number of critical moments.
        min_time_gap: Smallest time between consecutive events, or inf.
        min_abs_slope: Smallest |ds/dt| at an event, or inf.
        degeneracies: Detected degeneracies, empty iff the report passes.
        retries: Number of extra realizations tried before this one.
        seed: Jitter seed of the realization.
    """

    num_events: int
    min_time_gap: float
    min_abs_slope: float
    degeneracies: Tuple[Degeneracy, ...] = ()
    retries: int = 0
    seed: int = 0

    @property
    def passed(self) -> bool:
        return not self.degeneracies

    def __str__(self) -> str:
        status = (
            "PASS"
            if self.passed
            else "FAIL (" + ", ".join(map(str, self.degeneracies)) + ")"
        )
        return (
            f"{status}: {self.num_events} events, min gap"
            f" {self.min_time_gap:.3g}, min |slope| {self.min_abs_slope:.3g},"
            f" seed {self.seed}, {self.retries} retries"
        )


def _signed_areas(a: np.ndarray, b: np.ndarray, c: np.ndarray) -> np.ndarray:
    return np.imag(np.conj(b - a) * (c - a))


def _row_areas(z: np.ndarray, triples: np.ndarray) -> np.ndarray:
    """Signed area of triple `triples[r]` in configuration `z[r]`.

    Args:
        z: Positions, shape [m, n].
        triples: Strand columns, shape [m, 3].
    """
    rows = np.arange(len(z))
    return _signed_areas(
        z[rows, triples[:, 0]], z[rows, triples[:, 1]], z[rows, triples[:, 2]]
    )


def _bisect(
    tr: Trajectory,
    lo: np.ndarray,
    hi: np.ndarray,
    triples: np.ndarray,
    tolerance: float,
) -> np.ndarray:
    """Refines all the brackets [lo, hi] at once."""
    lo, hi = lo.copy(), hi.copy()
    f_lo = _row_areas(tr.positions(lo), triples)
    width = float(np.max(hi - lo)) if len(lo) else 0.0
    num_steps = max(0, math.ceil(math.log2(width / tolerance))) if width else 0
    for _ in range(num_steps):
        mid = 0.5 * (lo + hi)
        f_mid = _row_areas(tr.positions(mid), triples)
        same = np.signbit(f_mid) == np.signbit(f_lo)
        lo = np.where(same, mid, lo)
        f_lo = np.where(same, f_mid, f_lo)
        hi = np.where(same, hi, mid)
    return 0.5 * (lo + hi)


def detect_events(
    tr: Trajectory, tolerances: Optional[Tolerances] = None
) -> Tuple[List[CollinearityEvent], StabilityReport]:
    """Finds the critical moments of a trajectory.

    Usage example:

        ```python
        >>> tr = gnk.realize(gnk.parse_braid("s2 s2", 3), seed=1)
        >>> events, report = gnk.detect_events(tr)
        >>> [e.triple for e in events], report.passed
        ([(1, 3, 2), (1, 2, 3)], True)

        ```

    Args:
        tr: The trajectory.
        tolerances: Numerical tolerances. Defaults to `Tolerances()`.

    Returns:
        The events sorted by (t, triple), and a stability report. The events
        of a failed report should not be trusted.
    """
    if tolerances is None:
        tolerances = Tolerances()
    n = tr.n
    scale = tr.scale

    num_samples = max(tr.num_slices, 1) * tolerances.samples_per_slice
    grid = np.linspace(0.0, 1.0, num_samples + 1)
    z = tr.positions(grid)
    degeneracies: Set[Degeneracy] = set()

    distances = np.abs(z[:, :, None] - z[:, None, :])
    distances[:, np.arange(n), np.arange(n)] = np.inf
    if np.min(distances) < tolerances.collinearity_tolerance:
        degeneracies.add(Degeneracy.COLLISION)

    triples = np.array(list(itertools.combinations(range(n), 3)), np.int64)
    areas = _signed_areas(
        z[:, triples[:, 0]], z[:, triples[:, 1]], z[:, triples[:, 2]]
    )

    flips = np.signbit(areas[:-1]) != np.signbit(areas[1:])
    near_zero = np.abs(areas) < tolerances.collinearity_tolerance
    near_zero[:-1] &= ~flips
    near_zero[1:] &= ~flips
    if np.any(near_zero):
        degeneracies.add(Degeneracy.TANGENCY)

    sample_index, triple_index = np.nonzero(flips)
    times = _bisect(
        tr,
        grid[sample_index],
        grid[sample_index + 1],
        triples[triple_index],
        tolerances.time_tolerance,
    )

    h = min(1e-7, 0.25 / num_samples)
    event_triples = triples[triple_index]
    slopes = (
        _row_areas(tr.positions(times + h), event_triples)
        - _row_areas(tr.positions(times - h), event_triples)
    ) / (2 * h)

    events = []
    at_events = tr.positions(times)
    for row, (t, column, slope) in enumerate(
        zip(times, triple_index, slopes)
    ):
        points = at_events[row]
        strands = triples[column]
        event, flags = _classify(points, strands, t, slope, tolerances)
        degeneracies |= flags
        events.append(event)
        if abs(slope) < tolerances.min_slope * scale:
            degeneracies.add(Degeneracy.TANGENCY)

    events.sort(key=lambda e: (e.t, e.triple))
    gaps = np.diff([e.t for e in events])
    min_gap = float(np.min(gaps)) if len(gaps) else math.inf
    if min_gap < tolerances.min_event_gap:
        degeneracies.add(Degeneracy.SIMULTANEOUS_EVENTS)
    min_slope = float(np.min(np.abs(slopes))) if len(slopes) else math.inf

    report = StabilityReport(
        num_events=len(events),
        min_time_gap=min_gap,
        min_abs_slope=min_slope,
        degeneracies=tuple(d for d in Degeneracy if d in degeneracies),
        seed=tr.seed,
    )
    logging.debug("Event detection on %d slices: %s", tr.num_slices, report)
    return events, report


def _classify(
    points: np.ndarray,
    strands: np.ndarray,
    t: float,
    slope: float,
    tolerances: Tolerances,
) -> Tuple[CollinearityEvent, Set[Degeneracy]]:
    """Finds the middle strand of an event and checks the other points."""
    flags: Set[Degeneracy] = set()
    a, b, c = (points[x] for x in strands)
    # Pairs sorted by decreasing distance. The farthest pair are the ends.
    pairs = sorted(
        [(abs(a - b), 2), (abs(a - c), 1), (abs(b - c), 0)], reverse=True
    )
    if pairs[0][0] - pairs[1][0] < tolerances.collinearity_tolerance:
        flags.add(Degeneracy.MIDDLE_TIE)
    middle = int(strands[pairs[0][1]])
    ends = sorted(int(x) for x in strands if x != middle)

    start, end = points[ends[0]], points[ends[1]]
    direction = end - start
    length = abs(direction)
    for other in range(len(points)):
        if other in strands:
            continue
        distance = abs(np.imag(np.conj(direction) * (points[other] - start)))
        if length > 0 and distance / length < tolerances.collinearity_tolerance:
            flags.add(Degeneracy.FOUR_POINT_COLLINEAR)

    event = CollinearityEvent(
        t=float(t),
        triple=(ends[0] + 1, middle + 1, ends[1] + 1),
        orientation_flip=1 if slope > 0 else -1,
        slope=float(slope),
    )
    return event, flags
