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

"""Realization of pure braids as motions of n points in the plane.

Positions are complex numbers. Slot s sits at exp(2πi s / n), moved by a
deterministic jitter. Each braid letter takes one unit time slice, and the
whole motion is rescaled to t in [0, 1].
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Optional, Tuple

import numpy as np

from gnk.core.braids.braid_word import BraidWord, check_pure, slot_sequence
from gnk.core.data.generators import check_num_strands
from gnk.utils import config


@dataclass(frozen=True)
class HalfTwist:
    """Motion of one time slice: two points rotate by π about their midpoint.

    Attributes:
        slot: The points in slots `slot` and `slot + 1` move.
        sign: +1 for a counterclockwise rotation, -1 for clockwise.
        strands: Strands in slots `slot` and `slot + 1` at the start of the
            slice.
        center: Midpoint of the two slots.
        radius: Half the distance between the two slots.
    """

    slot: int
    sign: int
    strands: Tuple[int, int]
    center: complex
    radius: float


def base_configuration(n: int, epsilon: float, seed: int) -> np.ndarray:
    """Slot positions: the n-th roots of unity, each moved by at most
    `epsilon` along each axis."""
    check_num_strands(n)
    angles = 2 * np.pi * np.arange(1, n + 1) / n
    rng = np.random.default_rng(seed)
    jitter = rng.uniform(-1.0, 1.0, size=(n, 2)) * epsilon
    return np.exp(1j * angles) + jitter[:, 0] + 1j * jitter[:, 1]


@dataclass(frozen=True, eq=False)
class Trajectory:
    """A piecewise analytic motion of n points over t in [0, 1].

    Attributes:
        n: Number of strands.
        base: Position of each slot, shape [n], complex. Both the start and
            the end configuration.
        segments: One half-twist per braid letter.
        epsilon: Jitter magnitude used to build `base`.
        seed: Jitter seed used to build `base`.
    """

    n: int
    base: np.ndarray
    segments: Tuple[HalfTwist, ...]
    epsilon: float
    seed: int

    def __post_init__(self):
        # Strand-indexed positions at the start of each slice.
        starts = np.empty((max(self.num_slices, 1), self.n), np.complex128)
        slots = list(range(self.n))
        for m in range(len(starts)):
            starts[m, slots] = self.base
            if m < self.num_slices:
                s = self.segments[m].slot - 1
                slots[s], slots[s + 1] = slots[s + 1], slots[s]
        object.__setattr__(self, "_starts", starts)
        object.__setattr__(
            self,
            "_centers",
            np.array([x.center for x in self.segments], np.complex128),
        )
        object.__setattr__(
            self,
            "_moving",
            np.array(
                [[a - 1, b - 1] for a, b in (x.strands for x in self.segments)],
                np.int64,
            ).reshape(-1, 2),
        )
        object.__setattr__(
            self,
            "_signs",
            np.array([x.sign for x in self.segments], np.float64),
        )

    @property
    def num_slices(self) -> int:
        return len(self.segments)

    @property
    def scale(self) -> float:
        """Magnitude of the time derivative of signed areas.

        Signed areas are quadratic in lengths (circumradius 1) and the time of
        every slice is compressed by the number of slices.
        """
        return float(max(self.num_slices, 1))

    def positions(self, t) -> np.ndarray:
        """Positions of the strands at times `t`.

        Args:
            t: Scalar or array of times in [0, 1].

        Returns:
            Complex array of shape [len(t), n]. Column `x - 1` is strand x.
        """
        t = np.atleast_1d(np.asarray(t, dtype=np.float64))
        if not self.segments:
            return np.repeat(self._starts[:1], len(t), axis=0)

        scaled = np.clip(t, 0.0, 1.0) * self.num_slices
        index = np.minimum(
            np.floor(scaled).astype(np.int64), self.num_slices - 1
        )
        u = scaled - index

        result = self._starts[index].copy()
        rows = np.arange(len(t))
        centers = self._centers[index]
        phase = np.exp(1j * np.pi * self._signs[index] * u)
        for column in range(2):
            strand = self._moving[index, column]
            result[rows, strand] = (
                centers + (self._starts[index, strand] - centers) * phase
            )
        return result


def realize(
    b: BraidWord, epsilon: Optional[float] = None, seed: int = 0
) -> Trajectory:
    """Realizes a pure braid as a motion of points.

    For the letter σ_s^{±1}, the points in slots s and s + 1 rotate by π
    about the midpoint of the two slots, counterclockwise for +1. Every other
    point stays put. The disk swept by the two points contains no other
    slot, since the slots are (nearly) on a circle.

    Usage example:

        ```python
        >>> tr = gnk.realize(gnk.parse_braid("s2 s2", 3), epsilon=0.0)
        >>> bool(np.allclose(tr.positions(1.0), tr.positions(0.0)))
        True

        ```

    Args:
        b: A pure braid.
        epsilon: Jitter magnitude, relative to the unit circumradius.
            Defaults to `config.default_epsilon`.
        seed: Jitter seed.

    Raises:
        ValueError: If `b` is not pure or `epsilon` < 0.
    """
    check_pure(b)
    if epsilon is None:
        epsilon = config.default_epsilon
    if not isinstance(epsilon, (int, float)) or epsilon < 0:
        raise ValueError(
            f"epsilon should be a number >= 0. Got {epsilon!r} of type"
            f" {type(epsilon)}."
        )
    base = base_configuration(b.n, float(epsilon), seed)

    segments = []
    for letter, slots in zip(b.letters, slot_sequence(b)):
        s = letter.index - 1
        first, second = base[s], base[s + 1]
        segments.append(
            HalfTwist(
                slot=letter.index,
                sign=letter.sign,
                strands=(slots[s], slots[s + 1]),
                center=complex((first + second) / 2),
                radius=float(abs(second - first) / 2),
            )
        )
    logging.debug(
        "Realized a braid of %d letters on %d strands (seed=%d)",
        len(b),
        b.n,
        seed,
    )
    return Trajectory(
        n=b.n,
        base=base,
        segments=tuple(segments),
        epsilon=float(epsilon),
        seed=seed,
    )
