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

"""Configuration options.

This module contains configuration options for gnk. These options can be set
by setting them at runtime, or by setting the corresponding environment
variables.

For example, to configure the default state budget of the G^2 class search to
5000 states, you can either:

- Run `gnk.config.default_budget = 5000`
- Set the `GNK_BUDGET` environment variable to 5000, for example by running
    `export GNK_BUDGET=5000` in a terminal before running your gnk code.
"""

import os

debug_mode = bool(os.environ.get("GNK_DEBUG_MODE", False))
"""Whether to run gnk in debugging mode. This will enable additional checks
and logging, which may slow down execution."""

# Word problem search
default_budget = int(os.environ.get("GNK_BUDGET", 1_000_000))
"""Default maximum number of states explored by the G^2 class search before
giving up with a BUDGET_EXHAUSTED certificate."""
max_verify_n = int(os.environ.get("GNK_MAX_VERIFY_N", 6))
"""Largest number of strands accepted by the relator suites."""
num_workers = int(os.environ.get("GNK_NUM_WORKERS", 1))
"""Number of worker processes used by the relator suites. 1 disables the
process pool."""

# Braid realization and event detection
default_epsilon = float(os.environ.get("GNK_EPSILON", 1e-3))
"""Default magnitude of the jitter applied to the base points, as a fraction of
the circumradius."""
default_retries = int(os.environ.get("GNK_RETRIES", 8))
"""Default number of fresh-seed retries when a realization is not stable."""
samples_per_slice = int(os.environ.get("GNK_SAMPLES_PER_SLICE", 2**9))
"""Number of sampling intervals per unit time slice (one slice per braid
letter) used to bracket collinearity events."""
time_tolerance = float(os.environ.get("GNK_TIME_TOLERANCE", 1e-12))
"""Width of the bisection bracket at which an event time is accepted."""
min_event_gap = float(os.environ.get("GNK_MIN_EVENT_GAP", 1e-6))
"""Smallest time gap allowed between two events of a stable trajectory."""
min_slope = float(os.environ.get("GNK_MIN_SLOPE", 1e-9))
"""Smallest |d(signed area)/dt| at an event, relative to the trajectory
scale."""
collinearity_tolerance = float(
    os.environ.get("GNK_COLLINEARITY_TOLERANCE", 1e-9)
)
"""Distance below which a fourth point is considered to lie on the line of an
event, and below which two points are considered to collide."""

# Limits for repr(word)
print_max_letters = int(os.environ.get("GNK_PRINT_MAX_LETTERS", 32))
"""Maximum number of letters to show when printing a Word."""
