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

# type: ignore
# pylint: disable=wrong-import-position
# pylint: disable=line-too-long
# pylint: disable=no-name-in-module
# fmt: off

"""gnk: computable G_n^k groups, braid invariants and certificates."""

# NOTE: If you need to import something here that isn't part of the public API,
# import it with a private name (and delete the symbol if possible):
# from gnk.module import submodule as _submodule
# del _submodule

__version__ = "0.1.0"


# ================== #
# PUBLIC API SYMBOLS #
# ================== #

# Generators
from gnk.core.data.generators import OrderedPairLabel
from gnk.core.data.generators import TripleGenerator
from gnk.core.data.generators import PlainTripleGenerator
from gnk.core.data.generators import PairPairGenerator
from gnk.core.data.generators import label
from gnk.core.data.generators import triple
from gnk.core.data.generators import pair_pair
from gnk.core.data.generators import all_labels

# Words
from gnk.core.data.word import Word
from gnk.core.data.word import WordKind
from gnk.core.data.word import ParityVector
from gnk.core.data.word import word
from gnk.core.data.word import free_reduce_involutive
from gnk.core.data.word import reverse_word
from gnk.core.data.word import parity_vector

# G^2 word problem
from gnk.core.g2.moves import CommutationMode
from gnk.core.g2.moves import commutes
from gnk.core.g2.moves import exchange_applicable
from gnk.core.g2.moves import neighbors
from gnk.core.g2.reduction import ReductionCertificate
from gnk.core.g2.reduction import ReductionStatus
from gnk.core.g2.reduction import MinimalityCertificate
from gnk.core.g2.reduction import MinimalityStatus
from gnk.core.g2.reduction import EqualityResult
from gnk.core.g2.reduction import EqualityVerdict
from gnk.core.g2.reduction import Evidence
from gnk.core.g2.reduction import reduce_to_minimal
from gnk.core.g2.reduction import is_minimal
from gnk.core.g2.reduction import words_equal
from gnk.core.g2.relators import enumerate_g2_relators

# `G_n^3 and phi
from gnk.core.g3.relators import GroupContextG3
from gnk.core.g3.relators import G3Variant
from gnk.core.g3.relators import RelatorTag
from gnk.core.g3.relators import enumerate_relators
from gnk.core.g3.phi import phi_generator
from gnk.core.g3.phi import phi_word
from gnk.core.g3.phi import project_to_plain
from gnk.core.g3.phi import certify_minimal_via_phi
from gnk.core.g3.phi import verify_phi_well_defined
from gnk.core.g3.probes import probe_phi_kernel

# Free product of Z_2's
from gnk.core.free_z2.automorphism import Z2FreeWord
from gnk.core.free_z2.automorphism import FreeAutomorphism
from gnk.core.free_z2.automorphism import g_of_generator
from gnk.core.free_z2.automorphism import g_of_word
from gnk.core.free_z2.automorphism import apply
from gnk.core.free_z2.automorphism import compose
from gnk.core.free_z2.automorphism import aut_equal
from gnk.core.free_z2.verification import verify_g_well_defined

# Braids
from gnk.core.braids.braid_word import BraidWord
from gnk.core.braids.braid_word import BraidSyntaxError
from gnk.core.braids.braid_word import parse_braid
from gnk.core.braids.braid_word import format_braid
from gnk.core.braids.braid_word import permutation
from gnk.core.braids.braid_word import is_pure
from gnk.core.braids.braid_word import inverse
from gnk.core.braids.braid_word import random_pure_braid
from gnk.core.braids.trajectory import Trajectory
from gnk.core.braids.trajectory import realize
from gnk.core.braids.events import Tolerances
from gnk.core.braids.events import CollinearityEvent
from gnk.core.braids.events import StabilityReport
from gnk.core.braids.events import detect_events
from gnk.core.braids.invariant import DegenerateTrajectoryError
from gnk.core.braids.invariant import f_invariant
from gnk.core.braids.invariant import Phi
from gnk.core.braids.invariant import g_action
from gnk.core.braids.invariant import phi_from_events
from gnk.core.braids.invariant import verify_braid_relations

# Reports
from gnk.core.reports import CheckStatus
from gnk.core.reports import VerificationReport

# Serialization
from gnk.core.serialization import to_json
from gnk.core.serialization import dumps
from gnk.core.serialization import save

# IO
from gnk import io

# Config
from gnk.utils import config

# Remove automatic file tree symbols from public API
# pylint: disable=undefined-variable
del core
del utils
