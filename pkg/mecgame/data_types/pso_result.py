# -*- coding: utf-8 -*-
#
# Copyright (C) 2026 The MecGame Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#      http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

from collections import namedtuple

from mecgame.data_types.power_profile import as_readonly_array


class PsoResult(namedtuple("PsoResult", 'best_powers best_potential trace final_state')):
    """
    Outcome of a swarm optimization: best power profile (gpm), its potential (Ugpm), \
    the history of Ugpm (initial value followed by one entry per step) and the last swarm state.
    """
    __slots__ = ()

    def __new__(cls, best_powers, best_potential, trace, final_state):
        return super(PsoResult, cls).__new__(
            cls, best_powers, float(best_potential), as_readonly_array(trace, ndim=1), final_state)
