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


class PsoState(namedtuple("PsoState", 'positions velocities personal_best personal_best_fitness '
                                      'global_best global_best_fitness iteration')):
    """
    Immutable snapshot of the swarm.

        - ``positions``: N x K particle positions x,
        - ``velocities``: N x K particle velocities v,
        - ``personal_best``: N x K historical best position of every particle (ppm),
        - ``personal_best_fitness``: N fitness values of ``personal_best`` (Uppm),
        - ``global_best``: K historical best position of the swarm (gpm),
        - ``global_best_fitness``: fitness of ``global_best`` (Ugpm),
        - ``iteration``: number of steps performed so far.

    """
    __slots__ = ()

    def __new__(cls, positions, velocities, personal_best, personal_best_fitness,
                global_best, global_best_fitness, iteration=0):
        return super(PsoState, cls).__new__(
            cls,
            as_readonly_array(positions, ndim=2),
            as_readonly_array(velocities, ndim=2),
            as_readonly_array(personal_best, ndim=2),
            as_readonly_array(personal_best_fitness, ndim=1),
            as_readonly_array(global_best, ndim=1),
            float(global_best_fitness),
            int(iteration))
