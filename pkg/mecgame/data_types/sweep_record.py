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

import math
from collections import namedtuple

from mecgame.core.errors import ArgumentError


class SweepRecord(namedtuple("SweepRecord",
        'k_count alpha solution avg_utility avg_compute_efficiency sat avg_power wall_time '
        'density aggregate_compute_efficiency potential total_demand')):
    """
    One row of the sweep results: metrics of a single solution at a single (K, alpha) point.
    """
    __slots__ = ()

    def __new__(cls, k_count, alpha, solution, avg_utility, avg_compute_efficiency, sat, avg_power, wall_time,
                density, aggregate_compute_efficiency, potential, total_demand):
        if not isinstance(solution, str) or solution == '' or ',' in solution:
            raise ArgumentError("Invalid solution name {!r}".format(solution))
        values = [float(v) for v in (alpha, avg_utility, avg_compute_efficiency, sat, avg_power, wall_time,
                                     density, aggregate_compute_efficiency, potential, total_demand)]
        if not all(math.isfinite(v) for v in values):
            raise ArgumentError("Sweep record for '{}' at K={} contains non-finite values".format(solution, k_count))
        alpha, avg_utility, avg_compute_efficiency, sat, avg_power, wall_time, \
            density, aggregate_compute_efficiency, potential, total_demand = values
        return super(SweepRecord, cls).__new__(
            cls, int(k_count), alpha, solution, avg_utility, avg_compute_efficiency, sat, avg_power, wall_time,
            density, aggregate_compute_efficiency, potential, total_demand)

    def sort_key(self):
        """ Key ordering records by K, then alpha, then solution name. """
        return (self.k_count, self.alpha, self.solution)
