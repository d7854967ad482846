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

from mecgame.components.solutions.reference_solution import ReferenceSolution
from mecgame.core.allocation import allocate_capped_equal


class CappedEqualAllocationSolution(ReferenceSolution):
    """
    Equal allocation capped by the demand: s_k = min(f_k, S / K).
    """

    def __init__(self, name, config):
        super(CappedEqualAllocationSolution, self).__init__(name, CappedEqualAllocationSolution, config)

    def allocate(self, f_bs, scenario):
        return allocate_capped_equal(f_bs, scenario.server_capacity, scenario.k_count)
