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


class SolutionOutcome(namedtuple("SolutionOutcome", 'powers demand allocation evaluation trace')):
    """
    Everything a solution produced for one scenario:

        - ``powers``: chosen :py:class:`PowerProfile`,
        - ``demand``: :py:class:`DemandProfile` at those powers,
        - ``allocation``: :py:class:`AllocationResult` of the MEC server,
        - ``evaluation``: :py:class:`GameEvaluation` (utilities and potential),
        - ``trace``: Ugpm history of the swarm or None when no optimization took place.

    """
    __slots__ = ()
