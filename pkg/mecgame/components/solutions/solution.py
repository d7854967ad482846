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

import abc

import numpy as np

from mecgame.components.component import Component
from mecgame.core import game
from mecgame.core.demand import demand_profile
from mecgame.data_types.solution_outcome import SolutionOutcome


class Solution(Component):
    """
    Two-stage solution of a scenario: first the transmit powers are chosen, then the MEC server \
    resources are allocated to the resulting demands.
    """

    def __init__(self, name, class_type, config):
        """
        Initializes the solution.

        :param name: Name of the solution (also used in the results).

        :param class_type: Class type of the solution.

        :param config: Section of the registry configuring the solution.
        :type config: :py:class:`mecgame.configuration.ConfigInterface`

        """
        super(Solution, self).__init__(name, class_type, config)
        self._negative_deltas_reported = False

    @abc.abstractmethod
    def select_powers(self, scenario, seed):
        """
        Chooses the transmit powers.

        :return: Tuple (:py:class:`mecgame.data_types.PowerProfile`, trace of the optimizer or None).
        """
        pass

    @abc.abstractmethod
    def allocate(self, f_bs, scenario):
        """
        Splits the server capacity among base stations with demands ``f_bs``.

        :return: :py:class:`mecgame.data_types.AllocationResult`.
        """
        pass

    def _report_negative_deltas(self, scenario, powers):
        if self._negative_deltas_reported or scenario.k_count < 2:
            return
        deltas = game.pairwise_deltas(scenario, powers)
        off_diagonal = ~np.eye(scenario.k_count, dtype=bool)
        negative = int(np.sum(deltas[off_diagonal] < 0))
        if negative > 0:
            self.logger.warning("{} of {} demand deltas are negative (K={}, alpha={:g}): interference increases "
                                "the required computing resources".format(
                                    negative, scenario.k_count * (scenario.k_count - 1), scenario.k_count,
                                    scenario.channel.alpha))
            self._negative_deltas_reported = True

    def __call__(self, scenario, seed):
        """
        Solves the scenario.

        :param scenario: :py:class:`mecgame.data_types.NetworkScenario`.

        :param seed: Seed of the random streams.

        :return: :py:class:`mecgame.data_types.SolutionOutcome`.
        """
        powers, trace = self.select_powers(scenario, seed)
        demand = demand_profile(scenario, powers)
        allocation = self.allocate(demand.f_bs, scenario)
        evaluation = game.evaluate(scenario, powers)
        self._report_negative_deltas(scenario, powers)
        self.logger.debug("K={} alpha={:g}: potential {!r}, total demand {!r}, sat {!r}".format(
            scenario.k_count, scenario.channel.alpha, evaluation.potential, demand.total, allocation.sat))
        return SolutionOutcome(powers, demand, allocation, evaluation, trace)
