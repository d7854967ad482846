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

from mecgame.components.solutions.solution import Solution
from mecgame.data_types.power_profile import PowerProfile


class ReferenceSolution(Solution):
    """
    Base of the reference solutions: no power control, all base stations transmit with the same \
    configured power (``transmit_power``: ``max`` or a value in watts).
    """

    def __init__(self, name, class_type, config):
        super(ReferenceSolution, self).__init__(name, class_type, config)
        self.transmit_power = self.config["transmit_power"]
        if self.transmit_power != 'max':
            self.transmit_power = self.get_param("transmit_power", float)

    def select_powers(self, scenario, seed):
        """
        Returns the uniform power profile (``seed`` is unused).
        """
        power = scenario.p_max if self.transmit_power == 'max' else scenario.check_power(self.transmit_power)
        return PowerProfile.uniform(scenario.k_count, power), None
