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

import numpy as np

from mecgame.core.errors import DomainError
from mecgame.data_types.power_profile import as_readonly_array


class GameEvaluation(namedtuple("GameEvaluation", 'utilities potential')):
    """
    Utilities of all base stations and the value of the potential function for one power profile.
    """
    __slots__ = ()

    def __new__(cls, utilities, potential):
        utilities = as_readonly_array(utilities, ndim=1)
        potential = float(potential)
        if not (np.all(np.isfinite(utilities)) and np.isfinite(potential)):
            raise DomainError("Game evaluation produced non-finite values")
        return super(GameEvaluation, cls).__new__(cls, utilities, potential)

    @property
    def average_utility(self):
        """ Mean utility over base stations. """
        return float(np.mean(self.utilities))
