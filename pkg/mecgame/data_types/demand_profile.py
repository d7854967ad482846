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


class DemandProfile(namedtuple("DemandProfile", 'f_bs interference')):
    """
    Required computing resources ``f_bs`` [CPU cycles/bit] of every base station together with \
    the aggregate interference ``interference`` [W] each of them receives.
    """
    __slots__ = ()

    def __new__(cls, f_bs, interference):
        f_bs = as_readonly_array(f_bs, ndim=1)
        interference = as_readonly_array(interference, ndim=1)
        if f_bs.shape != interference.shape:
            raise DomainError("Demand and interference vectors differ in length ({} vs {})".format(
                len(f_bs), len(interference)))
        if not np.all(np.isfinite(f_bs)) or np.any(f_bs < 0):
            raise DomainError("Required computing resources must be finite and non-negative, got {}".format(f_bs))
        return super(DemandProfile, cls).__new__(cls, f_bs, interference)

    @property
    def total(self):
        """ Sum of the required computing resources. """
        return float(np.sum(self.f_bs))
