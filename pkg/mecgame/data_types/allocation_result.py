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


class AllocationResult(namedtuple("AllocationResult", 's_bs sat')):
    """
    Computing resources granted by the MEC server to every base station (``s_bs``) \
    and the resulting average allocation coefficient (``sat``).
    """
    __slots__ = ()

    def __new__(cls, s_bs, sat):
        s_bs = as_readonly_array(s_bs, ndim=1)
        sat = float(sat)
        if np.any(s_bs < 0) or not np.all(np.isfinite(s_bs)):
            raise DomainError("Granted resources must be finite and non-negative, got {}".format(s_bs))
        if not 0.0 <= sat <= 1.0:
            raise DomainError("Allocation coefficient must lie in [0, 1], got {}".format(sat))
        return super(AllocationResult, cls).__new__(cls, s_bs, sat)

    def is_feasible(self, f_bs, capacity, tol=1e-9):
        """
        Checks the linear program constraints: ``0 <= s_k <= f_k`` and ``sum(s) <= capacity``.

        :param f_bs: Required computing resources.

        :param capacity: Server capacity S.

        :param tol: Absolute tolerance (DEFAULT: 1e-9).

        :return: True if the allocation is feasible.
        """
        f_bs = np.asarray(f_bs, dtype=np.float64)
        if f_bs.shape != self.s_bs.shape:
            return False
        return bool(np.all(self.s_bs <= f_bs + tol) and np.sum(self.s_bs) <= capacity + tol)
