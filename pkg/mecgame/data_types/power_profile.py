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


def as_readonly_array(values, ndim=None):
    """
    Returns a read-only float64 copy of ``values``.

    :param values: Array-like.

    :param ndim: Expected number of dimensions (DEFAULT: None, i.e. not checked).

    :return: ``numpy.ndarray`` with the writeable flag cleared.
    """
    array = np.array(values, dtype=np.float64, copy=True)
    if ndim is not None and array.ndim != ndim:
        raise DomainError("Expected a {}-D array, got shape {}".format(ndim, array.shape))
    array.setflags(write=False)
    return array


class PowerProfile(namedtuple("PowerProfile", 'powers')):
    """
    Strategy vector of the game: one transmit power [W] per base station.

    Bounds (``[p_floor, p_max]``) depend on the scenario and are checked by :py:func:`NetworkScenario.check_powers`.
    """
    __slots__ = ()

    def __new__(cls, powers):
        powers = as_readonly_array(powers, ndim=1)
        if not np.all(np.isfinite(powers)):
            raise DomainError("Transmit powers must be finite, got {}".format(powers))
        return super(PowerProfile, cls).__new__(cls, powers)

    @classmethod
    def uniform(cls, k_count, power):
        """
        Creates a profile where all ``k_count`` base stations transmit with the same ``power``.
        """
        return cls(np.full(k_count, float(power)))

    @property
    def k_count(self):
        """ Number of base stations. """
        return len(self.powers)
