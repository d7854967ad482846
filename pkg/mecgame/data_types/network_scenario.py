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

import numpy as np

from mecgame.core.errors import ArgumentError, DomainError
from mecgame.data_types.channel_params import ChannelParams
from mecgame.data_types.power_profile import PowerProfile, as_readonly_array

# Strictly positive lower bound of every transmit power [W].
DEFAULT_P_FLOOR = 1e-6


class NetworkScenario(namedtuple("NetworkScenario",
        'bs_positions pairwise_dist channel rho f_ue r_max p_max epsilon b server_capacity p_floor')):
    """
    Immutable description of a MEC network: base station geometry, channel and game constants.

        - ``bs_positions``: K x 2 positions [m],
        - ``pairwise_dist``: K x K distance matrix [m] (symmetric, zero diagonal, positive elsewhere),
        - ``channel``: :py:class:`ChannelParams`,
        - ``rho``: user density [users/m^2],
        - ``f_ue``: compute required by a single user [CPU cycles/bit],
        - ``r_max``: maximum coverage radius [m],
        - ``p_max``: maximum transmit power [W],
        - ``epsilon``: weight balancing demand and interference,
        - ``b``: weight used to build the exact potential,
        - ``server_capacity``: total compute of the MEC server [CPU cycles/bit],
        - ``p_floor``: strictly positive minimum transmit power [W].

    """
    __slots__ = ()

    def __new__(cls, bs_positions, pairwise_dist, channel, rho, f_ue, r_max, p_max,
                epsilon, b, server_capacity, p_floor=DEFAULT_P_FLOOR):
        bs_positions = as_readonly_array(bs_positions, ndim=2)
        pairwise_dist = as_readonly_array(pairwise_dist, ndim=2)
        k_count = bs_positions.shape[0]

        if k_count < 1 or bs_positions.shape[1] != 2:
            raise DomainError("Expected K x 2 base station positions, got shape {}".format(bs_positions.shape))
        if pairwise_dist.shape != (k_count, k_count):
            raise DomainError("Distance matrix must be {0} x {0}, got shape {1}".format(k_count, pairwise_dist.shape))
        if not np.all(np.isfinite(pairwise_dist)):
            raise DomainError("Distance matrix must be finite")
        if not np.array_equal(pairwise_dist, pairwise_dist.T):
            raise DomainError("Distance matrix must be symmetric")
        if np.any(np.diag(pairwise_dist) != 0):
            raise DomainError("Distance matrix must have a zero diagonal")
        if np.any(pairwise_dist[~np.eye(k_count, dtype=bool)] <= 0):
            raise DomainError("Distances between different base stations must be strictly positive")
        if not isinstance(channel, ChannelParams):
            raise DomainError("Channel must be an instance of ChannelParams, got {}".format(type(channel).__name__))

        rho, f_ue, r_max, p_max = float(rho), float(f_ue), float(r_max), float(p_max)
        epsilon, b = float(epsilon), float(b)
        server_capacity, p_floor = float(server_capacity), float(p_floor)
        for key, value in (('rho', rho), ('f_ue', f_ue), ('r_max', r_max), ('p_max', p_max), ('epsilon', epsilon),
                           ('b', b), ('server_capacity', server_capacity), ('p_floor', p_floor)):
            if not math.isfinite(value):
                raise DomainError("Scenario parameter '{}' must be finite, got {}".format(key, value))
        if rho < 0 or f_ue < 0 or server_capacity < 0 or epsilon < 0:
            raise DomainError("rho, f_ue, server_capacity and epsilon must be non-negative")
        if r_max <= 0 or p_max <= 0:
            raise DomainError("r_max and p_max must be strictly positive")
        if not 0.0 <= b <= 1.0:
            raise DomainError("Weight b must lie in [0, 1], got {}".format(b))
        if not 0.0 < p_floor < p_max:
            raise DomainError("Power floor must satisfy 0 < p_floor < p_max, got {}".format(p_floor))

        return super(NetworkScenario, cls).__new__(
            cls, bs_positions, pairwise_dist, channel, rho, f_ue, r_max, p_max,
            epsilon, b, server_capacity, p_floor)

    @property
    def k_count(self):
        """ Number of base stations K. """
        return self.bs_positions.shape[0]

    def check_index(self, k):
        """
        Validates a base station index.

        :return: ``k`` as int.
        """
        if isinstance(k, bool) or not isinstance(k, (int, np.integer)):
            raise ArgumentError("Base station index must be an integer, got {!r}".format(k))
        if not 0 <= k < self.k_count:
            raise ArgumentError("Base station index {} out of range [0, {})".format(k, self.k_count))
        return int(k)

    def check_power(self, power):
        """
        Validates a single transmit power against ``[p_floor, p_max]``.

        :return: ``power`` as float.
        """
        power = float(power)
        if not (math.isfinite(power) and self.p_floor <= power <= self.p_max):
            raise DomainError("Transmit power {} outside of [{}, {}]".format(power, self.p_floor, self.p_max))
        return power

    def check_powers(self, powers):
        """
        Validates a power profile for this scenario.

        :param powers: :py:class:`PowerProfile` or array-like of K powers.

        :return: Read-only ``numpy.ndarray`` of powers.
        """
        if not isinstance(powers, PowerProfile):
            powers = PowerProfile(powers)
        if powers.k_count != self.k_count:
            raise ArgumentError("Expected {} transmit powers, got {}".format(self.k_count, powers.k_count))
        if np.any(powers.powers < self.p_floor) or np.any(powers.powers > self.p_max):
            raise DomainError("Transmit powers {} outside of [{}, {}]".format(powers.powers, self.p_floor, self.p_max))
        return powers.powers

    def permuted(self, permutation):
        """
        Returns the same network with base stations relabeled: new BS ``i`` is old BS ``permutation[i]``.
        """
        permutation = np.asarray(permutation)
        return self._replace(
            bs_positions=as_readonly_array(self.bs_positions[permutation]),
            pairwise_dist=as_readonly_array(self.pairwise_dist[np.ix_(permutation, permutation)]))
