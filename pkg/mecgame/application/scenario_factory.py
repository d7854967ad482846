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

import numpy as np

from mecgame.core.errors import ArgumentError
from mecgame.data_types.network_scenario import NetworkScenario


def grid_positions(k_count, zone_side):
    """
    Cell centers of a ceil(sqrt(K)) x ceil(sqrt(K)) grid covering the square zone, filled row by row.

    :return: K x 2 ``numpy.ndarray`` of positions [m].
    """
    n = math.ceil(math.sqrt(k_count))
    cell = zone_side / n
    index = np.arange(k_count)
    return np.column_stack((cell * (index % n + 0.5), cell * (index // n + 0.5)))


def distance_matrix(positions):
    """
    Euclidean distances between all pairs of positions.
    """
    positions = np.asarray(positions, dtype=np.float64)
    dx = positions[:, None, 0] - positions[None, :, 0]
    dy = positions[:, None, 1] - positions[None, :, 1]
    return np.hypot(dx, dy)


def make_grid_scenario(k_count, zone_side, params, alpha=4.0):
    """
    Builds a network of ``k_count`` base stations placed on a regular grid in a square zone.

    :param k_count: Number of base stations (at least 1).

    :param zone_side: Side of the zone [m].

    :param params: :py:class:`mecgame.data_types.ScenarioParams`.

    :param alpha: Path-loss exponent (DEFAULT: 4.0).

    :return: :py:class:`mecgame.data_types.NetworkScenario`.
    """
    if isinstance(k_count, bool) or int(k_count) != k_count or k_count < 1:
        raise ArgumentError("Number of base stations must be a positive integer, got {!r}".format(k_count))
    zone_side = float(zone_side)
    if not (math.isfinite(zone_side) and zone_side > 0):
        raise ArgumentError("Zone side must be positive, got {}".format(zone_side))

    positions = grid_positions(int(k_count), zone_side)
    return NetworkScenario(
        bs_positions=positions,
        pairwise_dist=distance_matrix(positions),
        channel=params.channel(alpha),
        rho=params.rho,
        f_ue=params.f_ue,
        r_max=params.r_max,
        p_max=params.p_max,
        epsilon=params.epsilon,
        b=params.b,
        server_capacity=params.server_capacity,
        p_floor=params.p_floor)
