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

"""
Scenarios shared by the unit tests.
"""

import numpy as np

from mecgame.application.scenario_factory import distance_matrix, make_grid_scenario
from mecgame.data_types.channel_params import ChannelParams
from mecgame.data_types.network_scenario import NetworkScenario
from mecgame.data_types.scenario_params import ScenarioParams


def line_scenario(positions_x, alpha=4.0, p_max=5.0, **kwargs):
    """
    Base stations placed on the x axis, other constants as in the simulations unless overridden.
    """
    params = ScenarioParams(p_max=p_max, **kwargs)
    positions = np.column_stack((np.asarray(positions_x, dtype=np.float64), np.zeros(len(positions_x))))
    return NetworkScenario(
        bs_positions=positions,
        pairwise_dist=distance_matrix(positions),
        channel=params.channel(alpha),
        rho=params.rho, f_ue=params.f_ue, r_max=params.r_max, p_max=params.p_max,
        epsilon=params.epsilon, b=params.b, server_capacity=params.server_capacity, p_floor=params.p_floor)


def grid_scenario(k_count, alpha=4.0, zone_side=100.0, **kwargs):
    """
    Grid scenario with the simulation constants, overridable through ``kwargs``.
    """
    return make_grid_scenario(k_count, zone_side, ScenarioParams(**kwargs), alpha)


def unit_channel(alpha=2.0):
    """
    Channel with all constants equal to one.
    """
    return ChannelParams(mu=1.0, sigma2=1.0, t_linear=1.0, alpha=alpha)


def table_channel(alpha=4.0):
    """
    Channel of the simulations: mu=1, sigma2=1e-15 W, T=10 dB.
    """
    return ChannelParams.from_db(mu=1.0, sigma2=1e-15, t_db=10.0, alpha=alpha)


def random_powers(rng, scenario, size=None):
    """
    Uniform powers within the bounds of the scenario.
    """
    shape = scenario.k_count if size is None else (size, scenario.k_count)
    return rng.uniform(scenario.p_floor, scenario.p_max, shape)
