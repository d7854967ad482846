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

from mecgame.data_types.channel_params import ChannelParams, db_to_linear
from mecgame.data_types.network_scenario import DEFAULT_P_FLOOR


class ScenarioParams(namedtuple("ScenarioParams",
        'f_ue rho mu t_linear sigma2 p_max p_floor r_max server_capacity epsilon b')):
    """
    Channel and game constants shared by all scenarios of a sweep (everything but geometry and alpha).

    Defaults are the simulation parameters: f_ue=1, rho=1e-2, mu=1, T=10 dB, sigma2=1e-15 W, P_max=5 W, \
    r_M=100 m, S=1, epsilon=0.5, b=0.5.
    """
    __slots__ = ()

    def __new__(cls, f_ue=1.0, rho=1e-2, mu=1.0, t_linear=10.0, sigma2=1e-15, p_max=5.0,
                p_floor=DEFAULT_P_FLOOR, r_max=100.0, server_capacity=1.0, epsilon=0.5, b=0.5):
        return super(ScenarioParams, cls).__new__(
            cls, float(f_ue), float(rho), float(mu), float(t_linear), float(sigma2), float(p_max),
            float(p_floor), float(r_max), float(server_capacity), float(epsilon), float(b))

    @classmethod
    def from_config(cls, config):
        """
        Builds the parameters from a configuration section holding the SINR threshold in dB (``t_db``).

        :param config: Mapping (e.g. :py:class:`mecgame.configuration.ConfigInterface`) with the keys \
        f_ue, rho, mu, t_db, sigma2, p_max, p_floor, r_max, server_capacity, epsilon, b.

        """
        return cls(
            f_ue=config['f_ue'], rho=config['rho'], mu=config['mu'],
            t_linear=db_to_linear(float(config['t_db'])), sigma2=config['sigma2'],
            p_max=config['p_max'], p_floor=config['p_floor'], r_max=config['r_max'],
            server_capacity=config['server_capacity'], epsilon=config['epsilon'], b=config['b'])

    def channel(self, alpha):
        """
        Returns the :py:class:`ChannelParams` for a given path-loss exponent.
        """
        return ChannelParams(self.mu, self.sigma2, self.t_linear, alpha)
