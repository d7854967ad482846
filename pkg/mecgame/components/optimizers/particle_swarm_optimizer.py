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

import numpy as np

from mecgame.components.component import Component
from mecgame.configuration.configuration_error import ConfigurationError
from mecgame.core import pso
from mecgame.data_types.pso_config import PsoConfig


class ParticleSwarmOptimizer(Component):
    """
    Searches the transmit powers maximizing the potential of the game with a global-best particle swarm.
    """

    def __init__(self, name, config):
        """
        Initializes the optimizer, loads its defaults (swarm size, iterations, inertia, learning factors).

        :param name: Name of the component.

        :param config: Section of the registry configuring the component.
        :type config: :py:class:`mecgame.configuration.ConfigInterface`

        """
        super(ParticleSwarmOptimizer, self).__init__(name, ParticleSwarmOptimizer, config)

        self.n_particles = self.get_param("n_particles", int)
        self.max_iters = self.get_param("max_iters", int)
        self.inertia = self.get_param("inertia", float)
        self.c1 = self.get_param("c1", float)
        self.c2 = self.get_param("c2", float)
        self.seed_with_bounds = self.get_param("seed_with_bounds", bool)
        if self.seed_with_bounds and self.n_particles < 2:
            raise ConfigurationError("Seeding the swarm with both bounds requires at least 2 particles, got {}".format(
                self.n_particles))

    def build_config(self, scenario, seed):
        """
        Creates the swarm configuration for a given scenario.

        :return: :py:class:`mecgame.data_types.PsoConfig`.
        """
        try:
            return PsoConfig.for_scenario(scenario, self.n_particles, self.max_iters, self.inertia,
                                          self.c1, self.c2, seed)
        except ValueError as e:
            raise ConfigurationError("Invalid swarm configuration in section '{}': {}".format(self.name, e))

    def __call__(self, scenario, seed):
        """
        Runs the swarm on the scenario.

        :param scenario: :py:class:`mecgame.data_types.NetworkScenario`.

        :param seed: Seed of the swarm.

        :return: :py:class:`mecgame.data_types.PsoResult`.
        """
        config = self.build_config(scenario, seed)

        initial_positions = None
        if self.seed_with_bounds:
            initial_positions = np.array([np.full(scenario.k_count, scenario.p_max),
                                          np.full(scenario.k_count, scenario.p_floor)])

        def log_state(state):
            self.logger.debug("Iteration {:d}: Ugpm = {!r}".format(state.iteration, state.global_best_fitness))

        result = pso.optimize(scenario, config, initial_positions, observer=log_state)
        self.logger.debug("Swarm finished after {} iterations with potential {!r}".format(
            config.max_iters, result.best_potential))
        return result
