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

from mecgame.components.optimizers.particle_swarm_optimizer import ParticleSwarmOptimizer
from mecgame.components.solutions.solution import Solution
from mecgame.core.allocation import allocate_lp


class ProposedSolution(Solution):
    """
    Power control by maximizing the potential of the game with a particle swarm (section ``pso``), \
    followed by the optimal (linear program) allocation of the server.
    """

    def __init__(self, name, config):
        super(ProposedSolution, self).__init__(name, ProposedSolution, config)
        self.optimizer = ParticleSwarmOptimizer(self.name + ".pso", self.config["pso"])

    def select_powers(self, scenario, seed):
        result = self.optimizer(scenario, seed)
        return result.best_powers, result.trace

    def allocate(self, f_bs, scenario):
        return allocate_lp(f_bs, scenario.server_capacity)
