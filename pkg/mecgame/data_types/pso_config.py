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

from mecgame.core.errors import ArgumentError


class PsoConfig(namedtuple("PsoConfig", 'n_particles max_iters inertia c1 c2 dim lower_bound upper_bound seed')):
    """
    Hyperparameters of the particle swarm:

        - ``n_particles``: swarm size N,
        - ``max_iters``: number of iterations Ger,
        - ``inertia``: inertia weight omega,
        - ``c1``: self-learning factor,
        - ``c2``: group-learning factor,
        - ``dim``: search dimension d (number of base stations),
        - ``lower_bound``/``upper_bound``: box constraints of every coordinate [W],
        - ``seed``: non-negative integer seed of the random streams.

    """
    __slots__ = ()

    def __new__(cls, n_particles, max_iters, inertia, c1, c2, dim, lower_bound, upper_bound, seed=0):
        for key, value in (('n_particles', n_particles), ('max_iters', max_iters), ('dim', dim), ('seed', seed)):
            if isinstance(value, bool) or int(value) != value:
                raise ArgumentError("PSO parameter '{}' must be an integer, got {!r}".format(key, value))
        n_particles, max_iters, dim, seed = int(n_particles), int(max_iters), int(dim), int(seed)
        inertia, c1, c2 = float(inertia), float(c1), float(c2)
        lower_bound, upper_bound = float(lower_bound), float(upper_bound)

        if n_particles < 1:
            raise ArgumentError("Swarm must contain at least one particle, got {}".format(n_particles))
        if max_iters < 0:
            raise ArgumentError("Number of iterations must be non-negative, got {}".format(max_iters))
        if not 0.0 <= inertia <= 1.0:
            raise ArgumentError("Inertia weight must lie in [0, 1], got {}".format(inertia))
        if not (c1 >= 0.0 and c2 >= 0.0 and math.isfinite(c1) and math.isfinite(c2)):
            raise ArgumentError("Learning factors must be finite and non-negative, got c1={} c2={}".format(c1, c2))
        if dim < 1:
            raise ArgumentError("Search dimension must be positive, got {}".format(dim))
        if not (math.isfinite(lower_bound) and math.isfinite(upper_bound) and lower_bound < upper_bound):
            raise ArgumentError("Invalid search bounds [{}, {}]".format(lower_bound, upper_bound))
        if seed < 0:
            raise ArgumentError("Seed must be non-negative, got {}".format(seed))

        return super(PsoConfig, cls).__new__(
            cls, n_particles, max_iters, inertia, c1, c2, dim, lower_bound, upper_bound, seed)

    @classmethod
    def for_scenario(cls, scenario, n_particles=6, max_iters=5, inertia=0.8, c1=0.9, c2=0.9, seed=0):
        """
        Creates a configuration searching the power box ``[p_floor, p_max]^K`` of the given scenario.

        Default hyperparameters are those used in the simulations (N=6, Ger=5, omega=0.8, c1=c2=0.9).
        """
        return cls(n_particles, max_iters, inertia, c1, c2, scenario.k_count,
                   scenario.p_floor, scenario.p_max, seed)
