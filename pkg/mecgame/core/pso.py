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
Global-best particle swarm optimization of the potential function over the box [lower_bound, upper_bound]^K.

Random streams: initialization draws from ``SeedSequence(seed, spawn_key=(0,))``, step ``t`` draws from \
``SeedSequence(seed, spawn_key=(1, t))``, both through the PCG64 bit generator. Results therefore only depend \
on the seed and on the number of steps performed.
"""

import numpy as np

from mecgame.core.errors import ArgumentError
from mecgame.core.game import potential
from mecgame.data_types.power_profile import PowerProfile
from mecgame.data_types.pso_result import PsoResult
from mecgame.data_types.pso_state import PsoState


def _generator(seed, *spawn_key):
    return np.random.Generator(np.random.PCG64(np.random.SeedSequence(seed, spawn_key=spawn_key)))


def fitness(scenario, positions):
    """
    Evaluates the potential of every particle, in particle order.

    :param positions: N x K matrix of power profiles.

    :return: ``numpy.ndarray`` of N potential values.
    """
    return np.array([potential(scenario, row) for row in np.asarray(positions, dtype=np.float64)])


def _check_config(scenario, config):
    if config.dim != scenario.k_count:
        raise ArgumentError("Search dimension {} differs from the number of base stations {}".format(
            config.dim, scenario.k_count))
    if config.lower_bound < scenario.p_floor or config.upper_bound > scenario.p_max:
        raise ArgumentError("Search bounds [{}, {}] exceed the power range [{}, {}] of the scenario".format(
            config.lower_bound, config.upper_bound, scenario.p_floor, scenario.p_max))


def initialize(scenario, config, initial_positions=None):
    """
    Creates the initial swarm: uniform random positions in the search box, zero velocities, \
    personal bests equal to the positions and the global best being the fittest particle.

    :param scenario: :py:class:`mecgame.data_types.NetworkScenario`.

    :param config: :py:class:`mecgame.data_types.PsoConfig`.

    :param initial_positions: Optional M x K matrix (M <= N) of feasible particles replacing the first \
    M random ones (DEFAULT: None).

    :return: :py:class:`mecgame.data_types.PsoState`.
    """
    _check_config(scenario, config)
    low, high = config.lower_bound, config.upper_bound

    rng = _generator(config.seed, 0)
    positions = np.clip(low + (high - low) * rng.random((config.n_particles, config.dim)), low, high)

    if initial_positions is not None:
        seeded = np.atleast_2d(np.asarray(initial_positions, dtype=np.float64))
        if seeded.shape[0] > config.n_particles or seeded.shape[1] != config.dim:
            raise ArgumentError("Cannot seed a swarm of {} x {} with {} particles".format(
                config.n_particles, config.dim, seeded.shape))
        if np.any(seeded < low) or np.any(seeded > high):
            raise ArgumentError("Seeded particles must lie within [{}, {}]".format(low, high))
        positions[:seeded.shape[0]] = seeded

    values = fitness(scenario, positions)
    best = int(np.argmax(values))
    return PsoState(
        positions=positions,
        velocities=np.zeros_like(positions),
        personal_best=positions,
        personal_best_fitness=values,
        global_best=positions[best],
        global_best_fitness=values[best],
        iteration=0)


def step(state, scenario, config):
    """
    Performs a single iteration of the swarm.

    Velocities follow v = w v + c1 r1 (ppm - x) + c2 r2 (gpm - x), with one uniform draw per particle and term. \
    Positions leaving the box are clamped and the corresponding velocity components are zeroed. \
    Bests are replaced on strict improvement only, in particle order.

    :param state: Current :py:class:`mecgame.data_types.PsoState`.

    :return: New :py:class:`mecgame.data_types.PsoState`.
    """
    _check_config(scenario, config)
    rng = _generator(config.seed, 1, state.iteration)
    r1 = rng.random((config.n_particles, 1))
    r2 = rng.random((config.n_particles, 1))

    positions = np.array(state.positions)
    velocities = config.inertia * state.velocities \
        + config.c1 * r1 * (state.personal_best - positions) \
        + config.c2 * r2 * (state.global_best - positions)
    positions = positions + velocities

    out_of_box = (positions < config.lower_bound) | (positions > config.upper_bound)
    positions = np.clip(positions, config.lower_bound, config.upper_bound)
    velocities[out_of_box] = 0.0

    values = fitness(scenario, positions)

    personal_best = np.array(state.personal_best)
    personal_best_fitness = np.array(state.personal_best_fitness)
    global_best = np.array(state.global_best)
    global_best_fitness = state.global_best_fitness
    for i in range(config.n_particles):
        if values[i] > personal_best_fitness[i]:
            personal_best[i] = positions[i]
            personal_best_fitness[i] = values[i]
        if values[i] > global_best_fitness:
            global_best = positions[i].copy()
            global_best_fitness = values[i]

    return PsoState(positions, velocities, personal_best, personal_best_fitness,
                    global_best, global_best_fitness, state.iteration + 1)


def optimize(scenario, config, initial_positions=None, observer=None):
    """
    Runs the swarm for ``config.max_iters`` steps.

    :param initial_positions: Optional seeded particles, see :py:func:`initialize`.

    :param observer: Optional callable receiving every state (the initial one included).

    :return: :py:class:`mecgame.data_types.PsoResult`; its trace holds the initial best fitness \
    followed by the best fitness after every step.
    """
    state = initialize(scenario, config, initial_positions)
    if observer is not None:
        observer(state)
    trace = [state.global_best_fitness]
    for _ in range(config.max_iters):
        state = step(state, scenario, config)
        if observer is not None:
            observer(state)
        trace.append(state.global_best_fitness)
    return PsoResult(PowerProfile(state.global_best), state.global_best_fitness, trace, state)
