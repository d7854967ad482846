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

import unittest

import numpy as np

from mecgame.core import pso
from mecgame.core.errors import ArgumentError
from mecgame.core.game import potential
from mecgame.data_types.pso_config import PsoConfig

from tests.scenarios import grid_scenario


class TestPsoConfig(unittest.TestCase):

    def test_defaults(self):
        """ Tests the default hyperparameters and the bounds taken from the scenario. """
        config = PsoConfig.for_scenario(grid_scenario(4))
        self.assertEqual(config.n_particles, 6)
        self.assertEqual(config.max_iters, 5)
        self.assertEqual(config.inertia, 0.8)
        self.assertEqual(config.c1, 0.9)
        self.assertEqual(config.c2, 0.9)
        self.assertEqual(config.dim, 4)
        self.assertEqual(config.lower_bound, 1e-6)
        self.assertEqual(config.upper_bound, 5.0)

    def test_invalid(self):
        """ Tests that invalid hyperparameters raise an argument error. """
        valid = dict(n_particles=2, max_iters=1, inertia=0.5, c1=1.0, c2=1.0, dim=2,
                     lower_bound=0.1, upper_bound=1.0, seed=0)
        for key, value in (('n_particles', 0), ('max_iters', -1), ('inertia', 1.5), ('c1', -0.1), ('c2', float('inf')),
                           ('dim', 0), ('upper_bound', 0.1), ('seed', -3), ('n_particles', 2.5), ('max_iters', True)):
            params = dict(valid)
            params[key] = value
            with self.assertRaises(ArgumentError):
                PsoConfig(**params)


class TestSwarm(unittest.TestCase):

    def setUp(self):
        self.scenario = grid_scenario(2)
        self.config = PsoConfig.for_scenario(self.scenario, n_particles=4, max_iters=3, seed=11)

    def test_same_seed_same_swarm(self):
        """ Tests that a fixed seed gives bit-identical swarms. """
        first = pso.initialize(self.scenario, self.config)
        second = pso.initialize(self.scenario, self.config)
        np.testing.assert_array_equal(first.positions, second.positions)
        np.testing.assert_array_equal(first.personal_best_fitness, second.personal_best_fitness)
        third = pso.initialize(self.scenario, self.config._replace(seed=12))
        self.assertFalse(np.array_equal(first.positions, third.positions))

    def test_initial_state(self):
        """ Tests zero velocities, personal bests and the fittest particle as global best. """
        state = pso.initialize(self.scenario, self.config)
        np.testing.assert_array_equal(state.velocities, np.zeros((4, 2)))
        np.testing.assert_array_equal(state.personal_best, state.positions)
        best = int(np.argmax(state.personal_best_fitness))
        np.testing.assert_array_equal(state.global_best, state.positions[best])
        self.assertEqual(state.global_best_fitness, potential(self.scenario, state.positions[best]))
        self.assertEqual(state.iteration, 0)

    def test_single_particle(self):
        """ Tests that a single particle is its own global best. """
        state = pso.initialize(self.scenario, self.config._replace(n_particles=1))
        np.testing.assert_array_equal(state.global_best, state.positions[0])

    def test_initial_positions_within_bounds(self):
        """ Tests that initial positions stay within bounds over 10^4 seeds. """
        scenario = grid_scenario(1)
        for seed in range(10000):
            config = PsoConfig.for_scenario(scenario, n_particles=2, seed=seed)
            state = pso.initialize(scenario, config)
            self.assertTrue(np.all(state.positions >= scenario.p_floor))
            self.assertTrue(np.all(state.positions <= scenario.p_max))

    def test_frozen_swarm(self):
        """ Tests that zero coefficients leave positions and bests unchanged. """
        config = self.config._replace(inertia=0.0, c1=0.0, c2=0.0)
        state = pso.initialize(self.scenario, config)
        moved = pso.step(state, self.scenario, config)
        np.testing.assert_array_equal(moved.positions, state.positions)
        np.testing.assert_array_equal(moved.personal_best, state.personal_best)
        np.testing.assert_array_equal(moved.global_best, state.global_best)
        self.assertEqual(moved.global_best_fitness, state.global_best_fitness)
        self.assertEqual(moved.iteration, 1)

    def test_move_toward_global_best(self):
        """ Tests that pure group learning moves every coordinate toward the global best. """
        for seed in range(20):
            config = self.config._replace(c1=0.0, c2=1.0, seed=seed)
            state = pso.initialize(self.scenario, config)
            moved = pso.step(state, self.scenario, config)
            before = state.global_best - state.positions
            after = state.global_best - moved.positions
            self.assertTrue(np.all(np.abs(after) <= np.abs(before)))
            direction = np.sign(moved.positions - state.positions)
            self.assertTrue(np.all((direction == 0) | (direction == np.sign(before))))

    def test_positions_stay_in_box(self):
        """ Tests clamping and zeroed velocities of particles leaving the box. """
        config = self.config._replace(inertia=1.0, c1=2.0, c2=2.0, max_iters=10)
        states = []
        pso.optimize(self.scenario, config, observer=states.append)
        for state in states:
            self.assertTrue(np.all(state.positions >= config.lower_bound))
            self.assertTrue(np.all(state.positions <= config.upper_bound))
            on_bound = (state.positions == config.lower_bound) | (state.positions == config.upper_bound)
            np.testing.assert_array_equal(state.velocities[on_bound], 0.0)

    def test_monotone_bests(self):
        """ Tests that global and personal best fitness never decrease over random runs. """
        rng = np.random.default_rng(99)
        for _ in range(1000):
            config = PsoConfig.for_scenario(
                self.scenario, n_particles=3, max_iters=3, inertia=float(rng.uniform()),
                c1=float(rng.uniform(0.0, 2.0)), c2=float(rng.uniform(0.0, 2.0)), seed=int(rng.integers(2 ** 31)))
            states = []
            result = pso.optimize(self.scenario, config, observer=states.append)
            self.assertTrue(np.all(np.diff(result.trace) >= 0))
            for previous, current in zip(states[:-1], states[1:]):
                self.assertTrue(np.all(current.personal_best_fitness >= previous.personal_best_fitness))

    def test_no_iterations(self):
        """ Tests that zero iterations return the fittest initial particle. """
        config = self.config._replace(max_iters=0)
        state = pso.initialize(self.scenario, config)
        result = pso.optimize(self.scenario, config)
        np.testing.assert_array_equal(result.best_powers.powers, state.positions[int(np.argmax(state.personal_best_fitness))])
        self.assertEqual(result.best_potential, float(np.max(state.personal_best_fitness)))
        self.assertEqual(list(result.trace), [result.best_potential])

    def test_deterministic_optimization(self):
        """ Tests that two runs with the same seed give identical results. """
        first = pso.optimize(self.scenario, self.config)
        second = pso.optimize(self.scenario, self.config)
        np.testing.assert_array_equal(first.best_powers.powers, second.best_powers.powers)
        self.assertEqual(list(first.trace), list(second.trace))
        self.assertEqual(len(first.trace), self.config.max_iters + 1)
        self.assertEqual(first.best_potential, first.trace[-1])

    def test_seeded_bounds(self):
        """ Tests that seeding both power bounds gives a result at least as good as both. """
        scenario = grid_scenario(1)
        config = PsoConfig.for_scenario(scenario, n_particles=4, max_iters=2, seed=5)
        result = pso.optimize(scenario, config, initial_positions=[[scenario.p_max], [scenario.p_floor]])
        self.assertGreaterEqual(result.best_potential, potential(scenario, [scenario.p_max]))
        self.assertGreaterEqual(result.best_potential, potential(scenario, [scenario.p_floor]))

    def test_invalid_seeding(self):
        """ Tests that infeasible or oversized seeded swarms are rejected. """
        with self.assertRaises(ArgumentError):
            pso.initialize(self.scenario, self.config, initial_positions=[[6.0, 1.0]])
        with self.assertRaises(ArgumentError):
            pso.initialize(self.scenario, self.config, initial_positions=np.ones((5, 2)))
        with self.assertRaises(ArgumentError):
            pso.initialize(self.scenario, self.config, initial_positions=np.ones((1, 3)))

    def test_dimension_mismatch(self):
        """ Tests that the search dimension must match the number of base stations. """
        with self.assertRaises(ArgumentError):
            pso.initialize(grid_scenario(3), self.config)
        with self.assertRaises(ArgumentError):
            pso.initialize(self.scenario, self.config._replace(upper_bound=10.0))


class TestSwarmQuality(unittest.TestCase):

    def test_beats_equal_maximum_power(self):
        """ Tests that the swarm beats the all-maximum-power profile for at least 95 of 100 seeds. """
        scenario = grid_scenario(4)
        reference = potential(scenario, [scenario.p_max] * 4)
        wins = 0
        for seed in range(100):
            result = pso.optimize(scenario, PsoConfig.for_scenario(scenario, seed=seed))
            if result.best_potential >= reference:
                wins += 1
        self.assertGreaterEqual(wins, 95)


if __name__ == "__main__":
    unittest.main()
