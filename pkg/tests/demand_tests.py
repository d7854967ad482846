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
import unittest

import numpy as np
from scipy import special

from mecgame.core import demand
from mecgame.core.errors import ArgumentError, DomainError

from tests.scenarios import grid_scenario, line_scenario


def closed_form_kernel(c, alpha, r_upper):
    """ Lower incomplete gamma expression of the kernel integral. """
    a = 1.0 + 1.0 / alpha
    return special.gammainc(a, c * r_upper ** alpha) * special.gamma(a) / (alpha * c ** a)


class TestKernelIntegral(unittest.TestCase):

    def test_zero_rate(self):
        """ Tests the polynomial case c = 0. """
        self.assertAlmostEqual(demand.kernel_integral(0.0, 2.0, 3.0), 9.0, places=10)

    def test_known_value(self):
        """ Tests the integral of r exp(-r) over [0, 1]. """
        self.assertTrue(math.isclose(demand.kernel_integral(1.0, 1.0, 1.0), 1.0 - 2.0 / math.e, rel_tol=1e-10))

    def test_simulation_rate(self):
        """ Tests the rate of a lonely 5 W base station with the simulation constants. """
        value = demand.kernel_integral(2e-15, 4.0, 100.0)
        self.assertLessEqual(abs(value - closed_form_kernel(2e-15, 4.0, 100.0)) / value, 1e-8)

    def test_incomplete_gamma_grid(self):
        """ Tests the quadrature against the incomplete gamma closed form on a grid of rates, exponents and radii. """
        for c in np.logspace(-18, 2, 21):
            for alpha in (2.0, 3.0, 4.0, 5.0):
                for r_upper in (1.0, 10.0, 100.0):
                    expected = closed_form_kernel(c, alpha, r_upper)
                    value = demand.kernel_integral(c, alpha, r_upper)
                    self.assertLessEqual(abs(value - expected) / expected, 1e-8,
                                         msg="c={} alpha={} R={}".format(c, alpha, r_upper))

    def test_monotone_in_radius(self):
        """ Tests that the integral grows with the upper limit until the integrand vanishes. """
        values = [demand.kernel_integral(1e-6, 4.0, r) for r in np.linspace(1.0, 60.0, 25)]
        self.assertTrue(np.all(np.diff(values) > 0))
        # Beyond c r^alpha = 50 (r ~ 84 m here) the integral has converged.
        tail = [demand.kernel_integral(1e-6, 4.0, r) for r in (85.0, 90.0, 100.0)]
        self.assertEqual(tail, [tail[0]] * 3)
        self.assertGreater(tail[0], values[-1])

    def test_invalid_arguments(self):
        """ Tests that negative or non-finite inputs raise a domain error. """
        for args in ((-1.0, 4.0, 100.0), (1.0, 0.0, 100.0), (1.0, 4.0, 0.0), (float('nan'), 4.0, 1.0),
                     (1.0, 4.0, float('inf'))):
            with self.assertRaises(DomainError):
                demand.kernel_integral(*args)


class TestRequiredCompute(unittest.TestCase):

    def test_single_base_station_oracle(self):
        """ Tests the demand of a lonely base station against the closed form with the simulation constants. """
        scenario = grid_scenario(1)
        c = 1.0 * 10.0 * 1e-15 / 5.0
        expected = 2.0 * 1.0 * 1e-2 * math.pi * 4.0 * c * closed_form_kernel(c, 4.0, 100.0)
        value = demand.required_compute(scenario, [5.0], 0)
        self.assertTrue(math.isclose(value, expected, rel_tol=1e-8))

    def test_single_base_station_equals_max(self):
        """ Tests that without interference the demand equals the attainable resources. """
        scenario = grid_scenario(1, alpha=3.0)
        for p in (1e-3, 0.5, 5.0):
            self.assertEqual(demand.required_compute(scenario, [p], 0), demand.max_compute(scenario, p))

    def test_zero_users(self):
        """ Tests that a zero per-user compute or a zero density gives zero demand. """
        for scenario in (grid_scenario(4, f_ue=0.0), grid_scenario(4, rho=0.0)):
            for k in range(4):
                self.assertEqual(demand.required_compute(scenario, [2.0] * 4, k), 0.0)

    def test_relabel_invariance(self):
        """ Tests that relabeling base stations does not change individual demands. """
        rng = np.random.default_rng(17)
        scenario = grid_scenario(5, alpha=3.0)
        powers = rng.uniform(0.1, 5.0, 5)
        permutation = rng.permutation(5)
        permuted = scenario.permuted(permutation)
        for i in range(5):
            self.assertTrue(math.isclose(demand.required_compute(permuted, powers[permutation], i),
                                         demand.required_compute(scenario, powers, permutation[i]), rel_tol=1e-10))

    def test_demand_profile(self):
        """ Tests that the demand profile gathers individual demands. """
        scenario = grid_scenario(4)
        powers = [0.5, 1.5, 2.5, 3.5]
        profile = demand.demand_profile(scenario, powers)
        for k in range(4):
            self.assertEqual(profile.f_bs[k], demand.required_compute(scenario, powers, k))
        self.assertAlmostEqual(profile.total, float(np.sum(profile.f_bs)))

    def test_power_out_of_range(self):
        """ Tests that invalid profiles are rejected. """
        scenario = grid_scenario(2)
        with self.assertRaises(DomainError):
            demand.required_compute(scenario, [1.0, 7.0], 0)
        with self.assertRaises(ArgumentError):
            demand.required_compute(scenario, [1.0, 1.0], 2)
        with self.assertRaises(DomainError):
            demand.max_compute(scenario, 0.0)


class TestDemandDelta(unittest.TestCase):

    def test_silent_interferer(self):
        """ Tests that a zero interfering power causes no delta. """
        scenario = grid_scenario(2)
        self.assertEqual(demand.demand_delta(scenario, 3.0, 0.0, 50.0), 0.0)

    def test_distant_interferer(self):
        """ Tests that a very distant interferer causes a negligible delta. """
        scenario = grid_scenario(2)
        delta = demand.demand_delta(scenario, 3.0, 5.0, 1e9)
        self.assertLess(abs(delta), 1e-12 * demand.max_compute(scenario, 3.0))

    def test_recomposition(self):
        """ Tests that the delta plus the interfered demand gives back the attainable resources for two stations. """
        for alpha in (3.0, 4.0):
            scenario = line_scenario([0.0, 50.0], alpha=alpha)
            powers = [3.0, 1.5]
            for k, m in ((0, 1), (1, 0)):
                recomposed = demand.demand_delta(scenario, powers[k], powers[m], 50.0) + \
                    demand.required_compute(scenario, powers, k)
                self.assertTrue(math.isclose(recomposed, demand.max_compute(scenario, powers[k]), rel_tol=1e-8))

    def test_matches_interfered_demand(self):
        """ Tests the delta of either base station against the demands of a two-station profile. """
        scenario = line_scenario([0.0, 40.0])
        self.assertEqual(demand.demand_delta(scenario, 2.0, 4.0, 40.0),
                         demand.max_compute(scenario, 2.0) - demand.required_compute(scenario, [2.0, 4.0], 0))
        self.assertEqual(demand.demand_delta(scenario, 4.0, 2.0, 40.0),
                         demand.max_compute(scenario, 4.0) - demand.required_compute(scenario, [2.0, 4.0], 1))

    def test_invalid_arguments(self):
        """ Tests that invalid powers and distances raise a domain error. """
        scenario = grid_scenario(2)
        for args in ((0.0, 1.0, 10.0), (1.0, -1.0, 10.0), (1.0, 6.0, 10.0), (1.0, 1.0, 0.0), (1.0, 1.0, -5.0)):
            with self.assertRaises(DomainError):
                demand.demand_delta(scenario, *args)


if __name__ == "__main__":
    unittest.main()
