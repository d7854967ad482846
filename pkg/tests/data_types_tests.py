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

from mecgame.configuration.configuration_error import ConfigurationError
from mecgame.core.errors import ArgumentError, DomainError
from mecgame.data_types import AllocationResult, DemandProfile, ExperimentConfig, GameEvaluation, \
    PowerProfile, ScenarioParams, SweepRecord


class TestDataTypes(unittest.TestCase):

    def test_power_profile(self):
        """ Tests that power profiles are read-only finite vectors. """
        profile = PowerProfile.uniform(3, 2.0)
        self.assertEqual(profile.k_count, 3)
        # Still a one-field namedtuple.
        self.assertEqual(len(profile), 1)
        self.assertEqual(profile._replace(powers=[4.0, 5.0]).k_count, 2)
        self.assertEqual(PowerProfile._make([[1.0, 2.0]]).k_count, 2)
        with self.assertRaises(ValueError):
            profile.powers[0] = 1.0
        with self.assertRaises(DomainError):
            PowerProfile([[1.0, 2.0]])
        with self.assertRaises(DomainError):
            PowerProfile([1.0, float('nan')])

    def test_demand_profile(self):
        """ Tests the validation and the total of demand profiles. """
        profile = DemandProfile([1.0, 2.5], [0.0, 1e-6])
        self.assertEqual(profile.total, 3.5)
        with self.assertRaises(DomainError):
            DemandProfile([1.0, -2.0], [0.0, 0.0])
        with self.assertRaises(DomainError):
            DemandProfile([1.0], [0.0, 0.0])

    def test_allocation_result(self):
        """ Tests the bounds of the allocation coefficient and the feasibility check. """
        result = AllocationResult([1.0, 0.5], 0.75)
        self.assertTrue(result.is_feasible([1.0, 1.0], 1.5))
        self.assertFalse(result.is_feasible([1.0, 1.0], 1.4))
        self.assertFalse(result.is_feasible([1.0, 0.4], 2.0))
        self.assertFalse(result.is_feasible([1.0], 2.0))
        with self.assertRaises(DomainError):
            AllocationResult([1.0], 1.5)
        with self.assertRaises(DomainError):
            AllocationResult([-1.0], 0.5)

    def test_game_evaluation(self):
        """ Tests the average utility and the rejection of non-finite values. """
        evaluation = GameEvaluation([1.0, 2.0, 6.0], 9.0)
        self.assertEqual(evaluation.average_utility, 3.0)
        with self.assertRaises(DomainError):
            GameEvaluation([1.0, float('inf')], 1.0)

    def test_sweep_record(self):
        """ Tests the validation and the ordering of sweep records. """
        values = dict(k_count=4, alpha=4.0, solution='proposed', avg_utility=1.0, avg_compute_efficiency=0.5,
                      sat=0.2, avg_power=3.0, wall_time=0.0, density=4e-4, aggregate_compute_efficiency=0.5,
                      potential=4.0, total_demand=6.0)
        record = SweepRecord(**values)
        other = record._replace(k_count=1, solution='ref1')
        self.assertEqual(sorted([record, other], key=SweepRecord.sort_key), [other, record])
        for key, value in (('solution', ''), ('solution', 'a,b'), ('sat', float('nan'))):
            invalid = dict(values)
            invalid[key] = value
            with self.assertRaises(ArgumentError):
                SweepRecord(**invalid)

    def test_scenario_params(self):
        """ Tests the conversion of the SINR threshold from dB. """
        params = ScenarioParams.from_config({'f_ue': 1.0, 'rho': 0.01, 'mu': 1.0, 't_db': 20.0, 'sigma2': 1e-15,
                                             'p_max': 5.0, 'p_floor': 1e-6, 'r_max': 100.0, 'server_capacity': 1.0,
                                             'epsilon': 0.5, 'b': 0.5})
        self.assertAlmostEqual(params.t_linear, 100.0)
        self.assertEqual(params.channel(3.0).alpha, 3.0)
        self.assertEqual(ScenarioParams().t_linear, 10.0)

    def test_experiment_config(self):
        """ Tests the validation of experiments. """
        values = dict(zone_side=100.0, bs_counts=[4], alphas=[4], scenario=ScenarioParams(),
                      solutions=[('ref1', {'type': 'EqualAllocationSolution'})], seed=0, output_dir='/tmp')
        experiment = ExperimentConfig(**values)
        self.assertEqual(experiment.alphas, (4.0,))
        self.assertEqual(experiment.workers, 1)
        for key, value in (('zone_side', -1.0), ('bs_counts', []), ('bs_counts', [2.5]), ('alphas', [1.0]),
                           ('solutions', []), ('seed', -1), ('workers', 0)):
            invalid = dict(values)
            invalid[key] = value
            with self.assertRaises(ConfigurationError):
                ExperimentConfig(**invalid)


if __name__ == "__main__":
    unittest.main()
