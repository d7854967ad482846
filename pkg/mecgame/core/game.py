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
Exact potential game played by the base stations over their transmit powers.

The cost term of every base station is weighted by epsilon / (K - 1); a single base station has no cost term.
"""

import numpy as np

from mecgame.core.demand import demand_delta, max_compute
from mecgame.data_types.game_evaluation import GameEvaluation
from mecgame.data_types.power_profile import PowerProfile


def _cost_weight(scenario):
    return scenario.epsilon / (scenario.k_count - 1)


def pairwise_deltas(scenario, powers):
    """
    Matrix D of demand deltas, D[k, m] being the delta of base station ``k`` caused by base station ``m``.

    :param scenario: :py:class:`mecgame.data_types.NetworkScenario`.

    :param powers: :py:class:`mecgame.data_types.PowerProfile` (or array-like).

    :return: K x K ``numpy.ndarray`` with a zero diagonal.
    """
    powers = scenario.check_powers(powers)
    deltas = np.zeros((scenario.k_count, scenario.k_count))
    for k in range(scenario.k_count):
        for m in range(scenario.k_count):
            if m != k:
                deltas[k, m] = demand_delta(scenario, powers[k], powers[m], scenario.pairwise_dist[k, m])
    return deltas


def utility(scenario, powers, k):
    """
    Utility of base station ``k``: attainable computing resources minus the weighted demand deltas \
    it suffers and inflicts.

    :param k: Index of the base station.

    :return: Utility value.
    """
    k = scenario.check_index(k)
    powers = scenario.check_powers(powers)
    benefit = max_compute(scenario, powers[k])
    if scenario.k_count == 1:
        return benefit

    cost = 0.0
    for m in range(scenario.k_count):
        if m != k:
            dist = scenario.pairwise_dist[k, m]
            cost += demand_delta(scenario, powers[k], powers[m], dist) + \
                demand_delta(scenario, powers[m], powers[k], dist)
    return benefit - _cost_weight(scenario) * cost


def _potential_from_deltas(scenario, benefits, deltas):
    if scenario.k_count == 1:
        return float(np.sum(benefits))
    b = scenario.b
    suffered = np.sum(deltas, axis=1)
    inflicted = np.sum(deltas, axis=0)
    return float(np.sum(benefits - _cost_weight(scenario) * (b * suffered + (1.0 - b) * inflicted)))


def potential(scenario, powers):
    """
    Potential function of the game, the b-weighted sum of the individual utilities.

    :return: Potential value.
    """
    powers = scenario.check_powers(powers)
    benefits = np.array([max_compute(scenario, p) for p in powers])
    return _potential_from_deltas(scenario, benefits, pairwise_deltas(scenario, powers))


def evaluate(scenario, powers):
    """
    Computes the utilities of all base stations and the potential in a single pass over the demand deltas.

    :return: :py:class:`mecgame.data_types.GameEvaluation`.
    """
    powers = scenario.check_powers(powers)
    benefits = np.array([max_compute(scenario, p) for p in powers])
    deltas = pairwise_deltas(scenario, powers)
    if scenario.k_count == 1:
        utilities = benefits
    else:
        utilities = benefits - _cost_weight(scenario) * (np.sum(deltas, axis=1) + np.sum(deltas, axis=0))
    return GameEvaluation(utilities, _potential_from_deltas(scenario, benefits, deltas))


def verify_exact_potential(scenario, powers, k, new_power):
    """
    Checks the exact potential identity for a unilateral deviation of base station ``k`` to ``new_power``: \
    the change of the potential must equal the change of the utility of ``k``.

    :return: Relative residual |dPhi - du_k| / max(1, |dPhi|).
    """
    k = scenario.check_index(k)
    powers = scenario.check_powers(powers)
    new_power = scenario.check_power(new_power)

    deviated = np.array(powers)
    deviated[k] = new_power
    deviated = PowerProfile(deviated)

    delta_potential = potential(scenario, deviated) - potential(scenario, powers)
    delta_utility = utility(scenario, deviated, k) - utility(scenario, powers, k)
    return abs(delta_potential - delta_utility) / max(1.0, abs(delta_potential))
