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
Allocation of the MEC server computing resources among base stations.

A base station with zero demand is fully satisfied (its coefficient is 1) and never receives resources from the LP.
"""

import math

import numpy as np

from mecgame.core.errors import ArgumentError
from mecgame.data_types.allocation_result import AllocationResult


def _check_demands(f_bs, capacity):
    f_bs = np.asarray(f_bs, dtype=np.float64)
    if f_bs.ndim != 1 or len(f_bs) == 0:
        raise ArgumentError("Demands must form a non-empty vector, got shape {}".format(f_bs.shape))
    if not np.all(np.isfinite(f_bs)) or np.any(f_bs < 0):
        raise ArgumentError("Demands must be finite and non-negative, got {}".format(f_bs))
    capacity = float(capacity)
    if not (math.isfinite(capacity) and capacity >= 0):
        raise ArgumentError("Server capacity must be finite and non-negative, got {}".format(capacity))
    return f_bs, capacity


def _check_k_count(f_bs, k_count):
    if isinstance(k_count, bool) or int(k_count) != k_count or k_count < 1:
        raise ArgumentError("Number of base stations must be a positive integer, got {!r}".format(k_count))
    if len(f_bs) != k_count:
        raise ArgumentError("Expected {} demands, got {}".format(k_count, len(f_bs)))
    return int(k_count)


def allocation_coefficient(s_bs, f_bs, cap=True):
    """
    Average allocation coefficient: mean over base stations of granted / required resources.

    :param s_bs: Granted resources.

    :param f_bs: Required resources; zero demand counts as coefficient 1.

    :param cap: Whether every ratio is capped at 1 (DEFAULT: True).

    :return: Coefficient value.
    """
    s_bs = np.asarray(s_bs, dtype=np.float64)
    f_bs = np.asarray(f_bs, dtype=np.float64)
    positive = f_bs > 0
    ratios = np.ones_like(f_bs)
    ratios[positive] = s_bs[positive] / f_bs[positive]
    if cap:
        ratios = np.minimum(ratios, 1.0)
    return float(np.mean(ratios))


def allocate_lp(f_bs, capacity):
    """
    Maximizes the average allocation coefficient subject to 0 <= s_k <= f_k and sum(s) <= capacity.

    When the capacity covers the total demand every base station gets what it needs. Otherwise the \
    linear program has the fractional knapsack structure: base stations are served fully in ascending \
    order of demand (stable on ties), the next one gets the remaining budget and the rest gets nothing.

    :param f_bs: Required computing resources of every base station.

    :param capacity: Server capacity S.

    :return: :py:class:`mecgame.data_types.AllocationResult`.
    """
    f_bs, capacity = _check_demands(f_bs, capacity)
    if np.sum(f_bs) <= capacity:
        return AllocationResult(f_bs, 1.0)

    s_bs = np.zeros_like(f_bs)
    budget = capacity
    for k in np.argsort(f_bs, kind='stable'):
        if f_bs[k] == 0:
            continue
        grant = min(f_bs[k], budget)
        s_bs[k] = grant
        budget -= grant
        if budget <= 0:
            break
    return AllocationResult(s_bs, allocation_coefficient(s_bs, f_bs))


def allocate_equal(f_bs, capacity, k_count):
    """
    Classical equal split: every base station gets S / K regardless of its demand.

    Resources exceeding the demand are granted as well, but each ratio is capped at 1 in the coefficient.

    :return: :py:class:`mecgame.data_types.AllocationResult`.
    """
    f_bs, capacity = _check_demands(f_bs, capacity)
    k_count = _check_k_count(f_bs, k_count)
    s_bs = np.full(k_count, capacity / k_count)
    return AllocationResult(s_bs, allocation_coefficient(s_bs, f_bs, cap=True))


def allocate_capped_equal(f_bs, capacity, k_count):
    """
    Capped equal split: s_k = min(f_k, S / K).

    :return: :py:class:`mecgame.data_types.AllocationResult`.
    """
    f_bs, capacity = _check_demands(f_bs, capacity)
    k_count = _check_k_count(f_bs, k_count)
    s_bs = np.minimum(f_bs, capacity / k_count)
    return AllocationResult(s_bs, allocation_coefficient(s_bs, f_bs, cap=False))
