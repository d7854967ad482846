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
Required computing resources of base stations and the interference-induced demand deltas.

Every quantity is built on :py:func:`kernel_integral`, the integral of r^alpha exp(-c r^alpha) over [0, R].
"""

import math
from functools import lru_cache

import numpy as np
from scipy import integrate

from mecgame.core.errors import DomainError
from mecgame.core.netmodel import interference_at
from mecgame.data_types.demand_profile import DemandProfile

# Quadrature tolerances.
EPSABS = 1e-12
EPSREL = 1e-10

# The integrand is below exp(-TAIL_EXPONENT) * r^alpha beyond c r^alpha = TAIL_EXPONENT.
TAIL_EXPONENT = 50.0


@lru_cache(maxsize=65536)
def _kernel(c, alpha, r_upper):
    if c == 0.0:
        return r_upper ** (alpha + 1.0) / (alpha + 1.0)

    upper = min(r_upper, (TAIL_EXPONENT / c) ** (1.0 / alpha))
    # Location of the peak of the integrand.
    peak = (1.0 / c) ** (1.0 / alpha)
    points = [peak] if 0.0 < peak < upper else None

    value, _ = integrate.quad(
        lambda r: r ** alpha * math.exp(-c * r ** alpha), 0.0, upper,
        epsabs=EPSABS, epsrel=EPSREL, limit=200, points=points)
    return value


def kernel_integral(c, alpha, r_upper):
    """
    Computes the integral of r^alpha * exp(-c * r^alpha) over [0, r_upper] with adaptive Gauss-Kronrod quadrature.

    For c > 0 the result equals gamma_lower(1 + 1/alpha, c r_upper^alpha) / (alpha c^(1 + 1/alpha)). \
    Results are memoised.

    :param c: Exponent rate (non-negative).

    :param alpha: Exponent (strictly positive).

    :param r_upper: Upper integration limit [m] (strictly positive).

    :return: Value of the integral.
    """
    c, alpha, r_upper = float(c), float(alpha), float(r_upper)
    if not (math.isfinite(c) and math.isfinite(alpha) and math.isfinite(r_upper)):
        raise DomainError("Kernel integral requires finite inputs, got c={} alpha={} r_upper={}".format(
            c, alpha, r_upper))
    if c < 0 or alpha <= 0 or r_upper <= 0:
        raise DomainError("Kernel integral requires c >= 0, alpha > 0 and r_upper > 0, got c={} alpha={} r_upper={}"
                          .format(c, alpha, r_upper))
    return _kernel(c, alpha, r_upper)


def _compute_from_load(scenario, p_k, load):
    """
    Expected computing resources required by a base station transmitting with ``p_k`` when the \
    noise plus interference power equals ``load``.
    """
    channel = scenario.channel
    c = channel.mu * channel.t_linear * load / p_k
    return 2.0 * scenario.f_ue * scenario.rho * math.pi * channel.alpha * c * \
        kernel_integral(c, channel.alpha, scenario.r_max)


def required_compute(scenario, powers, k):
    """
    Computing resources required by base station ``k`` under the interference of all the other base stations.

    :param scenario: :py:class:`mecgame.data_types.NetworkScenario`.

    :param powers: :py:class:`mecgame.data_types.PowerProfile` (or array-like).

    :param k: Index of the base station.

    :return: Required computing resources [CPU cycles/bit].
    """
    k = scenario.check_index(k)
    powers = scenario.check_powers(powers)
    load = scenario.channel.sigma2 + interference_at(scenario, powers, k)
    return _compute_from_load(scenario, powers[k], load)


def max_compute(scenario, p_k):
    """
    Attainable computing resources of a base station transmitting with ``p_k`` in the absence of interference.
    """
    p_k = scenario.check_power(p_k)
    return _compute_from_load(scenario, p_k, scenario.channel.sigma2)


def demand_delta(scenario, p_k, p_m, dist):
    """
    Change of the required computing resources of a base station transmitting with ``p_k`` caused by \
    the interference of a single base station transmitting with ``p_m`` at distance ``dist``.

    Swapping ``p_k`` and ``p_m`` gives the mirrored delta of the other base station. \
    The value is signed and is not clamped.

    :param p_k: Power of the affected base station [W].

    :param p_m: Power of the interfering base station [W], within [0, p_max].

    :param dist: Distance between both base stations [m].

    :return: Demand delta [CPU cycles/bit].
    """
    p_k = scenario.check_power(p_k)
    p_m = float(p_m)
    if not (math.isfinite(p_m) and 0.0 <= p_m <= scenario.p_max):
        raise DomainError("Interfering power {} outside of [0, {}]".format(p_m, scenario.p_max))
    dist = float(dist)
    if not (math.isfinite(dist) and dist > 0):
        raise DomainError("Distance between base stations must be strictly positive, got {}".format(dist))

    sigma2 = scenario.channel.sigma2
    interfered_load = sigma2 + p_m * dist ** (-scenario.channel.alpha)
    return _compute_from_load(scenario, p_k, sigma2) - _compute_from_load(scenario, p_k, interfered_load)


def demand_profile(scenario, powers):
    """
    Required computing resources and received interference of every base station.

    :return: :py:class:`mecgame.data_types.DemandProfile`.
    """
    powers = scenario.check_powers(powers)
    interference = np.array([interference_at(scenario, powers, k) for k in range(scenario.k_count)])
    f_bs = np.array([_compute_from_load(scenario, powers[k], scenario.channel.sigma2 + interference[k])
                     for k in range(scenario.k_count)])
    return DemandProfile(f_bs, interference)
