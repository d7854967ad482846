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
Wireless channel and coverage model of a single base station.

Fading ``h`` is exponentially distributed with rate ``mu``; the SINR threshold is kept in linear scale.
All functions accept scalars or numpy arrays (broadcast together) and return a float for scalar inputs.
"""

import numpy as np

from mecgame.core.errors import DomainError


def _as_output(value):
    """ Unwraps 0-d arrays into plain floats. """
    value = np.asarray(value, dtype=np.float64)
    if value.ndim == 0:
        return float(value)
    return value


def _check_non_negative(name, value):
    value = np.asarray(value, dtype=np.float64)
    if np.any(~np.isfinite(value)) or np.any(value < 0):
        raise DomainError("'{}' must be finite and non-negative, got {}".format(name, value))
    return value


def _check_positive(name, value):
    value = np.asarray(value, dtype=np.float64)
    if np.any(~np.isfinite(value)) or np.any(value <= 0):
        raise DomainError("'{}' must be finite and strictly positive, got {}".format(name, value))
    return value


def _exponent(r, p, interference, channel):
    """ Returns mu * T * (sigma2 + I) * r^alpha / p, the rate of the radius distribution evaluated at r. """
    r = _check_non_negative('r', r)
    p = _check_positive('p', p)
    interference = _check_non_negative('interference', interference)
    return channel.mu * channel.t_linear * (channel.sigma2 + interference) * r ** channel.alpha / p


def interference_at(scenario, powers, k):
    """
    Aggregate interference received by base station ``k`` from all the other base stations.

    :param scenario: :py:class:`mecgame.data_types.NetworkScenario`.

    :param powers: :py:class:`mecgame.data_types.PowerProfile` (or array-like) valid for the scenario.

    :param k: Index of the base station.

    :return: Interference [W], zero for a single base station.
    """
    k = scenario.check_index(k)
    powers = scenario.check_powers(powers)
    alpha = scenario.channel.alpha
    total = 0.0
    for m in range(scenario.k_count):
        if m != k:
            total += powers[m] * scenario.pairwise_dist[m, k] ** (-alpha)
    return total


def interference_profile(scenario, powers):
    """
    Interference received by every base station.

    :return: ``numpy.ndarray`` of K interference values [W].
    """
    powers = scenario.check_powers(powers)
    return np.array([interference_at(scenario, powers, k) for k in range(scenario.k_count)])


def sinr(h, r, p, interference, channel):
    """
    Signal-to-interference-and-noise ratio at distance ``r`` from a base station.

    :param h: Fading sample (non-negative).

    :param r: Distance [m] (strictly positive).

    :param p: Transmit power [W] (strictly positive).

    :param interference: Aggregate interference [W].

    :param channel: :py:class:`mecgame.data_types.ChannelParams`.

    :return: SINR as a linear ratio.
    """
    h = _check_non_negative('h', h)
    r = _check_positive('r', r)
    p = _check_positive('p', p)
    interference = _check_non_negative('interference', interference)
    return _as_output(h * r ** (-channel.alpha) * p / (channel.sigma2 + interference))


def coverage_radius(h, p, interference, channel):
    """
    Distance at which the SINR of a base station drops to the threshold T.

    :return: Coverage radius [m].
    """
    h = _check_positive('h', h)
    p = _check_positive('p', p)
    interference = _check_non_negative('interference', interference)
    return _as_output((h * p / (channel.t_linear * (channel.sigma2 + interference))) ** (1.0 / channel.alpha))


def radius_cdf(r, p, interference, channel):
    """
    Cumulative distribution function of the coverage radius, 1 - exp(-mu T (sigma2 + I) r^alpha / p).
    """
    return _as_output(-np.expm1(-_exponent(r, p, interference, channel)))


def radius_pdf(r, p, interference, channel):
    """
    Probability density function of the coverage radius (derivative of :py:func:`radius_cdf`).
    """
    exponent = _exponent(r, p, interference, channel)
    r = np.asarray(r, dtype=np.float64)
    p = np.asarray(p, dtype=np.float64)
    alpha = channel.alpha
    rate = alpha * channel.mu * channel.t_linear * (channel.sigma2 + np.asarray(interference, dtype=np.float64)) / p
    return _as_output(rate * r ** (alpha - 1.0) * np.exp(-exponent))


def coverage_probability(r, p, interference, channel):
    """
    Probability that a user at distance ``r`` is covered, i.e. P[SINR > T].

    Complement of :py:func:`radius_cdf`, so both always sum up to one.
    """
    return _as_output(1.0 - np.asarray(radius_cdf(r, p, interference, channel)))


def sample_fading(channel, size, rng):
    """
    Draws exponential fading samples with rate ``mu`` by inverse transform: h = -ln(1 - u) / mu.

    :param channel: :py:class:`mecgame.data_types.ChannelParams`.

    :param size: Number (or shape) of samples.

    :param rng: ``numpy.random.Generator``.

    :return: ``numpy.ndarray`` of samples.
    """
    uniform = rng.random(size)
    return -np.log1p(-uniform) / channel.mu


def estimate_coverage_probability(r, p, interference, channel, n_samples=1000000, seed=0):
    """
    Monte Carlo estimate of the coverage probability at distance ``r``.

    :param n_samples: Number of fading samples (DEFAULT: 10^6).

    :param seed: Seed of the generator (DEFAULT: 0).

    :return: Tuple (estimate, standard error of the estimate).
    """
    _check_positive('r', r)
    rng = np.random.default_rng(seed)
    h = sample_fading(channel, n_samples, rng)
    covered = np.asarray(sinr(h, r, p, interference, channel)) > channel.t_linear
    estimate = float(np.mean(covered))
    return estimate, float(np.sqrt(max(estimate * (1.0 - estimate), 0.0) / n_samples))
