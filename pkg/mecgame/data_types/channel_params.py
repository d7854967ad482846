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

from mecgame.core.errors import DomainError


def db_to_linear(value_db):
    """
    Converts a ratio expressed in decibels to linear scale.

    :param value_db: Ratio [dB].

    :return: Ratio (linear).
    """
    return 10.0 ** (value_db / 10.0)


class ChannelParams(namedtuple("ChannelParams", 'mu sigma2 t_linear alpha')):
    """
    Immutable set of wireless channel constants.

        - ``mu``: rate of the exponential fading (dimensionless),
        - ``sigma2``: noise power [W],
        - ``t_linear``: SINR threshold as a linear ratio (NOT dB),
        - ``alpha``: path-loss exponent.

    """
    __slots__ = ()

    def __new__(cls, mu, sigma2, t_linear, alpha):
        values = (float(mu), float(sigma2), float(t_linear), float(alpha))
        if not all(math.isfinite(v) for v in values):
            raise DomainError("Channel parameters must be finite, got {}".format(values))
        mu, sigma2, t_linear, alpha = values
        if mu <= 0:
            raise DomainError("Fading rate mu must be positive, got {}".format(mu))
        if sigma2 <= 0:
            raise DomainError("Noise power sigma2 must be positive, got {}".format(sigma2))
        if t_linear <= 0:
            raise DomainError("SINR threshold must be positive, got {}".format(t_linear))
        if alpha <= 1:
            raise DomainError("Path-loss exponent alpha must be greater than 1, got {}".format(alpha))
        return super(ChannelParams, cls).__new__(cls, mu, sigma2, t_linear, alpha)

    @classmethod
    def from_db(cls, mu, sigma2, t_db, alpha):
        """
        Creates channel parameters with the SINR threshold given in dB.
        """
        return cls(mu, sigma2, db_to_linear(t_db), alpha)
