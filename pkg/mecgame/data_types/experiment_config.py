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

from mecgame.configuration.configuration_error import ConfigurationError


class ExperimentConfig(namedtuple("ExperimentConfig",
        'zone_side bs_counts alphas scenario solutions seed output_dir workers '
        'record_wall_time emit_plot_data trend_slack')):
    """
    Fully resolved description of a density sweep.

        - ``zone_side``: side of the square zone [m],
        - ``bs_counts``: tuple of numbers of base stations K,
        - ``alphas``: tuple of path-loss exponents,
        - ``scenario``: :py:class:`ScenarioParams`,
        - ``solutions``: tuple of ``(name, section)`` pairs, each section being a dict with the component ``type``,
        - ``seed``: master seed,
        - ``output_dir``: directory receiving the CSV files,
        - ``workers``: number of worker processes,
        - ``record_wall_time``: whether to store the measured wall time (otherwise 0.0),
        - ``emit_plot_data``: whether to write the per-series plot files,
        - ``trend_slack``: relative slack of the trend checks.

    """
    __slots__ = ()

    def __new__(cls, zone_side, bs_counts, alphas, scenario, solutions, seed, output_dir,
                workers=1, record_wall_time=True, emit_plot_data=True, trend_slack=0.01):
        zone_side = float(zone_side)
        if not (math.isfinite(zone_side) and zone_side > 0):
            raise ConfigurationError("Zone side must be positive, got {}".format(zone_side))

        bs_counts = tuple(bs_counts)
        if len(bs_counts) == 0:
            raise ConfigurationError("List of base station counts cannot be empty")
        for k in bs_counts:
            if isinstance(k, bool) or not isinstance(k, int) or k < 1:
                raise ConfigurationError("Base station counts must be positive integers, got {!r}".format(k))

        alphas = tuple(float(a) for a in alphas)
        if len(alphas) == 0:
            raise ConfigurationError("List of path-loss exponents cannot be empty")
        for alpha in alphas:
            if not (math.isfinite(alpha) and alpha > 1):
                raise ConfigurationError("Path-loss exponents must be greater than 1, got {}".format(alpha))

        solutions = tuple((str(name), dict(section)) for name, section in solutions)
        if len(solutions) == 0:
            raise ConfigurationError("At least one solution must be configured")

        if isinstance(seed, bool) or int(seed) != seed or seed < 0:
            raise ConfigurationError("Seed must be a non-negative integer, got {!r}".format(seed))
        if isinstance(workers, bool) or int(workers) != workers or workers < 1:
            raise ConfigurationError("Number of workers must be a positive integer, got {!r}".format(workers))

        return super(ExperimentConfig, cls).__new__(
            cls, zone_side, bs_counts, alphas, scenario, solutions, int(seed), str(output_dir), int(workers),
            bool(record_wall_time), bool(emit_plot_data), float(trend_slack))

    @property
    def zone_area(self):
        """ Area of the zone [m^2]. """
        return self.zone_side ** 2
