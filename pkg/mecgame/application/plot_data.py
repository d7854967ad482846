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
Series files for external plotting.

One CSV per (metric, alpha, solution) named ``<metric>_alpha<alpha>_<solution>.csv`` with the columns:

    - ``density``: number of base stations per square meter (ascending),
    - ``k_count``: number of base stations,
    - ``value``: value of the metric.

"""

import os
import re

import pandas as pd

from mecgame.core.errors import ArgumentError

PLOT_METRICS = ('avg_utility', 'avg_compute_efficiency', 'sat')

PLOT_COLUMNS = ('density', 'k_count', 'value')

_SERIES_FILENAME = re.compile(r'^({})_alpha([0-9eE.+-]+)_(.+)\.csv$'.format('|'.join(PLOT_METRICS)))


def series_filename(metric, alpha, solution):
    """
    :return: Name of the series file of the given metric, alpha and solution.
    """
    return "{}_alpha{:g}_{}.csv".format(metric, alpha, solution)


def emit_plot_data(records, output_dir):
    """
    Writes one series file per (metric, alpha, solution) found in ``records``.

    :param records: Non-empty list of :py:class:`mecgame.data_types.SweepRecord`.

    :param output_dir: Target directory.

    :return: List of written paths.
    """
    if len(records) == 0:
        raise ArgumentError("Cannot emit plot data without records")

    frame = pd.DataFrame.from_records(records, columns=records[0]._fields)
    paths = []
    for (alpha, solution), group in frame.groupby(['alpha', 'solution'], sort=True):
        group = group.sort_values('density', kind='mergesort')
        for metric in PLOT_METRICS:
            series = pd.DataFrame({'density': group['density'].values,
                                   'k_count': group['k_count'].values,
                                   'value': group[metric].values})
            path = os.path.join(output_dir, series_filename(metric, alpha, solution))
            try:
                series.to_csv(path, index=False, float_format='%.17g')
            except OSError as e:
                raise OSError("Couldn't write the plot series '{}': {}".format(path, e)) from e
            paths.append(path)
    return paths


def load_plot_data(output_dir):
    """
    Reads back all series files of a directory.

    :return: Dict {(metric, alpha, solution): ``pandas.DataFrame``}.
    """
    series = {}
    for filename in sorted(os.listdir(output_dir)):
        match = _SERIES_FILENAME.match(filename)
        if match is None:
            continue
        metric, alpha, solution = match.group(1), float(match.group(2)), match.group(3)
        series[(metric, alpha, solution)] = pd.read_csv(
            os.path.join(output_dir, filename), float_precision='round_trip')
    return series
