# -*- coding: utf-8 -*-
#
# Copyright (C) IBM Corporation 2019
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

__author__ = "Tomasz Kornuta & Vincent Marois"

import os
from collections.abc import Mapping


class StatisticsCollector(Mapping):
    """
    Collects named statistics (one list of values per key) and exports the last values     row by row to a CSV file.

    Used as a context manager, the CSV file is closed when the block is left:

        >>> with StatisticsCollector() as stat_col:
        ...     stat_col.add_statistics('sat', '{!r}')
        ...     stat_col.initialize_csv_file(output_dir, 'sweep_results.csv')
        ...     stat_col['sat'] = 0.5
        ...     stat_col.export_to_csv()

    """

    def __init__(self):
        super(StatisticsCollector, self).__init__()
        self.csv_file = None
        self.statistics = dict()
        self.formatting = dict()

    def add_statistics(self, key, formatting):
        """
        Adds a statistics to the collector.

        :param key: Key of the statistics, also the CSV column name.
        :type key: str

        :param formatting: Formatting used in the CSV, e.g. ``'{!r}'`` for floats read back without loss.

        """
        self.formatting[key] = formatting
        self.statistics[key] = list()

    def __getitem__(self, key):
        return self.statistics[key]

    def __setitem__(self, key, value):
        """
        Appends ``value`` to the list of the statistics ``key``.
        """
        self.statistics[key].append(value)

    def __len__(self):
        return len(self.statistics)

    def __iter__(self):
        return iter(self.statistics)

    def __enter__(self):
        return self

    def __exit__(self, exc_type, exc_value, traceback):
        self.close_csv_file()

    def current_values(self):
        """
        :return: List of (key, last value) pairs, in the order the statistics were added.
        """
        return [(key, values[-1]) for key, values in self.statistics.items()]

    def _row(self, values):
        return ",".join(self.formatting[key].format(value) for key, value in values) + '\n'

    def initialize_csv_file(self, log_dir, filename):
        """
        Creates a new csv file (UTF-8, '\\n' line endings) with a header made of the statistics names.

        :raises OSError: naming the path if the file cannot be created.
        """
        path = os.path.join(log_dir, filename)
        try:
            self.csv_file = open(path, 'w', encoding='utf-8', newline='\n')
            self.csv_file.write(",".join(self.statistics.keys()) + '\n')
        except OSError as e:
            raise OSError("Couldn't create the statistics file '{}': {}".format(path, e)) from e
        return self.csv_file

    def export_to_csv(self):
        """
        Writes the current values as one csv row (no-op without a file).
        """
        if self.csv_file is not None:
            self.csv_file.write(self._row(self.current_values()))

    def close_csv_file(self):
        if self.csv_file is not None:
            self.csv_file.close()
            self.csv_file = None
