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

__author__ = "Vincent Marois, Tomasz Kornuta"

from mecgame.utils.statistics_collector import StatisticsCollector


class StatisticsAggregator(StatisticsCollector):
    """
    Holds aggregated statistics (mean, min, max...), e.g. the per-solution summary of a sweep.

    Every aggregator stores a single value: setting it overwrites the previous one.
    """

    def add_aggregator(self, key, formatting):
        """
        Adds an aggregator, unset until the first assignment.
        """
        self.add_statistics(key, formatting)

    def __setitem__(self, key, value):
        self.statistics[key][:] = [value]

    def __getitem__(self, key):
        return self.statistics[key][-1]

    def as_dict(self):
        """
        :return: Dict {aggregator name: current value}.
        """
        return dict(self.current_values())
