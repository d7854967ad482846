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

__author__ = "Tomasz Kornuta"

import abc
import numbers

import mecgame.utils.logger as logging

from mecgame.configuration.config_parsing import load_class_default_config_file
from mecgame.configuration.configuration_error import ConfigurationError


class Component(abc.ABC):
    """
    Named, configurable element of a sweep (solution or optimizer) processing network scenarios.
    """

    def __init__(self, name, class_type, config):
        """
        Stores the name and the configuration section, creates the logger and registers the defaults \
        of ``class_type`` (read from ``configs/default``) in the section.

        :param name: Name of the component.

        :param class_type: Class type of the component, None if it has no default file.

        :param config: Section of the registry configuring the component.
        :type config: :py:class:`mecgame.configuration.ConfigInterface`

        """
        self.name = name
        self.config = config
        self.logger = logging.initialize_logger(self.name)

        if class_type is not None:
            self.config.add_default_params(load_class_default_config_file(class_type))

    def get_param(self, key, kind):
        """
        Reads a parameter of the section, checking its type.

        :param key: Name of the parameter.

        :param kind: ``int``, ``float`` (ints accepted) or ``bool``.

        :return: Value converted to ``kind``.

        :raises ConfigurationError: if the parameter is missing or of a wrong type.
        """
        try:
            value = self.config[key]
        except KeyError:
            raise ConfigurationError("Section '{}' misses parameter '{}'".format(self.name, key))

        if kind is bool:
            valid = isinstance(value, bool)
        elif kind is int:
            valid = isinstance(value, numbers.Integral) and not isinstance(value, bool)
        else:
            valid = isinstance(value, numbers.Real) and not isinstance(value, bool)
        if not valid:
            raise ConfigurationError("Parameter '{}' of section '{}' must be of type {}, got {!r}".format(
                key, self.name, kind.__name__, value))
        return kind(value)

    def summarize(self):
        """
        Summarizes the component by showing its name, type and parameters.

        :return: Summary as a str.
        """
        summary_str = "  + {} ({})\n".format(self.name, type(self).__name__)
        for key, value in sorted(self.config.to_dict().items()):
            summary_str += "      {}: {}\n".format(key, value)
        return summary_str

    @abc.abstractmethod
    def __call__(self, scenario, seed):
        """
        Processes a network scenario. Abstract.

        :param scenario: :py:class:`mecgame.data_types.NetworkScenario`.

        :param seed: Seed of the random streams used by the component.
        """
