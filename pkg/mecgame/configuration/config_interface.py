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

__author__ = "Alexis Asseman, Tomasz Kornuta"

import yaml
from collections.abc import Mapping

from mecgame.configuration.config_registry import ConfigRegistry
from mecgame.configuration.configuration_error import ConfigurationError


class ConfigInterface(Mapping):
    """
    Read/write view of a subtree of the :py:class:`ConfigRegistry` singleton.

    Reading goes through the Mapping interface (nested sections are returned as new interfaces), \
    writing through :py:func:`add_default_params` and :py:func:`add_config_params`.

    E.g. the parameters of the swarm used by the proposed solution are reached with:

        >>> ConfigInterface('solutions', 'proposed', 'pso')['n_particles']

    """

    def __init__(self, *keys):
        """
        Constructor.

        :param keys: Path to the subtree of the registry (empty for the whole registry).

        """
        super(ConfigInterface, self).__init__()
        self._config_registry = ConfigRegistry()
        self._keys_path = list(keys)

    def _lookup(self, *keys):
        """
        Returns the node living under ``keys`` (relative to the path of this interface).
        """
        node = self._config_registry
        for key in self._keys_path + list(keys):
            node = node[key]
        return node

    def _nest_dict(self, d: dict):
        """
        Wraps ``d`` in nested dicts following the path of this interface.
        """
        for key in reversed(self._keys_path):
            d = {key: d}
        return d

    def to_dict(self):
        """
        :return: Plain ``dict`` snapshot of the subtree.
        """
        return dict(self._lookup())

    def __getitem__(self, key):
        """
        :return: :py:class:`ConfigInterface` for sections, value for leafs.
        """
        v = self._lookup(key)
        if isinstance(v, (dict, ConfigRegistry)):
            return ConfigInterface(*self._keys_path, key)
        return v

    def __len__(self):
        return len(self._lookup())

    def __iter__(self):
        return iter(self._lookup())

    def __eq__(self, other):
        """
        Interfaces are equal when they point to the same path of the same registry.
        """
        if isinstance(other, self.__class__):
            return self._config_registry == other._config_registry and self._keys_path == other._keys_path
        return False

    def add_default_params(self, default_params: dict):
        """
        Adds ``default_params`` to the `default` tree under the path of this interface.

        :param default_params: Dictionary with default values.
        :type default_params: dict

        """
        self._config_registry.add_default_params(self._nest_dict(default_params))

    def add_config_params(self, config_params: dict):
        """
        Adds ``config_params`` to the `config` tree under the path of this interface.

        :param config_params: Dictionary with values set by the user.
        :type config_params: dict

        """
        self._config_registry.add_config_params(self._nest_dict(config_params))

    def add_config_params_from_yaml(self, yaml_path: str):
        """
        Loads a YAML (or JSON) file and adds its content as `config` params.

        :param yaml_path: Path to the file.
        :type yaml_path: str

        """
        try:
            with open(yaml_path, 'r') as stream:
                params_from_yaml = yaml.safe_load(stream)
        except yaml.YAMLError as e:
            raise ConfigurationError("Couldn't parse the '{}' configuration file: {}".format(yaml_path, e))
        except OSError as e:
            raise ConfigurationError("Couldn't read the '{}' configuration file: {}".format(yaml_path, e))

        if params_from_yaml is None:
            return
        if not isinstance(params_from_yaml, Mapping):
            raise ConfigurationError("Configuration file '{}' must contain a mapping".format(yaml_path))
        self.add_config_params(params_from_yaml)
