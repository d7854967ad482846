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

import copy
from collections.abc import Mapping

from mecgame.utils.singleton import SingletonABCMeta


def merge_tree(target, update):
    """
    Merges ``update`` into the nested dict ``target``: sections are merged, leafs are overwritten.

    Values are deep-copied, so later changes of ``update`` do not leak into ``target``.

    :return: ``target``.
    """
    for key, value in update.items():
        if isinstance(value, Mapping):
            if not isinstance(target.get(key), dict):
                target[key] = {}
            merge_tree(target[key], value)
        else:
            target[key] = copy.deepcopy(value)
    return target


class ConfigRegistry(Mapping, metaclass=SingletonABCMeta):
    """
    Registry singleton holding the parameters of a sweep.

    Two trees are kept:

        - `default` parameters, registered by the workers and components from their default files,
        - `config` parameters, loaded from the user files and command line overrides.

    Reading the registry returns the `default` tree superseded by the `config` tree.

    .. warning::

            Access the registry through :py:class:`ConfigInterface` only.

    """

    def __init__(self):
        super(ConfigRegistry, self).__init__()
        self._clear_registry()

    def _clear_registry(self):
        """
        Removes the content of the registry (used between independent experiments and by the unit tests).
        """
        self._default_params = {}
        self._superseding_config_params = {}
        self._params = {}

    def add_default_params(self, default_params: dict):
        """
        Merges ``default_params`` (e.g. read from ``configs/default``) into the `default` tree.
        """
        merge_tree(self._default_params, default_params)
        self._params = merge_tree(copy.deepcopy(self._default_params), self._superseding_config_params)

    def add_config_params(self, config_params: dict):
        """
        Merges ``config_params`` (set by the user) into the `config` tree.
        """
        merge_tree(self._superseding_config_params, config_params)
        self._params = merge_tree(copy.deepcopy(self._default_params), self._superseding_config_params)

    def __getitem__(self, key):
        return self._params[key]

    def __iter__(self):
        return iter(self._params)

    def __len__(self):
        return len(self._params)

    def __eq__(self, other):
        """
        Registries are compared by their merged trees.
        """
        if isinstance(other, self.__class__):
            return self._params == other._params
        return False
