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

import os

from mecgame.utils.singleton import SingletonMetaClass


def default_config_path():
    """
    Returns the absolute path to the ``configs`` directory shipped next to the ``mecgame`` package.
    """
    package_dir = os.path.dirname(os.path.dirname(os.path.abspath(__file__)))
    return os.path.join(os.path.dirname(package_dir), "configs")


class AppState(metaclass=SingletonMetaClass):
    """
    Process-wide state of the running worker:

        - ``args``: parsed command line arguments (None outside of a worker),
        - ``log_file``: file receiving the logs, known once the output directory is created,
        - ``absolute_config_path``: directory with the configuration files.

    Accessed by calling:

        >>> app_state = AppState()

    """

    def __init__(self):
        self.reset()

    def reset(self):
        """
        Restores the state of a freshly started process.
        """
        self.args = None
        self.log_file = None
        self.absolute_config_path = default_config_path()
