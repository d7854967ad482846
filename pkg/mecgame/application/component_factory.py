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

import importlib
import inspect

import mecgame

from mecgame.configuration.configuration_error import ConfigurationError


class ComponentFactory(object):
    """
    Class instantiating the components using the passed config.
    """

    @staticmethod
    def check_inheritance(class_obj, parent_class_name):
        """
        Checks whether given class inherits (even indirectly) from parent class.
        """
        for c in inspect.getmro(class_obj):
            if c.__name__ == parent_class_name:
                return True
        return False

    @staticmethod
    def get_class(c_type):
        """
        Finds the class named ``c_type``: either a class exported by the main ``mecgame`` namespace \
        or a fully qualified ``module.Class`` path.
        """
        if "." in c_type:
            module_name, class_name = c_type.rsplit(".", 1)
            try:
                return getattr(importlib.import_module(module_name), class_name)
            except (ImportError, AttributeError):
                raise ConfigurationError("Class '{}' could not be imported".format(c_type))
        try:
            return getattr(mecgame, c_type)
        except AttributeError:
            raise ConfigurationError("Class '{}' not found in the list of Component classes".format(c_type))

    @staticmethod
    def build(name, config):
        """
        Method creates a single component on the basis of configuration section.
        Raises ConfigurationError exception when encountered issues.

        :param name: Name of the section/component.

        :param config: Section of the registry configuring the component.
        :type config: :py:class:`mecgame.configuration.ConfigInterface`

        :return: tuple (component, component class).
        """
        if 'type' not in config:
            raise ConfigurationError("Section {} does not contain the key 'type' defining the component type".format(name))

        c_type = config["type"]
        class_obj = ComponentFactory.get_class(c_type)

        if not inspect.isclass(class_obj) or \
                not ComponentFactory.check_inheritance(class_obj, mecgame.Component.__name__):
            raise ConfigurationError("Class '{}' is not derived from the Component class".format(c_type))
        if inspect.isabstract(class_obj):
            raise ConfigurationError("Class '{}' is abstract and cannot be instantiated".format(c_type))

        component = class_obj(name, config)

        return component, class_obj
