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

import os
import yaml

from mecgame.utils.app_state import AppState
from mecgame.configuration.configuration_error import ConfigurationError


def display_parsing_results(logger, parsed_args, unparsed_args):
    """
    Logs the properly & improperly parsed command line arguments (if any).

    :param logger: logger object

    :param parsed_args: Parsed command-line arguments

    :param unparsed_args: Unparsed command-line arguments

    """
    flags_str = 'Properly parsed command line arguments: \n'
    flags_str += '='*80 + '\n'
    for arg in vars(parsed_args):
        flags_str += "  {}= {} \n".format(arg, getattr(parsed_args, arg))
    flags_str += '='*80 + '\n'
    logger.info(flags_str)

    if unparsed_args:
        flags_str = 'Invalid command line arguments: \n'
        flags_str += '='*80 + '\n'
        for arg in unparsed_args:
            flags_str += "  {} \n".format(arg)
        flags_str += '='*80 + '\n'
        logger.warning(flags_str)


def export_experiment_configuration_to_yml(logger, output_dir, filename, config_interface_obj):
    """
    Logs the effective configuration and dumps it to a ``yaml`` file.

    :param logger: logger object

    :param output_dir: Directory receiving the file.
    :type output_dir: str

    :param filename: Name of the ``yaml`` file to write to.
    :type filename: str

    :param config_interface_obj: Configuration interface object.

    :return: Path to the written file.

    """
    conf_str = 'Final parameter registry configuration:\n'
    conf_str += '='*80 + '\n'
    conf_str += yaml.safe_dump(config_interface_obj.to_dict(), default_flow_style=False)
    conf_str += '='*80 + '\n'
    logger.info(conf_str)

    path = os.path.join(output_dir, filename)
    try:
        with open(path, 'w') as yaml_backup_file:
            yaml.safe_dump(config_interface_obj.to_dict(), yaml_backup_file, default_flow_style=False)
    except OSError as e:
        raise OSError("Couldn't write the configuration to '{}': {}".format(path, e)) from e
    return path


def load_class_default_config_file(class_type):
    """
    Loads the default configuration associated with a given class type, \
    i.e. ``configs/default/<module path relative to mecgame>.yml``.

    :param class_type: Class type of a given object.

    :return: Loaded default configuration (dict).
    """
    module = class_type.__module__.split('.')
    rel_path = os.path.join(*module[module.index('mecgame') + 1:]) + ".yml"
    abs_default_config = os.path.join(AppState().absolute_config_path, "default", rel_path)

    if not os.path.isfile(abs_default_config):
        raise ConfigurationError("The default configuration file '{}' for '{}' does not exist".format(
            abs_default_config, class_type.__module__))

    try:
        with open(abs_default_config, 'r') as stream:
            param_dict = yaml.safe_load(stream)
    except yaml.YAMLError as e:
        raise ConfigurationError("Couldn't parse the '{}' default configuration file: {}".format(abs_default_config, e))

    return {} if param_dict is None else param_dict


def resolve_config_path(config, abs_config_path):
    """
    Finds a configuration file: as given (absolute or relative to the working directory), \
    otherwise relative to the ``configs`` directory.

    :return: Absolute path to the file.
    """
    candidates = [os.path.expanduser(config), os.path.join(abs_config_path, config)]
    for candidate in candidates:
        if os.path.isfile(candidate):
            return os.path.abspath(candidate)
    raise ConfigurationError("Configuration file '{}' does not exist".format(config))


def recurrent_config_parse(configs: str, configs_parsed: list, abs_config_path: str, logger=None):
    """
    Parses names of configuration files recursively, following the ``default_configs`` \
    section of every file.

    :param configs: Names of configuration files, separated by comas.
    :type configs: str

    :param configs_parsed: Absolute paths of the files that were already parsed.
    :type configs_parsed: list

    :param abs_config_path: Absolute path to the ``configs`` directory.

    :param logger: Optional logger.

    :return: List of absolute paths of the parsed files (children first).

    """
    configs_to_parse = configs.replace(" ", "").split(',')

    while len(configs_to_parse) > 0:
        config = configs_to_parse.pop(0)
        # Skip empty names (after lose comas).
        if config == '':
            continue

        abs_config = resolve_config_path(config, abs_config_path)
        if logger is not None:
            logger.info("Parsing the {} configuration file".format(abs_config))

        if abs_config in configs_parsed:
            if logger is not None:
                logger.warning('Configuration file {} already parsed - skipping'.format(abs_config))
            continue

        try:
            with open(abs_config, 'r') as stream:
                param_dict = yaml.safe_load(stream)
        except yaml.YAMLError as e:
            raise ConfigurationError("Couldn't parse the {} configuration file: {}".format(abs_config, e))

        configs_parsed.append(abs_config)

        if param_dict is not None and 'default_configs' in param_dict:
            configs_parsed = recurrent_config_parse(
                param_dict['default_configs'], configs_parsed, abs_config_path, logger)

    return configs_parsed


def reverse_order_config_load(config_interface_obj, configs_to_load, logger=None):
    """
    Loads configuration files in reversed order, so the files named first supersede their parents.

    :param config_interface_obj: Configuration interface object.

    :param configs_to_load: List of absolute paths returned by :py:func:`recurrent_config_parse`.

    :param logger: Optional logger.

    """
    for config in reversed(configs_to_load):
        config_interface_obj.add_config_params_from_yaml(config)
        if logger is not None:
            logger.info('Loaded configuration from file {}'.format(config))
