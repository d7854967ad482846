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

__author__ = "Vincent Marois, Tomasz Kornuta, Ryan L. McAvoy"

import os
import argparse
from abc import abstractmethod

import mecgame.configuration.config_parsing as config_parsing
import mecgame.utils.logger as logging

from mecgame.utils.app_state import AppState
from mecgame.configuration.config_interface import ConfigInterface
from mecgame.configuration.configuration_error import ConfigurationError


class Worker(object):
    """
    Base class of the command line workers.

    A worker parses its arguments, builds the configuration from its class defaults and the files \
    passed with ``--config``, prepares an output directory with a log file and finally runs an experiment.
    """

    def __init__(self, name):
        """
        Creates the parser with the arguments shared by all workers.

        :param name: Name of the worker, used for the logger and the log file.
        :type name: str

        """
        self.name = name
        self.app_state = AppState()
        self.config = ConfigInterface()

        self.parser = argparse.ArgumentParser(formatter_class=argparse.RawTextHelpFormatter)
        self.parser.add_argument(
            '--config',
            dest='config',
            type=str,
            default='',
            help='Configuration file(s) to be loaded: absolute, relative to the working directory '
                'or to the configs directory. Multiple files must be separated with coma ",".')
        self.parser.add_argument(
            '--outdir',
            dest='outdir',
            type=str,
            default=None,
            help='Directory where the results will be stored (DEFAULT: output_dir from the configuration)')
        self.parser.add_argument(
            '--log-level',
            action='store',
            dest='log_level',
            type=str,
            default='INFO',
            choices=['CRITICAL', 'ERROR', 'WARNING', 'INFO', 'DEBUG', 'NOTSET'],
            help="Log level. (DEFAULT: INFO)")

    def setup_experiment(self, args=None):
        """
        Parses the command line and loads the configuration. Exits with -1 on configuration errors.

        :param args: List of arguments to parse (DEFAULT: None, i.e. ``sys.argv``).
        """
        self.app_state.args, self.unparsed = self.parser.parse_known_args(args)
        # File handler is attached once the output directory is known.
        self.logger = logging.initialize_logger(self.name, False)

        try:
            self.config.add_default_params(config_parsing.load_class_default_config_file(type(self)))
            if self.app_state.args.config != '':
                configs_to_load = config_parsing.recurrent_config_parse(
                    self.app_state.args.config, [], self.app_state.absolute_config_path, self.logger)
                config_parsing.reverse_order_config_load(self.config, configs_to_load, self.logger)
            self.apply_overrides(self.app_state.args)
        except ConfigurationError as e:
            self.logger.error(e)
            exit(-1)

    def apply_overrides(self, flags):
        """
        Hook applying command line overrides to the loaded configuration. Does nothing by default.

        :param flags: Parsed command line arguments.
        """
        pass

    def prepare_output_dir(self, output_dir, config_filename):
        """
        Creates the output directory, attaches the log file and dumps the effective configuration.
        Exits with -2 on I/O errors.

        :param output_dir: Directory receiving the results.

        :param config_filename: Name of the file the configuration is dumped to.
        """
        try:
            os.makedirs(output_dir, exist_ok=True)
            self.app_state.log_file = os.path.join(output_dir, '{}.log'.format(self.name.lower()))
            logging.add_file_handler_to_logger(self.logger)
            self.logger.info("Output directory set to: {}".format(output_dir))

            config_parsing.display_parsing_results(self.logger, self.app_state.args, self.unparsed)
            config_parsing.export_experiment_configuration_to_yml(
                self.logger, output_dir, config_filename, self.config)
        except OSError as e:
            self.logger.error("Couldn't prepare the output directory '{}': {}".format(output_dir, e))
            exit(-2)

    @abstractmethod
    def run_experiment(self):
        """
        Runs the experiment. Abstract.
        """
