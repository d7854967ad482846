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

import logging
import logging.config as logging_config

from mecgame.utils.app_state import AppState

LOG_FORMAT = '[%(asctime)s] - %(levelname)s - %(name)s >>> %(message)s'
DATE_FORMAT = '%Y-%m-%d %H:%M:%S'


def initialize_logger(name, add_file_handler=True):
    """
    Initializes the logger, with a specific configuration.
    Uses AppState().args.log_level (from command line arguments) when available, INFO otherwise.

    :param name: Name of the entity that "owns" the logger.

    :param add_file_handler: Attach the handler writing to ``AppState().log_file`` (DEFAULT: True).

    :return: Logger object.

    """
    logger_config = {'version': 1,
                     'disable_existing_loggers': False,
                     'formatters': {
                         'simple': {
                             'format': LOG_FORMAT,
                             'datefmt': DATE_FORMAT}},
                     'handlers': {
                         'console': {
                             'class': 'logging.StreamHandler',
                             'level': 'DEBUG',
                             'formatter': 'simple',
                             'stream': 'ext://sys.stdout'}},
                     'root': {'level': 'DEBUG',
                              'handlers': ['console']}}

    logging_config.dictConfig(logger_config)

    logger = logging.getLogger(name=name)

    if add_file_handler:
        add_file_handler_to_logger(logger)

    args = AppState().args
    if args is not None and getattr(args, 'log_level', None) is not None:
        logger.setLevel(getattr(logging, args.log_level.upper(), logging.INFO))
    else:
        logger.setLevel(logging.INFO)

    return logger


def add_file_handler_to_logger(logger):
    """
    Adds a ``logging.FileHandler`` writing to ``AppState().log_file`` (if set), at most once per file.

    :param logger: Logger object.

    """
    log_file = AppState().log_file
    if log_file is None:
        return

    fh = logging.FileHandler(log_file, delay=True)
    for handler in logger.handlers:
        if isinstance(handler, logging.FileHandler) and handler.baseFilename == fh.baseFilename:
            fh.close()
            return

    # File handler logs even DEBUG messages.
    fh.setLevel(logging.DEBUG)
    fh.setFormatter(logging.Formatter(fmt=LOG_FORMAT, datefmt=DATE_FORMAT))
    logger.addHandler(fh)
