# -*- coding: utf-8 -*-
#
# Copyright (C) 2026 The MecGame Authors
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

from mecgame.application.sweep import load_experiment_config, run_sweep
from mecgame.configuration.configuration_error import ConfigurationError
from mecgame.workers.worker import Worker


def comma_separated(cast):
    """
    Returns an argparse type converting a comma separated string into a list of ``cast`` values.
    """
    def parse(value):
        return [cast(item) for item in value.replace(" ", "").split(',') if item != '']
    return parse


class Sweeper(Worker):
    """
    Worker running a density sweep: loads the configuration, runs all solutions on all (K, alpha) \
    points and exports the results.
    """

    def __init__(self, name="Sweeper"):
        """
        Calls the ``Worker`` constructor, adds the sweep-specific arguments to parser.

        :param name: Name of the worker (DEFAULT: "Sweeper").
        :type name: str

        """
        super(Sweeper, self).__init__(name)

        self.parser.add_argument(
            '--seed',
            dest='seed',
            type=int,
            default=None,
            help='Master seed overriding sweep.seed')

        self.parser.add_argument(
            '--bs-counts',
            dest='bs_counts',
            type=comma_separated(int),
            default=None,
            help='Comma separated numbers of base stations overriding sweep.bs_counts (e.g. 4,9,16,25)')

        self.parser.add_argument(
            '--alphas',
            dest='alphas',
            type=comma_separated(float),
            default=None,
            help='Comma separated path-loss exponents overriding sweep.alphas (e.g. 3,4,5)')

        self.parser.add_argument(
            '--workers',
            dest='workers',
            type=int,
            default=None,
            help='Number of worker processes overriding sweep.workers')

    def apply_overrides(self, flags):
        """
        Copies the sweep-specific command line arguments into the ``sweep`` section.
        """
        overrides = {}
        for key in ('seed', 'bs_counts', 'alphas', 'workers'):
            if getattr(flags, key) is not None:
                overrides[key] = getattr(flags, key)
        if flags.outdir is not None:
            overrides['output_dir'] = flags.outdir
        if overrides:
            self.config['sweep'].add_config_params(overrides)

    def setup_experiment(self, args=None):
        """
        Sets up the sweep: loads and validates the configuration, then prepares the output directory.

        Exits with -1 on configuration errors and -2 on I/O errors.

        :param args: List of arguments to parse (DEFAULT: None, i.e. ``sys.argv``).

        """
        super(Sweeper, self).setup_experiment(args)

        try:
            self.experiment = load_experiment_config(self.config)
        except ConfigurationError as e:
            self.logger.error(e)
            exit(-1)

        self.output_dir = self.experiment.output_dir
        self.prepare_output_dir(self.output_dir, "sweep_configuration.yaml")

    def run_experiment(self):
        """
        Runs the sweep. Exits with -1 on configuration errors and -2 on I/O errors.

        :return: List of :py:class:`mecgame.data_types.SweepRecord`.
        """
        try:
            records = run_sweep(self.experiment, self.logger)
        except ConfigurationError as e:
            self.logger.error('Sweep interrupted because {}'.format(e))
            exit(-1)
        except OSError as e:
            self.logger.error('Sweep interrupted because {}'.format(e))
            exit(-2)
        except KeyboardInterrupt:
            self.logger.error('Sweep interrupted!')
            exit(-3)
        self.logger.info('Sweep finished! Exported {} records to {}'.format(len(records), self.output_dir))
        return records


def main(args=None):
    """
    Entry point function for the ``Sweeper``.
    """
    sweeper = Sweeper()
    # parse args, load configuration and create the output directory.
    sweeper.setup_experiment(args)
    # GO!
    sweeper.run_experiment()


if __name__ == '__main__':
    main()
