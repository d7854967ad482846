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

"""
Density sweep: every solution is run on grid scenarios for all (K, alpha) pairs and its metrics are \
exported to ``sweep_results.csv`` (one row per record), ``sweep_summary.csv`` and the plot series files.
"""

import os
import time
from collections.abc import Mapping
from multiprocessing import Pool

import numpy as np
import pandas as pd
from tqdm import tqdm

import mecgame.utils.logger as logging
from mecgame.application.component_factory import ComponentFactory
from mecgame.application.plot_data import emit_plot_data
from mecgame.application.scenario_factory import make_grid_scenario
from mecgame.configuration.config_interface import ConfigInterface
from mecgame.configuration.configuration_error import ConfigurationError
from mecgame.data_types.experiment_config import ExperimentConfig
from mecgame.data_types.scenario_params import ScenarioParams
from mecgame.data_types.sweep_record import SweepRecord
from mecgame.utils.statistics_aggregator import StatisticsAggregator
from mecgame.utils.statistics_collector import StatisticsCollector

RESULTS_FILENAME = "sweep_results.csv"
SUMMARY_FILENAME = "sweep_summary.csv"

DEFAULT_SOLUTIONS = (
    ('proposed', {'type': 'ProposedSolution'}),
    ('ref1', {'type': 'EqualAllocationSolution'}),
    ('ref2', {'type': 'CappedEqualAllocationSolution'}),
    )

# Metrics summarized per solution.
SUMMARY_METRICS = ('avg_utility', 'avg_compute_efficiency', 'aggregate_compute_efficiency', 'sat',
                   'avg_power', 'potential', 'total_demand', 'wall_time')

RECORD_FORMATTING = {'k_count': '{:d}', 'solution': '{}'}


def derive_seed(master_seed, k_count, alpha):
    """
    Derives the seed of a sweep point from the master seed, K and alpha (rounded to 1e-3).

    :return: Non-negative int.
    """
    sequence = np.random.SeedSequence([int(master_seed), int(k_count), int(round(1000 * alpha))])
    return int(sequence.generate_state(1, dtype=np.uint32)[0])


def load_experiment_config(config, output_dir=None):
    """
    Builds the :py:class:`ExperimentConfig` from the ``sweep``, ``scenario`` and ``solutions`` sections.

    :param config: Root :py:class:`mecgame.configuration.ConfigInterface` (or a nested dict).

    :param output_dir: Overrides ``sweep.output_dir`` when given.

    :return: :py:class:`mecgame.data_types.ExperimentConfig`.
    """
    try:
        sweep = config['sweep']
        params = ScenarioParams.from_config(config['scenario'])
        solutions = config['solutions']
        solutions = solutions.to_dict() if isinstance(solutions, ConfigInterface) else dict(solutions)
        for name, section in solutions.items():
            if not isinstance(section, Mapping) or 'type' not in section:
                raise ConfigurationError("Solution '{}' must be a section with the key 'type'".format(name))

        experiment = ExperimentConfig(
            zone_side=sweep['zone_side'],
            bs_counts=sweep['bs_counts'],
            alphas=sweep['alphas'],
            scenario=params,
            solutions=sorted(solutions.items()),
            seed=sweep['seed'],
            output_dir=os.path.expanduser(output_dir if output_dir is not None else sweep['output_dir']),
            workers=sweep['workers'],
            record_wall_time=sweep['record_wall_time'],
            emit_plot_data=sweep['emit_plot_data'],
            trend_slack=sweep['trend_slack'])
        # Surfaces invalid scenario constants before the sweep starts.
        make_grid_scenario(1, experiment.zone_side, params, experiment.alphas[0])
    except KeyError as e:
        raise ConfigurationError("Missing configuration parameter {}".format(e))
    except ConfigurationError:
        raise
    except (TypeError, ValueError) as e:
        raise ConfigurationError("Invalid configuration: {}".format(e))
    return experiment


def build_solutions(solutions):
    """
    Instantiates the solution components.

    :param solutions: Sequence of ``(name, section)`` pairs.

    :return: List of ``(name, component)`` pairs.
    """
    built = []
    for name, section in solutions:
        config = ConfigInterface('solutions', name)
        config.add_config_params(section)
        component, _ = ComponentFactory.build(name, config)
        built.append((name, component))
    return built


def compute_record(name, scenario, outcome, zone_area, wall_time):
    """
    Computes the metrics of a solution outcome.

    :return: :py:class:`mecgame.data_types.SweepRecord`.
    """
    powers = outcome.powers.powers
    f_bs = outcome.demand.f_bs
    return SweepRecord(
        k_count=scenario.k_count,
        alpha=scenario.channel.alpha,
        solution=name,
        avg_utility=outcome.evaluation.average_utility,
        avg_compute_efficiency=float(np.mean(f_bs / powers)),
        sat=outcome.allocation.sat,
        avg_power=float(np.mean(powers)),
        wall_time=wall_time,
        density=scenario.k_count / zone_area,
        aggregate_compute_efficiency=float(np.sum(f_bs) / np.sum(powers)),
        potential=outcome.evaluation.potential,
        total_demand=outcome.demand.total)


def run_point(config, k_count, alpha):
    """
    Runs all solutions on the grid scenario with ``k_count`` base stations and path-loss exponent ``alpha``.

    :param config: :py:class:`mecgame.data_types.ExperimentConfig`.

    :return: List of :py:class:`mecgame.data_types.SweepRecord`, one per solution.
    """
    scenario = make_grid_scenario(k_count, config.zone_side, config.scenario, alpha)
    seed = derive_seed(config.seed, k_count, alpha)
    records = []
    for name, solution in build_solutions(config.solutions):
        start = time.perf_counter()
        outcome = solution(scenario, seed)
        wall_time = time.perf_counter() - start if config.record_wall_time else 0.0
        records.append(compute_record(name, scenario, outcome, config.zone_area, wall_time))
    return records


def _run_point_task(task):
    return run_point(*task)


def write_records(records, output_dir, filename=RESULTS_FILENAME):
    """
    Writes the records as CSV: header with all record fields, one row per record.

    :return: Path to the file.
    """
    with StatisticsCollector() as stat_col:
        for field in SweepRecord._fields:
            stat_col.add_statistics(field, RECORD_FORMATTING.get(field, '{!r}'))
        stat_col.initialize_csv_file(output_dir, filename)
        for record in records:
            for field, value in zip(SweepRecord._fields, record):
                stat_col[field] = value
            stat_col.export_to_csv()
    return os.path.join(output_dir, filename)


def load_records(path):
    """
    Reads records written by :py:func:`write_records`.

    :return: List of :py:class:`mecgame.data_types.SweepRecord`.
    """
    frame = pd.read_csv(path, float_precision='round_trip', dtype={'solution': str})
    return [SweepRecord(**row) for row in frame.to_dict(orient='records')]


def records_to_frame(records):
    """
    :return: ``pandas.DataFrame`` with one column per record field.
    """
    return pd.DataFrame.from_records(records, columns=SweepRecord._fields)


def summarize_records(records, output_dir=None, filename=SUMMARY_FILENAME):
    """
    Computes mean, min and max of every metric per solution and optionally exports them \
    (one row per solution) to ``output_dir``.

    :return: Dict {solution: {aggregator name: value}}.
    """
    frame = records_to_frame(records)
    summary = {}
    with StatisticsAggregator() as stat_agg:
        stat_agg.add_aggregator('solution', '{}')
        stat_agg.add_aggregator('points', '{:d}')
        for metric in SUMMARY_METRICS:
            for suffix in ('mean', 'min', 'max'):
                stat_agg.add_aggregator('{}_{}'.format(metric, suffix), '{!r}')
        if output_dir is not None:
            stat_agg.initialize_csv_file(output_dir, filename)

        for solution, group in frame.groupby('solution', sort=True):
            stat_agg['solution'] = solution
            stat_agg['points'] = len(group)
            for metric in SUMMARY_METRICS:
                stat_agg['{}_mean'.format(metric)] = float(group[metric].mean())
                stat_agg['{}_min'.format(metric)] = float(group[metric].min())
                stat_agg['{}_max'.format(metric)] = float(group[metric].max())
            summary[solution] = stat_agg.as_dict()
            stat_agg.export_to_csv()
    return summary


def _violates_nonincreasing(previous, current, slack):
    return current > previous + slack * abs(previous)


def check_figure_trends(records, slack=0.01, proposed='proposed', reference='ref1'):
    """
    Checks the qualitative trends expected from the sweep:

        - the proposed solution reaches at least the average utility and compute efficiency of the reference,
        - the allocation coefficient does not increase with the density, for every solution and alpha,
        - the average utility of the proposed solution does not increase with the density \
        and does not decrease with alpha (relative ``slack``).

    :return: List of human-readable violations (empty when all trends hold).
    """
    by_key = {(r.solution, r.k_count, r.alpha): r for r in records}
    k_counts = sorted({r.k_count for r in records})
    alphas = sorted({r.alpha for r in records})
    solutions = sorted({r.solution for r in records})
    violations = []

    for k in k_counts:
        for alpha in alphas:
            ours, theirs = by_key.get((proposed, k, alpha)), by_key.get((reference, k, alpha))
            if ours is None or theirs is None:
                continue
            for metric in ('avg_utility', 'avg_compute_efficiency'):
                if getattr(ours, metric) < getattr(theirs, metric):
                    violations.append("K={} alpha={:g}: {} of '{}' ({!r}) below '{}' ({!r})".format(
                        k, alpha, metric, proposed, getattr(ours, metric), reference, getattr(theirs, metric)))

    for solution in solutions:
        for alpha in alphas:
            series = [by_key[(solution, k, alpha)] for k in k_counts if (solution, k, alpha) in by_key]
            for previous, current in zip(series, series[1:]):
                if current.sat > previous.sat:
                    violations.append("alpha={:g}: sat of '{}' increases from K={} ({!r}) to K={} ({!r})".format(
                        alpha, solution, previous.k_count, previous.sat, current.k_count, current.sat))
                if solution == proposed and _violates_nonincreasing(previous.avg_utility, current.avg_utility, slack):
                    violations.append("alpha={:g}: avg_utility of '{}' increases from K={} to K={}".format(
                        alpha, solution, previous.k_count, current.k_count))

    for k in k_counts:
        series = [by_key[(proposed, k, alpha)] for alpha in alphas if (proposed, k, alpha) in by_key]
        for previous, current in zip(series, series[1:]):
            if _violates_nonincreasing(current.avg_utility, previous.avg_utility, slack):
                violations.append("K={}: avg_utility of '{}' decreases from alpha={:g} to alpha={:g}".format(
                    k, proposed, previous.alpha, current.alpha))

    return violations


def run_sweep(config, logger=None):
    """
    Runs the sweep described by ``config`` and exports its results to ``config.output_dir``.

    Points are processed by ``config.workers`` processes; records are sorted by K, alpha and solution \
    name, so the outputs do not depend on the number of workers.

    :param config: :py:class:`mecgame.data_types.ExperimentConfig`.

    :param logger: Logger (DEFAULT: a new "Sweep" logger).

    :return: Sorted list of :py:class:`mecgame.data_types.SweepRecord`.
    """
    if logger is None:
        logger = logging.initialize_logger("Sweep")

    try:
        os.makedirs(config.output_dir, exist_ok=True)
    except OSError as e:
        raise OSError("Couldn't create the output directory '{}': {}".format(config.output_dir, e)) from e

    tasks = [(config, k, alpha) for k in config.bs_counts for alpha in config.alphas]
    logger.info("Running {} sweep points with {} solution(s) on {} worker(s)".format(
        len(tasks), len(config.solutions), config.workers))
    summaries = [component.summarize() for _, component in build_solutions(config.solutions)]
    logger.info("Solutions:\n" + "".join(summaries))

    records = []
    with tqdm(total=len(tasks), desc="Sweep", unit=" point", disable=None) as progress_bar:
        if config.workers > 1:
            with Pool(processes=config.workers) as pool:
                for point_records in pool.imap_unordered(_run_point_task, tasks):
                    records.extend(point_records)
                    progress_bar.update(1)
        else:
            for task in tasks:
                records.extend(_run_point_task(task))
                progress_bar.update(1)
    records.sort(key=SweepRecord.sort_key)

    for record in records:
        logger.info("K={} alpha={:g} {}: avg_utility {:.6g}; avg_compute_efficiency {:.6g}; sat {:.6g}".format(
            record.k_count, record.alpha, record.solution, record.avg_utility, record.avg_compute_efficiency,
            record.sat))

    path = write_records(records, config.output_dir)
    logger.info("Results exported to {}".format(path))
    summarize_records(records, config.output_dir)
    if config.emit_plot_data:
        paths = emit_plot_data(records, config.output_dir)
        logger.info("Exported {} plot series".format(len(paths)))

    for violation in check_figure_trends(records, config.trend_slack):
        logger.warning("Trend check: {}".format(violation))

    return records
