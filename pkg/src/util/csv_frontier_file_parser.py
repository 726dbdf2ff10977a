import csv
import os

from Constants import (
    FRONTIER_CSV_HEADER,
    GA_HISTORY_CSV_HEADER,
    HISTORY_SUFFIX,
    LOCAL_FRONTIER_CSV_HEADER,
    SYSTEMS_SUFFIX,
)
from log_config import main_logger
from model.measure_report import format_real
from util.atomic_file import atomic_write
from util.csv_system_file_parser import write_systems

logger = main_logger.getChild("dataio")


def systems_path(out):
    """`frontier.csv` -> `frontier_systems.csv`, next to the frontier file."""
    root, _ = os.path.splitext(out)
    return root + SYSTEMS_SUFFIX


def join_values(values):
    return " ".join(str(v) for v in sorted(values, key=str))


class CsvFrontierFileParser:
    @staticmethod
    def _writer(f):
        return csv.writer(
            f, delimiter=",", quotechar='"', quoting=csv.QUOTE_MINIMAL, lineterminator="\n"
        )

    @staticmethod
    def write_ga_frontier(frontier_file, scored):
        """
        `scored` holds (GaIndividual, MeasureReport) pairs; rows are ordered by
        lexicon size, then average complexity, then label.
        """
        scored = sorted(
            scored,
            key=lambda p: (p[0].lexicon_size, p[0].avg_morph_complexity, p[1].system_label),
        )
        with atomic_write(frontier_file) as f:
            csv_writer = CsvFrontierFileParser._writer(f)
            csv_writer.writerow(FRONTIER_CSV_HEADER)
            for individual, report in scored:
                params = individual.params
                csv_writer.writerow(
                    [
                        report.system_label,
                        report.prior,
                        " ".join(str(d) for d in sorted(params.digits)),
                        " ".join(str(m) for m in sorted(params.multipliers)),
                        join_values(params.combinators),
                        individual.lexicon_size,
                        format_real(individual.avg_morph_complexity),
                        format_real(report.irregularity_bits),
                        format_real(report.processing_bits),
                    ]
                )
        logger.info("Wrote {} frontier rows to '{}'".format(len(scored), frontier_file))

    @staticmethod
    def write_local_frontier(frontier_file, seed_report, scored):
        """
        The natural seed comes first with is_seed=1, followed by the
        (direction, MeasureReport) pairs in the given order.
        """
        with atomic_write(frontier_file) as f:
            csv_writer = CsvFrontierFileParser._writer(f)
            csv_writer.writerow(LOCAL_FRONTIER_CSV_HEADER)
            rows = [("", 1, seed_report)] + [(str(d), 0, r) for d, r in scored]
            for direction, is_seed, report in rows:
                csv_writer.writerow(
                    [
                        report.system_label,
                        direction,
                        is_seed,
                        format_real(report.irregularity_bits),
                        format_real(report.processing_bits),
                        report.lexicon_size,
                        format_real(report.avg_morph_complexity),
                    ]
                )
        logger.info(
            "Wrote local frontier of '{}' ({} members) to '{}'".format(
                seed_report.system_label, len(scored), frontier_file
            )
        )

    @staticmethod
    def write_history(frontier_file, history):
        """Per-generation archive size and hypervolume, next to the frontier file."""
        path = os.path.splitext(frontier_file)[0] + HISTORY_SUFFIX
        with atomic_write(path) as f:
            csv_writer = CsvFrontierFileParser._writer(f)
            csv_writer.writerow(GA_HISTORY_CSV_HEADER)
            for generation in history:
                csv_writer.writerow(
                    [
                        generation.index,
                        generation.archive_size,
                        generation.evaluated,
                        format_real(generation.hypervolume),
                    ]
                )
        return path

    @staticmethod
    def parse(frontier_file):
        with open(frontier_file, newline="", encoding="utf-8") as f:
            return list(csv.DictReader(f, delimiter=",", skipinitialspace=True))


def write_frontier(path, scored, systems):
    """GA frontier table plus its systems in the loadable system layout."""
    CsvFrontierFileParser.write_ga_frontier(path, scored)
    write_systems(systems_path(path), systems)
    return systems_path(path)
