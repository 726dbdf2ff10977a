import csv

from Constants import MEASURE_CSV_HEADER, SystemSource
from log_config import main_logger
from model.measure_report import MeasureReport
from util.atomic_file import atomic_write

logger = main_logger.getChild("dataio")


class CsvMeasureFileParser:
    def __init__(self) -> None:
        super().__init__()

    def parse(self, measures_file):
        with open(measures_file, newline="", encoding="utf-8") as f:
            return [
                self.from_csv_dict_row(row)
                for row in csv.DictReader(f, delimiter=",", skipinitialspace=True)
            ]

    @staticmethod
    def from_csv_dict_row(row):
        return MeasureReport(
            system_label=row["system_id"],
            source=SystemSource(row["source"]),
            prior=row["prior"],
            irregularity_bits=float(row["irregularity_bits"]),
            processing_bits=float(row["processing_bits"]),
            lexicon_size=int(row["lexicon_size"]),
            avg_morph_complexity=float(row["avg_morph_complexity"]),
        )

    @staticmethod
    def write(measures_file, reports):
        with atomic_write(measures_file) as f:
            csv_writer = csv.writer(
                f,
                delimiter=",",
                quotechar='"',
                quoting=csv.QUOTE_MINIMAL,
                lineterminator="\n",
            )
            csv_writer.writerow(MEASURE_CSV_HEADER)
            for report in sorted(reports, key=lambda r: r.system_label):
                csv_writer.writerow(report.to_row())

        logger.info("Wrote {} measure rows to '{}'".format(len(reports), measures_file))


def export_measures(reports, path):
    CsvMeasureFileParser.write(path, reports)
